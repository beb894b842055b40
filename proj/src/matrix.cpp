#include "unipart/matrix.hpp"

#include <sstream>

namespace unipart {

namespace {

void check_dims(long rows, long cols) {
    if (rows < 0 || cols < 0) fail(errc::bad_input, "negative matrix dimension");
}

void require_same_conductor(long a, long b) {
    if (a != b)
        fail(errc::conductor_mismatch, "matrix conductors " + std::to_string(a) + " and " +
                                           std::to_string(b) + " differ; embed explicitly first");
}

} // namespace

CMatrix CMatrix::zero(long rows, long cols, long m) {
    check_dims(rows, cols);
    std::vector<CycNumber> e;
    e.reserve(rows * cols);
    for (long i = 0; i < rows * cols; ++i) e.push_back(CycNumber::zero(m));
    return CMatrix(rows, cols, m, std::move(e));
}

CMatrix CMatrix::identity(long n, long m) {
    CMatrix a = zero(n, n, m);
    for (long i = 0; i < n; ++i) a.set(i, i, CycNumber::one(m));
    return a;
}

CMatrix CMatrix::from_rows(std::vector<std::vector<CycNumber>> rows) {
    if (rows.empty() || rows[0].empty()) fail(errc::bad_input, "empty matrix");
    const long r = static_cast<long>(rows.size());
    const long c = static_cast<long>(rows[0].size());
    const long m = rows[0][0].conductor();
    std::vector<CycNumber> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (static_cast<long>(row.size()) != c) fail(errc::bad_input, "ragged matrix rows");
        for (const auto& v : row) {
            require_same_conductor(v.conductor(), m);
            e.push_back(v);
        }
    }
    return CMatrix(r, c, m, std::move(e));
}

void CMatrix::set(long r, long c, CycNumber v) {
    require_same_conductor(v.conductor(), m_);
    e_[r * cols_ + c] = std::move(v);
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    require_same_conductor(m_, other.m_);
    if (cols_ != other.rows_)
        fail(errc::dimension_mismatch, "product of " + std::to_string(rows_) + "x" +
                                           std::to_string(cols_) + " by " +
                                           std::to_string(other.rows_) + "x" +
                                           std::to_string(other.cols_));
    CMatrix out = zero(rows_, other.cols_, m_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const CycNumber& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < other.cols_; ++j) {
                if (other.at(k, j).is_zero()) continue;
                out.set(i, j, out.at(i, j) + aik * other.at(k, j));
            }
        }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    require_same_conductor(m_, other.m_);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(errc::dimension_mismatch, "sum of unequal shapes");
    CMatrix out = *this;
    for (long i = 0; i < rows_ * cols_; ++i) out.e_[i] = out.e_[i] + other.e_[i];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    require_same_conductor(m_, other.m_);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(errc::dimension_mismatch, "difference of unequal shapes");
    CMatrix out = *this;
    for (long i = 0; i < rows_ * cols_; ++i) out.e_[i] = out.e_[i] - other.e_[i];
    return out;
}

CMatrix CMatrix::scaled(const CycNumber& c) const {
    require_same_conductor(m_, c.conductor());
    CMatrix out = *this;
    for (auto& v : out.e_) v = v * c;
    return out;
}

CMatrix CMatrix::hermitian_adjoint() const {
    CMatrix out = zero(cols_, rows_, m_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.set(j, i, at(i, j).conj());
    return out;
}

CMatrix CMatrix::pow(long e) const {
    if (!is_square()) fail(errc::non_square, "power of non-square matrix");
    if (e < 0) fail(errc::bad_input, "negative matrix power");
    CMatrix acc = identity(rows_, m_);
    CMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CMatrix CMatrix::embedded(long m2) const {
    if (m2 == m_) return *this;
    std::vector<CycNumber> e;
    e.reserve(e_.size());
    for (const auto& v : e_) e.push_back(v.embedded(m2));
    return CMatrix(rows_, cols_, m2, std::move(e));
}

bool CMatrix::operator==(const CMatrix& other) const {
    require_same_conductor(m_, other.m_);
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    return e_ == other.e_;
}

int CMatrix::cmp(const CMatrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_ ? -1 : 1;
    if (cols_ != other.cols_) return cols_ < other.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        const int c = e_[i].cmp(other.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool CMatrix::is_unitary() const {
    if (!is_square()) fail(errc::non_square, "unitarity of non-square matrix");
    return (*this) * hermitian_adjoint() == identity(rows_, m_);
}

bool CMatrix::is_identity() const {
    return is_square() && *this == identity(rows_, m_);
}

bool CMatrix::is_scalar() const {
    if (!is_square()) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            if (i == j ? at(i, i) != at(0, 0) : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::optional<CycNumber> CMatrix::scalar_value() const {
    if (!is_scalar()) return std::nullopt;
    return at(0, 0);
}

CycNumber CMatrix::trace() const {
    if (!is_square()) fail(errc::non_square, "trace of non-square matrix");
    CycNumber t = CycNumber::zero(m_);
    for (long i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

std::string CMatrix::key() const {
    std::ostringstream out;
    out << rows_ << "x" << cols_ << "@" << m_ << "[";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) out << ";";
        out << e_[i].key();
    }
    out << "]";
    return out.str();
}

std::string CMatrix::to_string() const {
    std::ostringstream out;
    for (long i = 0; i < rows_; ++i) {
        out << (i ? "; " : "[");
        for (long j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
    }
    out << "]";
    return out.str();
}

CycNumber hermitian_inner(const std::vector<CycNumber>& u, const std::vector<CycNumber>& v) {
    if (u.size() != v.size() || u.empty())
        fail(errc::dimension_mismatch, "inner product of unequal lengths");
    CycNumber acc = CycNumber::zero(u[0].conductor());
    for (std::size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i].conj();
    return acc;
}

std::vector<long> rref_in_place(std::vector<std::vector<CycNumber>>& rows, long ncols) {
    std::vector<long> pivots;
    std::size_t rank = 0;
    for (long col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const CycNumber lead_inv = rows[rank][col].inv();
        for (auto& x : rows[rank]) x = x * lead_inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const CycNumber f = rows[r][col];
            for (long c = 0; c < ncols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.erase(rows.begin() + rank, rows.end());
    return pivots;
}

} // namespace unipart
