#include "unipart/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace unipart {

namespace {

void require_same_ambient(const CSubspace& a, const CSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        fail(errc::dimension_mismatch, "ambient dimensions " + std::to_string(a.ambient_dim()) +
                                           " and " + std::to_string(b.ambient_dim()) + " differ");
    if (a.conductor() != b.conductor())
        fail(errc::conductor_mismatch, "subspace conductors differ; embed explicitly first");
}

} // namespace

CSubspace CSubspace::zero(long n, long m) {
    if (n < 1) fail(errc::bad_input, "ambient dimension must be positive");
    CycNumber::zero(m); // validates m against the conductor cap
    return CSubspace(n, m, {});
}

CSubspace CSubspace::full(long n, long m) {
    std::vector<std::vector<CycNumber>> rows;
    for (long i = 0; i < n; ++i) {
        std::vector<CycNumber> row;
        for (long j = 0; j < n; ++j)
            row.push_back(i == j ? CycNumber::one(m) : CycNumber::zero(m));
        rows.push_back(std::move(row));
    }
    return span(n, m, std::move(rows));
}

CSubspace CSubspace::span(long n, long m, std::vector<std::vector<CycNumber>> vectors) {
    if (n < 1) fail(errc::bad_input, "ambient dimension must be positive");
    for (const auto& v : vectors) {
        if (static_cast<long>(v.size()) != n)
            fail(errc::dimension_mismatch, "spanning vector length differs from ambient dimension");
        for (const auto& x : v)
            if (x.conductor() != m)
                fail(errc::conductor_mismatch, "spanning vector conductor differs");
    }
    rref_in_place(vectors, n);
    return CSubspace(n, m, std::move(vectors));
}

CSubspace CSubspace::embedded(long m2) const {
    if (m2 == m_) return *this;
    std::vector<std::vector<CycNumber>> rows;
    rows.reserve(rows_.size());
    for (const auto& row : rows_) {
        std::vector<CycNumber> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.embedded(m2));
        rows.push_back(std::move(r));
    }
    // Echelon structure is preserved by embedding; no re-reduction needed.
    return CSubspace(n_, m2, std::move(rows));
}

bool CSubspace::contains_vector(const std::vector<CycNumber>& v) const {
    if (static_cast<long>(v.size()) != n_)
        fail(errc::dimension_mismatch, "vector length differs from ambient dimension");
    std::vector<CycNumber> residual = v;
    for (const auto& row : rows_) {
        long pivot = 0;
        while (row[pivot].is_zero()) ++pivot;
        if (residual[pivot].is_zero()) continue;
        const CycNumber f = residual[pivot];
        for (long c = 0; c < n_; ++c) residual[c] = residual[c] - f * row[c];
    }
    return std::all_of(residual.begin(), residual.end(),
                       [](const CycNumber& x) { return x.is_zero(); });
}

bool CSubspace::contains(const CSubspace& other) const {
    require_same_ambient(*this, other);
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](const auto& v) { return contains_vector(v); });
}

bool CSubspace::operator==(const CSubspace& other) const {
    require_same_ambient(*this, other);
    return rows_ == other.rows_;
}

int CSubspace::cmp(const CSubspace& other) const {
    if (n_ != other.n_) return n_ < other.n_ ? -1 : 1;
    if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (long j = 0; j < n_; ++j) {
            const int c = rows_[i][j].cmp(other.rows_[i][j]);
            if (c != 0) return c;
        }
    return 0;
}

std::string CSubspace::key() const {
    std::ostringstream out;
    out << n_ << "@" << m_ << "{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << "|";
        for (long j = 0; j < n_; ++j) {
            if (j) out << ",";
            out << rows_[i][j].key();
        }
    }
    out << "}";
    return out.str();
}

std::string CSubspace::to_string() const {
    std::ostringstream out;
    out << "span{";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ", ";
        out << "(";
        for (long j = 0; j < n_; ++j) {
            if (j) out << ", ";
            out << rows_[i][j].to_string();
        }
        out << ")";
    }
    out << "}";
    return out.str();
}

CSubspace kernel(const CMatrix& a) {
    const long n = a.cols();
    const long m = a.conductor();
    std::vector<std::vector<CycNumber>> rows;
    for (long i = 0; i < a.rows(); ++i) {
        std::vector<CycNumber> row;
        for (long j = 0; j < n; ++j) row.push_back(a.at(i, j));
        rows.push_back(std::move(row));
    }
    const std::vector<long> pivots = rref_in_place(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<std::vector<CycNumber>> basis;
    for (long f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<CycNumber> v;
        for (long j = 0; j < n; ++j) v.push_back(CycNumber::zero(m));
        v[f] = CycNumber::one(m);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return CSubspace::span(n, m, std::move(basis));
}

CSubspace orth_complement(const CSubspace& v) {
    const long n = v.ambient_dim();
    const long m = v.conductor();
    if (v.is_zero()) return CSubspace::full(n, m);
    // u is orthogonal to v iff conj(B) u = 0 where B has the basis as rows.
    std::vector<std::vector<CycNumber>> rows;
    for (const auto& b : v.basis_vectors()) {
        std::vector<CycNumber> row;
        for (const auto& x : b) row.push_back(x.conj());
        rows.push_back(std::move(row));
    }
    return kernel(CMatrix::from_rows(std::move(rows)));
}

CSubspace subspace_sum(const CSubspace& a, const CSubspace& b) {
    require_same_ambient(a, b);
    std::vector<std::vector<CycNumber>> rows = a.basis_vectors();
    const auto& extra = b.basis_vectors();
    rows.insert(rows.end(), extra.begin(), extra.end());
    return CSubspace::span(a.ambient_dim(), a.conductor(), std::move(rows));
}

CSubspace subspace_intersect(const CSubspace& a, const CSubspace& b) {
    require_same_ambient(a, b);
    return orth_complement(subspace_sum(orth_complement(a), orth_complement(b)));
}

bool subspace_equal(const CSubspace& a, const CSubspace& b) {
    return a == b;
}

bool is_orthogonal(const CSubspace& a, const CSubspace& b) {
    require_same_ambient(a, b);
    for (const auto& u : a.basis_vectors())
        for (const auto& v : b.basis_vectors())
            if (!hermitian_inner(u, v).is_zero()) return false;
    return true;
}

CSubspace apply(const CMatrix& a, const CSubspace& v) {
    if (a.cols() != v.ambient_dim())
        fail(errc::dimension_mismatch, "matrix shape does not match ambient dimension");
    if (a.conductor() != v.conductor())
        fail(errc::conductor_mismatch, "matrix and subspace conductors differ");
    std::vector<std::vector<CycNumber>> images;
    for (const auto& b : v.basis_vectors()) {
        std::vector<CycNumber> w;
        for (long i = 0; i < a.rows(); ++i) {
            CycNumber acc = CycNumber::zero(a.conductor());
            for (long j = 0; j < a.cols(); ++j) acc = acc + a.at(i, j) * b[j];
            w.push_back(std::move(acc));
        }
        images.push_back(std::move(w));
    }
    return CSubspace::span(a.rows(), a.conductor(), std::move(images));
}

std::vector<std::pair<CycNumber, CSubspace>> eigenpairs_finite_order(const CMatrix& a, long e) {
    if (!a.is_square()) fail(errc::non_square, "eigenspaces of non-square matrix");
    if (e < 1) fail(errc::bad_input, "order must be positive");
    if (!a.pow(e).is_identity())
        fail(errc::order_violation, "matrix order does not divide " + std::to_string(e));
    const long big = lcm_long(a.conductor(), e);
    const CMatrix ae = a.embedded(big);
    const CMatrix id = CMatrix::identity(a.rows(), big);
    std::vector<std::pair<CycNumber, CSubspace>> out;
    for (long k = 0; k < e; ++k) {
        const CycNumber zeta = CycNumber::root_of_unity(big, (big / e) * k);
        CSubspace space = kernel(ae - id.scaled(zeta));
        if (!space.is_zero()) out.emplace_back(zeta, std::move(space));
    }
    return out;
}

} // namespace unipart
