#pragma once

#include "unipart/cyclotomic.hpp"
#include "unipart/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipart {

// Dense matrix over Q(zeta_m), all entries at one shared conductor.
// Value semantics; treated as immutable once built.
class CMatrix {
public:
    static CMatrix zero(long rows, long cols, long m);
    static CMatrix identity(long n, long m);
    static CMatrix from_rows(std::vector<std::vector<CycNumber>> rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long conductor() const { return m_; }
    bool is_square() const { return rows_ == cols_; }

    const CycNumber& at(long r, long c) const { return e_[r * cols_ + c]; }
    void set(long r, long c, CycNumber v);

    CMatrix operator*(const CMatrix& other) const;
    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix scaled(const CycNumber& c) const;
    CMatrix hermitian_adjoint() const;
    CMatrix pow(long e) const; // square, e >= 0
    CMatrix embedded(long m2) const;

    bool operator==(const CMatrix& other) const;
    bool operator!=(const CMatrix& other) const { return !(*this == other); }
    // Total order for canonical arrangements: dims, then entries in row-major
    // order under CycNumber::cmp.
    int cmp(const CMatrix& other) const;
    bool operator<(const CMatrix& other) const { return cmp(other) < 0; }

    bool is_unitary() const;  // errc::non_square on non-square input
    bool is_identity() const;
    bool is_scalar() const;
    // The scalar c with *this == c*I, when is_scalar().
    std::optional<CycNumber> scalar_value() const;
    CycNumber trace() const;

    std::string key() const;
    std::string to_string() const;

private:
    CMatrix(long rows, long cols, long m, std::vector<CycNumber> e)
        : rows_(rows), cols_(cols), m_(m), e_(std::move(e)) {}

    long rows_, cols_, m_;
    std::vector<CycNumber> e_; // row-major
};

// Hermitian form sum_i u_i * conj(v_i); the one convention used everywhere.
CycNumber hermitian_inner(const std::vector<CycNumber>& u, const std::vector<CycNumber>& v);

// In-place reduced row echelon form over Q(zeta_m); returns pivot column
// indices and drops zero rows. Rows must share one length and conductor.
std::vector<long> rref_in_place(std::vector<std::vector<CycNumber>>& rows, long ncols);

} // namespace unipart
