#pragma once

#include "unipart/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace unipart {

// Linear subspace of C^n in canonical form: the stored basis vectors are the
// reduced-echelon spanning set with leading-one pivots ordered by pivot
// position, so two subspaces are equal iff their stored bases are equal.
class CSubspace {
public:
    static CSubspace zero(long n, long m);
    static CSubspace full(long n, long m);
    static CSubspace span(long n, long m, std::vector<std::vector<CycNumber>> vectors);

    long ambient_dim() const { return n_; }
    long dim() const { return static_cast<long>(rows_.size()); }
    long conductor() const { return m_; }
    bool is_zero() const { return rows_.empty(); }

    // Canonical basis, one vector per row of the echelon form.
    const std::vector<std::vector<CycNumber>>& basis_vectors() const { return rows_; }

    CSubspace embedded(long m2) const;

    bool contains_vector(const std::vector<CycNumber>& v) const;
    bool contains(const CSubspace& other) const;

    bool operator==(const CSubspace& other) const;
    bool operator!=(const CSubspace& other) const { return !(*this == other); }
    int cmp(const CSubspace& other) const;
    bool operator<(const CSubspace& other) const { return cmp(other) < 0; }

    std::string key() const;
    std::string to_string() const;

private:
    CSubspace(long n, long m, std::vector<std::vector<CycNumber>> rows)
        : n_(n), m_(m), rows_(std::move(rows)) {}

    long n_, m_;
    std::vector<std::vector<CycNumber>> rows_;
};

// Solution space of A x = 0 inside C^cols.
CSubspace kernel(const CMatrix& a);

// Orthogonal complement under the fixed Hermitian form.
CSubspace orth_complement(const CSubspace& v);

CSubspace subspace_sum(const CSubspace& a, const CSubspace& b);
CSubspace subspace_intersect(const CSubspace& a, const CSubspace& b);
bool subspace_equal(const CSubspace& a, const CSubspace& b);
bool is_orthogonal(const CSubspace& a, const CSubspace& b);

// Image A.v in canonical form.
CSubspace apply(const CMatrix& a, const CSubspace& v);

// Eigenspace decomposition of a unitary A with A^e = I. Searches exactly the
// e-th roots of unity zeta_e^k, k ascending; conductor is extended to
// lcm(conductor(A), e). Throws errc::order_violation when A^e != I.
std::vector<std::pair<CycNumber, CSubspace>> eigenpairs_finite_order(const CMatrix& a, long e);

} // namespace unipart
