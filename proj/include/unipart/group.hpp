#pragma once

#include "unipart/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace unipart {

inline constexpr long kDefaultClosureCap = 100000;

// Finite group of unitary matrices, closed under product and inverse.
// Elements are stored sorted in canonical order; indices refer to that
// ordering and are stable for the lifetime of the group.
class FiniteMatrixGroup {
public:
    long n() const { return n_; }
    long conductor() const { return m_; }
    long order() const { return static_cast<long>(elements_.size()); }
    long exponent() const { return exponent_; }
    const std::vector<CMatrix>& elements() const { return elements_; }
    const std::vector<CMatrix>& generators() const { return generators_; }

    const CMatrix& element(long i) const { return elements_[i]; }
    long index_of(const CMatrix& g) const; // errc::bad_input when absent
    bool contains(const CMatrix& g) const;
    long identity_index() const { return identity_; }

    long multiply(long i, long j) const;
    long inverse(long i) const;
    long element_order(long i) const;
    bool is_abelian() const;

    friend FiniteMatrixGroup close(std::vector<CMatrix> generators, long cap);

private:
    FiniteMatrixGroup(long n, long m, std::vector<CMatrix> elements,
                      std::vector<CMatrix> generators);

    long n_, m_;
    long identity_ = -1;
    long exponent_ = 1;
    std::vector<CMatrix> elements_;
    std::vector<CMatrix> generators_;
    std::map<std::string, long> index_;
};

// Breadth-first closure of the generated group; errc::cap_exceeded when the
// closure grows past cap (infinite or too-large group), errc::not_unitary
// when a generator is not unitary.
FiniteMatrixGroup close(std::vector<CMatrix> generators, long cap = kDefaultClosureCap);

FiniteMatrixGroup center(const FiniteMatrixGroup& g);
FiniteMatrixGroup scalar_subgroup(const FiniteMatrixGroup& g);
std::vector<CMatrix> elements_of_order_p(const FiniteMatrixGroup& g, long p);
bool is_p_group(const FiniteMatrixGroup& g, long p);
bool is_elementary_abelian(const FiniteMatrixGroup& g, long p);

// The subgroup G^p [G,G] generated by p-th powers and commutators.
// errc::not_a_p_group unless G is a finite p-group.
FiniteMatrixGroup power_commutator_subgroup(const FiniteMatrixGroup& g, long p);

// Finite abstract group presented by a full multiplication table, arising
// as a quotient G/N. Coset indices are assigned in canonical order of the
// minimal coset representative; section[c] is that representative.
class AbstractQuotient {
public:
    AbstractQuotient(std::vector<std::vector<long>> table, std::vector<long> projection,
                     std::vector<CMatrix> section, long identity);

    long order() const { return static_cast<long>(table_.size()); }
    long identity_index() const { return identity_; }
    long multiply(long a, long b) const { return table_[a][b]; }
    long inverse(long a) const;
    long element_order(long a) const;
    bool is_abelian() const;
    bool is_trivial() const { return order() == 1; }
    bool is_p_group(long p) const;
    bool is_elementary_abelian(long p) const;

    // projection()[i] = coset of the i-th element of the source group.
    const std::vector<long>& projection() const { return projection_; }
    const std::vector<CMatrix>& section() const { return section_; }
    const CMatrix& representative(long a) const { return section_[a]; }

    std::vector<long> center_indices() const;
    // Closure of {x^p} and {[x,y]} inside the quotient: the kernel of the
    // map onto the maximal elementary abelian quotient.
    std::vector<long> power_commutator_indices(long p) const;

private:
    std::vector<std::vector<long>> table_;
    std::vector<long> projection_;
    std::vector<CMatrix> section_;
    long identity_;
};

// Quotient of G by a normal subgroup given as a sub-multiset of G's
// elements; errc::bad_input when N is not a normal subgroup of G.
AbstractQuotient quotient_by(const FiniteMatrixGroup& g, const FiniteMatrixGroup& n);

// G/(G cap scalars): the image of G in the projective unitary group.
AbstractQuotient projective_image(const FiniteMatrixGroup& g);

// G/(G^p [G,G]): the maximal elementary abelian quotient.
AbstractQuotient frattini_quotient(const FiniteMatrixGroup& g, long p);

// G/1: G itself with the abstract-quotient interface.
AbstractQuotient trivial_quotient(const FiniteMatrixGroup& g);

bool is_projective_elementary_abelian(const FiniteMatrixGroup& g, long p);

// A central element of order exactly p inside the kernel of Q -> Q/p.
// Exists for every nontrivial finite p-group that is not elementary
// abelian (the kernel is a nontrivial normal subgroup, so it meets the
// center nontrivially). Ties break by canonical coset order.
// errc::is_trivial / errc::is_elementary_abelian on precondition failure.
long central_order_p_in_frattini_kernel(const AbstractQuotient& q, long p);

// Given A with A^p = c I (c a root of unity), the rescaling B = alpha^-1 A
// with alpha^p = c, so B^p = I and B equals A projectively. The root is
// pinned: writing c = zeta_e^j with e = order(c), alpha = zeta_{pe}^j; the
// result lives at conductor lcm(m, p*e). errc::not_projective_order_p when
// A^p is not a scalar root of unity.
CMatrix lift_order_p(const CMatrix& a, long p);

} // namespace unipart
