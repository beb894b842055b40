#pragma once

#include "unipart/group.hpp"
#include "unipart/partition.hpp"
#include "unipart/subspace.hpp"

#include <vector>

namespace unipart {

// One simultaneous character of an abelian unitary group: the eigenvalue
// per generator (aligned with the group's generator list) and the full
// subspace on which the group acts by that character.
struct IsotypicComponent {
    std::vector<CycNumber> character;
    CSubspace subspace;
};

// Decomposition of C^n into the isotypic components of an abelian group,
// sorted by character in canonical scalar order. Components are nonzero,
// pairwise orthogonal, group-invariant, and sum to C^n.
struct IsotypicDecomposition {
    long n = 0;
    long conductor = 0;
    std::vector<IsotypicComponent> components;
};

// Simultaneous eigenspace decomposition, splitting by one generator at a
// time. errc::non_abelian_unsupported unless J is abelian.
IsotypicDecomposition isotypic_decomposition(const FiniteMatrixGroup& j);

// At least two isotypic components, i.e. J is not contained in the scalars.
bool is_polytypic(const FiniteMatrixGroup& j);

// v lies inside a single component. errc::not_invariant unless v is
// J-invariant.
bool is_isotypic_subspace(const CSubspace& v, const FiniteMatrixGroup& j);

// Splits every class of lam into its nonzero intersections with the
// isotypic components of J. The result refines lam classwise and every
// output class is J-isotypic. errc::not_strongly_fixed unless every class
// of lam is J-invariant.
OrthoPartition isotypic_refinement(const OrthoPartition& lam, const FiniteMatrixGroup& j);

} // namespace unipart
