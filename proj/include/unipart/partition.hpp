#pragma once

#include "unipart/group.hpp"
#include "unipart/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipart {

// Proper orthogonal decomposition of C^n: at least two nonzero, pairwise
// orthogonal classes whose dimensions sum to n. Classes are kept sorted in
// canonical subspace order, so equal partitions compare equal memberwise.
class OrthoPartition {
public:
    static OrthoPartition from_classes(long n, long m, std::vector<CSubspace> classes);

    long ambient_dim() const { return n_; }
    long conductor() const { return m_; }
    long size() const { return static_cast<long>(classes_.size()); }
    const std::vector<CSubspace>& classes() const { return classes_; }

    OrthoPartition embedded(long m2) const;

    bool operator==(const OrthoPartition& other) const;
    bool operator!=(const OrthoPartition& other) const { return !(*this == other); }
    int cmp(const OrthoPartition& other) const;

    std::string key() const;
    std::string to_string() const;

private:
    OrthoPartition(long n, long m, std::vector<CSubspace> classes)
        : n_(n), m_(m), classes_(std::move(classes)) {}

    long n_, m_;
    std::vector<CSubspace> classes_;
};

// True iff every class of lam is contained in some class of mu, i.e. the
// (unique) coarsening morphism lam -> mu exists.
bool is_coarsening(const OrthoPartition& lam, const OrthoPartition& mu);

// The partition {g.v : v in lam}, reordered canonically. g must be unitary.
OrthoPartition act(const CMatrix& g, const OrthoPartition& lam);

// The permutation sigma with g.lam[i] = lam[sigma[i]] when g maps classes
// onto classes; nullopt when some image is not a class (not stable).
std::optional<std::vector<long>> induced_class_permutation(const CMatrix& g,
                                                           const OrthoPartition& lam);

// Weak: every generator permutes the classes. Strong: every generator fixes
// each class. Products of class permutations are class permutations, so
// checking generators suffices.
bool is_weakly_fixed(const OrthoPartition& lam, const FiniteMatrixGroup& h);
bool is_strongly_fixed(const OrthoPartition& lam, const FiniteMatrixGroup& h);

// Merges the classes of lam along the orbits of the class-permutation
// action of J: the minimal strongly-J-fixed coarsening of lam. Returns
// nullopt when everything merges into one class (improper). Requires lam
// weakly J-fixed (errc::not_weakly_fixed).
std::optional<OrthoPartition> orbit_coarsening(const OrthoPartition& lam,
                                               const FiniteMatrixGroup& j);

} // namespace unipart
