#pragma once

#include "unipart/errors.hpp"
#include "unipart/homology.hpp"

#include <string>
#include <vector>

namespace unipart {

// Permutation of {0..n-1} as an image table.
using Perm = std::vector<int>;

Perm identity_perm(long n);
Perm compose(const Perm& f, const Perm& g); // g first, then f
Perm inverse(const Perm& f);
long perm_order(const Perm& f);
bool is_identity_perm(const Perm& f);
std::string perm_cycles(const Perm& f); // 1-based cycle notation, "()" for the identity
std::vector<Perm> close_perms(const std::vector<Perm>& gens, long n);
bool is_elementary_abelian_perm_group(const std::vector<Perm>& elements, long p);

// Proper nontrivial partition of {0..n-1}: at least two blocks and at least
// one block of size >= 2. Blocks are kept ascending, ordered by first point.
class SetPartition {
public:
    static SetPartition from_blocks(long n, std::vector<std::vector<int>> blocks);

    long ground_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    long block_count() const { return static_cast<long>(blocks_.size()); }

    bool refines(const SetPartition& coarser) const; // every block lands inside a block
    SetPartition permuted(const Perm& g) const;

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const;
    std::string to_string() const;

private:
    SetPartition(long n, std::vector<std::vector<int>> blocks)
        : n_(n), blocks_(std::move(blocks)) {}
    long n_;
    std::vector<std::vector<int>> blocks_;
};

// All proper nontrivial partitions of {0..n-1} under the coarsening order:
// i < j when elements[i] properly refines elements[j]. The relation is stored
// transitively closed.
struct PartitionPoset {
    long n = 0;
    std::vector<SetPartition> elements;
    std::vector<std::vector<long>> less;

    Poset as_poset() const;
    // Indices of partitions fixed (as block sets) by every listed permutation.
    std::vector<long> fixed_indices(const std::vector<Perm>& perms) const;
    Poset induced(const std::vector<long>& indices) const;
};

PartitionPoset partition_poset(long n);

struct SweepRow {
    std::vector<Perm> generators; // empty for the trivial subgroup
    long order = 1;
    bool elementary_abelian = false;
    long fixed_poset_size = 0;
    HomologyResult fixed_homology;
    bool acyclic = false;
};

inline constexpr long kDefaultSweepBound = 6;

// Every p-subgroup of the symmetric group on n points, one row per conjugacy
// class, with the homology of its fixed partition subposet.
std::vector<SweepRow> sweep(long n, long p, long bound = kDefaultSweepBound);

} // namespace unipart
