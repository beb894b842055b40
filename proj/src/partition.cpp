#include "unipart/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace unipart {

OrthoPartition OrthoPartition::from_classes(long n, long m, std::vector<CSubspace> classes) {
    if (classes.size() < 2)
        fail(errc::bad_input, "a proper partition needs at least two classes");
    long total = 0;
    for (const auto& v : classes) {
        if (v.ambient_dim() != n)
            fail(errc::dimension_mismatch, "class ambient dimension differs from n");
        if (v.conductor() != m)
            fail(errc::conductor_mismatch, "class conductor differs from partition conductor");
        if (v.is_zero()) fail(errc::bad_input, "partition class is the zero subspace");
        total += v.dim();
    }
    if (total != n) fail(errc::bad_input, "class dimensions do not sum to the ambient dimension");
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (!is_orthogonal(classes[a], classes[b]))
                fail(errc::bad_input, "partition classes are not pairwise orthogonal");
    std::sort(classes.begin(), classes.end(),
              [](const CSubspace& a, const CSubspace& b) { return a.cmp(b) < 0; });
    for (std::size_t a = 0; a + 1 < classes.size(); ++a)
        if (classes[a] == classes[a + 1]) fail(errc::bad_input, "duplicate partition class");
    return OrthoPartition(n, m, std::move(classes));
}

OrthoPartition OrthoPartition::embedded(long m2) const {
    if (m2 == m_) return *this;
    std::vector<CSubspace> classes;
    classes.reserve(classes_.size());
    for (const auto& v : classes_) classes.push_back(v.embedded(m2));
    return from_classes(n_, m2, std::move(classes));
}

bool OrthoPartition::operator==(const OrthoPartition& other) const {
    if (n_ != other.n_ || classes_.size() != other.classes_.size()) return false;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] != other.classes_[i]) return false;
    return true;
}

int OrthoPartition::cmp(const OrthoPartition& other) const {
    if (n_ != other.n_) return n_ < other.n_ ? -1 : 1;
    if (size() != other.size()) return size() < other.size() ? -1 : 1;
    for (long i = 0; i < size(); ++i) {
        const int c = classes_[i].cmp(other.classes_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string OrthoPartition::key() const {
    std::ostringstream out;
    out << "P" << n_ << "@" << m_ << "(";
    for (long i = 0; i < size(); ++i) {
        if (i) out << "||";
        out << classes_[i].key();
    }
    out << ")";
    return out.str();
}

std::string OrthoPartition::to_string() const {
    std::ostringstream out;
    out << "{";
    for (long i = 0; i < size(); ++i) {
        if (i) out << " | ";
        out << classes_[i].to_string();
    }
    out << "}";
    return out.str();
}

bool is_coarsening(const OrthoPartition& lam, const OrthoPartition& mu) {
    if (lam.ambient_dim() != mu.ambient_dim())
        fail(errc::dimension_mismatch, "partitions live in different ambient dimensions");
    for (const auto& v : lam.classes()) {
        bool housed = false;
        for (const auto& w : mu.classes()) {
            if (w.contains(v)) {
                housed = true;
                break;
            }
        }
        if (!housed) return false;
    }
    return true;
}

OrthoPartition act(const CMatrix& g, const OrthoPartition& lam) {
    if (!g.is_unitary()) fail(errc::not_unitary, "partition action requires a unitary matrix");
    if (g.conductor() != lam.conductor())
        fail(errc::conductor_mismatch, "matrix and partition conductors differ");
    std::vector<CSubspace> classes;
    classes.reserve(lam.size());
    for (const auto& v : lam.classes()) classes.push_back(apply(g, v));
    return OrthoPartition::from_classes(lam.ambient_dim(), lam.conductor(), std::move(classes));
}

std::optional<std::vector<long>> induced_class_permutation(const CMatrix& g,
                                                           const OrthoPartition& lam) {
    if (!g.is_unitary()) fail(errc::not_unitary, "partition action requires a unitary matrix");
    std::vector<long> perm(lam.size(), -1);
    for (long i = 0; i < lam.size(); ++i) {
        const CSubspace image = apply(g, lam.classes()[i]);
        bool found = false;
        for (long j = 0; j < lam.size(); ++j) {
            if (lam.classes()[j] == image) {
                perm[i] = j;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return perm;
}

bool is_weakly_fixed(const OrthoPartition& lam, const FiniteMatrixGroup& h) {
    for (const auto& g : h.generators())
        if (!induced_class_permutation(g, lam)) return false;
    return true;
}

bool is_strongly_fixed(const OrthoPartition& lam, const FiniteMatrixGroup& h) {
    for (const auto& g : h.generators()) {
        const auto perm = induced_class_permutation(g, lam);
        if (!perm) return false;
        for (long i = 0; i < lam.size(); ++i)
            if ((*perm)[i] != i) return false;
    }
    return true;
}

std::optional<OrthoPartition> orbit_coarsening(const OrthoPartition& lam,
                                               const FiniteMatrixGroup& j) {
    std::vector<std::vector<long>> perms;
    for (const auto& g : j.generators()) {
        auto perm = induced_class_permutation(g, lam);
        if (!perm)
            fail(errc::not_weakly_fixed, "partition is not weakly fixed by the group");
        perms.push_back(std::move(*perm));
    }
    // Union-find over class indices along generator orbits.
    std::vector<long> parent(lam.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : perms)
        for (long i = 0; i < lam.size(); ++i) parent[find(i)] = find(perm[i]);
    std::vector<std::vector<long>> orbits(lam.size());
    for (long i = 0; i < lam.size(); ++i) orbits[find(i)].push_back(i);
    std::vector<CSubspace> merged;
    for (const auto& orbit : orbits) {
        if (orbit.empty()) continue;
        CSubspace sum = lam.classes()[orbit[0]];
        for (std::size_t t = 1; t < orbit.size(); ++t)
            sum = subspace_sum(sum, lam.classes()[orbit[t]]);
        merged.push_back(std::move(sum));
    }
    if (merged.size() < 2) return std::nullopt;
    return OrthoPartition::from_classes(lam.ambient_dim(), lam.conductor(), std::move(merged));
}

} // namespace unipart
