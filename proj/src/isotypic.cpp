#include "unipart/isotypic.hpp"

#include <algorithm>

namespace unipart {

namespace {

int character_cmp(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = a[i].cmp(b[i]);
        if (c != 0) return c;
    }
    return 0;
}

long matrix_order(const CMatrix& g, long exponent) {
    for (long d = 1; d <= exponent; ++d)
        if (exponent % d == 0 && g.pow(d).is_identity()) return d;
    fail(errc::order_violation, "generator order does not divide the group exponent");
}

} // namespace

IsotypicDecomposition isotypic_decomposition(const FiniteMatrixGroup& j) {
    if (!j.is_abelian())
        fail(errc::non_abelian_unsupported,
             "isotypic decomposition is only implemented for abelian groups");
    // All eigenvalues live among the exponent-th roots of unity.
    const long big = lcm_long(j.conductor(), j.exponent());
    struct Branch {
        std::vector<CycNumber> character;
        CSubspace subspace;
    };
    std::vector<Branch> branches{{{}, CSubspace::full(j.n(), big)}};
    for (const auto& gen : j.generators()) {
        const long ord = matrix_order(gen, j.exponent());
        const auto pairs = eigenpairs_finite_order(gen, ord);
        std::vector<Branch> next;
        for (const auto& branch : branches) {
            for (const auto& [zeta, eigenspace] : pairs) {
                CSubspace piece = subspace_intersect(branch.subspace, eigenspace.embedded(big));
                if (piece.is_zero()) continue;
                Branch refined{branch.character, std::move(piece)};
                refined.character.push_back(zeta.embedded(big));
                next.push_back(std::move(refined));
            }
        }
        branches = std::move(next);
    }
    std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
        return character_cmp(a.character, b.character) < 0;
    });
    IsotypicDecomposition out;
    out.n = j.n();
    out.conductor = big;
    for (auto& branch : branches)
        out.components.push_back({std::move(branch.character), std::move(branch.subspace)});
    return out;
}

bool is_polytypic(const FiniteMatrixGroup& j) {
    return isotypic_decomposition(j).components.size() >= 2;
}

bool is_isotypic_subspace(const CSubspace& v, const FiniteMatrixGroup& j) {
    const auto dec = isotypic_decomposition(j);
    const CSubspace ve = v.embedded(lcm_long(v.conductor(), dec.conductor));
    for (const auto& gen : j.generators()) {
        const auto ge = gen.embedded(ve.conductor());
        if (apply(ge, ve) != ve) fail(errc::not_invariant, "subspace is not group-invariant");
    }
    for (const auto& comp : dec.components)
        if (comp.subspace.embedded(ve.conductor()).contains(ve)) return true;
    return false;
}

OrthoPartition isotypic_refinement(const OrthoPartition& lam, const FiniteMatrixGroup& j) {
    const auto dec = isotypic_decomposition(j);
    const long big = lcm_long(lam.conductor(), dec.conductor);
    for (const auto& cls : lam.classes()) {
        const CSubspace ce = cls.embedded(big);
        for (const auto& gen : j.generators())
            if (apply(gen.embedded(big), ce) != ce)
                fail(errc::not_strongly_fixed, "a partition class is not group-invariant");
    }
    std::vector<CSubspace> pieces;
    for (const auto& cls : lam.classes()) {
        const CSubspace ce = cls.embedded(big);
        for (const auto& comp : dec.components) {
            CSubspace piece = subspace_intersect(ce, comp.subspace.embedded(big));
            if (!piece.is_zero()) pieces.push_back(std::move(piece));
        }
    }
    return OrthoPartition::from_classes(lam.ambient_dim(), big, std::move(pieces));
}

} // namespace unipart
