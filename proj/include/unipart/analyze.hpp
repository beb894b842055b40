#pragma once

#include "unipart/group.hpp"
#include "unipart/isotypic.hpp"
#include "unipart/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipart {

enum class Verdict {
    ContractibleByMainTheorem,
    ContractibleByDimensionCriterion,
    InconclusiveProjectiveElementaryAbelian,
    InconclusiveTrivialProjectiveImage,
};

const char* verdict_name(Verdict v);
bool verdict_is_contractible(Verdict v);

enum class Route { A, B };

// Machine-checkable evidence for a Contractible verdict: the chosen central
// projective class V (via a representing element of H), its order-p lift B,
// generators of J = <scalars of H, B>, and the isotypic partition mu of J.
struct Witness {
    CMatrix v_representative;
    CMatrix lift_b;
    std::vector<CMatrix> j_generators;
    OrthoPartition mu;
    Route route;
};

struct AnalysisReport {
    Verdict verdict;
    std::optional<Witness> witness;
    std::vector<std::string> diagnostics;
};

// The decision pipeline for a finite p-group H of unitary matrices given by
// generators:
//   - trivial projective image: inconclusive;
//   - non-elementary-abelian projective image: route A (a central order-p
//     class in the kernel of the maximal elementary abelian quotient map
//     always exists; its lift generates a polytypic J whose isotypic
//     partition is the witness);
//   - elementary abelian projective image: route B when p does not divide n
//     (a derived dimension criterion; see diagnostics), otherwise
//     inconclusive.
// Throws errc::not_a_p_group, errc::cap_exceeded, errc::not_unitary,
// errc::conductor_overflow.
AnalysisReport analyze(const std::vector<CMatrix>& generators, long p,
                       long cap = kDefaultClosureCap);

struct WitnessCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct WitnessVerification {
    bool accepted = false;
    std::vector<WitnessCheck> checks;
};

// Re-derives every fact a Contractible verdict rests on, from H, p and the
// report alone: (a) the projective class of v_representative is central of
// order p (and, on route A, lies in the kernel of the map onto the maximal
// elementary abelian quotient); (b) B^p = I and B projectively generates
// that class; (c) the witness J equals <scalars of H, B> and has order
// |scalars| * p; (d) J is polytypic; (e) mu is proper, strongly J-fixed,
// classwise J-isotypic, and weakly H-fixed; (f) on route B, p does not
// divide n. Failures are reported per check, never thrown.
WitnessVerification verify_witness(const FiniteMatrixGroup& h, long p,
                                   const AnalysisReport& report);

} // namespace unipart
