#include "unipart/analyze.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace unipart {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ContractibleByMainTheorem: return "ContractibleByMainTheorem";
        case Verdict::ContractibleByDimensionCriterion:
            return "ContractibleByDimensionCriterion";
        case Verdict::InconclusiveProjectiveElementaryAbelian:
            return "InconclusiveProjectiveElementaryAbelian";
        case Verdict::InconclusiveTrivialProjectiveImage:
            return "InconclusiveTrivialProjectiveImage";
    }
    return "UnknownVerdict";
}

bool verdict_is_contractible(Verdict v) {
    return v == Verdict::ContractibleByMainTheorem ||
           v == Verdict::ContractibleByDimensionCriterion;
}

namespace {

std::string dims_of(const OrthoPartition& mu) {
    std::ostringstream out;
    for (long i = 0; i < mu.size(); ++i) out << (i ? "+" : "") << mu.classes()[i].dim();
    return out.str();
}

// J = <scalars of H, B> where B is the order-p lift of v_rep; the isotypic
// partition of J is the witness partition.
Witness build_witness(const FiniteMatrixGroup& h, const CMatrix& v_rep, long p, long cap,
                      Route route, std::vector<std::string>& diag) {
    const CMatrix b = lift_order_p(v_rep, p);
    const long big = b.conductor();
    const auto alpha = (v_rep.embedded(big) * b.hermitian_adjoint()).scalar_value();
    diag.push_back("lift: B = alpha^-1 * v with alpha = " + alpha->to_string() +
                   " at conductor " + std::to_string(big) + "; B^" + std::to_string(p) + " = I");
    const auto scalars = scalar_subgroup(h);
    std::vector<CMatrix> jgens;
    jgens.reserve(scalars.order() + 1);
    for (const auto& s : scalars.elements()) jgens.push_back(s.embedded(big));
    jgens.push_back(b);
    const auto j = close(jgens, cap);
    diag.push_back("J = <scalars, B>: abelian of order " + std::to_string(j.order()) + " = " +
                   std::to_string(scalars.order()) + " * " + std::to_string(p));
    const auto dec = isotypic_decomposition(j);
    if (dec.components.size() < 2)
        throw std::logic_error(
            "internal: J contains a non-scalar element, so it must have at least two isotypic "
            "components");
    std::vector<CSubspace> classes;
    classes.reserve(dec.components.size());
    for (const auto& comp : dec.components) classes.push_back(comp.subspace);
    OrthoPartition mu = OrthoPartition::from_classes(j.n(), dec.conductor, std::move(classes));
    diag.push_back("mu: isotypic partition of J with " + std::to_string(mu.size()) +
                   " classes of dimensions " + dims_of(mu));
    return Witness{v_rep, b, std::move(jgens), std::move(mu), route};
}

} // namespace

AnalysisReport analyze(const std::vector<CMatrix>& generators, long p, long cap) {
    if (!is_prime_long(p)) fail(errc::bad_input, std::to_string(p) + " is not prime");
    const auto h = close(generators, cap);
    if (!is_p_group(h, p))
        fail(errc::not_a_p_group, "group order " + std::to_string(h.order()) +
                                      " is not a power of " + std::to_string(p));
    std::vector<std::string> diag;
    diag.push_back("H: order " + std::to_string(h.order()) + " in dimension " +
                   std::to_string(h.n()) + " at conductor " + std::to_string(h.conductor()));
    const auto scalars = scalar_subgroup(h);
    diag.push_back("scalar subgroup: order " + std::to_string(scalars.order()));
    const auto hbar = projective_image(h);
    diag.push_back("projective image: order " + std::to_string(hbar.order()));

    if (hbar.is_trivial()) {
        diag.push_back("projective image is trivial: H consists of scalars only; inconclusive");
        return {Verdict::InconclusiveTrivialProjectiveImage, std::nullopt, std::move(diag)};
    }

    if (!hbar.is_elementary_abelian(p)) {
        diag.push_back("projective image is not elementary abelian");
        const long v = central_order_p_in_frattini_kernel(hbar, p);
        diag.push_back("selected the first central order-" + std::to_string(p) +
                       " class inside the kernel of the map onto the maximal elementary abelian "
                       "quotient");
        Witness w = build_witness(h, hbar.representative(v), p, cap, Route::A, diag);
        diag.push_back("verdict: ContractibleByMainTheorem (route A)");
        return {Verdict::ContractibleByMainTheorem, std::move(w), std::move(diag)};
    }

    diag.push_back("projective image is elementary abelian of order " +
                   std::to_string(hbar.order()));
    if (h.n() % p == 0) {
        diag.push_back("p = " + std::to_string(p) + " divides n = " + std::to_string(h.n()) +
                       "; no criterion applies: inconclusive");
        return {Verdict::InconclusiveProjectiveElementaryAbelian, std::nullopt, std::move(diag)};
    }
    long v = -1;
    for (long i = 0; i < hbar.order() && v < 0; ++i)
        if (i != hbar.identity_index()) v = i;
    diag.push_back("route B (derived dimension criterion): p = " + std::to_string(p) +
                   " does not divide n = " + std::to_string(h.n()) +
                   "; a transitive order-p action on the classes of a partition would force p "
                   "classes of equal dimension, so every orbit coarsening here stays proper");
    diag.push_back("selected the first non-identity central class of the projective image");
    Witness w = build_witness(h, hbar.representative(v), p, cap, Route::B, diag);
    diag.push_back("verdict: ContractibleByDimensionCriterion (route B, derived)");
    return {Verdict::ContractibleByDimensionCriterion, std::move(w), std::move(diag)};
}

namespace {

using CheckResult = std::pair<bool, std::string>;

} // namespace

WitnessVerification verify_witness(const FiniteMatrixGroup& h, long p,
                                   const AnalysisReport& report) {
    WitnessVerification out;
    if (!report.witness) {
        out.checks.push_back({"witness", false, "report carries no witness"});
        return out;
    }
    const Witness& w = *report.witness;
    const bool route_a = w.route == Route::A;

    auto run = [&](const std::string& name, auto&& fn) {
        try {
            CheckResult r = fn();
            out.checks.push_back({name, r.first, r.second});
        } catch (const std::exception& e) {
            out.checks.push_back({name, false, std::string("exception: ") + e.what()});
        }
    };

    run("a: class of v is central of order p" +
            std::string(route_a ? " and lies in the Frattini kernel" : ""),
        [&]() -> CheckResult {
            if (!h.contains(w.v_representative))
                return {false, "representative is not an element of H"};
            const auto hbar = projective_image(h);
            const long coset = hbar.projection()[h.index_of(w.v_representative)];
            if (hbar.element_order(coset) != p)
                return {false,
                        "projective order is " + std::to_string(hbar.element_order(coset))};
            for (long x = 0; x < hbar.order(); ++x)
                if (hbar.multiply(coset, x) != hbar.multiply(x, coset))
                    return {false, "class is not central in the projective image"};
            if (route_a) {
                const auto kernel = hbar.power_commutator_indices(p);
                if (std::find(kernel.begin(), kernel.end(), coset) == kernel.end())
                    return {false, "class lies outside the power-commutator kernel"};
            }
            return {true, ""};
        });

    run("b: B has order p and projectively generates the class of v", [&]() -> CheckResult {
        if (!w.lift_b.is_unitary()) return {false, "B is not unitary"};
        if (!w.lift_b.pow(p).is_identity()) return {false, "B^p is not the identity"};
        if (w.lift_b.is_scalar()) return {false, "B is scalar"};
        const long big = lcm_long(w.lift_b.conductor(), h.conductor());
        const CMatrix be = w.lift_b.embedded(big);
        const CMatrix ve = w.v_representative.embedded(big);
        for (long k = 1; k < p; ++k)
            if (gcd_long(k, p) == 1 && (be * ve.pow(k).hermitian_adjoint()).is_scalar())
                return {true, ""};
        return {false, "B is not a scalar multiple of any power of v generating its class"};
    });

    run("c: J = <scalars of H, B> of order |scalars| * p", [&]() -> CheckResult {
        const auto j_claimed = close(w.j_generators);
        const auto scalars = scalar_subgroup(h);
        const long big = lcm_long(j_claimed.conductor(), w.lift_b.conductor());
        std::vector<CMatrix> gens;
        for (const auto& s : scalars.elements()) gens.push_back(s.embedded(big));
        gens.push_back(w.lift_b.embedded(big));
        const auto j_expected = close(gens);
        if (j_claimed.order() != j_expected.order())
            return {false, "J has order " + std::to_string(j_claimed.order()) + ", expected " +
                               std::to_string(j_expected.order())};
        for (const auto& g : j_claimed.elements())
            if (!j_expected.contains(g.embedded(big)))
                return {false, "J contains an element outside <scalars, B>"};
        if (j_claimed.order() != scalars.order() * p)
            return {false, "|J| = " + std::to_string(j_claimed.order()) + " differs from " +
                               std::to_string(scalars.order() * p)};
        return {true, ""};
    });

    run("d: J is polytypic", [&]() -> CheckResult {
        if (!is_polytypic(close(w.j_generators))) return {false, "J has a single component"};
        return {true, ""};
    });

    run("e: mu is proper, strongly J-fixed, classwise isotypic, weakly H-fixed",
        [&]() -> CheckResult {
            if (w.mu.size() < 2) return {false, "mu is improper"};
            const auto j = close(w.j_generators);
            const long big = lcm_long(w.mu.conductor(), lcm_long(j.conductor(), h.conductor()));
            const auto mu = w.mu.embedded(big);
            for (const auto& g : j.generators()) {
                const auto perm = induced_class_permutation(g.embedded(big), mu);
                if (!perm) return {false, "a generator of J moves a class of mu"};
                for (long i = 0; i < mu.size(); ++i)
                    if ((*perm)[i] != i) return {false, "mu is not strongly J-fixed"};
            }
            for (const auto& cls : w.mu.classes())
                if (!is_isotypic_subspace(cls, j))
                    return {false, "a class of mu is not J-isotypic"};
            for (const auto& g : h.generators())
                if (!induced_class_permutation(g.embedded(big), mu))
                    return {false, "mu is not weakly H-fixed"};
            return {true, ""};
        });

    run("f: p does not divide n (route B only)", [&]() -> CheckResult {
        if (route_a) return {true, "not applicable on route A"};
        if (h.n() % p == 0)
            return {false, "p = " + std::to_string(p) + " divides n = " +
                               std::to_string(h.n())};
        return {true, ""};
    });

    out.accepted = std::all_of(out.checks.begin(), out.checks.end(),
                               [](const WitnessCheck& c) { return c.passed; });
    return out;
}

} // namespace unipart
