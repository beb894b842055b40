#include <doctest.h>

#include "unipart/analyze.hpp"

#include <string>

using namespace unipart;

namespace {

CycNumber cy(long v, long m) { return CycNumber::from_int(v, m); }

CMatrix tau(long m = 4) {
    return CMatrix::from_rows({{cy(0, m), cy(1, m)}, {cy(1, m), cy(0, m)}});
}

CMatrix swap3(long m = 2) {
    return CMatrix::from_rows(
        {{cy(0, m), cy(1, m), cy(0, m)}, {cy(1, m), cy(0, m), cy(0, m)},
         {cy(0, m), cy(0, m), cy(1, m)}});
}

CMatrix diag2(const CycNumber& a, const CycNumber& b) {
    const long m = a.conductor();
    return CMatrix::from_rows({{a, cy(0, m)}, {cy(0, m), b}});
}

CSubspace line(long m, std::vector<long> v) {
    std::vector<CycNumber> row;
    for (long x : v) row.push_back(cy(x, m));
    return CSubspace::span(static_cast<long>(v.size()), m, {row});
}

} // namespace

TEST_CASE("swap of two coordinates in dimension 3: dimension criterion") {
    const auto report = analyze({swap3()}, 2);
    CHECK_EQ(report.verdict, Verdict::ContractibleByDimensionCriterion);
    REQUIRE(report.witness.has_value());
    CHECK_EQ(report.witness->route, Route::B);
    CHECK_EQ(report.witness->v_representative, swap3());
    CHECK_EQ(report.witness->lift_b, swap3());
    const auto& mu = report.witness->mu;
    REQUIRE_EQ(mu.size(), 2);
    const auto plane = CSubspace::span(3, 2, {line(2, {1, 1, 0}).basis_vectors()[0],
                                              line(2, {0, 0, 1}).basis_vectors()[0]});
    CHECK_EQ(mu.classes()[0], line(2, {1, -1, 0}));
    CHECK_EQ(mu.classes()[1], plane);

    const auto verification = verify_witness(close({swap3()}), 2, report);
    CHECK(verification.accepted);
    CHECK_EQ(verification.checks.size(), 6);
}

TEST_CASE("swap in dimension 2: inconclusive, projectively elementary abelian") {
    const auto report = analyze({tau()}, 2);
    CHECK_EQ(report.verdict, Verdict::InconclusiveProjectiveElementaryAbelian);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("order-32 group in dimension 2: main theorem route") {
    const auto i = CycNumber::root_of_unity(4, 1);
    const std::vector<CMatrix> gens{diag2(cy(1, 4), i), tau()};
    const auto report = analyze(gens, 2);
    CHECK_EQ(report.verdict, Verdict::ContractibleByMainTheorem);
    REQUIRE(report.witness.has_value());
    CHECK_EQ(report.witness->route, Route::A);

    // The selected class is the projective class of diag(1,-1).
    const auto& rep = report.witness->v_representative;
    CHECK_EQ(rep.scaled(rep.at(0, 0).inv()), diag2(cy(1, 4), cy(-1, 4)));

    // mu is the coordinate-axes partition.
    const auto axes = OrthoPartition::from_classes(2, 4, {line(4, {1, 0}), line(4, {0, 1})});
    CHECK_EQ(report.witness->mu, axes);

    const auto h = close(gens);
    const auto verification = verify_witness(h, 2, report);
    CHECK(verification.accepted);
    CHECK_EQ(verification.checks.size(), 6); // (f) is vacuous on route A but still reported
    CHECK(verification.checks.back().passed);

    // The selected class acts non-transitively on any weakly fixed partition;
    // here it fixes both coordinate axes.
    const auto perm = induced_class_permutation(rep, axes);
    REQUIRE(perm.has_value());
    CHECK_EQ(*perm, std::vector<long>({0, 1}));
}

TEST_CASE("scalar group: trivial projective image") {
    const auto i = CycNumber::root_of_unity(4, 1);
    const auto report = analyze({CMatrix::identity(2, 4).scaled(i)}, 2);
    CHECK_EQ(report.verdict, Verdict::InconclusiveTrivialProjectiveImage);
    CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("analyze validates the group") {
    try {
        analyze({tau()}, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK_EQ(e.code(), errc::not_a_p_group);
    }
    CHECK_THROWS_AS(analyze({CMatrix::from_rows({{cy(1, 2), cy(1, 2)}, {cy(0, 2), cy(1, 2)}})}, 2),
                    Error);
}

TEST_CASE("tampered witnesses are rejected with named checks") {
    const auto i = CycNumber::root_of_unity(4, 1);
    const std::vector<CMatrix> gens{diag2(cy(1, 4), i), tau()};
    const auto h = close(gens);
    const auto report = analyze(gens, 2);
    REQUIRE(report.witness.has_value());

    SUBCASE("lift replaced by a non-order-p matrix") {
        AnalysisReport bad = report;
        bad.witness->lift_b = diag2(cy(1, 4), i); // order 4
        const auto v = verify_witness(h, 2, bad);
        CHECK_FALSE(v.accepted);
        bool b_failed = false;
        for (const auto& c : v.checks)
            if (c.name[0] == 'b') b_failed = !c.passed;
        CHECK(b_failed);
    }

    SUBCASE("mu replaced by a partition the group moves") {
        AnalysisReport bad = report;
        bad.witness->mu =
            OrthoPartition::from_classes(2, 4, {line(4, {1, 2}), line(4, {2, -1})});
        const auto v = verify_witness(h, 2, bad);
        CHECK_FALSE(v.accepted);
        bool e_failed = false;
        for (const auto& c : v.checks)
            if (c.name[0] == 'e') e_failed = !c.passed;
        CHECK(e_failed);
    }

    SUBCASE("representative replaced by a non-central element") {
        AnalysisReport bad = report;
        bad.witness->v_representative = tau();
        const auto v = verify_witness(h, 2, bad);
        CHECK_FALSE(v.accepted);
        CHECK_FALSE(v.checks[0].passed);
    }

    SUBCASE("report without witness is rejected") {
        AnalysisReport bare{report.verdict, std::nullopt, {}};
        CHECK_FALSE(verify_witness(h, 2, bare).accepted);
    }
}

TEST_CASE("reports are deterministic") {
    const auto i = CycNumber::root_of_unity(4, 1);
    const std::vector<CMatrix> gens{diag2(cy(1, 4), i), tau()};
    const auto r1 = analyze(gens, 2);
    const auto r2 = analyze(gens, 2);
    CHECK_EQ(r1.verdict, r2.verdict);
    CHECK(r1.diagnostics == r2.diagnostics);
    CHECK_EQ(r1.witness->v_representative, r2.witness->v_representative);
    CHECK_EQ(r1.witness->lift_b, r2.witness->lift_b);
    CHECK_EQ(r1.witness->mu.key(), r2.witness->mu.key());
}

TEST_CASE("diagnostics narrate the pipeline") {
    const auto report = analyze({swap3()}, 2);
    REQUIRE_FALSE(report.diagnostics.empty());
    CHECK(report.diagnostics.front().find("order 2") != std::string::npos);
    bool mentions_derived = false;
    for (const auto& line : report.diagnostics)
        if (line.find("derived") != std::string::npos) mentions_derived = true;
    CHECK(mentions_derived);
}
