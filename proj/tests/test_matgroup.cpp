#include <doctest.h>

#include "unipart/group.hpp"

#include <algorithm>

using namespace unipart;

namespace {

CMatrix mat2(long m, std::vector<std::vector<CycNumber>> rows) {
    return CMatrix::from_rows(std::move(rows));
}

CycNumber cy(long v, long m) { return CycNumber::from_int(v, m); }

CMatrix tau(long m = 4) {
    return mat2(m, {{cy(0, m), cy(1, m)}, {cy(1, m), cy(0, m)}});
}

CMatrix diag(const CycNumber& a, const CycNumber& b) {
    const long m = a.conductor();
    return mat2(m, {{a, cy(0, m)}, {cy(0, m), b}});
}

// Quaternion group: <diag(i,-i), [[0,-1],[1,0]]>.
FiniteMatrixGroup quaternion8() {
    const auto i = CycNumber::root_of_unity(4, 1);
    return close({diag(i, -i), mat2(4, {{cy(0, 4), cy(-1, 4)}, {cy(1, 4), cy(0, 4)}})});
}

// Order-32 group <diag(1,i), tau> with scalar subgroup of order 4.
FiniteMatrixGroup d32() {
    const auto i = CycNumber::root_of_unity(4, 1);
    return close({diag(cy(1, 4), i), tau()});
}

} // namespace

TEST_CASE("closure of small fixed groups") {
    CHECK_EQ(close({tau()}).order(), 2);
    CHECK_EQ(close({tau()}).exponent(), 2);
    CHECK_EQ(quaternion8().order(), 8);
    CHECK_EQ(quaternion8().exponent(), 4);
    CHECK_EQ(d32().order(), 32);

    const auto i = CycNumber::root_of_unity(4, 1);
    CHECK_EQ(close({diag(i, cy(1, 4))}).order(), 4);
}

TEST_CASE("closure validates input and cap") {
    CHECK_THROWS_AS(close({mat2(2, {{cy(1, 2), cy(1, 2)}, {cy(0, 2), cy(1, 2)}})}), Error);
    const auto z8 = CycNumber::root_of_unity(8, 1);
    try {
        close({diag(cy(1, 8), z8)}, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK_EQ(e.code(), errc::cap_exceeded);
    }
}

TEST_CASE("group element arithmetic by index") {
    const auto g = quaternion8();
    const long id = g.identity_index();
    CHECK_EQ(g.element_order(id), 1);
    for (long a = 0; a < g.order(); ++a) {
        CHECK_EQ(g.multiply(a, g.inverse(a)), id);
        const long ord = g.element_order(a);
        CHECK_EQ(8 % ord, 0);
    }
    CHECK_FALSE(g.is_abelian());
    CHECK(close({tau()}).is_abelian());
}

TEST_CASE("center and scalar subgroup of the quaternion group") {
    const auto g = quaternion8();
    const auto z = center(g);
    CHECK_EQ(z.order(), 2);
    CHECK(z.contains(CMatrix::identity(2, 4)));
    CHECK(z.contains(CMatrix::identity(2, 4).scaled(cy(-1, 4))));
    CHECK(scalar_subgroup(g).elements() == z.elements());
}

TEST_CASE("scalar subgroup of the order-32 example") {
    const auto scalars = scalar_subgroup(d32());
    CHECK_EQ(scalars.order(), 4);
    const auto i = CycNumber::root_of_unity(4, 1);
    for (long k = 0; k < 4; ++k)
        CHECK(scalars.contains(CMatrix::identity(2, 4).scaled(i.pow(k))));
}

TEST_CASE("order-p elements and p-group predicates") {
    const auto t = close({tau()});
    const auto order2 = elements_of_order_p(t, 2);
    REQUIRE_EQ(order2.size(), 1);
    CHECK_EQ(order2[0], tau());
    CHECK(is_p_group(t, 2));
    CHECK_FALSE(is_p_group(quaternion8(), 3));
    CHECK(is_p_group(quaternion8(), 2));
    CHECK(is_elementary_abelian(t, 2));
    CHECK_FALSE(is_elementary_abelian(quaternion8(), 2));
    CHECK_EQ(elements_of_order_p(quaternion8(), 2).size(), 1); // only -I
}

TEST_CASE("power-commutator subgroup and Frattini quotient of Q8") {
    const auto g = quaternion8();
    const auto k = power_commutator_subgroup(g, 2);
    CHECK_EQ(k.order(), 2);
    CHECK(k.contains(CMatrix::identity(2, 4).scaled(cy(-1, 4))));
    const auto q = frattini_quotient(g, 2);
    CHECK_EQ(q.order(), 4);
    CHECK(q.is_elementary_abelian(2));
}

TEST_CASE("Frattini quotient of a cyclic group is Z/p") {
    const auto i = CycNumber::root_of_unity(4, 1);
    const auto g = close({diag(i, cy(1, 4))});
    CHECK_EQ(g.order(), 4);
    const auto k = power_commutator_subgroup(g, 2);
    CHECK_EQ(k.order(), 2);
    CHECK(k.contains(diag(cy(-1, 4), cy(1, 4))));
    CHECK_EQ(frattini_quotient(g, 2).order(), 2);
}

TEST_CASE("elementary abelian groups have trivial Frattini kernel") {
    const auto g = close({tau(), diag(cy(-1, 4), cy(-1, 4))});
    CHECK_EQ(g.order(), 4);
    CHECK(is_elementary_abelian(g, 2));
    CHECK_EQ(power_commutator_subgroup(g, 2).order(), 1);
    CHECK_EQ(frattini_quotient(g, 2).order(), 4);
}

TEST_CASE("projective image detects elementary abelian quotients") {
    CHECK(is_projective_elementary_abelian(quaternion8(), 2));
    CHECK_EQ(projective_image(quaternion8()).order(), 4);

    CHECK(is_projective_elementary_abelian(close({tau()}), 2));
    CHECK_EQ(projective_image(close({tau()})).order(), 2);

    const auto q = projective_image(d32());
    CHECK_EQ(q.order(), 8);
    CHECK_FALSE(q.is_abelian());
    CHECK_FALSE(is_projective_elementary_abelian(d32(), 2));
}

TEST_CASE("central order-p element in the Frattini kernel") {
    // Non-abelian projective image of order 8: the kernel and center meet in
    // the class of diag(1,-1).
    const auto q = projective_image(d32());
    const long v = central_order_p_in_frattini_kernel(q, 2);
    CHECK_EQ(q.element_order(v), 2);
    const CMatrix rep = q.representative(v);
    const auto unit = rep.at(0, 0);
    CHECK_FALSE(unit.is_zero());
    CHECK_EQ(rep.scaled(unit.inv()), diag(cy(1, 4), cy(-1, 4)));

    // Q8 as an abstract group: the only candidate is -I.
    const auto t = trivial_quotient(quaternion8());
    const long w = central_order_p_in_frattini_kernel(t, 2);
    CHECK_EQ(t.representative(w), CMatrix::identity(2, 4).scaled(cy(-1, 4)));

    // Z/4: the unique order-2 element.
    const auto i = CycNumber::root_of_unity(4, 1);
    const auto c4 = trivial_quotient(close({diag(i, cy(1, 4))}));
    const long u = central_order_p_in_frattini_kernel(c4, 2);
    CHECK_EQ(c4.representative(u), diag(cy(-1, 4), cy(1, 4)));
}

TEST_CASE("central order-p element rejects bad preconditions") {
    try {
        central_order_p_in_frattini_kernel(trivial_quotient(close({tau()})), 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK_EQ(e.code(), errc::is_elementary_abelian);
    }
    const auto one = close({CMatrix::identity(2, 4)});
    try {
        central_order_p_in_frattini_kernel(trivial_quotient(one), 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK_EQ(e.code(), errc::is_trivial);
    }
}

TEST_CASE("order-p lift of a projectively order-p matrix") {
    // A^2 = i I; the pinned root choice gives alpha = zeta_8.
    const auto i = CycNumber::root_of_unity(4, 1);
    const auto a = mat2(4, {{cy(0, 4), cy(1, 4)}, {i, cy(0, 4)}});
    CHECK_EQ(a.pow(2), CMatrix::identity(2, 4).scaled(i));
    const auto b = lift_order_p(a, 2);
    CHECK_EQ(b.conductor(), 8);
    const auto z8 = CycNumber::root_of_unity(8, 1);
    CHECK_EQ(b, mat2(8, {{cy(0, 8), z8.inv()}, {z8, cy(0, 8)}}));
    CHECK(b.pow(2).is_identity());
    // B equals A up to the scalar alpha.
    CHECK_EQ(b.scaled(z8), a.embedded(8));
}

TEST_CASE("lift is the identity rescaling on order-p input") {
    CHECK_EQ(lift_order_p(tau(), 2), tau());
    const auto i = CycNumber::root_of_unity(4, 1);
    CHECK_EQ(lift_order_p(CMatrix::identity(2, 4).scaled(i), 2), CMatrix::identity(2, 4));
    try {
        lift_order_p(tau(), 3); // tau^3 = tau, not scalar
        CHECK(false);
    } catch (const Error& e) {
        CHECK_EQ(e.code(), errc::not_projective_order_p);
    }
}

TEST_CASE("scalars and the lift generate a group of order |scalars| * p") {
    const auto g = d32();
    const auto q = projective_image(g);
    const long v = central_order_p_in_frattini_kernel(q, 2);
    const auto b = lift_order_p(q.representative(v), 2);
    const auto scalars = scalar_subgroup(g);
    std::vector<CMatrix> gens;
    for (const auto& s : scalars.elements()) gens.push_back(s.embedded(b.conductor()));
    gens.push_back(b);
    const auto j = close(gens);
    CHECK_EQ(j.order(), scalars.order() * 2);
    CHECK(j.is_abelian());
}

TEST_CASE("Heisenberg group mod 3") {
    const long m = 3;
    const auto w = CycNumber::root_of_unity(3, 1);
    const auto zero = CycNumber::zero(m), one = CycNumber::one(m);
    const auto x = CMatrix::from_rows({{zero, zero, one}, {one, zero, zero}, {zero, one, zero}});
    std::vector<std::vector<CycNumber>> zr{
        {one, zero, zero}, {zero, w, zero}, {zero, zero, w * w}};
    const auto z = CMatrix::from_rows(zr);
    const auto g = close({x, z});
    CHECK_EQ(g.order(), 27);
    CHECK_EQ(g.exponent(), 3);
    CHECK(is_p_group(g, 3));
    CHECK_FALSE(g.is_abelian());
    CHECK_EQ(center(g).order(), 3);
    CHECK_EQ(scalar_subgroup(g).order(), 3);
    CHECK(is_projective_elementary_abelian(g, 3));
    CHECK_EQ(projective_image(g).order(), 9);

    const long v = central_order_p_in_frattini_kernel(trivial_quotient(g), 3);
    const auto rep = trivial_quotient(g).representative(v);
    CHECK(rep.is_scalar());
    CHECK_EQ(trivial_quotient(g).element_order(v), 3);
}

TEST_CASE("quotient projection is a homomorphism") {
    const auto g = quaternion8();
    const auto q = projective_image(g);
    const auto& proj = q.projection();
    for (long a = 0; a < g.order(); ++a)
        for (long b = 0; b < g.order(); ++b)
            CHECK_EQ(proj[g.multiply(a, b)], q.multiply(proj[a], proj[b]));
}
