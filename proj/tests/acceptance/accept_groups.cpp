#include "criteria.hpp"

#include "unipart/group.hpp"

#include <sstream>

namespace unipart::acceptance {

namespace {

struct LibraryCase {
    const char* name;
    long p;
    std::vector<CMatrix> generators;
};

CMatrix mat2(long m, CycNumber a, CycNumber b, CycNumber c, CycNumber d) {
    return CMatrix::from_rows({{a.embedded(m), b.embedded(m)}, {c.embedded(m), d.embedded(m)}});
}

std::vector<LibraryCase> curated_library() {
    CycNumber z0 = CycNumber::from_int(0, 4);
    CycNumber z1 = CycNumber::from_int(1, 4);
    CycNumber zm = CycNumber::from_int(-1, 4);
    CycNumber i4 = CycNumber::root_of_unity(4, 1);

    std::vector<LibraryCase> lib;
    lib.push_back({"dihedral of order 8", 2,
                   {mat2(4, z0, zm, z1, z0), mat2(4, z1, z0, z0, zm)}});
    lib.push_back({"quaternion of order 8", 2,
                   {mat2(4, i4, z0, z0, CycNumber::root_of_unity(4, 3)),
                    mat2(4, z0, z1, zm, z0)}});
    lib.push_back({"cyclic of order 4", 2, {mat2(4, i4, z0, z0, z1)}});
    lib.push_back({"cyclic of order 8", 2,
                   {mat2(8, CycNumber::root_of_unity(8, 1), z0, z0, z1)}});

    // Extraspecial group of order 27 and exponent 3: a coordinate 3-cycle
    // together with the diagonal of cube roots; their commutator is the
    // scalar zeta_3.
    CycNumber w = CycNumber::root_of_unity(3, 1);
    CycNumber o3 = CycNumber::from_int(1, 3);
    CycNumber n3 = CycNumber::from_int(0, 3);
    CMatrix shift = CMatrix::from_rows({{n3, n3, o3}, {o3, n3, n3}, {n3, o3, n3}});
    CMatrix diag = CMatrix::from_rows(
        {{o3, n3, n3}, {n3, w, n3}, {n3, n3, w * w}});
    lib.push_back({"extraspecial of order 27", 3, {shift, diag}});

    // Dihedral of order 8 times a central order-2 factor, inside U(3).
    CMatrix rot = CMatrix::from_rows({{z0, zm, z0}, {z1, z0, z0}, {z0, z0, z1}});
    CMatrix flip = CMatrix::from_rows({{z1, z0, z0}, {z0, zm, z0}, {z0, z0, z1}});
    CMatrix tail = CMatrix::from_rows({{z1, z0, z0}, {z0, z1, z0}, {z0, z0, zm}});
    lib.push_back({"dihedral times order-2 center", 2, {rot, flip, tail}});
    return lib;
}

} // namespace

Outcome central_class_library(unsigned long) {
    std::ostringstream orders;
    for (const LibraryCase& lc : curated_library()) {
        FiniteMatrixGroup g = close(lc.generators);
        std::string why;
        if (g.order() > 64) why = "order exceeds 64";
        else if (!is_p_group(g, lc.p)) why = "not a p-group";
        else if (is_elementary_abelian(g, lc.p)) why = "unexpectedly elementary abelian";

        if (why.empty()) {
            try {
                AbstractQuotient q = trivial_quotient(g);
                long idx = central_order_p_in_frattini_kernel(q, lc.p);
                const CMatrix& elt = q.representative(idx);
                if (q.element_order(idx) != lc.p) why = "returned class does not have order p";
                if (why.empty()) {
                    for (const CMatrix& x : g.elements()) {
                        if (x * elt != elt * x) {
                            why = "returned class is not central";
                            break;
                        }
                    }
                }
                if (why.empty() && !power_commutator_subgroup(g, lc.p).contains(elt))
                    why = "returned class lies outside the power-commutator subgroup";
            } catch (const Error& e) {
                why = std::string("exception: ") + e.what();
            }
        }

        if (!why.empty())
            return {false, std::string(lc.name) + ": " + why};
        if (orders.tellp() > 0) orders << "/";
        orders << g.order();
    }
    return {true, "6 groups of orders " + orders.str() + ", all central classes verified"};
}

} // namespace unipart::acceptance
