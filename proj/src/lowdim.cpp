#include "unipart/lowdim.hpp"

#include <sstream>

namespace unipart {

namespace {

CycNumber cy(long v, long m) { return CycNumber::from_int(v, m); }

CMatrix coordinate_swap(long m) {
    return CMatrix::from_rows({{cy(0, m), cy(1, m)}, {cy(1, m), cy(0, m)}});
}

} // namespace

L2Point L2Point::finite_pair(const CycNumber& z) {
    if (z.is_zero()) fail(errc::bad_input, "finite pair needs z != 0");
    // Keep i available alongside z.
    CycNumber embedded = z.embedded(lcm_long(z.conductor(), 4));
    L2Point pt(std::move(embedded));
    // Invariant: the pair of lines is orthogonal. <(1,z),(1,w)> = 1 + z*conj(w)
    // vanishes for w = -1/conj(z).
    const CycNumber& zz = *pt.z_;
    CycNumber w = CycNumber::from_int(-1, zz.conductor()) * zz.conj().inv();
    CycNumber pairing = CycNumber::one(zz.conductor()) + zz * w.conj();
    if (!pairing.is_zero()) fail(errc::internal_inconsistency, "finite pair lines are not orthogonal");
    return pt;
}

L2Point L2Point::axis_pair() { return L2Point(std::nullopt); }

const CycNumber& L2Point::z() const {
    if (!z_) fail(errc::bad_input, "axis pair has no finite coordinate");
    return *z_;
}

std::string L2Point::to_string() const {
    if (!z_) return "{axis pair}";
    std::ostringstream out;
    out << "{z = " << z_->to_string() << "}";
    return out.str();
}

OrthoPartition l2_partition(const L2Point& pt) {
    if (pt.is_axis_pair()) {
        const long m = 4;
        CSubspace e1 = CSubspace::span(2, m, {{cy(1, m), cy(0, m)}});
        CSubspace e2 = CSubspace::span(2, m, {{cy(0, m), cy(1, m)}});
        return OrthoPartition::from_classes(2, m, {e1, e2});
    }
    const CycNumber& z = pt.z();
    const long m = z.conductor();
    CSubspace line = CSubspace::span(2, m, {{CycNumber::one(m), z}});
    CSubspace partner = orth_complement(line);
    return OrthoPartition::from_classes(2, m, {line, partner});
}

const char* l2_class_name(L2Class c) {
    switch (c) {
        case L2Class::NotFixed: return "NotFixed";
        case L2Class::CircleComponent: return "CircleComponent";
        case L2Class::IsolatedPoint: return "IsolatedPoint";
    }
    return "UnknownClass";
}

L2Class classify_l2_fixed(const L2Point& pt) {
    OrthoPartition lam = l2_partition(pt);
    FiniteMatrixGroup h = close({coordinate_swap(lam.conductor())});
    bool stable = is_weakly_fixed(lam, h);

    L2Class symbolic;
    if (pt.is_axis_pair()) {
        symbolic = L2Class::CircleComponent;
    } else {
        const CycNumber& z = pt.z();
        const long m = z.conductor();
        if (z == cy(1, m) || z == cy(-1, m)) symbolic = L2Class::IsolatedPoint;
        else if (z.conj() == -z) symbolic = L2Class::CircleComponent;
        else symbolic = L2Class::NotFixed;
    }

    if (stable != (symbolic != L2Class::NotFixed))
        fail(errc::internal_inconsistency, "stability predicate disagrees with symbolic classification");
    return symbolic;
}

L2Census l2_fixed_component_census(const std::vector<L2Point>& grid) {
    L2Census census;
    std::vector<std::string> isolated_keys;
    for (const auto& pt : grid) {
        switch (classify_l2_fixed(pt)) {
            case L2Class::NotFixed:
                break;
            case L2Class::CircleComponent:
                census.circle_witnessed = true;
                break;
            case L2Class::IsolatedPoint: {
                // z and -1/conj(z) name the same pair, so count partitions.
                std::string key = l2_partition(pt).key();
                bool fresh = true;
                for (const auto& k : isolated_keys)
                    if (k == key) { fresh = false; break; }
                if (fresh) isolated_keys.push_back(std::move(key));
                break;
            }
        }
    }
    census.isolated_count = static_cast<long>(isolated_keys.size());
    census.component_count = census.isolated_count + (census.circle_witnessed ? 1 : 0);
    return census;
}

ChainComplex rp2_quotient_complex() {
    // Antipodal identification of the icosahedron boundary: every edge lies
    // in exactly two of the ten triangles.
    return complex_from_facets(6, {
        {0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5},
    });
}

bool l3_example_check() {
    const long m = 2;
    CMatrix tau3 = CMatrix::from_rows({{cy(0, m), cy(1, m), cy(0, m)},
                                       {cy(1, m), cy(0, m), cy(0, m)},
                                       {cy(0, m), cy(0, m), cy(1, m)}});
    AnalysisReport report = analyze({tau3}, 2);
    if (report.verdict != Verdict::ContractibleByDimensionCriterion) return false;
    if (!report.witness || report.witness->route != Route::B) return false;
    const OrthoPartition& mu = report.witness->mu;
    if (mu.ambient_dim() != 3 || mu.conductor() % m != 0) return false;
    CSubspace anti = CSubspace::span(3, m, {{cy(1, m), cy(-1, m), cy(0, m)}});
    CSubspace diag = CSubspace::span(3, m, {{cy(1, m), cy(1, m), cy(0, m)},
                                            {cy(0, m), cy(0, m), cy(1, m)}});
    OrthoPartition expected = OrthoPartition::from_classes(3, m, {anti, diag});
    return mu == expected.embedded(mu.conductor());
}

} // namespace unipart
