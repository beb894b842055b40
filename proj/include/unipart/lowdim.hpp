#pragma once

#include "unipart/analyze.hpp"
#include "unipart/homology.hpp"
#include "unipart/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unipart {

// A point of the two-dimensional partition space: an unordered pair of
// orthogonal lines in C^2. A finite pair is {span(1,z), span(1,-1/conj(z))}
// with z != 0; the axis pair is {span(e1), span(e2)}.
class L2Point {
public:
    static L2Point finite_pair(const CycNumber& z);
    static L2Point axis_pair();

    bool is_axis_pair() const { return !z_.has_value(); }
    const CycNumber& z() const; // finite pairs only
    std::string to_string() const;

private:
    explicit L2Point(std::optional<CycNumber> z) : z_(std::move(z)) {}
    std::optional<CycNumber> z_;
};

// The two-line orthogonal partition of C^2 determined by the point.
OrthoPartition l2_partition(const L2Point& pt);

enum class L2Class { NotFixed, CircleComponent, IsolatedPoint };
const char* l2_class_name(L2Class c);

// Classified twice: by the stability predicate for the coordinate swap, and
// symbolically (z = +-1 isolated; purely imaginary z or the axis pair on the
// circle). The two answers are cross-checked on every call.
L2Class classify_l2_fixed(const L2Point& pt);

struct L2Census {
    long isolated_count = 0;    // distinct fixed points with isolated class
    bool circle_witnessed = false;
    long component_count = 0;
};

// Tallies fixed-set components over a finite sample of points.
L2Census l2_fixed_component_census(const std::vector<L2Point>& grid);

// Minimal 6-vertex triangulation of the real projective plane, the
// identification model of the two-line partition space.
ChainComplex rp2_quotient_complex();

// Runs the full pipeline on the coordinate swap in dimension 3 and checks
// the verdict, route, and exact terminal partition.
bool l3_example_check();

} // namespace unipart
