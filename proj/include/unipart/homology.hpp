#pragma once

#include "unipart/errors.hpp"
#include "unipart/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace unipart {

// Dense integer matrix, row-major.
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_int_mat(long n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
Int determinant(IntMat m); // Bareiss fraction-free elimination

// U * M * V = S with S diagonal, d_i | d_{i+1}, U and V unimodular.
struct SmithDecomposition {
    IntMat u, s, v;
};
SmithDecomposition smith_normal_form(const IntMat& m);

// Sparse integer matrix used for homology-scale eliminations. Rows hold
// column->value maps; a per-column row index mirrors them.
class SparseIntMat {
public:
    SparseIntMat(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    void add(long r, long c, const Int& v);
    long nonzeros() const;
    IntMat to_dense() const;

    // Nonzero diagonal of the Smith form, ordered by divisibility. Destroys
    // the matrix. The rank is the length of the result.
    std::vector<Int> elementary_divisors() &&;

private:
    long rows_, cols_;
    std::vector<std::map<long, Int>> row_;
    std::vector<std::map<long, char>> col_rows_; // column -> rows holding a nonzero
};

// Finite poset as a strict order relation: less[i] lists all j with i < j.
struct Poset {
    long size = 0;
    std::vector<std::vector<long>> less;
};

// Simplicial chain complex over Z. dimensions[k] counts k-simplices;
// boundary(k) maps k-chains to (k-1)-chains, for 1 <= k <= top dimension.
struct ChainComplex {
    std::vector<long> dimensions;
    std::vector<SparseIntMat> boundaries; // boundaries[k-1] is the degree-k map

    long top_dimension() const { return static_cast<long>(dimensions.size()) - 1; }
    bool empty() const { return dimensions.empty(); }
    long total_simplices() const;
    long euler_characteristic_of_counts() const; // alternating sum of simplex counts
};

// Checks that consecutive boundary maps compose to zero.
bool boundaries_compose_to_zero(const ChainComplex& c);

// The nerve of a poset: k-simplices are chains of k+1 elements.
ChainComplex order_complex(const Poset& poset);

// Complex generated by explicit facets (all faces are added); vertices are
// 0..n_vertices-1 and each facet lists its vertices.
ChainComplex complex_from_facets(long n_vertices, const std::vector<std::vector<long>>& facets);

// Reduced integral homology. Degree -1 is nonzero exactly for the empty
// complex (reduced convention), making "empty" count as non-acyclic.
struct HomologyResult {
    long betti_minus_one = 0;
    std::vector<long> betti;                // reduced betti numbers by degree
    std::vector<std::vector<Int>> torsion;  // torsion coefficients by degree

    bool is_z_acyclic() const;
    std::string to_string() const;
};

HomologyResult homology(const ChainComplex& c);

} // namespace unipart
