#pragma once

// Test-only reference implementations. Nothing here shares code with the
// library's normal-form routines.

#include <map>
#include <vector>

#include "varhom/abgroup.hpp"
#include "varhom/chain.hpp"
#include "varhom/int_matrix.hpp"

namespace oracle {

using varhom::Integer;
using varhom::IntMatrix;

// Rank by fraction-free Gaussian elimination.
std::size_t bareiss_rank(const IntMatrix& a);

// Invariant factors d_k / d_{k-1} from gcds of k x k minors. Exponential, so
// only for small matrices.
std::vector<Integer> determinantal_invariant_factors(const IntMatrix& a);

// Sparse integer matrix as column -> (row -> value).
using SparseMatrix = std::vector<std::map<std::size_t, Integer>>;

struct RankAndTorsion {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // nonunit invariant factors, sorted
};

// Unit-pivot elimination followed by a Bezout-based diagonalization of
// whatever is left.
RankAndTorsion sparse_invariant_factors(SparseMatrix cols, std::size_t rows);

struct SimplicialComplex {
    std::vector<std::vector<std::vector<int>>> simplices;  // by dimension, sorted vertex lists
    int dimension() const { return static_cast<int>(simplices.size()) - 1; }
};

// Closure of the given maximal simplices.
SimplicialComplex closure(const std::vector<std::vector<int>>& facets);

std::vector<varhom::FgAbelianGroup> simplicial_homology(const SimplicialComplex& k);

SimplicialComplex boundary_of_simplex(int n);    // S^{n-1}
SimplicialComplex projective_space(int n);       // RP^n
SimplicialComplex torus_grid(int n);             // n x n grid, n >= 3
SimplicialComplex klein_bottle_grid(int n);      // n x n grid with a flip, n >= 3

// Textbook values.
std::vector<varhom::FgAbelianGroup> sphere_homology(int n);
std::vector<varhom::FgAbelianGroup> projective_homology(int n);

} // namespace oracle
