#pragma once

#include <cstddef>
#include <vector>

#include "varhom/int_matrix.hpp"

namespace varhom {

class FgAbelianGroup;

/// Certified Smith normal form: U * A * V == D.
///
/// D is rectangular-diagonal with positive entries d_1 | d_2 | ... | d_rank
/// followed by zeros. U and V are unimodular. When requested, their exact
/// inverses are tracked alongside so callers can change coordinates without
/// a second elimination.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    IntMatrix U_inv;  // empty unless SmithOptions::track_inverses
    IntMatrix V_inv;
    std::size_t rank = 0;
    IntVector invariant_factors;  // d_1..d_rank, ones included
};

struct SmithOptions {
    bool track_inverses = true;
};

// Pivot rule: smallest nonzero absolute value in the active block, ties to
// the lexicographically first (row, col). Deterministic for a given input.
SmithForm smith_normal_form(const IntMatrix& a, SmithOptions options = {});

/// Columns form a basis of {x : A x = 0}; the basis is saturated (extends to
/// a basis of Z^cols).
IntMatrix kernel_basis(const IntMatrix& a);

/// Kernel basis K together with a left inverse L (L * K == I). L * x gives the
/// coordinates of any kernel vector x in the basis K.
struct KernelLattice {
    IntMatrix basis;
    IntMatrix coordinates;
};
KernelLattice kernel_lattice(const IntMatrix& a);

/// Z^rows / image(A), normalized.
FgAbelianGroup cokernel_presentation(const IntMatrix& a);

/// |det A| == 1. Throws StructuralError on non-square input.
bool is_unimodular(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

} // namespace varhom
