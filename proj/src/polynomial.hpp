#pragma once

// Dense univariate polynomials with exact coefficients; only what the
// automorphism-order computation needs.

#include <vector>

#include "varhom/int_matrix.hpp"

namespace varhom::detail {

// Coefficients low degree first; no trailing zeros (the zero polynomial is empty).
using IntPoly = std::vector<Integer>;

void trim(IntPoly& p);
int degree(const IntPoly& p);

// Exact division by a monic divisor. Returns false (leaving `quotient`
// unspecified) when the remainder is nonzero.
bool divide_exact(const IntPoly& dividend, const IntPoly& monic_divisor, IntPoly& quotient);

// n-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned n);

unsigned long euler_phi(unsigned long n);

// Monic minimal polynomial of a square integer matrix (integral by Gauss's lemma).
IntPoly minimal_polynomial(const IntMatrix& a);

} // namespace varhom::detail
