#pragma once

// q-arithmetic building blocks: q-integers, q-factorials, q-binomial and
// q-multinomial coefficients, truncated q-Pochhammer symbols and shifted
// factorials.  Everything returns an exact MPoly; everything is pure.

#include <vector>

#include "qylag/mpoly.hpp"

namespace qylag {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.  n must be >= 0.
MPoly q_int(int n);

/// Generalization used for y-analogues: 1 + v + ... + v^(n-1).
MPoly var_int(Var v, int n);

/// n!_q = [1]_q [2]_q ... [n]_q; 0!_q = 1.
MPoly q_factorial(int n);

/// Gaussian binomial via the Pascal recurrence
/// [n k] = [n-1 k-1] + q^k [n-1 k], so membership in Z[q] is by
/// construction.  Out-of-range arguments give 0.
MPoly q_binomial(int n, int k);

/// (sum parts)!_q / prod parts!_q, as a product of q-binomials of partial
/// sums.  All parts must be >= 0.
MPoly q_multinomial(const std::vector<int>& parts);

/// (a; q)_n = prod_{i=0..n-1} (1 - a q^i); (a; q)_0 = 1.
MPoly q_pochhammer(const MPoly& a, int n);

/// Shifted factorial x0 (x0+1) ... (x0+n-1); empty product for n = 0.
MPoly rising_factorial(const MPoly& x0, int n);

/// Exact integer helpers shared by the classical (q = y = 1) routes.
Int factorial(int n);
Int binomial(int n, int k);  // 0 outside 0 <= k <= n

}  // namespace qylag
