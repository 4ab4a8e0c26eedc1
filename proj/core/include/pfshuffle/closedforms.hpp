#pragma once

// Closed-form q-binomial expressions for the two-car-size shuffle families and
// the principal specialization identities behind them. Every ratio is
// evaluated numerator-first with a single exact division at the end.

#include <gmpxx.h>

#include "pfshuffle/parkfun.hpp"
#include "pfshuffle/qalg.hpp"

namespace pfshuffle {

/// Generating polynomial of PF_{a,b}^{(r,s)} by coarea + dinv.
/// Requires 0 <= r <= a, 0 <= s <= b.
QPoly thm_qara(int a, int b, int r, int s);

/// Generating polynomial of PF_{a,b}^{(s)} (all r) by coarea + dinv.
/// Requires a >= 0, 0 <= s <= b.
QPoly thm_isthm(int a, int b, int s);

/// Generating polynomial of all of PF_{a,b} by coarea + dinv.
QPoly thm_wolf(int a, int b);

/// (1/[n+1]_q) prod_i q^(mu_i choose 2) [n+1 choose mu_i]_q.
QPoly conj2_rhs(const ShuffleSpec& spec);

/// e_a evaluated at 1, q, ..., q^n, by direct expansion over a-subsets of
/// {0..n}. Requires 0 <= a <= n+1; n + 1 is capped at 30.
QPoly principal_e(int a, int n);

/// N(n, k) = C(n,k) C(n,k-1) / n, 1 <= k <= n.
mpz_class narayana(int n, int k);

/// Whether thm_wolf(a, b) at q = 1 equals N(a+b+1, a+1).
bool narayana_check(int a, int b);

}  // namespace pfshuffle
