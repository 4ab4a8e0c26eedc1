#pragma once

// Memoized evaluators for the recursions satisfied by the shuffle-family
// enumerators, in q alone (weight q^(coarea+dinv)) and in (q,t) (weight
// t^area q^dinv).
//
// Corners the recursions never reach are seeded directly:
//   a = 0          one object, all big cars on the diagonal (area 0, dinv 0);
//   s = b, a >= 1  every car on the diagonal, dinv is the inversion count of
//                  the diagonal word, so the sum is [a+b choose a]_q.
// Every recursive call strictly decreases a + b.

#include <compare>
#include <cstddef>
#include <cstdint>

#include "pfshuffle/qalg.hpp"

namespace pfshuffle {

enum class RecursionFamily : std::uint8_t { rs, s };

/// Memo-table key. `r` is unused (zero) for the s family.
struct RecursionKey {
  RecursionFamily family = RecursionFamily::rs;
  bool qt = false;
  int a = 0;
  int b = 0;
  int r = 0;
  int s = 0;
  friend auto operator<=>(const RecursionKey&, const RecursionKey&) = default;
};

/// Parkq_{a,b}^{(r,s)}. Requires 0 <= r <= a, 0 <= s <= b.
QPoly recur_parkq_rs(int a, int b, int r, int s);
/// Parkq_{a,b}^{(s)}. Requires a >= 0, 0 <= s <= b.
QPoly recur_parkq_s(int a, int b, int s);
/// Parkqt_{a,b}^{(r,s)}.
QTPoly recur_parkqt_rs(int a, int b, int r, int s);
/// Parkqt_{a,b}^{(s)}.
QTPoly recur_parkqt_s(int a, int b, int s);

/// Number of cached entries across both tables.
std::size_t recursion_memo_size();
void clear_recursion_memo();

}  // namespace pfshuffle
