#pragma once

// Constructive maps on 1-2 tableaux that build the shuffle families
// PF_{a,b}^{(r,s)} and PF_{a,b}^{(s)} from smaller ones, their inverses, and
// exhaustive audits of bijectivity and of the area/dinv bookkeeping.
//
// Terminology: a "diagonal" row has u = 0. A "group" of a tableau whose
// diagonal rows are all small is a diagonal small together with the
// off-diagonal rows that follow it.

#include <cstddef>
#include <string>

#include "pfshuffle/parkfun.hpp"

namespace pfshuffle {

/// New first row: a big car on the main diagonal. Area and dinv unchanged.
TwoCarTableau prepend_diagonal_big(const TwoCarTableau& t);

/// Cuts t into blocks, each starting at a diagonal big (t must start with
/// one), then reads w left to right: a 1 emits a new diagonal small, a 2 emits
/// the next block raised by one diagonal. w must start with 1 and contain
/// exactly one 2 per block (BadWord otherwise).
TwoCarTableau raise_and_attach(const TwoCarTableau& t, const BinaryWord& w);

/// For a tableau with no diagonal bigs: adds a diagonal big per 2 of v so the
/// diagonal, read bottom to top, spells v. Each big goes at the end of the
/// preceding group, or at the front when no 1 precedes it. v must have one 1
/// per diagonal small of t (BadWord otherwise).
TwoCarTableau insert_diagonal_bigs(const TwoCarTableau& t, const BinaryWord& v);

/// Moves every small car one diagonal up, then swaps small and big. t must
/// start with a diagonal big; throws InvalidResult if the output is not a
/// valid tableau.
TwoCarTableau west_shift_swap(const TwoCarTableau& t);

/// t in PF_{a-r,b-s-1}^{(k,h-1)}, w in W(1^r 2^h) starting with 1,
/// v in W(1^r 2^s). Lands in PF_{a,b}^{(r,s)} with area + (a+b-r-s) and
/// dinv + inv(w) + coinv(v).
TwoCarTableau trecur_map(const TwoCarTableau& t, const BinaryWord& w, const BinaryWord& v);

/// t in PF_{b-s,a-1}^{(r-1)}, w in W(1^r 2^s). Lands in PF_{a,b}^{(s)} with
/// area + (b-s) and dinv + coinv(w).
TwoCarTableau tisrecur_map(const TwoCarTableau& t, const BinaryWord& w);

struct TrecurPreimage {
  TwoCarTableau t;
  BinaryWord w;
  BinaryWord v;
  friend bool operator==(const TrecurPreimage&, const TrecurPreimage&) = default;
};

struct TisrecurPreimage {
  TwoCarTableau t;
  BinaryWord w;
  friend bool operator==(const TisrecurPreimage&, const TisrecurPreimage&) = default;
};

/// Inverse of trecur_map. Needs r >= 1 diagonal smalls and s < b; throws
/// NotInImage otherwise.
TrecurPreimage trecur_decompose(const TwoCarTableau& target);

/// Inverse of tisrecur_map. Needs a >= 1; throws NotInImage otherwise.
TisrecurPreimage tisrecur_decompose(const TwoCarTableau& target);

struct AuditReport {
  bool ok = true;
  std::size_t preimages = 0;    // inputs pushed through the forward map
  std::size_t family_size = 0;  // size of the target family
  std::string failure;          // first violation, empty when ok
};

/// Exhaustive audit of trecur_map onto PF_{a,b}^{(r,s)}, s < b: output
/// membership, exact area/dinv deltas, injectivity, surjectivity, both round
/// trips, and per-h weight sums against the enumerated right-hand side.
AuditReport audit_trecur(int a, int b, int r, int s);

/// Same for tisrecur_map onto PF_{a,b}^{(s)}, a >= 1 (weights checked per r).
AuditReport audit_tisrecur(int a, int b, int s);

}  // namespace pfshuffle
