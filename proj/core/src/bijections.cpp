#include "pfshuffle/bijections.hpp"

#include <set>

#include "pfshuffle/enumerator.hpp"
#include "pfshuffle/error.hpp"
#include "pfshuffle/qalg.hpp"
#include "pfshuffle/serialize.hpp"

namespace pfshuffle {

namespace {

struct Row {
  int u;
  CarSize size;
};

std::vector<Row> rows_of(const TwoCarTableau& t) {
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) rows.push_back({t.u()[i], t.sizes()[i]});
  return rows;
}

TwoCarTableau from_rows(const std::vector<Row>& rows) {
  std::vector<int> u;
  std::vector<CarSize> sizes;
  u.reserve(rows.size());
  sizes.reserve(rows.size());
  for (const Row& r : rows) {
    u.push_back(r.u);
    sizes.push_back(r.size);
  }
  return TwoCarTableau::make(std::move(u), std::move(sizes));
}

bool is_diagonal_big(const Row& r) { return r.u == 0 && r.size == CarSize::big; }

bool starts_with_diagonal_big(const TwoCarTableau& t) {
  return t.size() > 0 && t.u()[0] == 0 && t.sizes()[0] == CarSize::big;
}

std::string describe(const TwoCarTableau& t) { return "\"" + t.to_text() + "\""; }

}  // namespace

TwoCarTableau prepend_diagonal_big(const TwoCarTableau& t) {
  std::vector<Row> rows{{0, CarSize::big}};
  const auto rest = rows_of(t);
  rows.insert(rows.end(), rest.begin(), rest.end());
  return from_rows(rows);
}

TwoCarTableau raise_and_attach(const TwoCarTableau& t, const BinaryWord& w) {
  if (!starts_with_diagonal_big(t)) {
    throw DomainError("raise_and_attach: tableau " + describe(t) + " must start with a diagonal big car");
  }
  std::vector<std::vector<Row>> blocks;
  for (const Row& row : rows_of(t)) {
    if (is_diagonal_big(row)) blocks.emplace_back();
    blocks.back().push_back({row.u + 1, row.size});
  }
  if (w.empty() || w[0] != CarSize::small || w.ones() < 1) {
    throw BadWord("raise_and_attach: word '" + w.to_text() + "' must start with 1");
  }
  if (w.twos() != static_cast<int>(blocks.size())) {
    throw BadWord("raise_and_attach: word '" + w.to_text() + "' needs one 2 per block (" +
                  std::to_string(blocks.size()) + " blocks)");
  }
  std::vector<Row> out;
  std::size_t next_block = 0;
  for (CarSize letter : w.letters()) {
    if (letter == CarSize::small) {
      out.push_back({0, CarSize::small});
    } else {
      const auto& block = blocks[next_block++];
      out.insert(out.end(), block.begin(), block.end());
    }
  }
  return from_rows(out);
}

TwoCarTableau insert_diagonal_bigs(const TwoCarTableau& t, const BinaryWord& v) {
  std::vector<std::vector<Row>> groups;
  for (const Row& row : rows_of(t)) {
    if (is_diagonal_big(row)) {
      throw DomainError("insert_diagonal_bigs: tableau " + describe(t) + " already has a diagonal big car");
    }
    if (row.u == 0) groups.emplace_back();
    groups.back().push_back(row);
  }
  if (v.ones() != static_cast<int>(groups.size())) {
    throw BadWord("insert_diagonal_bigs: word '" + v.to_text() + "' needs one 1 per diagonal small car (" +
                  std::to_string(groups.size()) + ")");
  }
  std::vector<Row> out;
  std::size_t next_group = 0;
  for (CarSize letter : v.letters()) {
    if (letter == CarSize::small) {
      const auto& group = groups[next_group++];
      out.insert(out.end(), group.begin(), group.end());
    } else {
      out.push_back({0, CarSize::big});
    }
  }
  return from_rows(out);
}

TwoCarTableau west_shift_swap(const TwoCarTableau& t) {
  if (!starts_with_diagonal_big(t)) {
    throw DomainError("west_shift_swap: tableau " + describe(t) + " must start with a diagonal big car");
  }
  std::vector<Row> rows = rows_of(t);
  for (Row& row : rows) {
    if (row.size == CarSize::small) {
      row.u += 1;
      row.size = CarSize::big;
    } else {
      row.size = CarSize::small;
    }
  }
  try {
    return from_rows(rows);
  } catch (const Error& e) {
    throw InvalidResult("west_shift_swap: output of " + describe(t) + " is not a tableau: " + e.what());
  }
}

TwoCarTableau trecur_map(const TwoCarTableau& t, const BinaryWord& w, const BinaryWord& v) {
  if (w.ones() != v.ones()) {
    throw BadWord("trecur_map: w = '" + w.to_text() + "' and v = '" + v.to_text() +
                  "' must have the same number of 1s");
  }
  return insert_diagonal_bigs(raise_and_attach(prepend_diagonal_big(t), w), v);
}

TwoCarTableau tisrecur_map(const TwoCarTableau& t, const BinaryWord& w) {
  if (w.ones() < 1) throw BadWord("tisrecur_map: word '" + w.to_text() + "' needs at least one 1");
  return insert_diagonal_bigs(west_shift_swap(prepend_diagonal_big(t)), w);
}

TrecurPreimage trecur_decompose(const TwoCarTableau& target) {
  const DiagCounts diag = diag_counts(target);
  if (diag.small < 1 || diag.big >= target.big_count()) {
    throw NotInImage("trecur_decompose: " + describe(target) + " needs r >= 1 and s < b");
  }
  std::vector<CarSize> v;
  std::vector<CarSize> w;
  std::vector<Row> lowered;
  for (const Row& row : rows_of(target)) {
    if (row.u == 0) {
      v.push_back(row.size);
      if (row.size == CarSize::small) w.push_back(CarSize::small);
      continue;
    }
    // Block leaders are the big cars one diagonal up; every other raised row
    // extends the current block.
    if (row.u == 1 && row.size == CarSize::big) {
      w.push_back(CarSize::big);
    } else if (lowered.empty()) {
      throw NotInImage("trecur_decompose: " + describe(target) + " has a raised row outside any block");
    }
    lowered.push_back({row.u - 1, row.size});
  }
  if (lowered.empty() || !is_diagonal_big(lowered.front())) {
    throw NotInImage("trecur_decompose: " + describe(target) + " has no block");
  }
  lowered.erase(lowered.begin());
  try {
    return {from_rows(lowered), BinaryWord(std::move(w)), BinaryWord(std::move(v))};
  } catch (const Error& e) {
    throw NotInImage("trecur_decompose: " + describe(target) + ": " + e.what());
  }
}

TisrecurPreimage tisrecur_decompose(const TwoCarTableau& target) {
  if (target.small_count() < 1) {
    throw NotInImage("tisrecur_decompose: " + describe(target) + " has no small car");
  }
  std::vector<CarSize> w;
  std::vector<Row> rows;
  for (const Row& row : rows_of(target)) {
    if (row.u == 0) w.push_back(row.size);
    if (is_diagonal_big(row)) continue;
    // Undo the swap, then undo the shift of the cars that were small.
    if (row.size == CarSize::big) {
      rows.push_back({row.u - 1, CarSize::small});
    } else {
      rows.push_back({row.u, CarSize::big});
    }
  }
  if (rows.empty() || !is_diagonal_big(rows.front())) {
    throw NotInImage("tisrecur_decompose: " + describe(target) + " does not unshift to a diagonal big first row");
  }
  rows.erase(rows.begin());
  try {
    return {from_rows(rows), BinaryWord(std::move(w))};
  } catch (const Error& e) {
    throw NotInImage("tisrecur_decompose: " + describe(target) + ": " + e.what());
  }
}

// ------------------------------------------------------------- audits

namespace {

struct AuditState {
  AuditReport report;
  std::set<TwoCarTableau> images;

  void fail(std::string message) {
    if (report.ok) {
      report.ok = false;
      report.failure = std::move(message);
    }
  }
};

bool in_family(const TwoCarTableau& t, int a, int b, std::optional<int> r, int s) {
  const DiagCounts d = diag_counts(t);
  return t.small_count() == a && t.big_count() == b && (!r || d.small == *r) && d.big == s;
}

QPoly weight(const TwoCarTableau& t) { return QPoly::monomial(coarea(t) + dinv(t).total()); }

void run_trecur_audit(AuditState& st, int a, int b, int r, int s) {
  const auto target = collect_tableaux({a, b, r, s});
  st.report.family_size = target.size();
  const auto vs = binary_words(r, s);

  for (int h = 1; h <= b - s && st.report.ok; ++h) {
    std::vector<BinaryWord> ws;
    for (auto& w : binary_words(r, h)) {
      if (w[0] == CarSize::small) ws.push_back(std::move(w));
    }
    QPoly weight_sum;
    for (int k = 0; k <= a - r && st.report.ok; ++k) {
      for (const auto& t : collect_tableaux({a - r, b - s - 1, k, h - 1})) {
        for (const auto& w : ws) {
          for (const auto& v : vs) {
            ++st.report.preimages;
            const std::string input = "t=" + describe(t) + " w=" + w.to_text() + " v=" + v.to_text();
            TwoCarTableau image;
            try {
              image = trecur_map(t, w, v);
            } catch (const Error& e) {
              return st.fail("trecur_map threw " + e.kind() + " on " + input);
            }
            if (!in_family(image, a, b, r, s)) return st.fail("image " + describe(image) + " of " + input + " outside family");
            if (area(image) != area(t) + a + b - r - s) return st.fail("area delta wrong for " + input);
            if (dinv(image).total() != dinv(t).total() + inv(w) + coinv(v)) {
              return st.fail("dinv delta wrong for " + input);
            }
            if (!st.images.insert(image).second) return st.fail("image " + describe(image) + " hit twice");
            try {
              if (!(trecur_decompose(image) == TrecurPreimage{t, w, v})) {
                return st.fail("decompose(map(x)) != x for " + input);
              }
            } catch (const Error& e) {
              return st.fail("trecur_decompose threw " + e.kind() + " on " + describe(image));
            }
            weight_sum += weight(image);
          }
        }
      }
    }
    const int exponent = (s + r) * (a + b) - choose2(s + r + 1) - 1;
    const QPoly rhs_term = monomial_shift_signed(
        qbinom(s + r, s) * qbinom(r + h - 1, h) * parkq_poly({a - r, b - s - 1, std::nullopt, h - 1}), exponent);
    if (weight_sum != rhs_term) {
      return st.fail("weight sum for h=" + std::to_string(h) + " is " + to_string(weight_sum) + ", expected " +
                     to_string(rhs_term));
    }
  }
  if (st.images.size() != target.size()) {
    return st.fail("image has " + std::to_string(st.images.size()) + " elements, family has " +
                   std::to_string(target.size()));
  }
  for (const auto& t : target) {
    try {
      const auto pre = trecur_decompose(t);
      if (trecur_map(pre.t, pre.w, pre.v) != t) return st.fail("map(decompose(y)) != y for " + describe(t));
    } catch (const Error& e) {
      return st.fail("round trip threw " + e.kind() + " on " + describe(t));
    }
  }
}

void run_tisrecur_audit(AuditState& st, int a, int b, int s) {
  const auto target = collect_tableaux({a, b, std::nullopt, s});
  st.report.family_size = target.size();

  for (int r = 1; r <= a; ++r) {
    const auto ws = binary_words(r, s);
    QPoly weight_sum;
    for (const auto& t : collect_tableaux({b - s, a - 1, std::nullopt, r - 1})) {
      for (const auto& w : ws) {
        ++st.report.preimages;
        const std::string input = "t=" + describe(t) + " w=" + w.to_text();
        TwoCarTableau image;
        try {
          image = tisrecur_map(t, w);
        } catch (const Error& e) {
          return st.fail("tisrecur_map threw " + e.kind() + " on " + input);
        }
        if (!in_family(image, a, b, std::nullopt, s)) {
          return st.fail("image " + describe(image) + " of " + input + " outside family");
        }
        if (area(image) != area(t) + b - s) return st.fail("area delta wrong for " + input);
        if (dinv(image).total() != dinv(t).total() + coinv(w)) return st.fail("dinv delta wrong for " + input);
        if (!st.images.insert(image).second) return st.fail("image " + describe(image) + " hit twice");
        try {
          if (!(tisrecur_decompose(image) == TisrecurPreimage{t, w})) {
            return st.fail("decompose(map(x)) != x for " + input);
          }
        } catch (const Error& e) {
          return st.fail("tisrecur_decompose threw " + e.kind() + " on " + describe(image));
        }
        weight_sum += weight(image);
      }
    }
    const int exponent = choose2(a + b) - (b - s) - choose2(a + b - s - 1);
    const QPoly rhs_term =
        monomial_shift_signed(qbinom(s + r, r) * parkq_poly({b - s, a - 1, std::nullopt, r - 1}), exponent);
    if (weight_sum != rhs_term) {
      return st.fail("weight sum for r=" + std::to_string(r) + " is " + to_string(weight_sum) + ", expected " +
                     to_string(rhs_term));
    }
  }
  if (st.images.size() != target.size()) {
    return st.fail("image has " + std::to_string(st.images.size()) + " elements, family has " +
                   std::to_string(target.size()));
  }
  for (const auto& t : target) {
    try {
      const auto pre = tisrecur_decompose(t);
      if (tisrecur_map(pre.t, pre.w) != t) return st.fail("map(decompose(y)) != y for " + describe(t));
    } catch (const Error& e) {
      return st.fail("round trip threw " + e.kind() + " on " + describe(t));
    }
  }
}

}  // namespace

AuditReport audit_trecur(int a, int b, int r, int s) {
  if (a < 0 || b < 0 || r < 0 || r > a || s < 0 || s >= b) {
    throw DomainError("audit_trecur: need 0 <= r <= a and 0 <= s < b");
  }
  AuditState st;
  run_trecur_audit(st, a, b, r, s);
  return st.report;
}

AuditReport audit_tisrecur(int a, int b, int s) {
  if (a < 1 || b < 0 || s < 0 || s > b) throw DomainError("audit_tisrecur: need a >= 1 and 0 <= s <= b");
  AuditState st;
  run_tisrecur_audit(st, a, b, s);
  return st.report;
}

}  // namespace pfshuffle
