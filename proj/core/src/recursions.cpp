#include "pfshuffle/recursions.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "pfshuffle/error.hpp"

namespace pfshuffle {

namespace {

// Concurrent readers share the lock. Values are computed without holding it,
// so two threads may race to insert the same key; both computed the same
// value and the first insertion wins.
template <typename Value>
class MemoTable {
 public:
  std::optional<Value> find(const RecursionKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const RecursionKey& key, const Value& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<RecursionKey, Value> table_;
};

MemoTable<QPoly>& q_memo() {
  static MemoTable<QPoly> table;
  return table;
}

MemoTable<QTPoly>& qt_memo() {
  static MemoTable<QTPoly> table;
  return table;
}

template <typename Value, typename Compute>
Value memoized(MemoTable<Value>& memo, const RecursionKey& key, Compute compute) {
  if (auto hit = memo.find(key)) return *hit;
  Value value = compute();
  memo.insert(key, value);
  return value;
}

bool in_range_rs(int a, int b, int r, int s) { return a >= 0 && b >= 0 && r >= 0 && r <= a && s >= 0 && s <= b; }
bool in_range_s(int a, int b, int s) { return a >= 0 && b >= 0 && s >= 0 && s <= b; }

[[noreturn]] void domain_error(const char* op, int a, int b, int r, int s) {
  throw DomainError(std::string(op) + ": parameters out of range (a=" + std::to_string(a) + ", b=" +
                    std::to_string(b) + ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
}

QPoly q_rs(int a, int b, int r, int s);
QPoly q_s(int a, int b, int s);
QTPoly qt_rs(int a, int b, int r, int s);
QTPoly qt_s(int a, int b, int s);

QPoly q_rs(int a, int b, int r, int s) {
  if (!in_range_rs(a, b, r, s)) return {};
  return memoized(q_memo(), {RecursionFamily::rs, false, a, b, r, s}, [&]() -> QPoly {
    if (a == 0) return s == b && r == 0 ? QPoly::monomial(choose2(b)) : QPoly{};
    if (s == b) return a == r ? monomial_shift(qbinom(a + b, a), choose2(a + b)) : QPoly{};
    QPoly inner;
    for (int h = 1; h <= b - s; ++h) {
      QPoly family_sum;
      for (int k = 0; k <= a - r; ++k) family_sum += q_rs(a - r, b - s - 1, k, h - 1);
      inner += qbinom(r + h - 1, h) * family_sum;
    }
    const int exponent = (s + r) * (a + b) - choose2(s + r + 1) - 1;
    return monomial_shift_signed(qbinom(s + r, s) * inner, exponent);
  });
}

QPoly q_s(int a, int b, int s) {
  if (!in_range_s(a, b, s)) return {};
  return memoized(q_memo(), {RecursionFamily::s, false, a, b, 0, s}, [&]() -> QPoly {
    if (a == 0) return s == b ? QPoly::monomial(choose2(b)) : QPoly{};
    QPoly sum;
    for (int r = 1; r <= a; ++r) sum += qbinom(s + r, r) * q_s(b - s, a - 1, r - 1);
    const int exponent = choose2(a + b) - (b - s) - choose2(a + b - s - 1);
    return monomial_shift_signed(sum, exponent);
  });
}

QTPoly qt_rs(int a, int b, int r, int s) {
  if (!in_range_rs(a, b, r, s)) return {};
  return memoized(qt_memo(), {RecursionFamily::rs, true, a, b, r, s}, [&]() -> QTPoly {
    if (a == 0) return s == b && r == 0 ? QTPoly::monomial(0, 0) : QTPoly{};
    if (s == b) return a == r ? QTPoly::from_q(qbinom(a + b, a)) : QTPoly{};
    QTPoly inner;
    for (int h = 1; h <= b - s; ++h) {
      QTPoly family_sum;
      for (int k = 0; k <= a - r; ++k) family_sum += qt_rs(a - r, b - s - 1, k, h - 1);
      inner += qbinom(r + h - 1, h) * family_sum;
    }
    return (qbinom(s + r, s) * inner).shifted(0, a + b - r - s);
  });
}

QTPoly qt_s(int a, int b, int s) {
  if (!in_range_s(a, b, s)) return {};
  return memoized(qt_memo(), {RecursionFamily::s, true, a, b, 0, s}, [&]() -> QTPoly {
    if (a == 0) return s == b ? QTPoly::monomial(0, 0) : QTPoly{};
    QTPoly sum;
    for (int r = 1; r <= a; ++r) sum += qbinom(s + r, r) * qt_s(b - s, a - 1, r - 1);
    return sum.shifted(0, b - s);
  });
}

}  // namespace

QPoly recur_parkq_rs(int a, int b, int r, int s) {
  if (!in_range_rs(a, b, r, s)) domain_error("recur_parkq_rs", a, b, r, s);
  return q_rs(a, b, r, s);
}

QPoly recur_parkq_s(int a, int b, int s) {
  if (!in_range_s(a, b, s)) domain_error("recur_parkq_s", a, b, 0, s);
  return q_s(a, b, s);
}

QTPoly recur_parkqt_rs(int a, int b, int r, int s) {
  if (!in_range_rs(a, b, r, s)) domain_error("recur_parkqt_rs", a, b, r, s);
  return qt_rs(a, b, r, s);
}

QTPoly recur_parkqt_s(int a, int b, int s) {
  if (!in_range_s(a, b, s)) domain_error("recur_parkqt_s", a, b, 0, s);
  return qt_s(a, b, s);
}

std::size_t recursion_memo_size() { return q_memo().size() + qt_memo().size(); }

void clear_recursion_memo() {
  q_memo().clear();
  qt_memo().clear();
}

}  // namespace pfshuffle
