#include "pfshuffle/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "pfshuffle/error.hpp"

namespace pfshuffle {

namespace {

// Counts per exponent; exact because no family exceeds 2^64 objects.
struct Histogram {
  std::vector<std::uint64_t> counts;

  void add(int e) {
    if (static_cast<std::size_t>(e) >= counts.size()) counts.resize(static_cast<std::size_t>(e) + 1);
    ++counts[static_cast<std::size_t>(e)];
  }
  Histogram& operator+=(const Histogram& rhs) {
    if (rhs.counts.size() > counts.size()) counts.resize(rhs.counts.size());
    for (std::size_t i = 0; i < rhs.counts.size(); ++i) counts[i] += rhs.counts[i];
    return *this;
  }
  QPoly to_poly() const {
    std::vector<mpz_class> c;
    c.reserve(counts.size());
    for (std::uint64_t x : counts) c.emplace_back(mpz_class(std::to_string(x)));
    return QPoly(std::move(c));
  }
};

struct Histogram2D {
  int width = 0;  // dinv range
  std::vector<std::uint64_t> counts;

  explicit Histogram2D(int n = 0)
      : width(choose2(n) + 1), counts(static_cast<std::size_t>(width) * static_cast<std::size_t>(width)) {}

  void add(int area, int dinv) { ++counts[static_cast<std::size_t>(area * width + dinv)]; }
  Histogram2D& operator+=(const Histogram2D& rhs) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += rhs.counts[i];
    return *this;
  }
  QTPoly to_poly() const {
    QTPoly p;
    for (int area = 0; area < width; ++area) {
      for (int d = 0; d < width; ++d) {
        const std::uint64_t c = counts[static_cast<std::size_t>(area * width + d)];
        if (c) p.add_term(d, area, mpz_class(std::to_string(c)));
      }
    }
    return p;
  }
};

unsigned resolve_threads(const EnumOptions& options, std::size_t work_items) {
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::size_t>(t, 1, std::max<std::size_t>(work_items, 1)));
}

// Runs work(path, acc) for every Dyck path of length n, path i on worker
// i mod T, and merges the accumulators in worker order.
template <typename Acc, typename Work>
Acc shard_over_paths(int n, const EnumOptions& options, Acc init, Work work) {
  const auto paths = dyck_paths(n);
  const unsigned threads = resolve_threads(options, paths.size());
  std::vector<Acc> accs(threads, init);
  auto run = [&](unsigned tid) {
    for (std::size_t i = tid; i < paths.size(); i += threads) work(paths[i], accs[tid]);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(run, tid);
  }
  Acc total = std::move(accs[0]);
  for (unsigned tid = 1; tid < threads; ++tid) total += accs[tid];
  return total;
}

// Lexicographic enumeration of the permutations v of 1..n with
// v[i] > v[i-1] wherever u rises. `v` must hold a permutation on entry to
// first_valid().
class ColumnPermutations {
 public:
  explicit ColumnPermutations(const std::vector<int>& u) : rise_(u.size(), false) {
    for (std::size_t i = 1; i < u.size(); ++i) rise_[i] = u[i] == u[i - 1] + 1;
  }

  bool first(std::vector<int>& v) const {
    v.resize(rise_.size());
    std::iota(v.begin(), v.end(), 1);
    return settle(v);
  }

  bool next(std::vector<int>& v) const {
    if (!std::next_permutation(v.begin(), v.end())) return false;
    return settle(v);
  }

 private:
  // Moves forward to the first valid permutation at or after v.
  bool settle(std::vector<int>& v) const {
    while (true) {
      std::size_t bad = 0;
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (rise_[i] && v[i] < v[i - 1]) {
          bad = i;
          break;
        }
      }
      if (bad == 0) return true;
      // Every permutation sharing the prefix v[0..bad] is invalid: jump past them.
      std::sort(v.begin() + static_cast<std::ptrdiff_t>(bad) + 1, v.end(), std::greater<>());
      if (!std::next_permutation(v.begin(), v.end())) return false;
    }
  }

  std::vector<bool> rise_;
};

// Forced sizes on a Dyck path: each rise pins (small, big) on its two rows.
// Returns false if some row is pinned both ways.
bool forced_sizes(const std::vector<int>& u, std::vector<int>& forced) {
  forced.assign(u.size(), 0);
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] != u[i - 1] + 1) continue;
    if (forced[i - 1] == 2) return false;
    forced[i - 1] = 1;
    forced[i] = 2;
  }
  return true;
}

// Visits every size word compatible with u that has exactly a small cars.
template <typename Visit>
void for_each_size_word(const std::vector<int>& u, int a, std::vector<int>& forced, std::vector<CarSize>& sizes,
                        Visit visit) {
  if (!forced_sizes(u, forced)) return;
  const int n = static_cast<int>(u.size());
  std::vector<int> free_rows;
  int forced_small = 0;
  for (int i = 0; i < n; ++i) {
    if (forced[i] == 0) free_rows.push_back(i);
    if (forced[i] == 1) ++forced_small;
  }
  const int free_count = static_cast<int>(free_rows.size());
  const int forced_big = n - free_count - forced_small;
  const int free_small = a - forced_small;
  const int free_big = (n - a) - forced_big;
  if (free_small < 0 || free_big < 0) return;
  sizes.resize(u.size());
  for (int i = 0; i < n; ++i) {
    if (forced[i]) sizes[i] = static_cast<CarSize>(forced[i]);
  }
  std::vector<CarSize> letters(static_cast<std::size_t>(free_small), CarSize::small);
  letters.resize(free_rows.size(), CarSize::big);
  do {
    for (std::size_t k = 0; k < free_rows.size(); ++k) sizes[free_rows[k]] = letters[k];
    visit(sizes);
  } while (std::next_permutation(letters.begin(), letters.end()));
}

bool diag_filter(const Family& f, const std::vector<int>& u, const std::vector<CarSize>& sizes) {
  if (!f.r && !f.s) return true;
  int r = 0;
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) continue;
    if (sizes[i] == CarSize::small) {
      ++r;
    } else {
      ++s;
    }
  }
  return (!f.r || *f.r == r) && (!f.s || *f.s == s);
}

}  // namespace

void Family::validate() const {
  auto fail = [&](const std::string& why) { throw DomainError("family (a=" + std::to_string(a) + ", b=" +
                                                              std::to_string(b) + "): " + why); };
  if (a < 0 || b < 0) fail("a and b must be nonnegative");
  if (r && (*r < 0 || *r > a)) fail("r must lie in [0, a]");
  if (s && (*s < 0 || *s > b)) fail("s must lie in [0, b]");
}

// ---------------------------------------------------- DyckPathGenerator

DyckPathGenerator::DyckPathGenerator(int n) : n_(n) {
  if (n < 0) throw DomainError("DyckPathGenerator: negative size");
}

bool DyckPathGenerator::next(std::vector<int>& u) {
  if (!started_) {
    started_ = true;
    current_.assign(static_cast<std::size_t>(n_), 0);
    u = current_;
    return true;
  }
  for (int i = n_ - 1; i >= 1; --i) {
    if (current_[i] < current_[i - 1] + 1) {
      ++current_[i];
      std::fill(current_.begin() + i + 1, current_.end(), 0);
      u = current_;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> dyck_paths(int n) {
  std::vector<std::vector<int>> out;
  DyckPathGenerator gen(n);
  std::vector<int> u;
  while (gen.next(u)) out.push_back(u);
  return out;
}

// ---------------------------------------------- ParkingFunctionGenerator

ParkingFunctionGenerator::ParkingFunctionGenerator(int n) : n_(n), paths_(n) {}

bool ParkingFunctionGenerator::next_path() {
  while (paths_.next(u_)) {
    if (ColumnPermutations(u_).first(v_)) return true;
  }
  return false;
}

bool ParkingFunctionGenerator::advance_labels() { return ColumnPermutations(u_).next(v_); }

std::optional<ParkingFunction> ParkingFunctionGenerator::next() {
  if (done_) return std::nullopt;
  if (!have_path_ || !advance_labels()) {
    have_path_ = next_path();
    if (!have_path_) {
      done_ = true;
      return std::nullopt;
    }
  }
  return ParkingFunction::from_trusted(u_, v_);
}

// ------------------------------------------------------ TableauGenerator

TableauGenerator::TableauGenerator(Family family) : family_(family), paths_((family.validate(), family.n())) {}

bool TableauGenerator::load_path() {
  std::vector<int> forced;
  while (paths_.next(u_)) {
    if (!forced_sizes(u_, forced)) continue;
    free_rows_.clear();
    int forced_small = 0;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (forced[i] == 0) free_rows_.push_back(static_cast<int>(i));
      if (forced[i] == 1) ++forced_small;
    }
    const int free_small = family_.a - forced_small;
    const int forced_big = static_cast<int>(u_.size() - free_rows_.size()) - forced_small;
    const int free_big = family_.b - forced_big;
    if (free_small < 0 || free_big < 0 || free_small + free_big != static_cast<int>(free_rows_.size())) continue;
    sizes_.assign(u_.size(), CarSize::small);
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (forced[i]) sizes_[i] = static_cast<CarSize>(forced[i]);
    }
    free_letters_.assign(static_cast<std::size_t>(free_small), CarSize::small);
    free_letters_.resize(free_rows_.size(), CarSize::big);
    for (std::size_t k = 0; k < free_rows_.size(); ++k) sizes_[free_rows_[k]] = free_letters_[k];
    return true;
  }
  return false;
}

bool TableauGenerator::matches_filter() const { return diag_filter(family_, u_, sizes_); }

std::optional<TwoCarTableau> TableauGenerator::next() {
  while (!done_) {
    if (have_path_ && std::next_permutation(free_letters_.begin(), free_letters_.end())) {
      for (std::size_t k = 0; k < free_rows_.size(); ++k) sizes_[free_rows_[k]] = free_letters_[k];
    } else {
      have_path_ = load_path();
      if (!have_path_) {
        done_ = true;
        break;
      }
    }
    if (matches_filter()) return TwoCarTableau::from_trusted(u_, sizes_);
  }
  return std::nullopt;
}

std::vector<ParkingFunction> collect_pf(int n) {
  std::vector<ParkingFunction> out;
  ParkingFunctionGenerator gen(n);
  while (auto pf = gen.next()) out.push_back(std::move(*pf));
  return out;
}

std::vector<TwoCarTableau> collect_tableaux(const Family& family) {
  std::vector<TwoCarTableau> out;
  TableauGenerator gen(family);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

// ------------------------------------------------------- aggregation

QPoly parkq_poly(const Family& family, const EnumOptions& options) {
  family.validate();
  const int n = family.n();
  const int top = choose2(n);
  Histogram hist = shard_over_paths(n, options, Histogram{}, [&](const std::vector<int>& u, Histogram& acc) {
    std::vector<int> forced;
    std::vector<CarSize> sizes;
    const int area = std::accumulate(u.begin(), u.end(), 0);
    for_each_size_word(u, family.a, forced, sizes, [&](const std::vector<CarSize>& w) {
      if (!diag_filter(family, u, w)) return;
      acc.add(top - area + tableau_dinv(u, w).total());
    });
  });
  return hist.to_poly();
}

QTPoly parkqt_poly(const Family& family, const EnumOptions& options) {
  family.validate();
  const int n = family.n();
  Histogram2D hist = shard_over_paths(n, options, Histogram2D(n), [&](const std::vector<int>& u, Histogram2D& acc) {
    std::vector<int> forced;
    std::vector<CarSize> sizes;
    const int area = std::accumulate(u.begin(), u.end(), 0);
    for_each_size_word(u, family.a, forced, sizes, [&](const std::vector<CarSize>& w) {
      if (!diag_filter(family, u, w)) return;
      acc.add(area, tableau_dinv(u, w).total());
    });
  });
  return hist.to_poly();
}

QPoly shuffle_enumerator(const ShuffleSpec& spec, const EnumOptions& options) {
  const int n = spec.total();
  const int top = choose2(n);
  Histogram hist = shard_over_paths(n, options, Histogram{}, [&](const std::vector<int>& u, Histogram& acc) {
    const ColumnPermutations perms(u);
    std::vector<int> v;
    const int area = std::accumulate(u.begin(), u.end(), 0);
    for (bool ok = perms.first(v); ok; ok = perms.next(v)) {
      if (!is_shuffle(diagonal_word(u, v), spec)) continue;
      const auto pf = ParkingFunction::from_trusted(u, v);
      acc.add(top - area + dinv(pf).total());
    }
  });
  return hist.to_poly();
}

// ------------------------------------------------------- lattice paths

namespace {

// Visits every east/north word with n east (small) and k north (big) steps.
template <typename Visit>
void for_each_rect_path(int n, int k, Visit visit) {
  std::vector<CarSize> steps(static_cast<std::size_t>(n), CarSize::small);
  steps.resize(static_cast<std::size_t>(n + k), CarSize::big);
  do {
    visit(steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
}

// Cells above the path inside its own box: each east step at height h has
// (box height - h) cells above it.
int area_above(std::span<const CarSize> steps, int box_height) {
  int height = 0;
  int area = 0;
  for (CarSize s : steps) {
    if (s == CarSize::big) {
      ++height;
    } else {
      area += box_height - height;
    }
  }
  return area;
}

}  // namespace

QPoly rect_path_poly(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("rect_path_poly: n and k must be nonnegative");
  Histogram hist;
  for_each_rect_path(n, k, [&](const std::vector<CarSize>& steps) { hist.add(area_above(steps, k)); });
  return hist.to_poly();
}

std::vector<QPoly> rect_path_split_terms(int n, int k, int m) {
  if (n < 0 || k < 0) throw DomainError("rect_path_poly: n and k must be nonnegative");
  if (m < 1 || m > n) throw DomainError("rect_path_poly: split index m must lie in [1, n]");
  std::vector<Histogram> by_height(static_cast<std::size_t>(k) + 1);
  for_each_rect_path(n, k, [&](const std::vector<CarSize>& steps) {
    // Locate the m-th east step and its height j.
    int easts = 0;
    int j = 0;
    std::size_t split = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i] == CarSize::big) {
        ++j;
      } else if (++easts == m) {
        split = i;
        break;
      }
    }
    const std::span<const CarSize> all(steps);
    const int lower = area_above(all.first(split), j);
    const int upper = area_above(all.subspan(split + 1), k - j);
    by_height[static_cast<std::size_t>(j)].add(m * (k - j) + lower + upper);
  });
  std::vector<QPoly> out;
  out.reserve(by_height.size());
  for (const auto& h : by_height) out.push_back(h.to_poly());
  return out;
}

QPoly rect_path_poly(int n, int k, int m) {
  QPoly total;
  for (const auto& term : rect_path_split_terms(n, k, m)) total += term;
  return total;
}

}  // namespace pfshuffle
