#pragma once

// Exhaustive generators for parking functions and 1-2 tableaux, and the
// generating polynomials aggregated over them.
//
// Generators are pull-based and yield objects in lexicographic order of
// (u, v) resp. (u, sizes). The aggregating functions shard the work by Dyck
// path across threads and merge integer histograms, so their results do not
// depend on the thread count.

#include <cstdint>
#include <optional>
#include <vector>

#include "pfshuffle/parkfun.hpp"
#include "pfshuffle/qalg.hpp"

namespace pfshuffle {

/// A shuffle family PF_{a,b}, optionally restricted to r small and/or s big
/// cars on the main diagonal.
struct Family {
  int a = 0;
  int b = 0;
  std::optional<int> r;
  std::optional<int> s;

  int n() const noexcept { return a + b; }
  /// Throws DomainError unless a, b >= 0, 0 <= r <= a, 0 <= s <= b.
  void validate() const;
};

struct EnumOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Dyck offset vectors of length n in lexicographic order.
class DyckPathGenerator {
 public:
  explicit DyckPathGenerator(int n);
  /// Writes the next path into `u`; false once exhausted.
  bool next(std::vector<int>& u);

 private:
  int n_;
  bool started_ = false;
  std::vector<int> current_;
};

std::vector<std::vector<int>> dyck_paths(int n);

class ParkingFunctionGenerator {
 public:
  explicit ParkingFunctionGenerator(int n);
  std::optional<ParkingFunction> next();

 private:
  bool advance_labels();
  bool next_path();

  int n_;
  DyckPathGenerator paths_;
  std::vector<int> u_;
  std::vector<int> v_;
  bool have_path_ = false;
  bool done_ = false;
};

class TableauGenerator {
 public:
  explicit TableauGenerator(Family family);
  std::optional<TwoCarTableau> next();

 private:
  bool load_path();
  bool matches_filter() const;

  Family family_;
  DyckPathGenerator paths_;
  std::vector<int> u_;
  std::vector<CarSize> sizes_;
  std::vector<int> free_rows_;
  std::vector<CarSize> free_letters_;
  bool have_path_ = false;
  bool done_ = false;
};

std::vector<ParkingFunction> collect_pf(int n);
std::vector<TwoCarTableau> collect_tableaux(const Family& family);

/// Sum of q^(coarea + dinv) over the family.
QPoly parkq_poly(const Family& family, const EnumOptions& options = {});
/// Sum of t^area q^dinv over the family.
QTPoly parkqt_poly(const Family& family, const EnumOptions& options = {});

/// Sum of q^(coarea + dinv) over all parking functions of size spec.total()
/// whose diagonal word is a shuffle of the segments of `spec`.
QPoly shuffle_enumerator(const ShuffleSpec& spec, const EnumOptions& options = {});

/// Sum of q^(area above path) over lattice paths from (0,0) to (n,k) with n
/// east and k north steps.
QPoly rect_path_poly(int n, int k);
/// Same total, assembled from the split at the m-th east step: entry j of the
/// result collects the paths whose m-th east step is at height j, each
/// weighted by q^(m(k-j) + area of the lower-left piece + area of the
/// upper-right piece). Requires 1 <= m <= n.
std::vector<QPoly> rect_path_split_terms(int n, int k, int m);
QPoly rect_path_poly(int n, int k, int m);

}  // namespace pfshuffle
