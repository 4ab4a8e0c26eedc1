#include "pfshuffle/parkfun.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "pfshuffle/error.hpp"
#include "pfshuffle/qalg.hpp"

namespace pfshuffle {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad integer '" + std::string(item) + "' in " + std::string(what));
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<std::string_view, std::string_view> split_two_lines(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw ParseError("expected exactly one ';' separating the two rows");
  }
  return {text.substr(0, semi), text.substr(semi + 1)};
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(xs[i]));
  }
  return out;
}

void validate_permutation(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : v) {
    if (x < 1 || x > n) throw BadLabels("label " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x)]) throw BadLabels("label " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

// Row indices in diagonal-word reading order.
std::vector<int> reading_order(std::span<const int> u) {
  std::vector<int> rows(u.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int i, int j) {
    if (u[i] != u[j]) return u[i] > u[j];
    return i > j;
  });
  return rows;
}

}  // namespace

void validate_dyck_offsets(std::span<const int> u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int lo = 0;
    const int hi = i == 0 ? 0 : u[i - 1] + 1;
    if (u[i] < lo || u[i] > hi) {
      throw BadSupport("u[" + std::to_string(i + 1) + "] = " + std::to_string(u[i]) + " outside [0, " +
                       std::to_string(hi) + "]");
    }
  }
}

// ------------------------------------------------------ ParkingFunction

ParkingFunction ParkingFunction::make(std::vector<int> u, std::vector<int> v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("u has " + std::to_string(u.size()) + " entries, v has " + std::to_string(v.size()));
  }
  validate_dyck_offsets(u);
  validate_permutation(v);
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] == u[i - 1] + 1 && v[i] < v[i - 1]) {
      throw BadColumn("rows " + std::to_string(i) + "," + std::to_string(i + 1) + " share a column but car " +
                      std::to_string(v[i]) + " sits above car " + std::to_string(v[i - 1]));
    }
  }
  return ParkingFunction(std::move(u), std::move(v));
}

ParkingFunction ParkingFunction::parse(std::string_view text) {
  auto [us, vs] = split_two_lines(text);
  return make(parse_int_list(us, "u"), parse_int_list(vs, "v"));
}

ParkingFunction ParkingFunction::from_trusted(std::vector<int> u, std::vector<int> v) {
  return ParkingFunction(std::move(u), std::move(v));
}

std::string ParkingFunction::to_text() const { return join(u_) + ";" + join(v_); }

ParkingFunction make_pf(std::vector<int> u, std::vector<int> v) {
  return ParkingFunction::make(std::move(u), std::move(v));
}

int area(const ParkingFunction& pf) { return std::accumulate(pf.u().begin(), pf.u().end(), 0); }

int coarea(const ParkingFunction& pf) { return choose2(pf.size()) - area(pf); }

DinvCounts dinv(const ParkingFunction& pf) {
  const auto& u = pf.u();
  const auto& v = pf.v();
  DinvCounts d;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j] && v[i] < v[j]) ++d.primary;
      if (u[i] == u[j] + 1 && v[i] > v[j]) ++d.secondary;
    }
  }
  return d;
}

std::vector<int> diagonal_word(std::span<const int> u, std::span<const int> v) {
  std::vector<int> word;
  word.reserve(u.size());
  for (int row : reading_order(u)) word.push_back(v[row]);
  return word;
}

std::vector<int> diagonal_word(const ParkingFunction& pf) { return diagonal_word(pf.u(), pf.v()); }

// ---------------------------------------------------------- ShuffleSpec

ShuffleSpec::ShuffleSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition parts must be positive, got " + std::to_string(p));
    total_ += p;
  }
}

ShuffleSpec ShuffleSpec::parse(std::string_view text) { return ShuffleSpec(parse_int_list(text, "composition")); }

std::string ShuffleSpec::to_text() const { return join(parts_); }

bool is_shuffle(std::span<const int> word, const ShuffleSpec& spec) {
  if (static_cast<int>(word.size()) != spec.total()) {
    throw LengthMismatch("word has length " + std::to_string(word.size()) + " but composition sums to " +
                         std::to_string(spec.total()));
  }
  validate_permutation(word);
  // segment[label] = index of the part containing label
  std::vector<int> segment(word.size() + 1);
  int label = 1;
  for (std::size_t k = 0; k < spec.parts().size(); ++k) {
    for (int i = 0; i < spec.parts()[k]; ++i) segment[static_cast<std::size_t>(label++)] = static_cast<int>(k);
  }
  std::vector<int> last(spec.parts().size(), 0);
  for (int x : word) {
    const int k = segment[static_cast<std::size_t>(x)];
    if (x < last[static_cast<std::size_t>(k)]) return false;
    last[static_cast<std::size_t>(k)] = x;
  }
  return true;
}

std::vector<ShuffleSpec> compositions(int n) {
  if (n < 0) throw DomainError("compositions: negative n");
  std::vector<ShuffleSpec> out;
  if (n == 0) {
    out.emplace_back(std::vector<int>{});
    return out;
  }
  // Bit i of mask set <=> a part boundary after label i+1. Collect, then order
  // by the part sequence.
  std::vector<std::vector<int>> all;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    all.push_back(std::move(parts));
  }
  std::sort(all.begin(), all.end());
  for (auto& p : all) out.emplace_back(std::move(p));
  return out;
}

// -------------------------------------------------------- TwoCarTableau

TwoCarTableau TwoCarTableau::make(std::vector<int> u, std::vector<CarSize> sizes) {
  if (u.size() != sizes.size()) {
    throw LengthMismatch("u has " + std::to_string(u.size()) + " entries, sizes has " +
                         std::to_string(sizes.size()));
  }
  validate_dyck_offsets(u);
  for (CarSize s : sizes) {
    if (s != CarSize::small && s != CarSize::big) throw BadLabels("car sizes must be 1 or 2");
  }
  for (std::size_t i = 1; i < u.size(); ++i) {
    if (u[i] == u[i - 1] + 1 && !(sizes[i - 1] == CarSize::small && sizes[i] == CarSize::big)) {
      throw BadColumn("column step at rows " + std::to_string(i) + "," + std::to_string(i + 1) +
                      " must carry sizes (1,2)");
    }
  }
  return TwoCarTableau(std::move(u), std::move(sizes));
}

TwoCarTableau TwoCarTableau::parse(std::string_view text) {
  auto [us, ss] = split_two_lines(text);
  std::vector<CarSize> sizes;
  for (int s : parse_int_list(ss, "sizes")) {
    if (s != 1 && s != 2) throw ParseError("car size must be 1 or 2, got " + std::to_string(s));
    sizes.push_back(static_cast<CarSize>(s));
  }
  return make(parse_int_list(us, "u"), std::move(sizes));
}

TwoCarTableau TwoCarTableau::from_trusted(std::vector<int> u, std::vector<CarSize> sizes) {
  return TwoCarTableau(std::move(u), std::move(sizes));
}

int TwoCarTableau::small_count() const {
  return static_cast<int>(std::count(sizes_.begin(), sizes_.end(), CarSize::small));
}

int TwoCarTableau::big_count() const { return size() - small_count(); }

std::string TwoCarTableau::to_text() const { return join(u_) + ";" + join(sizes_); }

int area(const TwoCarTableau& t) { return std::accumulate(t.u().begin(), t.u().end(), 0); }

int coarea(const TwoCarTableau& t) { return choose2(t.size()) - area(t); }

DinvCounts tableau_dinv(std::span<const int> u, std::span<const CarSize> sizes) {
  DinvCounts d;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j] && sizes[i] < sizes[j]) ++d.primary;
      if (u[i] == u[j] + 1 && sizes[i] > sizes[j]) ++d.secondary;
    }
  }
  return d;
}

DinvCounts dinv(const TwoCarTableau& t) { return tableau_dinv(t.u(), t.sizes()); }

DiagCounts diag_counts(const TwoCarTableau& t) {
  DiagCounts c;
  for (int i = 0; i < t.size(); ++i) {
    if (t.u()[i] != 0) continue;
    if (t.sizes()[i] == CarSize::small) {
      ++c.small;
    } else {
      ++c.big;
    }
  }
  return c;
}

TwoCarTableau to_tableau(const ParkingFunction& pf, int a) {
  const int n = pf.size();
  if (a < 0 || a > n) throw DomainError("to_tableau: small-car count " + std::to_string(a) + " outside [0, n]");
  if (n > 0 && !is_shuffle(diagonal_word(pf), a == 0 || a == n ? ShuffleSpec({n}) : ShuffleSpec({a, n - a}))) {
    throw NotInFamily("diagonal word of " + pf.to_text() + " is not a shuffle of 1.." + std::to_string(a) +
                      " and " + std::to_string(a + 1) + ".." + std::to_string(n));
  }
  std::vector<CarSize> sizes;
  sizes.reserve(static_cast<std::size_t>(n));
  for (int label : pf.v()) sizes.push_back(label <= a ? CarSize::small : CarSize::big);
  return TwoCarTableau::from_trusted(pf.u(), std::move(sizes));
}

ParkingFunction relabel(const TwoCarTableau& t) {
  int next_small = 1;
  int next_big = t.small_count() + 1;
  std::vector<int> v(static_cast<std::size_t>(t.size()));
  for (int row : reading_order(t.u())) {
    v[static_cast<std::size_t>(row)] = t.sizes()[static_cast<std::size_t>(row)] == CarSize::small ? next_small++
                                                                                                   : next_big++;
  }
  return ParkingFunction::from_trusted(t.u(), std::move(v));
}

}  // namespace pfshuffle
