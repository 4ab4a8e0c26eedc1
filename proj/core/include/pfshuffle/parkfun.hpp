#pragma once

// Parking functions as two-line arrays, their statistics, and the reduction
// of two-car-size shuffle parking functions to 1-2 tableaux.
//
// Rows are stored bottom-up, index 0 first. u[i] is the number of full cells
// in row i between the path and the main diagonal; v[i] is the car in row i.
// Within one diagonal, a larger row index lies further to the right.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfshuffle {

enum class CarSize : std::uint8_t { small = 1, big = 2 };

struct DinvCounts {
  int primary = 0;
  int secondary = 0;
  int total() const noexcept { return primary + secondary; }
  friend bool operator==(const DinvCounts&, const DinvCounts&) = default;
};

/// Checks u[0] == 0 and 0 <= u[i] <= u[i-1] + 1; throws BadSupport.
void validate_dyck_offsets(std::span<const int> u);

class ParkingFunction {
 public:
  /// Empty parking function (n = 0).
  ParkingFunction() = default;

  /// Validates and builds. Throws BadSupport, BadColumn, BadLabels, or
  /// LengthMismatch.
  static ParkingFunction make(std::vector<int> u, std::vector<int> v);
  /// Parses "u1,...,un;v1,...,vn" (ParseError on syntax, then validates).
  static ParkingFunction parse(std::string_view text);
  /// Skips validation; for generators that construct valid objects by design.
  static ParkingFunction from_trusted(std::vector<int> u, std::vector<int> v);

  int size() const noexcept { return static_cast<int>(u_.size()); }
  const std::vector<int>& u() const noexcept { return u_; }
  const std::vector<int>& v() const noexcept { return v_; }

  std::string to_text() const;

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  ParkingFunction(std::vector<int> u, std::vector<int> v) : u_(std::move(u)), v_(std::move(v)) {}

  std::vector<int> u_;
  std::vector<int> v_;
};

ParkingFunction make_pf(std::vector<int> u, std::vector<int> v);

int area(const ParkingFunction& pf);
int coarea(const ParkingFunction& pf);
DinvCounts dinv(const ParkingFunction& pf);

/// Labels read by decreasing diagonal, right to left within a diagonal.
std::vector<int> diagonal_word(const ParkingFunction& pf);
std::vector<int> diagonal_word(std::span<const int> u, std::span<const int> v);

/// A composition of n: consecutive label segments 1..mu_1, mu_1+1..mu_1+mu_2, ...
class ShuffleSpec {
 public:
  /// Throws DomainError unless every part is >= 1.
  explicit ShuffleSpec(std::vector<int> parts);
  static ShuffleSpec parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  std::string to_text() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// True iff `word` restricted to each segment of `spec` is increasing.
/// Throws LengthMismatch when |word| != spec.total(), BadLabels when `word`
/// is not a permutation of 1..n.
bool is_shuffle(std::span<const int> word, const ShuffleSpec& spec);

/// Every composition of n in lexicographic order of the parts.
std::vector<ShuffleSpec> compositions(int n);

/// Word over {1, 2}.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<CarSize> letters) : letters_(std::move(letters)) {}
  /// Parses "1212" (ParseError on any other character).
  static BinaryWord parse(std::string_view text);

  const std::vector<CarSize>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  int ones() const;
  int twos() const;
  CarSize operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

  std::string to_text() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<CarSize> letters_;
};

/// Number of 2-before-1 pairs.
int inv(const BinaryWord& w);
/// Number of 1-before-2 pairs.
int coinv(const BinaryWord& w);
/// All words with `ones` 1s and `twos` 2s in lexicographic order (1 < 2).
std::vector<BinaryWord> binary_words(int ones, int twos);

/// u-vector plus a size word: a shuffle parking function with labels erased.
/// Valid iff u is a Dyck offset vector and every column step
/// u[i] == u[i-1] + 1 carries sizes (small, big) in rows (i-1, i).
class TwoCarTableau {
 public:
  TwoCarTableau() = default;

  /// Throws BadSupport, BadColumn, or LengthMismatch.
  static TwoCarTableau make(std::vector<int> u, std::vector<CarSize> sizes);
  /// Parses "u1,...,un;s1,...,sn" with s in {1,2}.
  static TwoCarTableau parse(std::string_view text);
  static TwoCarTableau from_trusted(std::vector<int> u, std::vector<CarSize> sizes);

  int size() const noexcept { return static_cast<int>(u_.size()); }
  const std::vector<int>& u() const noexcept { return u_; }
  const std::vector<CarSize>& sizes() const noexcept { return sizes_; }
  int small_count() const;
  int big_count() const;

  std::string to_text() const;

  friend bool operator==(const TwoCarTableau&, const TwoCarTableau&) = default;
  friend auto operator<=>(const TwoCarTableau&, const TwoCarTableau&) = default;

 private:
  TwoCarTableau(std::vector<int> u, std::vector<CarSize> sizes)
      : u_(std::move(u)), sizes_(std::move(sizes)) {}

  std::vector<int> u_;
  std::vector<CarSize> sizes_;
};

int area(const TwoCarTableau& t);
int coarea(const TwoCarTableau& t);
/// Mixed-size pairs only: primary = same diagonal, small left of big;
/// secondary = big one diagonal above and left of a small.
DinvCounts dinv(const TwoCarTableau& t);
DinvCounts tableau_dinv(std::span<const int> u, std::span<const CarSize> sizes);

struct DiagCounts {
  int small = 0;  // r
  int big = 0;    // s
  friend bool operator==(const DiagCounts&, const DiagCounts&) = default;
};
DiagCounts diag_counts(const TwoCarTableau& t);

/// Replaces cars 1..a by small and a+1..n by big. Throws NotInFamily unless
/// the diagonal word is a shuffle of 1..a and a+1..n.
TwoCarTableau to_tableau(const ParkingFunction& pf, int a);

/// Inverse of to_tableau: small labels 1..a, then big labels a+1..n, handed
/// out in diagonal-word reading order.
ParkingFunction relabel(const TwoCarTableau& t);

}  // namespace pfshuffle
