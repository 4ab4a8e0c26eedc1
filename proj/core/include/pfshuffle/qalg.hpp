#pragma once

// Exact polynomial arithmetic over the integers in q, Laurent polynomials in
// q, and bivariate polynomials in (q, t). Coefficients are GMP integers.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace pfshuffle {

/// Dense polynomial in q. Trailing zero coefficients are never stored, so the
/// zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpz_class> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const mpz_class& c);
  /// c * q^degree
  static QPoly monomial(int degree, const mpz_class& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^i; zero outside the stored range.
  mpz_class coeff(int i) const;

  /// Value at q = 1 (sum of coefficients).
  mpz_class at_one() const;
  bool has_nonnegative_coeffs() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend bool operator==(const QPoly& lhs, const QPoly& rhs) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

QPoly add(const QPoly& p, const QPoly& r);
QPoly mul(const QPoly& p, const QPoly& r);
/// p * q^k, k >= 0.
QPoly monomial_shift(const QPoly& p, int k);
/// p * q^k for any integer k; throws NegativeExponent if the product has a
/// negative power of q.
QPoly monomial_shift_signed(const QPoly& p, int k);

/// Returns the quotient of an exact division. Throws NonDivisible when the
/// remainder is nonzero (or a quotient coefficient is not integral) and
/// DomainError when `den` is zero.
QPoly exact_div(const QPoly& num, const QPoly& den);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly qint(int n);

/// Gaussian binomial [n choose k]_q, zero outside 0 <= k <= n. Memoized
/// Pascal table, safe for concurrent callers.
QPoly qbinom(int n, int k);

/// Sum_{j=0..k} q^(m(k-j)) [m+j-1 choose m-1]_q [n-m+k-j choose n-m]_q.
/// Requires 1 <= m <= n and k >= 0 (DomainError otherwise).
QPoly lemma_qbin_rhs(int n, int k, int m);

/// Laurent polynomial in q: sum_i coeffs[i] q^(offset + i). Canonical form
/// has nonzero first and last coefficients; the zero polynomial has offset 0.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(int offset, std::vector<mpz_class> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int offset() const noexcept { return offset_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^e.
  mpz_class coeff(int e) const;

  /// Multiplies by q^k for any integer k.
  QLaurent shifted(int k) const;

  QLaurent& operator+=(const QLaurent& rhs);
  friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
  friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);
  friend bool operator==(const QLaurent& lhs, const QLaurent& rhs) = default;

 private:
  void canonicalize();

  int offset_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Reinterprets a Laurent polynomial with offset >= 0 as an ordinary
/// polynomial; throws NegativeExponent otherwise.
QPoly laurent_to_poly(const QLaurent& p);
QLaurent poly_to_laurent(const QPoly& p);

/// Exponent pair (q-degree, t-degree).
struct QTExponent {
  int q = 0;
  int t = 0;
  friend auto operator<=>(const QTExponent&, const QTExponent&) = default;
};

/// Sparse bivariate polynomial in q and t with no stored zero terms.
class QTPoly {
 public:
  using Terms = std::map<QTExponent, mpz_class>;

  QTPoly() = default;
  static QTPoly monomial(int q_degree, int t_degree, const mpz_class& c = 1);
  /// Embeds a polynomial in q (t-degree 0).
  static QTPoly from_q(const QPoly& p);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  mpz_class coeff(int q_degree, int t_degree) const;
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * q^i t^j in place.
  void add_term(int q_degree, int t_degree, const mpz_class& c);

  /// Multiplies by q^dq t^dt.
  QTPoly shifted(int dq, int dt) const;

  QTPoly& operator+=(const QTPoly& rhs);
  friend QTPoly operator+(QTPoly lhs, const QTPoly& rhs) { return lhs += rhs; }
  friend QTPoly operator*(const QTPoly& lhs, const QTPoly& rhs);
  friend QTPoly operator*(const QPoly& lhs, const QTPoly& rhs);
  friend bool operator==(const QTPoly& lhs, const QTPoly& rhs) = default;

 private:
  Terms terms_;
};

/// t -> 1/q: c q^i t^j becomes c q^(i-j).
QLaurent subst_t_inv_q(const QTPoly& p);

/// q^(n choose 2) * p(q, 1/q), returned as an ordinary polynomial. This is the
/// bridge from (q,t)-enumerators weighted by t^area q^dinv to the
/// q^(coarea+dinv) enumerators.
QPoly bridge_to_q(const QTPoly& p, int n);

/// n choose 2 as an int; n may be any nonnegative integer.
constexpr int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace pfshuffle
