#include "pfshuffle/closedforms.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "pfshuffle/error.hpp"

namespace pfshuffle {

namespace {

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out = "(";
  for (const auto& [k, v] : kv) {
    if (out.size() > 1) out += ", ";
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out + ")";
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

QPoly thm_qara(int a, int b, int r, int s) {
  if (a < 0 || b < 0 || r < 0 || r > a || s < 0 || s > b) {
    throw DomainError("thm_qara: need 0 <= r <= a, 0 <= s <= b, got " + params({{"a", a}, {"b", b}, {"r", r}, {"s", s}}));
  }
  if (s == b) {
    if (a != r) return {};
    return monomial_shift(qbinom(a + b, a), choose2(a + b));
  }
  const QPoly numerator =
      qbinom(a + b - s - 1, a) * qbinom(a - r + b - s, a - r) * qbinom(r + s, s) * qint(r);
  const QPoly ratio = exact_div(numerator, qint(a - r + b - s));
  return monomial_shift_signed(ratio, choose2(a + b) - (a - r + 1) * (b - s));
}

QPoly thm_isthm(int a, int b, int s) {
  if (a < 0 || b < 0 || s < 0 || s > b) {
    throw DomainError("thm_isthm: need a >= 0, 0 <= s <= b, got " + params({{"a", a}, {"b", b}, {"s", s}}));
  }
  if (a == 0) return s == b ? QPoly::monomial(choose2(b)) : QPoly{};
  const QPoly numerator = qbinom(a + b, a) * qbinom(a + b - s - 1, a - 1) * qint(s + 1);
  const QPoly ratio = exact_div(numerator, qint(b + 1));
  return monomial_shift_signed(ratio, choose2(a + b) - (b - s) * a);
}

QPoly thm_wolf(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("thm_wolf: need a, b >= 0, got " + params({{"a", a}, {"b", b}}));
  const QPoly numerator = monomial_shift(qbinom(a + b + 1, a) * qbinom(a + b + 1, b), choose2(a) + choose2(b));
  return exact_div(numerator, qint(a + b + 1));
}

QPoly conj2_rhs(const ShuffleSpec& spec) {
  const int n = spec.total();
  QPoly numerator{1};
  for (int part : spec.parts()) numerator *= monomial_shift(qbinom(n + 1, part), choose2(part));
  return exact_div(numerator, qint(n + 1));
}

QPoly principal_e(int a, int n) {
  if (n < 0 || a < 0 || a > n + 1) {
    throw DomainError("principal_e: need 0 <= a <= n+1, got " + params({{"a", a}, {"n", n}}));
  }
  if (n + 1 > 30) throw DomainError("principal_e: n + 1 = " + std::to_string(n + 1) + " exceeds 30");
  // Each a-subset S of {0..n} contributes the monomial q^(sum S).
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(a * n) + 1);
  const std::uint32_t limit = std::uint32_t{1} << (n + 1);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != a) continue;
    int exponent = 0;
    for (int i = 0; i <= n; ++i) {
      if (mask & (std::uint32_t{1} << i)) exponent += i;
    }
    ++coeffs[static_cast<std::size_t>(exponent)];
  }
  return QPoly(std::move(coeffs));
}

mpz_class narayana(int n, int k) {
  if (k < 1 || k > n) throw DomainError("narayana: need 1 <= k <= n, got " + params({{"n", n}, {"k", k}}));
  mpz_class prod = binomial(n, k) * binomial(n, k - 1);
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

bool narayana_check(int a, int b) { return thm_wolf(a, b).at_one() == narayana(a + b + 1, a + 1); }

}  // namespace pfshuffle
