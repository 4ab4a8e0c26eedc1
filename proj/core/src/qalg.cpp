#include "pfshuffle/qalg.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "pfshuffle/error.hpp"

namespace pfshuffle {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const mpz_class& c) { return QPoly(std::vector<mpz_class>{c}); }

QPoly QPoly::monomial(int degree, const mpz_class& c) {
  if (degree < 0) throw DomainError("QPoly::monomial: negative degree " + std::to_string(degree));
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class QPoly::at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly add(const QPoly& p, const QPoly& r) { return p + r; }
QPoly mul(const QPoly& p, const QPoly& r) { return p * r; }

QPoly monomial_shift(const QPoly& p, int k) {
  if (k < 0) throw DomainError("monomial_shift: negative shift " + std::to_string(k));
  if (p.is_zero() || k == 0) return p;
  std::vector<mpz_class> v(static_cast<std::size_t>(k));
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return QPoly(std::move(v));
}

QPoly monomial_shift_signed(const QPoly& p, int k) {
  if (p.is_zero() || k >= 0) return monomial_shift(p, std::max(k, 0));
  return laurent_to_poly(poly_to_laurent(p).shifted(k));
}

QPoly exact_div(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) {
    throw NonDivisible("exact_div: numerator degree " + std::to_string(num.degree()) +
                       " below divisor degree " + std::to_string(den.degree()));
  }
  std::vector<mpz_class> rem = num.coeffs();
  const auto& d = den.coeffs();
  const mpz_class& lead = d.back();
  const std::size_t dd = d.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd);
  mpz_class c;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpz_class& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NonDivisible("exact_div: non-integral quotient coefficient at degree " + std::to_string(i));
    }
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
    quot[i] = c;
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw NonDivisible("exact_div: nonzero remainder at degree " + std::to_string(i));
  }
  return QPoly(std::move(quot));
}

QPoly qint(int n) {
  if (n < 0) throw DomainError("qint: negative argument " + std::to_string(n));
  return QPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

namespace {

// Rows of the q-Pascal triangle, grown on demand. Readers share the lock;
// growth takes it exclusively. Rows are never modified once appended.
class QBinomialTable {
 public:
  QPoly get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
      row[0] = QPoly{1};
      row[m] = QPoly{1};
      for (int j = 1; j < m; ++j) {
        // [m, j] = [m-1, j-1] + q^j [m-1, j]
        row[j] = rows_[m - 1][j - 1] + monomial_shift(rows_[m - 1][j], j);
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

QBinomialTable& qbinomial_table() {
  static QBinomialTable table;
  return table;
}

}  // namespace

QPoly qbinom(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  return qbinomial_table().get(n, k);
}

QPoly lemma_qbin_rhs(int n, int k, int m) {
  if (n < 1 || k < 0 || m < 1 || m > n) {
    throw DomainError("lemma_qbin_rhs: need 1 <= m <= n and k >= 0, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k) + " m=" + std::to_string(m));
  }
  QPoly sum;
  for (int j = 0; j <= k; ++j) {
    sum += monomial_shift(qbinom(m + j - 1, m - 1) * qbinom(n - m + k - j, n - m), m * (k - j));
  }
  return sum;
}

// ------------------------------------------------------------- QLaurent

QLaurent::QLaurent(int offset, std::vector<mpz_class> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void QLaurent::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) offset_ = 0;
}

mpz_class QLaurent::coeff(int e) const {
  const int i = e - offset_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent out = *this;
  if (!out.is_zero()) out.offset_ += k;
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(offset_, rhs.offset_);
  const int hi = std::max(offset_ + static_cast<int>(coeffs_.size()),
                          rhs.offset_ + static_cast<int>(rhs.coeffs_.size()));
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + (offset_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i + (rhs.offset_ - lo)] += rhs.coeffs_[i];
  offset_ = lo;
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  QPoly prod = QPoly(lhs.coeffs_) * QPoly(rhs.coeffs_);
  return QLaurent(lhs.offset_ + rhs.offset_, prod.coeffs());
}

QPoly laurent_to_poly(const QLaurent& p) {
  if (p.is_zero()) return {};
  if (p.offset() < 0) {
    throw NegativeExponent("laurent_to_poly: lowest exponent is " + std::to_string(p.offset()));
  }
  return monomial_shift(QPoly(p.coeffs()), p.offset());
}

QLaurent poly_to_laurent(const QPoly& p) { return QLaurent(0, p.coeffs()); }

// --------------------------------------------------------------- QTPoly

QTPoly QTPoly::monomial(int q_degree, int t_degree, const mpz_class& c) {
  QTPoly p;
  p.add_term(q_degree, t_degree, c);
  return p;
}

QTPoly QTPoly::from_q(const QPoly& p) {
  QTPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeffs()[static_cast<std::size_t>(i)]);
  return out;
}

mpz_class QTPoly::coeff(int q_degree, int t_degree) const {
  auto it = terms_.find({q_degree, t_degree});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void QTPoly::add_term(int q_degree, int t_degree, const mpz_class& c) {
  if (q_degree < 0 || t_degree < 0) {
    throw DomainError("QTPoly: negative exponent (" + std::to_string(q_degree) + "," +
                      std::to_string(t_degree) + ")");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_degree, t_degree}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly QTPoly::shifted(int dq, int dt) const {
  QTPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e.q + dq, e.t + dt, c);
  return out;
}

QTPoly& QTPoly::operator+=(const QTPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.q, e.t, c);
  return *this;
}

QTPoly operator*(const QTPoly& lhs, const QTPoly& rhs) {
  QTPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1.q + e2.q, e1.t + e2.t, c1 * c2);
  }
  return out;
}

QTPoly operator*(const QPoly& lhs, const QTPoly& rhs) { return QTPoly::from_q(lhs) * rhs; }

QLaurent subst_t_inv_q(const QTPoly& p) {
  if (p.is_zero()) return {};
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const int d = e.q - e.t;
    lo = first ? d : std::min(lo, d);
    hi = first ? d : std::max(hi, d);
    first = false;
  }
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e.q - e.t - lo)] += c;
  return QLaurent(lo, std::move(coeffs));
}

QPoly bridge_to_q(const QTPoly& p, int n) {
  return laurent_to_poly(subst_t_inv_q(p).shifted(choose2(n)));
}

}  // namespace pfshuffle
