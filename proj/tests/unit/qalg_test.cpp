#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfshuffle/error.hpp"
#include "pfshuffle/qalg.hpp"

using namespace pfshuffle;

namespace {

QPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return QPoly(std::move(c));
}

QTPoly random_qt(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 4);
  std::uniform_int_distribution<long> coef(-9, 9);
  QTPoly p;
  for (int i = 0; i < 5; ++i) p.add_term(e(rng), e(rng), coef(rng));
  return p;
}

TEST(QPoly, CanonicalForm) {
  EXPECT_TRUE(QPoly({0, 0}).is_zero());
  EXPECT_EQ(QPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(QPoly({1, 2, 0}), QPoly({1, 2}));
  EXPECT_EQ(QPoly().degree(), -1);
}

TEST(QPoly, QInt) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), QPoly({1}));
  EXPECT_EQ(qint(3), QPoly({1, 1, 1}));
}

TEST(QPoly, QBinomExamples) {
  EXPECT_EQ(qbinom(2, 1), QPoly({1, 1}));
  EXPECT_EQ(qbinom(3, 0), QPoly({1}));
  EXPECT_EQ(qbinom(4, 2), QPoly({1, 1, 2, 1, 1}));
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
}

TEST(QPoly, QBinomMatchesInversionCount) {
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(oracle::coeffs_of(qbinom(n, k)), oracle::qbinom_by_words(n, k)) << n << " " << k;
}

TEST(QPoly, QBinomPascalBothWays) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(qbinom(n, k), qbinom(n - 1, k - 1) + monomial_shift(qbinom(n - 1, k), k));
      EXPECT_EQ(qbinom(n, k), monomial_shift(qbinom(n - 1, k - 1), n - k) + qbinom(n - 1, k));
    }
}

TEST(QPoly, QBinomAtOneIsBinomial) {
  mpz_class c;
  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      mpz_bin_uiui(c.get_mpz_t(), n, k);
      EXPECT_EQ(qbinom(static_cast<int>(n), static_cast<int>(k)).at_one(), c);
    }
}

TEST(QPoly, ArithmeticExamples) {
  EXPECT_EQ(monomial_shift(QPoly({1, 1}), 2), QPoly({0, 0, 1, 1}));
  EXPECT_EQ(mul(QPoly({1, 1}), QPoly({1, 1})), QPoly({1, 2, 1}));
  const QPoly p{3, 0, 5};
  EXPECT_EQ(add(QPoly(), p), p);
  EXPECT_THROW(monomial_shift(p, -1), DomainError);
  EXPECT_EQ(monomial_shift_signed(QPoly({0, 0, 1}), -2), QPoly({1}));
  EXPECT_THROW(monomial_shift_signed(QPoly({0, 1}), -2), NegativeExponent);
}

TEST(QPoly, RingLawsOnRandomInputs) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const QPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(QPoly, ExactDivision) {
  EXPECT_EQ(exact_div(QPoly({1, 1, 1}), QPoly({1})), QPoly({1, 1, 1}));
  EXPECT_EQ(exact_div(qbinom(4, 2) * qint(2), qint(2)), qbinom(4, 2));
  EXPECT_THROW(exact_div(QPoly({1, 1}), QPoly({1, 1, 1})), NonDivisible);
  EXPECT_THROW(exact_div(QPoly({1, 1}), QPoly()), DomainError);
  EXPECT_THROW(exact_div(QPoly({1}), QPoly({2})), NonDivisible);
  EXPECT_TRUE(exact_div(QPoly(), QPoly({1, 1})).is_zero());
}

TEST(QPoly, ExactDivisionRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const QPoly p = random_poly(rng, 8);
    QPoly d = random_poly(rng, 4);
    if (d.is_zero()) continue;
    EXPECT_EQ(exact_div(p * d, d), p);
  }
}

TEST(QPoly, LemmaExamples) {
  EXPECT_EQ(lemma_qbin_rhs(1, 0, 1), QPoly({1}));
  EXPECT_EQ(lemma_qbin_rhs(2, 1, 1), QPoly({1, 1, 1}));
  EXPECT_EQ(lemma_qbin_rhs(3, 2, 2), qbinom(5, 3));
  EXPECT_THROW(lemma_qbin_rhs(2, 1, 3), DomainError);
  EXPECT_THROW(lemma_qbin_rhs(0, 1, 1), DomainError);
  EXPECT_THROW(lemma_qbin_rhs(2, -1, 1), DomainError);
}

TEST(QLaurent, CanonicalAndConversion) {
  EXPECT_EQ(laurent_to_poly(QLaurent(0, {1, 1})), QPoly({1, 1}));
  EXPECT_EQ(laurent_to_poly(QLaurent(2, {3})), QPoly({0, 0, 3}));
  EXPECT_THROW(laurent_to_poly(QLaurent(-1, {1})), NegativeExponent);
  const QLaurent z(5, {0, 0});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.offset(), 0);
  EXPECT_EQ(QLaurent(-1, {0, 2, 0}), QLaurent(0, {2}));
  EXPECT_EQ(QLaurent(-2, {1}).shifted(3).coeff(1), 1);
}

TEST(QTPoly, SubstitutionExamples) {
  EXPECT_EQ(subst_t_inv_q(QTPoly::monomial(1, 1)), QLaurent(0, {1}));
  EXPECT_EQ(subst_t_inv_q(QTPoly::monomial(0, 2)), QLaurent(-2, {1}));
  EXPECT_TRUE(subst_t_inv_q(QTPoly()).is_zero());
  EXPECT_THROW(QTPoly().add_term(-1, 0, 1), DomainError);
}

TEST(QTPoly, SubstitutionIsRingHomomorphism) {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const QTPoly a = random_qt(rng), b = random_qt(rng);
    EXPECT_EQ(subst_t_inv_q(a + b), subst_t_inv_q(a) + subst_t_inv_q(b));
    EXPECT_EQ(subst_t_inv_q(a * b), subst_t_inv_q(a) * subst_t_inv_q(b));
  }
}

TEST(QTPoly, NoZeroTermsStored) {
  QTPoly p = QTPoly::monomial(1, 2, 3);
  p.add_term(1, 2, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(QTPoly::from_q(QPoly({1, 0, 2})).size(), 2u);
}

}  // namespace
