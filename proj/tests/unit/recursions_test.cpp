#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfshuffle/closedforms.hpp"
#include "pfshuffle/error.hpp"
#include "pfshuffle/recursions.hpp"

using namespace pfshuffle;

namespace {

QTPoly one_plus_q() { return QTPoly::monomial(0, 0) + QTPoly::monomial(1, 0); }

TEST(Recursions, QExamples) {
  EXPECT_EQ(recur_parkq_rs(1, 2, 1, 1), QPoly({0, 0, 1, 1}));
  EXPECT_EQ(recur_parkq_rs(0, 3, 0, 3), QPoly({0, 0, 0, 1}));
  EXPECT_TRUE(recur_parkq_rs(1, 1, 0, 0).is_zero());
  EXPECT_EQ(recur_parkq_s(1, 1, 0), QPoly({1}));
  EXPECT_EQ(recur_parkq_s(1, 1, 1), QPoly({0, 1, 1}));
  EXPECT_EQ(recur_parkq_s(0, 2, 2), QPoly({0, 1}));
}

TEST(Recursions, QTExamples) {
  EXPECT_EQ(recur_parkqt_rs(1, 1, 1, 0), QTPoly::monomial(0, 1));
  EXPECT_EQ(recur_parkqt_rs(1, 1, 1, 1), one_plus_q());
  for (int b = 0; b <= 6; ++b) EXPECT_EQ(recur_parkqt_s(0, b, b), QTPoly::monomial(0, 0));
}

TEST(Recursions, DomainErrors) {
  EXPECT_THROW(recur_parkq_rs(1, 1, 2, 0), DomainError);
  EXPECT_THROW(recur_parkq_s(1, 1, 2), DomainError);
  EXPECT_THROW(recur_parkqt_rs(-1, 1, 0, 0), DomainError);
  EXPECT_THROW(recur_parkqt_s(1, 1, -1), DomainError);
}

TEST(Recursions, MatchClosedForms) {
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int s = 0; s <= b; ++s) {
        for (int r = 0; r <= a; ++r) ASSERT_EQ(recur_parkq_rs(a, b, r, s), thm_qara(a, b, r, s)) << a << b << r << s;
        ASSERT_EQ(recur_parkq_s(a, b, s), thm_isthm(a, b, s));
      }
}

TEST(Recursions, QTMatchesLabelLevelOracle) {
  for (int n = 0; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (int s = 0; s <= n - a; ++s) {
        for (int r = 0; r <= a; ++r)
          EXPECT_EQ(oracle::counts_of(recur_parkqt_rs(a, n - a, r, s)), oracle::parkqt(a, n - a, r, s));
        EXPECT_EQ(oracle::counts_of(recur_parkqt_s(a, n - a, s)), oracle::parkqt(a, n - a, std::nullopt, s));
      }
}

TEST(Recursions, Bridge) {
  for (int n = 0; n <= 10; ++n)
    for (int a = 0; a <= n; ++a)
      for (int s = 0; s <= n - a; ++s) {
        for (int r = 0; r <= a; ++r)
          EXPECT_EQ(bridge_to_q(recur_parkqt_rs(a, n - a, r, s), n), recur_parkq_rs(a, n - a, r, s));
        EXPECT_EQ(bridge_to_q(recur_parkqt_s(a, n - a, s), n), recur_parkq_s(a, n - a, s));
      }
}

TEST(Recursions, MemoIsSharedAndConcurrentSafe) {
  clear_recursion_memo();
  EXPECT_EQ(recursion_memo_size(), 0u);
  const QPoly expected = thm_isthm(7, 7, 3);
  std::vector<std::jthread> workers;
  std::vector<QPoly> results(4);
  for (std::size_t i = 0; i < results.size(); ++i)
    workers.emplace_back([&results, i] { results[i] = recur_parkq_s(7, 7, 3); });
  workers.clear();
  for (const auto& r : results) EXPECT_EQ(r, expected);
  EXPECT_GT(recursion_memo_size(), 0u);
}

}  // namespace
