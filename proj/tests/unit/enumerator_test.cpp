#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfshuffle/enumerator.hpp"
#include "pfshuffle/error.hpp"

using namespace pfshuffle;

namespace {

Family fam(int a, int b, std::optional<int> r = std::nullopt, std::optional<int> s = std::nullopt) {
  return Family{a, b, r, s};
}

TEST(Generators, DyckPathCountsAreCatalan) {
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(static_cast<long long>(dyck_paths(n).size()), catalan[n]);
}

TEST(Generators, ParkingFunctionCounts) {
  const auto one = collect_pf(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], make_pf({0}, {1}));
  EXPECT_EQ(collect_pf(2), (std::vector<ParkingFunction>{make_pf({0, 0}, {1, 2}), make_pf({0, 0}, {2, 1}),
                                                          make_pf({0, 1}, {1, 2})}));
  EXPECT_EQ(collect_pf(4).size(), 125u);
  std::size_t count = 0;
  ParkingFunctionGenerator g(6);
  while (g.next()) ++count;
  EXPECT_EQ(count, 16807u);
}

TEST(Generators, ParkingFunctionsSortedAndMatchOracle) {
  for (int n = 0; n <= 6; ++n) {
    const auto pfs = collect_pf(n);
    EXPECT_TRUE(std::is_sorted(pfs.begin(), pfs.end()));
    EXPECT_EQ(std::adjacent_find(pfs.begin(), pfs.end()), pfs.end());
    std::vector<ParkingFunction> expected;
    for (const auto& o : oracle::parking_functions(n)) expected.push_back(make_pf(o.u, o.v));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(pfs, expected) << "n=" << n;
  }
}

TEST(Generators, TableauExamples) {
  EXPECT_EQ(collect_tableaux(fam(1, 1)),
            (std::vector<TwoCarTableau>{TwoCarTableau::parse("0,0;1,2"), TwoCarTableau::parse("0,0;2,1"),
                                        TwoCarTableau::parse("0,1;1,2")}));
  EXPECT_EQ(collect_tableaux(fam(1, 1, 1, 0)), (std::vector<TwoCarTableau>{TwoCarTableau::parse("0,1;1,2")}));
  for (int b = 1; b <= 5; ++b)
    for (int s = 0; s < b; ++s) EXPECT_TRUE(collect_tableaux(fam(0, b, std::nullopt, s)).empty());
  EXPECT_THROW(collect_tableaux(fam(1, 1, 2, 0)), DomainError);
}

TEST(Generators, TableauCountsMatchOracle) {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a) {
      const auto ts = collect_tableaux(fam(a, n - a));
      EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
      EXPECT_EQ(static_cast<long long>(ts.size()), oracle::family_size(a, n - a, std::nullopt, std::nullopt));
    }
}

TEST(Parkq, Examples) {
  EXPECT_EQ(parkq_poly(fam(1, 1, 1, 1)), QPoly({0, 1, 1}));
  EXPECT_EQ(parkq_poly(fam(1, 1, 1, 0)), QPoly({1}));
  EXPECT_EQ(parkq_poly(fam(1, 2, 1, 1)), QPoly({0, 0, 1, 1}));
}

TEST(Parkqt, Examples) {
  // Both all-diagonal objects have area 0; (0,0|1,2) carries the one dinv.
  EXPECT_EQ(parkqt_poly(fam(1, 1, 1, 1)), QTPoly::monomial(0, 0) + QTPoly::monomial(1, 0));
  EXPECT_EQ(parkqt_poly(fam(1, 1, 1, 0)), QTPoly::monomial(0, 1));
  EXPECT_EQ(parkqt_poly(fam(0, 0)), QTPoly::monomial(0, 0));
}

TEST(Parkq, MatchesLabelLevelOracle) {
  for (int n = 0; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (int r = 0; r <= a; ++r)
        for (int s = 0; s <= n - a; ++s) {
          EXPECT_EQ(oracle::coeffs_of(parkq_poly(fam(a, n - a, r, s))), oracle::parkq(a, n - a, r, s));
          EXPECT_EQ(oracle::counts_of(parkqt_poly(fam(a, n - a, r, s))), oracle::parkqt(a, n - a, r, s));
        }
}

TEST(Parkq, MarginalsAddUp) {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      QPoly total;
      for (int r = 0; r <= a; ++r) {
        QPoly row;
        for (int s = 0; s <= b; ++s) row += parkq_poly(fam(a, b, r, s));
        EXPECT_EQ(row, parkq_poly(fam(a, b, r)));
        total += row;
      }
      EXPECT_EQ(total, parkq_poly(fam(a, b)));
    }
}

TEST(Parkq, BridgeFromQT) {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a)
      for (int r = 0; r <= a; ++r)
        for (int s = 0; s <= n - a; ++s) {
          const Family f = fam(a, n - a, r, s);
          EXPECT_EQ(parkq_poly(f), laurent_to_poly(subst_t_inv_q(parkqt_poly(f)).shifted(choose2(n))));
          EXPECT_EQ(parkq_poly(f), bridge_to_q(parkqt_poly(f), n));
        }
}

TEST(Parkq, VanishesWithoutDiagonalSmalls) {
  for (int n = 1; n <= 7; ++n)
    for (int a = 1; a <= n; ++a)
      for (int s = 0; s < n - a; ++s) EXPECT_TRUE(parkq_poly(fam(a, n - a, 0, s)).is_zero()) << a << " " << s;
}

TEST(Parkq, IndependentOfThreadCount) {
  for (unsigned threads : {1u, 2u, 3u, 5u}) {
    EXPECT_EQ(parkq_poly(fam(4, 4), {threads}), parkq_poly(fam(4, 4), {1}));
    EXPECT_EQ(parkqt_poly(fam(3, 4, 2, std::nullopt), {threads}), parkqt_poly(fam(3, 4, 2, std::nullopt), {1}));
    EXPECT_EQ(shuffle_enumerator(ShuffleSpec({2, 1, 3}), {threads}), shuffle_enumerator(ShuffleSpec({2, 1, 3}), {1}));
  }
}

TEST(ShuffleEnumerator, Examples) {
  EXPECT_EQ(shuffle_enumerator(ShuffleSpec({2})), QPoly({0, 1}));
  EXPECT_EQ(shuffle_enumerator(ShuffleSpec({1, 1})), QPoly({1, 1, 1}));
  EXPECT_EQ(shuffle_enumerator(ShuffleSpec({1})), QPoly({1}));
}

TEST(ShuffleEnumerator, MatchesOracleAndTableauRoute) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& spec : compositions(n))
      EXPECT_EQ(oracle::coeffs_of(shuffle_enumerator(spec)), oracle::shuffle_sum(spec.parts())) << spec.to_text();
  for (int n = 1; n <= 7; ++n)
    for (int a = 1; a < n; ++a) EXPECT_EQ(shuffle_enumerator(ShuffleSpec({a, n - a})), parkq_poly(fam(a, n - a)));
}

TEST(RectPaths, Examples) {
  EXPECT_EQ(rect_path_poly(2, 1), QPoly({1, 1, 1}));
  EXPECT_EQ(rect_path_poly(1, 0), QPoly({1}));
  EXPECT_EQ(rect_path_poly(2, 2, 1), qbinom(4, 2));
  EXPECT_THROW(rect_path_poly(2, 2, 3), DomainError);
  EXPECT_THROW(rect_path_poly(-1, 2), DomainError);
}

TEST(RectPaths, MatchQBinomialAndSplit) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(rect_path_poly(n, k), qbinom(n + k, k));
      for (int m = 1; m <= n; ++m) {
        EXPECT_EQ(rect_path_poly(n, k, m), qbinom(n + k, k));
        const auto terms = rect_path_split_terms(n, k, m);
        ASSERT_EQ(static_cast<int>(terms.size()), k + 1);
        // Each height-j term is the j-th summand of the split identity.
        for (int j = 0; j <= k; ++j)
          EXPECT_EQ(terms[static_cast<std::size_t>(j)],
                    monomial_shift(qbinom(m + j - 1, m - 1) * qbinom(n - m + k - j, n - m), m * (k - j)));
      }
    }
}

}  // namespace
