#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfshuffle/enumerator.hpp"
#include "pfshuffle/error.hpp"
#include "pfshuffle/parkfun.hpp"

using namespace pfshuffle;

namespace {

const ParkingFunction& worked_pf() {
  static const ParkingFunction pf = make_pf({0, 1, 2, 2, 3, 0, 1, 1}, {4, 6, 8, 1, 3, 2, 7, 5});
  return pf;
}

TableauGenerator gen(int a, int b, std::optional<int> r = std::nullopt, std::optional<int> s = std::nullopt) {
  return TableauGenerator(Family{a, b, r, s});
}

TEST(ParkingFunction, Validation) {
  EXPECT_NO_THROW(make_pf({0, 0}, {1, 2}));
  EXPECT_THROW(make_pf({0, 2}, {1, 2}), BadSupport);
  EXPECT_THROW(make_pf({1}, {1}), BadSupport);
  EXPECT_THROW(make_pf({0, 1}, {2, 1}), BadColumn);
  EXPECT_THROW(make_pf({0, 0}, {1, 1}), BadLabels);
  EXPECT_THROW(make_pf({0, 0}, {1, 3}), BadLabels);
  EXPECT_THROW(make_pf({0, 0}, {1}), LengthMismatch);
  EXPECT_NO_THROW(make_pf({}, {}));
}

TEST(ParkingFunction, TextRoundTrip) {
  const auto pf = ParkingFunction::parse("0,1,2,2,3,0,1,1;4,6,8,1,3,2,7,5");
  EXPECT_EQ(pf, worked_pf());
  EXPECT_EQ(ParkingFunction::parse(pf.to_text()), pf);
  EXPECT_THROW(ParkingFunction::parse("0,1"), ParseError);
  EXPECT_THROW(ParkingFunction::parse("0,x;1,2"), ParseError);
}

TEST(ParkingFunction, WorkedExample) {
  const auto& pf = worked_pf();
  EXPECT_EQ(area(pf), 10);
  EXPECT_EQ(coarea(pf), 18);
  const auto d = dinv(pf);
  EXPECT_EQ(d.total(), 4);
  EXPECT_EQ(d.primary, 1);
  EXPECT_EQ(d.secondary, 3);
  EXPECT_EQ(diagonal_word(pf), (std::vector<int>{3, 1, 8, 5, 7, 6, 2, 4}));
}

TEST(ParkingFunction, SmallExamples) {
  const auto empty = make_pf({}, {});
  EXPECT_EQ(area(empty), 0);
  EXPECT_EQ(coarea(empty), 0);
  EXPECT_TRUE(diagonal_word(empty).empty());
  const auto pf = make_pf({0, 1}, {1, 2});
  EXPECT_EQ(area(pf), 1);
  EXPECT_EQ(coarea(pf), 0);
  EXPECT_EQ(dinv(make_pf({0, 0}, {2, 1})).total(), 0);
  EXPECT_EQ(diagonal_word(make_pf({0, 0}, {1, 2})), (std::vector<int>{2, 1}));
}

TEST(ParkingFunction, StatisticsMatchOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : oracle::parking_functions(n)) {
      const auto pf = make_pf(o.u, o.v);
      ASSERT_EQ(area(pf), oracle::area(o));
      ASSERT_EQ(dinv(pf).total(), oracle::dinv(o));
      ASSERT_EQ(diagonal_word(pf), oracle::diagonal_word(o));
    }
}

TEST(Shuffle, Examples) {
  EXPECT_TRUE(is_shuffle(std::vector<int>{2, 1, 3}, ShuffleSpec({1, 2})));
  EXPECT_FALSE(is_shuffle(std::vector<int>{3, 2, 1}, ShuffleSpec({1, 2})));
  EXPECT_TRUE(is_shuffle(std::vector<int>{1, 2, 3, 4}, ShuffleSpec({4})));
  EXPECT_THROW(is_shuffle(std::vector<int>{1, 2}, ShuffleSpec({3})), LengthMismatch);
  EXPECT_THROW(is_shuffle(std::vector<int>{1, 1}, ShuffleSpec({2})), BadLabels);
  EXPECT_THROW(ShuffleSpec({1, 0}), DomainError);
}

TEST(Shuffle, AgreesWithOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& spec : compositions(n))
      for (const auto& o : oracle::parking_functions(n)) {
        const auto w = oracle::diagonal_word(o);
        ASSERT_EQ(is_shuffle(w, spec), oracle::shuffle_of(w, spec.parts()));
      }
}

TEST(Shuffle, CompositionCount) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(Words, InvCoinv) {
  const auto w = BinaryWord::parse("2121");
  EXPECT_EQ(inv(w), 3);
  EXPECT_EQ(coinv(w), 1);
  EXPECT_EQ(w.ones(), 2);
  EXPECT_EQ(w.to_text(), "2121");
  EXPECT_THROW(BinaryWord::parse("123"), ParseError);
  EXPECT_EQ(binary_words(2, 2).size(), 6u);
}

TEST(Tableau, Validation) {
  EXPECT_NO_THROW(TwoCarTableau::parse("0,1;1,2"));
  EXPECT_THROW(TwoCarTableau::parse("0,1;2,1"), BadColumn);
  EXPECT_THROW(TwoCarTableau::parse("0,1;1,1"), BadColumn);
  EXPECT_THROW(TwoCarTableau::parse("0,2;1,2"), BadSupport);
  EXPECT_THROW(TwoCarTableau::parse("0,0;1,3"), ParseError);
}

TEST(Tableau, ToTableauExamples) {
  EXPECT_EQ(to_tableau(make_pf({0, 0}, {2, 1}), 1).sizes(), (std::vector<CarSize>{CarSize::big, CarSize::small}));
  EXPECT_EQ(to_tableau(make_pf({0, 1}, {1, 2}), 1).sizes(), (std::vector<CarSize>{CarSize::small, CarSize::big}));
  const auto all_small = to_tableau(make_pf({0, 0, 0}, {3, 2, 1}), 3);
  EXPECT_EQ(all_small.big_count(), 0);
  EXPECT_EQ(all_small.small_count(), 3);
  EXPECT_THROW(to_tableau(worked_pf(), 8), NotInFamily);
  EXPECT_THROW(to_tableau(make_pf({0, 0, 0}, {1, 2, 3}), 2), NotInFamily);
}

TEST(Tableau, RelabelExamples) {
  EXPECT_EQ(relabel(TwoCarTableau::parse("0,0;2,1")).v(), (std::vector<int>{2, 1}));
  EXPECT_EQ(relabel(TwoCarTableau::parse("0,1;1,2")).v(), (std::vector<int>{1, 2}));
  EXPECT_EQ(relabel(TwoCarTableau::parse("0,0,0;1,1,1")).v(), (std::vector<int>{3, 2, 1}));
}

TEST(Tableau, DiagCounts) {
  EXPECT_EQ(diag_counts(TwoCarTableau::parse("0,1;1,2")), (DiagCounts{1, 0}));
  EXPECT_EQ(diag_counts(TwoCarTableau::parse("0,0;2,1")), (DiagCounts{1, 1}));
  EXPECT_EQ(diag_counts(TwoCarTableau()), (DiagCounts{0, 0}));
}

// Round trip and statistic transport over every member of every (a,b)
// family, taken from the label-level oracle.
TEST(Tableau, RoundTripAndTransport) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& o : oracle::parking_functions(n))
      for (int a = 0; a <= n; ++a) {
        if (!oracle::shuffle_of(oracle::diagonal_word(o), {a, n - a})) continue;
        const auto pf = make_pf(o.u, o.v);
        const auto t = to_tableau(pf, a);
        ASSERT_EQ(relabel(t), pf);
        ASSERT_EQ(dinv(t).total(), oracle::dinv(o));
        ASSERT_EQ(area(t), oracle::area(o));
      }
}

// A (u, sizes) pair is a valid tableau exactly when it comes from some
// shuffle-family parking function.
TEST(Tableau, ValidityCharacterization) {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= n; ++a) {
      std::set<TwoCarTableau> from_labels;
      for (const auto& o : oracle::parking_functions(n))
        if (oracle::shuffle_of(oracle::diagonal_word(o), {a, n - a}))
          from_labels.insert(to_tableau(make_pf(o.u, o.v), a));
      std::set<TwoCarTableau> direct;
      auto g = gen(a, n - a);
      while (auto t = g.next()) direct.insert(*t);
      ASSERT_EQ(direct, from_labels) << "a=" << a << " n=" << n;
    }
}

}  // namespace
