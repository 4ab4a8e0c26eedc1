#include <gtest/gtest.h>

#include "printers.hpp"

#include "pfshuffle/error.hpp"
#include "pfshuffle/qalg.hpp"
#include "pfshuffle/serialize.hpp"

using namespace pfshuffle;

namespace {

TEST(Serialize, QPolyJson) {
  EXPECT_EQ(to_json(QPoly({0, 0, 1, 1})), R"({"var":"q","coeffs":["0","0","1","1"]})");
  EXPECT_EQ(to_json(QPoly()), R"({"var":"q","coeffs":[]})");
}

TEST(Serialize, BigCoefficientsSurvive) {
  const QPoly p = qbinom(80, 40);
  EXPECT_EQ(qpoly_from_json(to_json(p)), p);
  EXPECT_GT(mpz_sizeinbase(p.at_one().get_mpz_t(), 10), 20u);
}

TEST(Serialize, LaurentAndQTRoundTrip) {
  const QLaurent l(-3, {2, 0, 5});
  EXPECT_EQ(qlaurent_from_json(to_json(l)), l);
  QTPoly p = QTPoly::monomial(2, 0, 4) + QTPoly::monomial(0, 1, -1) + QTPoly::monomial(0, 3);
  EXPECT_EQ(to_json(p), R"({"vars":["q","t"],"terms":[[0,1,"-1"],[0,3,"1"],[2,0,"4"]]})");
  EXPECT_EQ(qtpoly_from_json(to_json(p)), p);
}

TEST(Serialize, ParseErrors) {
  EXPECT_THROW(qpoly_from_json("not json"), ParseError);
  EXPECT_THROW(qpoly_from_json(R"({"var":"t","coeffs":[]})"), ParseError);
  EXPECT_THROW(qpoly_from_json(R"({"var":"q","coeffs":["x"]})"), ParseError);
}

TEST(Serialize, TextForms) {
  EXPECT_EQ(to_coeff_list(QPoly({1, 0, 2})), "1 0 2");
  EXPECT_EQ(to_coeff_list(QPoly()), "");
  EXPECT_EQ(to_string(QPoly({1, 2, 0, 1})), "1 + 2q + q^3");
  EXPECT_EQ(to_string(QPoly()), "0");
}

}  // namespace
