#include "elemop/error.hpp"
#include "elemop/json_io.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using elemop::Json;
using elemop::Matrix;
using namespace testutil;

TEST(MatrixJson, CanonicalWhitespaceFreeEmission) {
  Matrix m(1, 3);
  m(0, 0) = elemop::GaussianRational::parse("2/4");
  m(0, 1) = elemop::GaussianRational::parse("-3");
  m(0, 2) = elemop::GaussianRational::parse("1 - 2/6 i");
  EXPECT_EQ(elemop::to_json(m).dump(), R"({"cols":3,"entries":[["1/2","-3","1-1/3*i"]],"rows":1})");
}

TEST(MatrixJson, TolerantParsing) {
  const auto j = Json::parse(R"({"rows": 2, "cols": 2, "entries": [[" 1 ", 0], ["2/4", "i"]]})");
  const Matrix m = elemop::matrix_from_json(j);
  EXPECT_EQ(m(0, 0), elemop::GaussianRational(1));
  EXPECT_EQ(m(1, 0), elemop::GaussianRational::from_parts(1, 2));
  EXPECT_EQ(m(1, 1), elemop::GaussianRational::parse("i"));
}

TEST(MatrixJson, RejectsMalformedDocuments) {
  for (const char *bad : {R"({"rows": 2, "cols": 2, "entries": [["1", "0"]]})",
                          R"({"rows": 1, "cols": 2, "entries": [["1"]]})",
                          R"({"rows": 0, "cols": 1, "entries": []})",
                          R"({"rows": 1, "cols": 1, "entries": [["1/0"]]})",
                          R"({"rows": 1, "cols": 1, "entries": [[1.5]]})",
                          R"({"cols": 1, "entries": [["1"]]})", R"([1, 2])"})
    EXPECT_THROW(elemop::matrix_from_json(Json::parse(bad)), elemop::ParseError) << bad;
}

TEST(MatrixJson, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = generator(3, seed, true);
    const Matrix m = g.matrix(1 + seed % 3, 1 + (seed / 3) % 3);
    const std::string text = elemop::to_json(m).dump();
    EXPECT_EQ(elemop::matrix_from_json(Json::parse(text)), m);
    EXPECT_EQ(elemop::to_json(elemop::matrix_from_json(Json::parse(text))).dump(), text);
  }
}

TEST(OperatorJson, RoundTripAndValidation) {
  const auto v = elemop::make_v_operator(Ex32A, Ex32B);
  const Json j = elemop::to_json(v);
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["terms"].size(), 2u);
  const auto back = elemop::operator_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.terms()[1].a, -Ex32B);
  EXPECT_TRUE(elemop::op_equal(back, v));

  Json wrong_dim = j;
  wrong_dim["dim"] = 2;
  EXPECT_THROW(elemop::operator_from_json(wrong_dim), elemop::ParseError);
  EXPECT_THROW(elemop::operator_from_json(Json::parse(R"({"dim": 2, "terms": []})")), elemop::ParseError);
  Json mixed = j;
  mixed["terms"][0]["a"] = elemop::to_json(I2);
  EXPECT_THROW(elemop::operator_from_json(mixed), elemop::ShapeError);
}

TEST(ReportJson, NilpotencyReportShape) {
  const Json j = elemop::to_json(elemop::is_nilpotent(Ex32N));
  EXPECT_EQ(j["nilpotent"], true);
  EXPECT_EQ(j["index"], 2);
  EXPECT_EQ(j["witness"]["row"], 0);
  EXPECT_EQ(j["witness"]["col"], 2);
  EXPECT_EQ(j["witness"]["value"], "1");
  const Json k = elemop::to_json(elemop::is_nilpotent(Ex32A));
  EXPECT_EQ(k["nilpotent"], false);
  EXPECT_TRUE(k["index"].is_null());
  EXPECT_TRUE(k["witness"].is_null());
}

TEST(ReportJson, TheoremResultCarriesFailures) {
  const Json j = elemop::to_json(elemop::thm23_check(Ex32A, Ex32B));
  EXPECT_EQ(j["theorem"], "2.3");
  EXPECT_EQ(j["hypotheses_hold"], false);
  EXPECT_EQ(j["conclusion_nilpotent"]["nilpotent"], true);
  EXPECT_TRUE(j["lambda"].is_null());
  EXPECT_EQ(j["hypothesis_failures"].size(), 2u);
  EXPECT_TRUE(j["hypothesis_failures"][0].is_string());
}

TEST(Params, Example32ParamParsing) {
  const auto p = elemop::parse_example32_params("1,2,3,0,3");
  EXPECT_EQ(p.c, elemop::GaussianRational(3));
  const auto q = elemop::parse_example32_params("1/2, 3/2, i, 2-i, 2");
  EXPECT_EQ(q.d, elemop::GaussianRational::parse("2-i"));
  EXPECT_THROW(elemop::parse_example32_params("1,2,3"), elemop::ParseError);
  EXPECT_THROW(elemop::parse_example32_params("1,2,3,0,x"), elemop::ParseError);
}
