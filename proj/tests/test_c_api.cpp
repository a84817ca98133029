// Exercises the shared-library surface only; no C++ library headers.
#include "elemop/elemop.h"

#include <gtest/gtest.h>

#include <json.hpp>

#include <string>

namespace {

using nlohmann::json;

const char *kJ2 = R"({"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]})";
const char *kI2 = R"({"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]})";

struct Owned {
  char *s = nullptr;
  ~Owned() { elemop_string_free(s); }
  json parse() const { return json::parse(s); }
};

elemop_matrix *matrix(const char *text) {
  elemop_matrix *m = nullptr;
  EXPECT_EQ(elemop_matrix_from_json(text, &m), ELEMOP_OK) << elemop_last_error();
  return m;
}

} // namespace

TEST(CApi, MatrixRoundTrip) {
  elemop_matrix *m = matrix(R"({"rows":1,"cols":2,"entries":[[" 2/4 ", "1 - i"]]})");
  Owned out;
  ASSERT_EQ(elemop_matrix_to_json(m, &out.s), ELEMOP_OK);
  EXPECT_EQ(std::string(out.s), R"({"cols":2,"entries":[["1/2","1-1*i"]],"rows":1})");
  elemop_matrix_free(m);
}

TEST(CApi, ParseErrorsCarryMessages) {
  elemop_matrix *m = nullptr;
  EXPECT_EQ(elemop_matrix_from_json("{not json", &m), ELEMOP_ERR_PARSE);
  EXPECT_NE(std::string(elemop_last_error()), "");
  EXPECT_EQ(elemop_matrix_from_json(R"({"rows":1,"cols":1,"entries":[["1/0"]]})", &m), ELEMOP_ERR_PARSE);
  EXPECT_EQ(m, nullptr);
  EXPECT_EQ(elemop_matrix_from_json(nullptr, &m), ELEMOP_ERR_INVALID_ARGUMENT);
}

TEST(CApi, OperatorApplyAndSuperop) {
  elemop_matrix *a = matrix(kJ2);
  elemop_matrix *b = matrix(kI2);
  elemop_operator *op = nullptr;
  ASSERT_EQ(elemop_operator_make("multiplication", a, b, &op), ELEMOP_OK);

  elemop_matrix *s = nullptr;
  ASSERT_EQ(elemop_operator_superop(op, &s), ELEMOP_OK);
  Owned st;
  ASSERT_EQ(elemop_matrix_to_json(s, &st.s), ELEMOP_OK);
  EXPECT_EQ(st.parse()["entries"][0], json({"0", "1", "0", "0"}));

  elemop_matrix *x = matrix(kI2);
  elemop_matrix *y = nullptr;
  ASSERT_EQ(elemop_operator_apply(op, x, &y), ELEMOP_OK);
  Owned yt;
  ASSERT_EQ(elemop_matrix_to_json(y, &yt.s), ELEMOP_OK);
  EXPECT_EQ(yt.parse()["entries"], json::parse(R"([["0","1"],["0","0"]])"));

  Owned nil;
  ASSERT_EQ(elemop_operator_nilpotency(op, &nil.s), ELEMOP_OK);
  EXPECT_EQ(nil.parse()["index"], 2);

  Owned text;
  ASSERT_EQ(elemop_operator_to_json(op, &text.s), ELEMOP_OK);
  elemop_operator *again = nullptr;
  ASSERT_EQ(elemop_operator_from_json(text.s, &again), ELEMOP_OK);

  elemop_matrix *bad = matrix(R"({"rows":3,"cols":3,"entries":[["0","0","0"],["0","0","0"],["0","0","0"]]})");
  elemop_matrix *ignored = nullptr;
  EXPECT_EQ(elemop_operator_apply(op, bad, &ignored), ELEMOP_ERR_SHAPE);
  EXPECT_NE(std::string(elemop_last_error()).find("3x3"), std::string::npos);
  EXPECT_EQ(elemop_operator_make("nonsense", a, b, &again), ELEMOP_ERR_INVALID_ARGUMENT);

  for (auto *m : {a, b, s, x, y, bad})
    elemop_matrix_free(m);
  elemop_operator_free(op);
  elemop_operator_free(again);
}

TEST(CApi, ChecksAndReplay) {
  elemop_matrix *a = matrix(kJ2);
  elemop_matrix *b = matrix(kI2);
  for (const char *t : {"2.1", "2.3", "1.1"}) {
    Owned out;
    ASSERT_EQ(elemop_check_pair(t, a, b, &out.s), ELEMOP_OK) << t;
    EXPECT_EQ(out.parse()["theorem"], t);
    EXPECT_EQ(out.parse()["consistent"], true);
  }
  Owned bad;
  EXPECT_EQ(elemop_check_pair("9.9", a, b, &bad.s), ELEMOP_ERR_INVALID_ARGUMENT);

  Owned replay;
  ASSERT_EQ(elemop_proof_replay(a, b, &replay.s), ELEMOP_OK);
  EXPECT_EQ(replay.parse()["a_pow_zero"], true);
  Owned refused;
  EXPECT_EQ(elemop_proof_replay(b, a, &refused.s), ELEMOP_ERR_PRECONDITION);

  elemop_operator *v = nullptr;
  ASSERT_EQ(elemop_operator_make("v", a, b, &v), ELEMOP_OK);
  Owned terms;
  ASSERT_EQ(elemop_check_terms(v, &terms.s), ELEMOP_OK);
  EXPECT_EQ(terms.parse()["theorem"], "2.2");
  elemop_operator_free(v);
  elemop_matrix_free(a);
  elemop_matrix_free(b);
}

TEST(CApi, ExamplesSweepsSearch) {
  Owned e31;
  ASSERT_EQ(elemop_example("3.1", nullptr, &e31.s), ELEMOP_OK);
  EXPECT_EQ(e31.parse()["S_cubed_plus_S_zero"], true);
  Owned e32;
  ASSERT_EQ(elemop_example("3.2", "1,2,3,0,3", &e32.s), ELEMOP_OK);
  EXPECT_EQ(e32.parse()["all_hold"], true);
  Owned rejected;
  EXPECT_EQ(elemop_example("3.2", "1,2,-2,5,3", &rejected.s), ELEMOP_ERR_PRECONDITION);

  Owned sweep;
  ASSERT_EQ(elemop_sweep("2.3", 3, 8, 5, &sweep.s), ELEMOP_OK);
  EXPECT_EQ(sweep.parse()["violations"].size(), 0u);
  Owned sweep2;
  ASSERT_EQ(elemop_sweep("2.3", 3, 8, 5, &sweep2.s), ELEMOP_OK);
  EXPECT_EQ(std::string(sweep.s), std::string(sweep2.s));
  Owned wrong_dim;
  EXPECT_EQ(elemop_sweep("2.1", 3, 0, 0, &wrong_dim.s), ELEMOP_ERR_PRECONDITION);

  Owned search;
  ASSERT_EQ(elemop_search("2.2", 3, 4, 1, &search.s), ELEMOP_OK);
  EXPECT_EQ(search.parse()["converse_failures"][0]["kind"], "seed:example-3.2");
}
