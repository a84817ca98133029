#include "elemop/error.hpp"
#include "elemop/lab.hpp"
#include "elemop/theorems.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using elemop::GaussianRational;
using elemop::Matrix;
using namespace testutil;

namespace {

const Matrix Ex31A{{0, 1}, {0, 0}};
const Matrix Ex31B{{0, 0}, {1, 0}};

bool mentions(const elemop::TheoremCheckResult &r, const std::string &needle) {
  for (const auto &f : r.hypothesis_failures)
    if (f.find(needle) != std::string::npos)
      return true;
  return false;
}

} // namespace

TEST(Thm21Criterion, NilpotentLeftFactor) {
  const auto r = elemop::thm21_criterion(J2, I2);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_TRUE(r.conclusion.nilpotent);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.biconditional_holds, true);
}

TEST(Thm21Criterion, Example32PairIsNotNilpotent) {
  const auto r = elemop::thm21_criterion(Ex32A, Ex32B);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_FALSE(r.conclusion.nilpotent);
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(mentions(r, "neither A nor B nilpotent"));
}

TEST(Thm21Criterion, Identities) {
  const auto r = elemop::thm21_criterion(I2, I2);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_FALSE(r.conclusion.nilpotent);
  EXPECT_THROW(elemop::thm21_criterion(I2, I3), elemop::ShapeError);
}

TEST(Thm21Criterion, RandomBiconditional) {
  auto g = generator(3, 404, true);
  for (int k = 0; k < 40; ++k) {
    const Matrix a = k % 3 == 0 ? g.nilpotent() : g.matrix();
    const Matrix b = k % 3 == 1 ? g.nilpotent() : g.matrix();
    const auto r = elemop::thm21_criterion(a, b);
    EXPECT_EQ(r.hypotheses_hold, r.conclusion.nilpotent);
  }
}

TEST(Thm22Check, Example32TermTuples) {
  // V_{N,B} = (N, B), (-B, N)
  const auto r = elemop::thm22_check({Ex32N, -Ex32B}, {Ex32B, Ex32N});
  EXPECT_TRUE(r.hypotheses_hold) << (r.hypothesis_failures.empty() ? "" : r.hypothesis_failures[0]);
  EXPECT_TRUE(r.conclusion.nilpotent);
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.biconditional_holds.has_value());
}

TEST(Thm22Check, Example31TermTuplesFailCommutation) {
  const auto r = elemop::thm22_check({Ex31A, -Ex31B}, {Ex31B, Ex31A});
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_TRUE(mentions(r, "A-tuple not pairwise commuting"));
  EXPECT_TRUE(mentions(r, "B-tuple not pairwise commuting"));
  EXPECT_FALSE(r.conclusion.nilpotent);
  EXPECT_TRUE(r.consistent);
}

TEST(Thm22Check, PerIndexFailureIsLabelled) {
  const auto r = elemop::thm22_check({J2, I2}, {I2, I2});
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_TRUE(mentions(r, "index 2: neither A_2 nor B_2 nilpotent"));
}

TEST(Thm22Check, PolynomialsInJordanBlock) {
  auto g = generator(3, 505);
  for (int k = 0; k < 25; ++k) {
    const std::size_t len = 1 + k % 3;
    auto a = g.commuting_tuple(J3, len, std::vector<bool>(len, true));
    auto b = g.commuting_tuple(J3, len, std::vector<bool>(len, false));
    const auto r = elemop::thm22_check(a, b);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_TRUE(r.conclusion.nilpotent);
    if (len >= 2)
      EXPECT_TRUE(elemop::prefix_commutes_with_last(a, b));
  }
}

TEST(Thm22Check, RejectsMismatchedTuples) {
  EXPECT_THROW(elemop::thm22_check({J2}, {J2, J2}), elemop::ShapeError);
  EXPECT_THROW(elemop::thm22_check({}, {}), elemop::ShapeError);
  EXPECT_THROW(elemop::thm22_check({J2, J3}, {J2, J3}), elemop::ShapeError);
}

TEST(ScalarShiftWitness, Cases) {
  EXPECT_EQ(elemop::scalar_shift_witness(J3).lambda, GaussianRational(0));
  EXPECT_EQ(elemop::scalar_shift_witness(GaussianRational(5) * I2 + J2).lambda, GaussianRational(5));
  EXPECT_FALSE(elemop::scalar_shift_witness(Ex32A).lambda.has_value());
  EXPECT_FALSE(elemop::scalar_shift_witness(Ex32B).lambda.has_value());
  const GaussianRational z = GaussianRational::parse("1/2-2*i");
  EXPECT_EQ(elemop::scalar_shift_witness(z * I3 + J3 * J3).lambda, z);
  EXPECT_THROW(elemop::scalar_shift_witness(Matrix(2, 3)), elemop::ShapeError);
}

TEST(Thm23Check, ScalarPlusNilpotentPair) {
  const Matrix a = I3 + J3;
  const Matrix b = GaussianRational(2) * I3 + J3 * J3;
  const auto r = elemop::thm23_check(a, b);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.lambda, GaussianRational(1));
  EXPECT_EQ(r.mu, GaussianRational(2));
  EXPECT_TRUE(r.conclusion.nilpotent);
}

TEST(Thm23Check, Example32IsConverseFailure) {
  const auto r = elemop::thm23_check(Ex32A, Ex32B);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_FALSE(mentions(r, "do not commute"));
  EXPECT_TRUE(mentions(r, "no scalar lambda"));
  EXPECT_TRUE(mentions(r, "no scalar mu"));
  EXPECT_FALSE(r.lambda.has_value());
  EXPECT_TRUE(r.conclusion.nilpotent);
  EXPECT_TRUE(r.consistent);
}

TEST(Thm23Check, EqualNilpotentPairGivesZeroMap) {
  const auto r = elemop::thm23_check(J2, J2);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.lambda, GaussianRational(0));
  EXPECT_EQ(r.mu, GaussianRational(0));
  EXPECT_EQ(r.conclusion.index, 1u);
}

TEST(Thm23Check, NonCommutingPairFails) {
  const auto r = elemop::thm23_check(Ex31A, Ex31B);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_TRUE(mentions(r, "A and B do not commute"));
  EXPECT_FALSE(r.conclusion.nilpotent);
}

TEST(FongSourour, CommonShift) {
  const auto r = elemop::fong_sourour_check(GaussianRational(2) * I2 + J2, GaussianRational(2) * I2);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.lambda, GaussianRational(2));
  EXPECT_TRUE(r.conclusion.nilpotent);
  EXPECT_EQ(r.biconditional_holds, true);
}

TEST(FongSourour, DifferentTraces) {
  const Matrix zero(2, 2);
  const auto r = elemop::fong_sourour_check(I2, zero);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_TRUE(mentions(r, "differs"));
  EXPECT_FALSE(r.conclusion.nilpotent);
  auto g = generator(2, 1);
  const Matrix x = g.matrix();
  EXPECT_EQ(elemop::apply(elemop::make_generalized_derivation(I2, zero), x), x);
}

TEST(FongSourour, SameTraceButNoShift) {
  const auto r = elemop::fong_sourour_check(Ex32A, Ex32B);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_TRUE(mentions(r, "not nilpotent"));
  EXPECT_FALSE(r.conclusion.nilpotent);
}

TEST(FongSourour, EqualJordanBlocks) {
  const auto r = elemop::fong_sourour_check(J3, J3);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.lambda, GaussianRational(0));
  EXPECT_TRUE(r.conclusion.nilpotent);
}

TEST(Eq1Residual, VanishesOnRandomTuples) {
  auto g = generator(2, 606, true);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = g.matrix(), b = g.matrix();
    EXPECT_TRUE(elemop::superoperator(elemop::eq1_identity_residual(a, b, 1, 2)).is_zero());
    EXPECT_TRUE(elemop::superoperator(elemop::eq1_identity_residual(a, b, g.scalar(), g.scalar())).is_zero());
    EXPECT_TRUE(elemop::superoperator(elemop::eq1_identity_residual(a, b, 0, 0)).is_zero());
  }
}

TEST(Eq1Residual, EqualCoefficientsReduceToScaledDerivation) {
  auto g = generator(3, 707, true);
  const Matrix a = g.matrix();
  const GaussianRational lambda = g.scalar(), mu = g.scalar();
  // V_{a - lambda, a - mu} = (lambda - mu) delta_a
  EXPECT_TRUE(elemop::op_equal(
      elemop::make_v_operator(a - lambda * I3, a - mu * I3),
      elemop::scale(elemop::make_inner_derivation(a), lambda - mu)));
  EXPECT_TRUE(elemop::superoperator(elemop::eq1_identity_residual(a, a, lambda, mu)).is_zero());
}

TEST(ProofReplay, JordanTimesIdentity) {
  const auto t = elemop::thm21_proof_replay(J2, I2);
  EXPECT_EQ(t.exponent, 2u);
  EXPECT_FALSE(t.f_of_bz.is_zero());
  ASSERT_EQ(t.steps.size(), 2u);
  for (const auto &s : t.steps) {
    EXPECT_TRUE(s.sandwich_zero);
    EXPECT_TRUE(s.image_zero);
    EXPECT_EQ(s.rank_one_op, s.x * t.f);
  }
  EXPECT_TRUE(t.a_pow_zero);
}

TEST(ProofReplay, JordanThreeTimesScalar) {
  const auto t = elemop::thm21_proof_replay(J3, GaussianRational(3) * I3);
  EXPECT_EQ(t.exponent, 3u);
  EXPECT_EQ(t.b_pow, GaussianRational(27) * I3);
  EXPECT_EQ(t.z, Matrix::unit(3, 1, 0, 0));
  EXPECT_EQ(t.f, Matrix::unit(1, 3, 0, 0));
  EXPECT_EQ(t.f_of_bz, GaussianRational(27));
  EXPECT_TRUE(t.a_pow_zero);
}

TEST(ProofReplay, PreconditionFailures) {
  try {
    elemop::thm21_proof_replay(I2, J2);
    FAIL();
  } catch (const elemop::PreconditionError &e) {
    EXPECT_NE(std::string(e.what()).find("B is nilpotent"), std::string::npos);
  }
  try {
    elemop::thm21_proof_replay(I2, I2);
    FAIL();
  } catch (const elemop::PreconditionError &e) {
    EXPECT_NE(std::string(e.what()).find("not nilpotent"), std::string::npos);
  }
}

TEST(ProofReplay, GeneratedInstances) {
  auto g = generator(3, 808);
  for (int k = 0; k < 15; ++k) {
    const Matrix a = g.nilpotent();
    Matrix b = g.matrix();
    while (elemop::is_nilpotent(b).nilpotent)
      b = g.matrix();
    const auto t = elemop::thm21_proof_replay(a, b);
    EXPECT_TRUE(t.a_pow_zero);
    EXPECT_FALSE((t.f * t.b_pow * t.z)(0, 0).is_zero());
  }
}
