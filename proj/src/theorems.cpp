#include "elemop/theorems.hpp"
#include "elemop/error.hpp"

#include <utility>

namespace elemop {

namespace {

void require_pair(const Matrix &a, const Matrix &b, const char *op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError(std::string(op) + ": expected square matrices of equal size, got " +
                     a.shape_str() + " and " + b.shape_str());
}

Matrix shifted(const Matrix &a, const GaussianRational &lambda) {
  return a - lambda * Matrix::identity(a.rows());
}

std::string label(char tuple, std::size_t i) { return std::string(1, tuple) + "_" + std::to_string(i + 1); }

} // namespace

ShiftWitness scalar_shift_witness(const Matrix &a) {
  if (!a.is_square())
    throw ShapeError("scalar_shift_witness: expected a square matrix, got " + a.shape_str());
  GaussianRational lambda = trace(a) / GaussianRational(static_cast<long>(a.rows()));
  if (is_nilpotent(shifted(a, lambda)).nilpotent)
    return {lambda};
  return {};
}

TheoremCheckResult thm21_criterion(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "thm21_criterion");
  TheoremCheckResult r;
  r.theorem = "2.1";
  const bool a_nil = is_nilpotent(a).nilpotent;
  const bool b_nil = is_nilpotent(b).nilpotent;
  r.hypotheses_hold = a_nil || b_nil;
  if (!r.hypotheses_hold)
    r.hypothesis_failures.emplace_back("neither A nor B nilpotent");
  r.conclusion = op_is_nilpotent(make_multiplication(a, b));
  r.consistent = !r.hypotheses_hold || r.conclusion.nilpotent;
  r.biconditional_holds = r.hypotheses_hold == r.conclusion.nilpotent;
  if (!*r.biconditional_holds)
    throw IntegrityError("thm21_criterion: M_{A,B} nilpotency disagrees with nilpotency of A or B");
  return r;
}

TheoremCheckResult thm22_check(const std::vector<Matrix> &a_tuple,
                               const std::vector<Matrix> &b_tuple) {
  if (a_tuple.empty() || a_tuple.size() != b_tuple.size())
    throw ShapeError("thm22_check: tuples must be nonempty and of equal length (got " +
                     std::to_string(a_tuple.size()) + " and " + std::to_string(b_tuple.size()) + ")");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a_tuple.size(); ++i) {
    require_pair(a_tuple[i], b_tuple[i], "thm22_check");
    terms.push_back({a_tuple[i], b_tuple[i]});
  }
  ElementaryOperator r_op(std::move(terms));

  TheoremCheckResult r;
  r.theorem = "2.2";
  const std::size_t len = a_tuple.size();
  for (char which : {'A', 'B'}) {
    const auto &tuple = which == 'A' ? a_tuple : b_tuple;
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = i + 1; j < len; ++j)
        if (!commute(tuple[i], tuple[j]))
          r.hypothesis_failures.push_back(std::string(1, which) + "-tuple not pairwise commuting (" +
                                          label(which, i) + ", " + label(which, j) + ")");
  }
  for (std::size_t i = 0; i < len; ++i)
    if (!is_nilpotent(a_tuple[i]).nilpotent && !is_nilpotent(b_tuple[i]).nilpotent)
      r.hypothesis_failures.push_back("index " + std::to_string(i + 1) + ": neither " +
                                      label('A', i) + " nor " + label('B', i) + " nilpotent");
  r.hypotheses_hold = r.hypothesis_failures.empty();
  r.conclusion = op_is_nilpotent(r_op);
  r.consistent = !r.hypotheses_hold || r.conclusion.nilpotent;
  return r;
}

bool prefix_commutes_with_last(const std::vector<Matrix> &a_tuple,
                               const std::vector<Matrix> &b_tuple) {
  if (a_tuple.size() < 2 || a_tuple.size() != b_tuple.size())
    throw ShapeError("prefix_commutes_with_last: need equal-length tuples of length >= 2");
  std::vector<Term> prefix;
  for (std::size_t i = 0; i + 1 < a_tuple.size(); ++i)
    prefix.push_back({a_tuple[i], b_tuple[i]});
  const Matrix s_prefix = superoperator(ElementaryOperator(std::move(prefix)));
  const Matrix s_last = superoperator(make_multiplication(a_tuple.back(), b_tuple.back()));
  return s_prefix * s_last == s_last * s_prefix;
}

TheoremCheckResult thm23_check(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "thm23_check");
  TheoremCheckResult r;
  r.theorem = "2.3";
  if (!commute(a, b))
    r.hypothesis_failures.emplace_back("A and B do not commute");
  r.lambda = scalar_shift_witness(a).lambda;
  r.mu = scalar_shift_witness(b).lambda;
  if (!r.lambda)
    r.hypothesis_failures.emplace_back("no scalar lambda with A - lambda I nilpotent");
  if (!r.mu)
    r.hypothesis_failures.emplace_back("no scalar mu with B - mu I nilpotent");
  r.hypotheses_hold = r.hypothesis_failures.empty();
  r.conclusion = op_is_nilpotent(make_v_operator(a, b));
  r.consistent = !r.hypotheses_hold || r.conclusion.nilpotent;
  return r;
}

TheoremCheckResult fong_sourour_check(const Matrix &s, const Matrix &t) {
  require_pair(s, t, "fong_sourour_check");
  TheoremCheckResult r;
  r.theorem = "1.1";
  const GaussianRational d(static_cast<long>(s.rows()));
  const GaussianRational lambda_s = trace(s) / d;
  const GaussianRational lambda_t = trace(t) / d;
  if (!(lambda_s == lambda_t)) {
    r.hypothesis_failures.push_back("trace(S)/d = " + lambda_s.str() + " differs from trace(T)/d = " +
                                    lambda_t.str());
  } else {
    if (!is_nilpotent(shifted(s, lambda_s)).nilpotent)
      r.hypothesis_failures.push_back("S - " + lambda_s.str() + " I not nilpotent");
    if (!is_nilpotent(shifted(t, lambda_s)).nilpotent)
      r.hypothesis_failures.push_back("T - " + lambda_s.str() + " I not nilpotent");
  }
  r.hypotheses_hold = r.hypothesis_failures.empty();
  if (r.hypotheses_hold)
    r.lambda = lambda_s;
  r.conclusion = op_is_nilpotent(make_generalized_derivation(s, t));
  r.consistent = !r.hypotheses_hold || r.conclusion.nilpotent;
  r.biconditional_holds = r.hypotheses_hold == r.conclusion.nilpotent;
  if (!*r.biconditional_holds)
    throw IntegrityError("fong_sourour_check: delta_{S,T} nilpotency disagrees with common shift existence");
  return r;
}

ElementaryOperator eq1_identity_residual(const Matrix &a, const Matrix &b,
                                         const GaussianRational &lambda,
                                         const GaussianRational &mu) {
  require_pair(a, b, "eq1_identity_residual");
  const ElementaryOperator lhs = make_v_operator(shifted(a, lambda), shifted(b, mu));
  const ElementaryOperator rhs = add(add(make_v_operator(a, b), scale(make_inner_derivation(b), lambda)),
                                     scale(make_inner_derivation(a), -mu));
  return add(lhs, scale(rhs, -1));
}

ProofTrace thm21_proof_replay(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "thm21_proof_replay");
  const std::size_t d = a.rows();
  const NilpotencyReport m_report = op_is_nilpotent(make_multiplication(a, b));
  if (!m_report.nilpotent)
    throw PreconditionError("thm21_proof_replay: M_{A,B} is not nilpotent");
  const unsigned m = *m_report.index;

  ProofTrace trace{m, mat_pow(a, m), mat_pow(b, m), Matrix(d, 1), Matrix(1, d), {}, {}, false};
  if (trace.b_pow.is_zero())
    throw PreconditionError("thm21_proof_replay: B^" + std::to_string(m) +
                            " = 0, B is nilpotent and the criterion holds directly");

  // z = e_j for the first nonzero column of B^m.
  std::size_t zj = d;
  for (std::size_t j = 0; j < d && zj == d; ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (!trace.b_pow(i, j).is_zero()) {
        zj = j;
        break;
      }
  trace.z = Matrix::unit(d, 1, zj, 0);
  const Matrix bz = trace.b_pow * trace.z;

  // f = e_i^T picks out a nonzero coordinate of B^m z.
  std::size_t fi = 0;
  while (bz(fi, 0).is_zero())
    ++fi;
  trace.f = Matrix::unit(1, d, 0, fi);
  trace.f_of_bz = (trace.f * bz)(0, 0);
  if (trace.f_of_bz.is_zero())
    throw IntegrityError("thm21_proof_replay: coordinate functional vanishes on B^m z");

  bool all_zero = true;
  for (std::size_t k = 0; k < d; ++k) {
    Matrix x = Matrix::unit(d, 1, k, 0);
    Matrix op = rank_one(trace.f, x);
    const Matrix sandwich = trace.a_pow * op * trace.b_pow;
    // (A^m (x f) B^m) z = f(B^m z) A^m x, so a zero sandwich forces A^m x = 0.
    const Matrix applied = sandwich * trace.z;
    const Matrix image = trace.a_pow * x;
    if (!(applied == trace.f_of_bz * image))
      throw IntegrityError("thm21_proof_replay: rank-one identity failed");
    ReplayStep step{k, std::move(x), std::move(op), sandwich.is_zero(), image.is_zero()};
    all_zero = all_zero && step.sandwich_zero && step.image_zero;
    trace.steps.push_back(std::move(step));
  }
  trace.a_pow_zero = trace.a_pow.is_zero();
  if (trace.a_pow_zero != all_zero)
    throw IntegrityError("thm21_proof_replay: per-basis verdicts disagree with A^m");
  return trace;
}

} // namespace elemop
