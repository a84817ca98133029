#pragma once

#include "elemop/matrix.hpp"
#include "elemop/operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace elemop {

/// Scalar lambda with a - lambda*I nilpotent, if any.
struct ShiftWitness {
  std::optional<GaussianRational> lambda;
};

/// The only possible shift is trace(a)/d, so one nilpotency test decides it.
ShiftWitness scalar_shift_witness(const Matrix &a);

struct TheoremCheckResult {
  std::string theorem;
  bool hypotheses_hold = false;
  std::vector<std::string> hypothesis_failures;
  /// Computed from the superoperator whether or not the hypotheses hold.
  NilpotencyReport conclusion;
  /// hypotheses_hold implies conclusion.nilpotent
  bool consistent = true;
  /// Only for the equivalence statements (multiplication criterion and
  /// generalized-derivation criterion).
  std::optional<bool> biconditional_holds;
  std::optional<GaussianRational> lambda;
  std::optional<GaussianRational> mu;
};

/// M_{a,b} nilpotent iff a or b nilpotent. Throws IntegrityError if the
/// equivalence fails on this instance.
TheoremCheckResult thm21_criterion(const Matrix &a, const Matrix &b);

/// Sufficient condition for R = sum a_i X b_i: within-tuple pairwise
/// commutation and, per index, a_i or b_i nilpotent. No cross condition
/// between the tuples is imposed.
TheoremCheckResult thm22_check(const std::vector<Matrix> &a_tuple,
                               const std::vector<Matrix> &b_tuple);

/// Whether the superoperators of the first length-1 terms and of the last
/// multiplication term commute.
bool prefix_commutes_with_last(const std::vector<Matrix> &a_tuple,
                               const std::vector<Matrix> &b_tuple);

/// Sufficient condition for V_{a,b}: ab = ba and both a and b are scalar
/// plus nilpotent. lambda and mu are filled when the shifts exist.
TheoremCheckResult thm23_check(const Matrix &a, const Matrix &b);

/// delta_{s,t} nilpotent iff a common lambda makes s - lambda I and
/// t - lambda I nilpotent. Throws IntegrityError if that fails.
TheoremCheckResult fong_sourour_check(const Matrix &s, const Matrix &t);

/// V_{a - lambda I, b - mu I} - (V_{a,b} + lambda delta_b - mu delta_a).
/// Its superoperator is zero for every input; ab = ba is not required.
ElementaryOperator eq1_identity_residual(const Matrix &a, const Matrix &b,
                                         const GaussianRational &lambda,
                                         const GaussianRational &mu);

struct ReplayStep {
  std::size_t basis_index;
  Matrix x;                 ///< basis column e_k
  Matrix rank_one_op;       ///< x * f
  bool sandwich_zero;       ///< a^m (x f) b^m == 0
  bool image_zero;          ///< a^m x == 0
};

struct ProofTrace {
  unsigned exponent;        ///< m, nilpotency index of M_{a,b}
  Matrix a_pow;             ///< a^m
  Matrix b_pow;             ///< b^m
  Matrix z;                 ///< basis column with b^m z != 0
  Matrix f;                 ///< coordinate functional with f(b^m z) != 0
  GaussianRational f_of_bz;
  std::vector<ReplayStep> steps;
  bool a_pow_zero;          ///< final verdict
};

/// Replays the converse half of the multiplication criterion with an
/// explicit coordinate functional. Requires M_{a,b} nilpotent with index m
/// and b^m != 0; otherwise throws PreconditionError.
ProofTrace thm21_proof_replay(const Matrix &a, const Matrix &b);

} // namespace elemop
