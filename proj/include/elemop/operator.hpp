#pragma once

#include "elemop/matrix.hpp"

#include <cstddef>
#include <vector>

namespace elemop {

struct Term {
  Matrix a;
  Matrix b;
};

/// X -> sum_i a_i X b_i on n x n matrices. Holds at least one term; every
/// coefficient is n x n.
class ElementaryOperator {
public:
  explicit ElementaryOperator(std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  std::size_t length() const { return terms_.size(); }
  const std::vector<Term> &terms() const { return terms_; }

  /// Left and right coefficient tuples.
  std::vector<Matrix> left() const;
  std::vector<Matrix> right() const;

private:
  std::size_t dim_;
  std::vector<Term> terms_;
};

/// X -> aXb
ElementaryOperator make_multiplication(const Matrix &a, const Matrix &b);
/// X -> aX - Xa
ElementaryOperator make_inner_derivation(const Matrix &a);
/// X -> aX - Xb
ElementaryOperator make_generalized_derivation(const Matrix &a, const Matrix &b);
/// X -> aXb - bXa
ElementaryOperator make_v_operator(const Matrix &a, const Matrix &b);
/// X -> X
ElementaryOperator make_identity_operator(std::size_t n);

Matrix apply(const ElementaryOperator &op, const Matrix &x);

/// sum_i kron(b_i^T, a_i); maps vec(X) to vec(apply(op, X)).
Matrix superoperator(const ElementaryOperator &op);

/// Term lists concatenated.
ElementaryOperator add(const ElementaryOperator &lhs, const ElementaryOperator &rhs);
/// lhs after rhs: terms (a_i c_j, d_j b_i) in lexicographic (i, j) order.
ElementaryOperator compose(const ElementaryOperator &lhs, const ElementaryOperator &rhs);
ElementaryOperator scale(const ElementaryOperator &op, const GaussianRational &c);
/// power 0 is the identity map [(I, I)].
ElementaryOperator power(const ElementaryOperator &op, unsigned k);

/// Extensional: equal superoperators. Throws ShapeError on dim mismatch.
bool op_equal(const ElementaryOperator &lhs, const ElementaryOperator &rhs);

/// is_nilpotent(superoperator(op)); the index is at most dim^2.
NilpotencyReport op_is_nilpotent(const ElementaryOperator &op);

} // namespace elemop
