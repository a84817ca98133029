#include "elemop/operator.hpp"
#include "elemop/error.hpp"

#include <utility>

namespace elemop {

namespace {

void require_pair(const Matrix &a, const Matrix &b, const char *op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError(std::string(op) + ": expected square coefficients of equal size, got " +
                     a.shape_str() + " and " + b.shape_str());
}

void require_same_dim(const ElementaryOperator &lhs, const ElementaryOperator &rhs, const char *op) {
  if (lhs.dim() != rhs.dim())
    throw ShapeError(std::string(op) + ": operator dimensions differ (" + std::to_string(lhs.dim()) +
                     " vs " + std::to_string(rhs.dim()) + ")");
}

} // namespace

ElementaryOperator::ElementaryOperator(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw ShapeError("elementary operator needs at least one term");
  dim_ = terms_.front().a.rows();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto &t = terms_[i];
    if (!t.a.is_square() || !t.b.is_square() || t.a.rows() != dim_ || t.b.rows() != dim_)
      throw ShapeError("term " + std::to_string(i) + ": coefficients " + t.a.shape_str() + " and " +
                       t.b.shape_str() + " are not both " + std::to_string(dim_) + "x" +
                       std::to_string(dim_));
  }
}

std::vector<Matrix> ElementaryOperator::left() const {
  std::vector<Matrix> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_)
    out.push_back(t.a);
  return out;
}

std::vector<Matrix> ElementaryOperator::right() const {
  std::vector<Matrix> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_)
    out.push_back(t.b);
  return out;
}

ElementaryOperator make_multiplication(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "make_multiplication");
  return ElementaryOperator({{a, b}});
}

ElementaryOperator make_inner_derivation(const Matrix &a) {
  if (!a.is_square())
    throw ShapeError("make_inner_derivation: expected a square matrix, got " + a.shape_str());
  const Matrix id = Matrix::identity(a.rows());
  return ElementaryOperator({{a, id}, {-id, a}});
}

ElementaryOperator make_generalized_derivation(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "make_generalized_derivation");
  const Matrix id = Matrix::identity(a.rows());
  return ElementaryOperator({{a, id}, {-id, b}});
}

ElementaryOperator make_v_operator(const Matrix &a, const Matrix &b) {
  require_pair(a, b, "make_v_operator");
  return ElementaryOperator({{a, b}, {-b, a}});
}

ElementaryOperator make_identity_operator(std::size_t n) {
  const Matrix id = Matrix::identity(n);
  return ElementaryOperator({{id, id}});
}

Matrix apply(const ElementaryOperator &op, const Matrix &x) {
  if (!x.is_square() || x.rows() != op.dim())
    throw ShapeError("apply: operator acts on " + std::to_string(op.dim()) + "x" +
                     std::to_string(op.dim()) + " matrices, got " + x.shape_str());
  Matrix out(op.dim(), op.dim());
  for (const auto &t : op.terms())
    out += t.a * x * t.b;
  return out;
}

Matrix superoperator(const ElementaryOperator &op) {
  const std::size_t n2 = op.dim() * op.dim();
  Matrix s(n2, n2);
  for (const auto &t : op.terms())
    s += kron(t.b.transpose(), t.a);
  return s;
}

ElementaryOperator add(const ElementaryOperator &lhs, const ElementaryOperator &rhs) {
  require_same_dim(lhs, rhs, "add");
  std::vector<Term> terms = lhs.terms();
  terms.insert(terms.end(), rhs.terms().begin(), rhs.terms().end());
  return ElementaryOperator(std::move(terms));
}

ElementaryOperator compose(const ElementaryOperator &lhs, const ElementaryOperator &rhs) {
  require_same_dim(lhs, rhs, "compose");
  std::vector<Term> terms;
  terms.reserve(lhs.length() * rhs.length());
  for (const auto &outer : lhs.terms())
    for (const auto &inner : rhs.terms())
      terms.push_back({outer.a * inner.a, inner.b * outer.b});
  return ElementaryOperator(std::move(terms));
}

ElementaryOperator scale(const ElementaryOperator &op, const GaussianRational &c) {
  std::vector<Term> terms = op.terms();
  for (auto &t : terms)
    t.a *= c;
  return ElementaryOperator(std::move(terms));
}

ElementaryOperator power(const ElementaryOperator &op, unsigned k) {
  ElementaryOperator result = make_identity_operator(op.dim());
  for (unsigned i = 0; i < k; ++i)
    result = i == 0 ? op : compose(result, op);
  return result;
}

bool op_equal(const ElementaryOperator &lhs, const ElementaryOperator &rhs) {
  require_same_dim(lhs, rhs, "op_equal");
  return superoperator(lhs) == superoperator(rhs);
}

NilpotencyReport op_is_nilpotent(const ElementaryOperator &op) {
  return is_nilpotent(superoperator(op));
}

} // namespace elemop
