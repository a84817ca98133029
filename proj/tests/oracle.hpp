#pragma once

// Test-only reference computations. These deliberately avoid the library's
// matrix product, kron and vec so they can check those paths independently.

#include "elemop/matrix.hpp"
#include "elemop/operator.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using elemop::GaussianRational;
using elemop::Matrix;

// (A X B)_{ij} = sum_{k,l} A_ik X_kl B_lj, summed directly.
inline Matrix sandwich(const Matrix &a, const Matrix &x, const Matrix &b) {
  const std::size_t n = x.rows();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GaussianRational acc;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          acc += a(i, k) * x(k, l) * b(l, j);
      out(i, j) = acc;
    }
  return out;
}

inline Matrix apply(const elemop::ElementaryOperator &op, const Matrix &x) {
  Matrix out(op.dim(), op.dim());
  for (const auto &t : op.terms())
    out += sandwich(t.a, x, t.b);
  return out;
}

inline Matrix product(const Matrix &a, const Matrix &b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      GaussianRational acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

// Column (i + j n) of the superoperator is the image of E_ij, column-stacked.
inline Matrix superoperator_by_columns(const elemop::ElementaryOperator &op) {
  const std::size_t n = op.dim();
  Matrix s(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix image = oracle::apply(op, Matrix::unit(n, n, i, j));
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
          s(p + q * n, i + j * n) = image(p, q);
    }
  return s;
}

// Determinant by Gaussian elimination with exact pivots.
inline GaussianRational det(Matrix m) {
  const std::size_t n = m.rows();
  GaussianRational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero())
        continue;
      const GaussianRational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k)
        m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

// det(t I - a)
inline GaussianRational char_poly_at(const Matrix &a, const GaussianRational &t) {
  Matrix m = -a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    m(i, i) += t;
  return det(m);
}

inline GaussianRational horner(const std::vector<GaussianRational> &coeffs, const GaussianRational &t) {
  GaussianRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

// Smallest k <= limit with a^k = 0 by repeated direct products, 0 if none.
inline unsigned brute_nilpotency_index(const Matrix &a, unsigned limit) {
  Matrix p = a;
  for (unsigned k = 1; k <= limit; ++k) {
    if (p.is_zero())
      return k;
    p = product(p, a);
  }
  return 0;
}

} // namespace oracle
