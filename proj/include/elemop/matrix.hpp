#pragma once

#include "elemop/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace elemop {

/// Dense row-major matrix over Q(i). Shape is at least 1x1.
class Matrix {
public:
  /// 1x1 zero.
  Matrix() : Matrix(1, 1) {}
  /// Zero matrix. Throws ShapeError when rows or cols is 0.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  /// Integer literal rows, e.g. {{0, 1}, {0, 0}}.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// E_ij: 1 at (i, j), zero elsewhere.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix column(std::span<const GaussianRational> values);
  static Matrix row(std::span<const GaussianRational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const GaussianRational &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  GaussianRational &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::span<const GaussianRational> entries() const { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  std::string shape_str() const;

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  Matrix &operator*=(const GaussianRational &c);

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const GaussianRational &c, Matrix a) { return a *= c; }
  friend Matrix operator*(Matrix a, const GaussianRational &c) { return a *= c; }
  Matrix operator-() const;

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GaussianRational> entries_;
};

/// Commutator a*b - b*a.
Matrix commutator(const Matrix &a, const Matrix &b);
bool commute(const Matrix &a, const Matrix &b);

/// Block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix &a, const Matrix &b);

/// Column stacking: columns of x top to bottom into a (rows*cols) x 1 vector.
Matrix vec(const Matrix &x);
/// Inverse of vec. Throws ShapeError unless v is a column of length rows*cols.
Matrix unvec(const Matrix &v, std::size_t rows, std::size_t cols);

Matrix mat_pow(const Matrix &a, unsigned k);
GaussianRational trace(const Matrix &a);

/// Coefficients of det(xI - a), lowest degree first; back() is 1.
/// Faddeev-LeVerrier recursion, exact over Q(i).
std::vector<GaussianRational> char_poly(const Matrix &a);

struct NilpotencyWitness {
  std::size_t row;
  std::size_t col;
  GaussianRational value; ///< nonzero entry of a^(index-1)
};

struct NilpotencyReport {
  bool nilpotent = false;
  std::optional<unsigned> index;             ///< smallest k with a^k = 0
  std::optional<NilpotencyWitness> witness;  ///< absent when index is 1 or not nilpotent
};

/// Decides nilpotency by powering up to the dimension, then confirms the
/// verdict against char_poly(a) == x^d. Disagreement throws IntegrityError.
NilpotencyReport is_nilpotent(const Matrix &a);

/// Outer product x*f, the matrix of z -> f(z) x. f is 1 x d, x is d x 1.
Matrix rank_one(const Matrix &f, const Matrix &x);

} // namespace elemop
