#include "elemop/matrix.hpp"
#include "elemop/error.hpp"

#include <utility>

namespace elemop {

namespace {

void require_same_shape(const Matrix &a, const Matrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

void require_square(const Matrix &a, const char *op) {
  if (!a.is_square())
    throw ShapeError(std::string(op) + ": expected a square matrix, got " + a.shape_str());
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0)
    throw ShapeError("matrix dimensions must be positive, got " + shape_str());
  entries_.resize(rows * cols);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0)
    throw ShapeError("matrix dimensions must be positive, got " + shape_str());
  if (entries_.size() != rows * cols)
    throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match shape " +
                     shape_str());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0)
    throw ShapeError("matrix literal must be nonempty");
  entries_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw ShapeError("ragged matrix literal");
    for (long v : row)
      entries_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::column(std::span<const GaussianRational> values) {
  return {values.size(), 1, {values.begin(), values.end()}};
}

Matrix Matrix::row(std::span<const GaussianRational> values) {
  return {1, values.size(), {values.begin(), values.end()}};
}

bool Matrix::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

std::string Matrix::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix &Matrix::operator+=(const Matrix &o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += o.entries_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  require_same_shape(*this, o, "sub");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= o.entries_[k];
  return *this;
}

Matrix &Matrix::operator*=(const GaussianRational &c) {
  for (auto &e : entries_)
    e *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto &e : m.entries_)
    e = -e;
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw ShapeError("mul: shape mismatch " + a.shape_str() + " * " + b.shape_str());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

bool commute(const Matrix &a, const Matrix &b) { return a * b == b * a; }

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto &aij = a(i, j);
      if (aij.is_zero())
        continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

Matrix vec(const Matrix &x) {
  Matrix v(x.rows() * x.cols(), 1);
  for (std::size_t j = 0; j < x.cols(); ++j)
    for (std::size_t i = 0; i < x.rows(); ++i)
      v(j * x.rows() + i, 0) = x(i, j);
  return v;
}

Matrix unvec(const Matrix &v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw ShapeError("unvec: expected a column of length " + std::to_string(rows * cols) + ", got " +
                     v.shape_str());
  Matrix x(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      x(i, j) = v(j * rows + i, 0);
  return x;
}

Matrix mat_pow(const Matrix &a, unsigned k) {
  require_square(a, "mat_pow");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (k > 0) {
    if (k & 1u)
      result = result * base;
    k >>= 1;
    if (k > 0)
      base = base * base;
  }
  return result;
}

GaussianRational trace(const Matrix &a) {
  require_square(a, "trace");
  GaussianRational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    t += a(i, i);
  return t;
}

std::vector<GaussianRational> char_poly(const Matrix &a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  std::vector<GaussianRational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) += c[n - k + 1];
    c[n - k] = -trace(a * m) / GaussianRational(static_cast<long>(k));
  }
  return c;
}

NilpotencyReport is_nilpotent(const Matrix &a) {
  require_square(a, "is_nilpotent");
  const std::size_t d = a.rows();

  NilpotencyReport report;
  Matrix prev = Matrix::identity(d);
  Matrix cur = a;
  for (unsigned k = 1; k <= d; ++k) {
    if (cur.is_zero()) {
      report.nilpotent = true;
      report.index = k;
      if (k > 1) {
        for (std::size_t i = 0; i < d && !report.witness; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (!prev(i, j).is_zero()) {
              report.witness = NilpotencyWitness{i, j, prev(i, j)};
              break;
            }
      }
      break;
    }
    if (k == d)
      break;
    prev = cur;
    cur = cur * a;
  }

  auto poly = char_poly(a);
  bool monomial = true;
  for (std::size_t i = 0; i < d; ++i)
    monomial = monomial && poly[i].is_zero();
  if (monomial != report.nilpotent)
    throw IntegrityError("is_nilpotent: power test and characteristic polynomial disagree on a " +
                         a.shape_str() + " matrix");
  return report;
}

Matrix rank_one(const Matrix &f, const Matrix &x) {
  if (f.rows() != 1 || x.cols() != 1 || f.cols() != x.rows())
    throw ShapeError("rank_one: expected 1xd functional and dx1 vector, got " + f.shape_str() +
                     " and " + x.shape_str());
  return x * f;
}

} // namespace elemop
