#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qinfo {

using cplx = std::complex<double>;

inline constexpr double kAlgebraTol = 1e-12; // pure algebra comparisons
inline constexpr double kPhysicsTol = 1e-9;  // physics-level assertions

namespace detail {
inline bool is_finite(const cplx &z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}
} // namespace detail

//------------------------------------------------------------------------------
// Vector: dense complex column vector
//------------------------------------------------------------------------------

class Vector {
public:
  explicit Vector(std::size_t dim) : data_(dim) {
    if (dim == 0)
      throw std::invalid_argument("Vector: dimension must be positive");
  }

  Vector(std::initializer_list<cplx> entries) : data_(entries) {
    if (data_.empty())
      throw std::invalid_argument("Vector: dimension must be positive");
    check_finite();
  }

  static Vector from_entries(std::vector<cplx> entries) {
    Vector v(entries.size());
    v.data_ = std::move(entries);
    v.check_finite();
    return v;
  }

  // computational basis ket |index> of the given dimension
  static Vector basis(std::size_t dim, std::size_t index) {
    Vector v(dim);
    if (index >= dim)
      throw std::invalid_argument("Vector::basis: index out of range");
    v.data_[index] = 1.0;
    return v;
  }

  std::size_t dim() const { return data_.size(); }
  const cplx &operator[](std::size_t i) const { return data_[i]; }
  cplx &operator[](std::size_t i) { return data_[i]; }
  const std::vector<cplx> &entries() const { return data_; }

  double norm() const {
    double s = 0.0;
    for (const auto &z : data_)
      s += std::norm(z);
    return std::sqrt(s);
  }

  void check_finite() const {
    for (const auto &z : data_)
      if (!detail::is_finite(z))
        throw std::invalid_argument("Vector: non-finite entry");
  }

private:
  std::vector<cplx> data_;
};

//------------------------------------------------------------------------------
// Matrix: dense complex matrix, row-major, zero-based
//------------------------------------------------------------------------------

class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("Matrix: dimensions must be positive");
  }

  // rows given as nested initializer lists
  Matrix(std::initializer_list<std::initializer_list<cplx>> rows)
      : rows_(rows.size()), cols_(rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("Matrix: dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
    check_finite();
  }

  static Matrix from_entries(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries) {
    if (entries.size() != rows * cols)
      throw std::invalid_argument("Matrix: entry count does not match shape");
    Matrix m(rows, cols);
    m.data_ = std::move(entries);
    m.check_finite();
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const cplx &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  cplx &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const std::vector<cplx> &entries() const { return data_; }

  void check_finite() const {
    for (const auto &z : data_)
      if (!detail::is_finite(z))
        throw std::invalid_argument("Matrix: non-finite entry");
  }

private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

//------------------------------------------------------------------------------
// Core operations
//------------------------------------------------------------------------------

inline Matrix mat_mul(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: inner dimensions do not match (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Vector mat_vec(const Matrix &a, const Vector &v) {
  if (a.cols() != v.dim())
    throw std::invalid_argument("mat_vec: dimensions do not match");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

// conjugate transpose
inline Matrix adjoint(const Matrix &a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(j, i) = std::conj(a(i, j));
  return out;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline Vector kron(const Vector &a, const Vector &b) {
  Vector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

inline cplx trace(const Matrix &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("trace: matrix is not square");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    s += a(i, i);
  return s;
}

// conjugate-linear in the first argument: <u|v> = sum conj(u_i) v_i
inline cplx inner(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim())
    throw std::invalid_argument("inner: dimensions do not match");
  cplx s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i)
    s += std::conj(u[i]) * v[i];
  return s;
}

// |u><v|
inline Matrix outer(const Vector &u, const Vector &v) {
  Matrix out(u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

//------------------------------------------------------------------------------
// Arithmetic helpers
//------------------------------------------------------------------------------

inline Matrix operator*(const Matrix &a, const Matrix &b) { return mat_mul(a, b); }
inline Vector operator*(const Matrix &a, const Vector &v) { return mat_vec(a, v); }

inline Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Matrix addition: shapes do not match");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("Matrix subtraction: shapes do not match");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline Matrix operator*(const cplx &s, const Matrix &a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = s * a(i, j);
  return out;
}

inline Vector operator*(const cplx &s, const Vector &v) {
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    out[i] = s * v[i];
  return out;
}

inline Vector operator+(const Vector &a, const Vector &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("Vector addition: dimensions do not match");
  Vector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

//------------------------------------------------------------------------------
// Comparisons and predicates
//------------------------------------------------------------------------------

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shapes do not match");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool approx_equal(const Matrix &a, const Matrix &b,
                         double tol = kAlgebraTol) {
  return max_abs_diff(a, b) <= tol;
}

inline bool is_hermitian(const Matrix &a, double tol = kPhysicsTol) {
  if (a.rows() != a.cols())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
        return false;
  return true;
}

inline bool is_unitary(const Matrix &a, double tol = kPhysicsTol) {
  if (a.rows() != a.cols())
    return false;
  return approx_equal(mat_mul(adjoint(a), a), Matrix::identity(a.rows()), tol);
}

//------------------------------------------------------------------------------
// Pauli matrices
//------------------------------------------------------------------------------

inline const Matrix &pauli_x() {
  static const Matrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

inline const Matrix &pauli_y() {
  static const Matrix m{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
  return m;
}

inline const Matrix &pauli_z() {
  static const Matrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

// spin component along angle theta from the x axis, in the x-y plane
inline Matrix pauli_xy(double theta) {
  Matrix m(2, 2);
  m(0, 1) = std::exp(cplx(0.0, -theta));
  m(1, 0) = std::exp(cplx(0.0, theta));
  return m;
}

} // namespace qinfo
