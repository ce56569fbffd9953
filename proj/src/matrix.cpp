#include "dqdc/matrix.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace dqdc {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw DomainError(std::string(what) + ": non-finite entry");
    }
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

void require_same_size(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << op << ": length mismatch " << a.size() << " vs " << b.size();
    throw DimensionError(msg.str());
  }
}

double checked_pow(double x, double q) {
  const bool integral = q == std::floor(q);
  if (q < 0.0 && x == 0.0) {
    throw DomainError("hadamard_power: zero entry with negative exponent");
  }
  if (!integral && x < 0.0) {
    throw DomainError("hadamard_power: negative entry with non-integer exponent");
  }
  return std::pow(x, q);
}

}  // namespace

Vector::Vector(std::initializer_list<double> xs) : data_(xs) {
  require_finite(data_, "Vector");
}

Vector::Vector(std::vector<double> xs) : data_(std::move(xs)) {
  require_finite(data_, "Vector");
}

double Vector::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("Matrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, 1.0);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool operator==(const Vector& a, const Vector& b) { return a.data() == b.data(); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b, "vector +");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b, "vector -");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double k, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix +");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix -");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

Matrix operator*(double k, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k * a(i, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix *: inner dimensions disagree");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix-vector *: dimensions disagree");
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * b(i, j);
  return out;
}

Vector hadamard(const Vector& a, const Vector& b) {
  require_same_size(a, b, "hadamard");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Matrix hadamard_power(const Matrix& a, double q) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = checked_pow(a(i, j), q);
  return out;
}

Vector hadamard_power(const Vector& a, double q) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_pow(a[i], q);
  return out;
}

const ScalarFn& scalar_fn(const std::string& name) {
  static const std::map<std::string, ScalarFn> registry = {
      {"sin", {"sin", [](double x) { return std::sin(x); },
               [](double x) { return std::cos(x); }}},
      {"cos", {"cos", [](double x) { return std::cos(x); },
               [](double x) { return -std::sin(x); }}},
      {"exp", {"exp", [](double x) { return std::exp(x); },
               [](double x) { return std::exp(x); }}},
      {"log", {"log", [](double x) { return std::log(x); },
               [](double x) { return 1.0 / x; }}},
  };
  auto it = registry.find(name);
  if (it == registry.end()) {
    throw std::invalid_argument("scalar_fn: unknown function '" + name + "'");
  }
  return it->second;
}

namespace {
double apply_checked(const ScalarFn& fn, double x) {
  const double y = fn.f(x);
  if (!std::isfinite(y)) {
    throw DomainError("hadamard_fn: " + fn.name + " undefined at entry");
  }
  return y;
}
}  // namespace

Matrix hadamard_fn(const Matrix& a, const ScalarFn& fn) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = apply_checked(fn, a(i, j));
  return out;
}

Vector hadamard_fn(const Vector& a, const ScalarFn& fn) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = apply_checked(fn, a[i]);
  return out;
}

Matrix sjt_row(const Matrix& a, const Vector& v) {
  if (v.size() != a.rows()) {
    throw DimensionError("sjt_row: vector length must equal row count");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * v[i];
  return out;
}

Matrix sjt_col(const Vector& v, const Matrix& a) {
  if (v.size() != a.cols()) {
    throw DimensionError("sjt_col: vector length must equal column count");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * v[j];
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

Vector kron(const Vector& u, const Vector& v) {
  Vector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
  return out;
}

Matrix selection_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("selection_matrix: n must be >= 1");
  Matrix e(n * n, n);
  for (std::size_t k = 0; k < n; ++k) e(k * n + k, k) = 1.0;
  return e;
}

Vector lu_solve(const Matrix& a, const Vector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("lu_solve: matrix must be square");
  if (b.size() != n) throw DimensionError("lu_solve: right-hand side length mismatch");

  const double scale = a.max_abs();
  if (scale == 0.0) throw SingularMatrixError("lu_solve: zero matrix");
  const double pivot_tol = 1e-14 * scale;

  Matrix lu = a;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (std::abs(lu(p, k)) < pivot_tol) {
      throw SingularMatrixError("lu_solve: numerically singular matrix");
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      std::swap(perm[k], perm[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu(i, k) / lu(k, k);
      lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
    }
  }

  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * x[j];
    x[ii] = s / lu(ii, ii);
  }
  return x;
}

Matrix fd_jacobian(const std::function<Vector(const Vector&)>& r, const Vector& u,
                   double h) {
  const std::size_t n = u.size();
  const Vector r0 = r(u);
  Matrix jac(r0.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const double step = h > 0.0 ? h : 1e-6 * std::max(1.0, std::abs(u[j]));
    Vector up = u, um = u;
    up[j] += step;
    um[j] -= step;
    const Vector rp = r(up);
    const Vector rm = r(um);
    if (rp.size() != r0.size() || rm.size() != r0.size()) {
      throw DimensionError("fd_jacobian: residual length changed under perturbation");
    }
    for (std::size_t i = 0; i < r0.size(); ++i) {
      jac(i, j) = (rp[i] - rm[i]) / (2.0 * step);
    }
  }
  return jac;
}

}  // namespace dqdc
