#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "dqdc/errors.hpp"

namespace dqdc {

// Dense real vector, value-semantic.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : data_(n, fill) {}
  Vector(std::initializer_list<double> xs);
  explicit Vector(std::vector<double> xs);

  std::size_t size() const { return data_.size(); }
  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }
  const std::vector<double>& data() const { return data_; }

  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  double max_abs() const;

 private:
  std::vector<double> data_;
};

// Dense real matrix, row-major, value-semantic.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

bool operator==(const Vector& a, const Vector& b);
bool operator==(const Matrix& a, const Matrix& b);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double k, const Vector& a);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double k, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);

Matrix transpose(const Matrix& a);

// Elementwise (Hadamard) product.
Matrix hadamard(const Matrix& a, const Matrix& b);
Vector hadamard(const Vector& a, const Vector& b);

// Elementwise power a_ij^q.  q = 0 gives the all-ones matrix; q = -1 the
// Hadamard inverse (requires nonzero entries); non-integer q requires
// positive entries.
Matrix hadamard_power(const Matrix& a, double q);
Vector hadamard_power(const Vector& a, double q);

// A named scalar function together with its derivative, for Hadamard
// matrix functions and their exact Jacobians.
struct ScalarFn {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
};

// Built-in registry: "sin", "cos", "exp", "log".
const ScalarFn& scalar_fn(const std::string& name);

Matrix hadamard_fn(const Matrix& a, const ScalarFn& fn);
Vector hadamard_fn(const Vector& a, const ScalarFn& fn);

// Postmultiplying SJT product A ◇ v: row i of A scaled by v_i, i.e. diag(v)·A.
Matrix sjt_row(const Matrix& a, const Vector& v);

// Premultiplying SJT product v^T ◇ A: column j of A scaled by v_j, i.e. A·diag(v).
Matrix sjt_col(const Vector& v, const Matrix& a);

// Kronecker (tensor) product.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& u, const Vector& v);

// E_N = [e_1⊗e_1 : ... : e_N⊗e_N], the N²×N selection matrix with
// E_N^T (A⊗B) E_M = A∘B.
Matrix selection_matrix(std::size_t n);

// Solves A x = b by LU factorization with row pivoting.  A pivot below
// 1e-14 times the largest |a_ij| raises SingularMatrixError.
Vector lu_solve(const Matrix& a, const Vector& b);

// Central-difference Jacobian of a vector-valued residual.  h <= 0 selects
// the default per-column step 1e-6·max(1, |u_j|).
Matrix fd_jacobian(const std::function<Vector(const Vector&)>& r, const Vector& u,
                   double h = 0.0);

}  // namespace dqdc
