#include "dqdc/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace dqdc {

DerivOperator dq_weights_first(const Grid1D& grid) {
  const std::size_t n = grid.size();
  const auto& x = grid.nodes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[i] == x[j]) throw std::invalid_argument("dq_weights_first: duplicate nodes");

  std::vector<double> pi_prime(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) pi_prime[i] *= x[i] - x[k];

  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      w(i, j) = pi_prime[i] / ((x[i] - x[j]) * pi_prime[j]);
      diag -= w(i, j);
    }
    w(i, i) = diag;
  }
  return DerivOperator{1, grid, std::move(w)};
}

DerivOperator dq_weights_higher(const DerivOperator& first, int m) {
  if (first.order != 1) {
    throw std::invalid_argument("dq_weights_higher: base operator must have order 1");
  }
  if (m < 2 || m > 4) {
    throw std::invalid_argument("dq_weights_higher: order must be in 2..4");
  }
  const Matrix& a = first.w;
  Matrix b = a * a;
  if (m == 2) return DerivOperator{2, first.grid, std::move(b)};
  if (m == 3) return DerivOperator{3, first.grid, a * b};
  return DerivOperator{4, first.grid, b * b};
}

DerivOperator dq_weights(const Grid1D& grid, int m) {
  DerivOperator a = dq_weights_first(grid);
  if (m == 1) return a;
  return dq_weights_higher(a, m);
}

DerivOperator fd_operator(const Grid1D& grid, int m) {
  if (!grid.is_uniform()) {
    throw std::invalid_argument("fd_operator: grid must be uniform");
  }
  if (m != 1 && m != 2) {
    throw std::invalid_argument("fd_operator: order must be 1 or 2");
  }
  const std::size_t n = grid.size();
  const std::size_t min_nodes = m == 1 ? 3 : 4;
  if (n < min_nodes) {
    throw std::invalid_argument("fd_operator: too few nodes for the boundary stencil");
  }
  const double h = grid.spacing();
  Matrix w(n, n);
  if (m == 1) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      w(i, i - 1) = -1.0 / (2.0 * h);
      w(i, i + 1) = 1.0 / (2.0 * h);
    }
    w(0, 0) = -3.0 / (2.0 * h);
    w(0, 1) = 4.0 / (2.0 * h);
    w(0, 2) = -1.0 / (2.0 * h);
    w(n - 1, n - 1) = 3.0 / (2.0 * h);
    w(n - 1, n - 2) = -4.0 / (2.0 * h);
    w(n - 1, n - 3) = 1.0 / (2.0 * h);
  } else {
    const double h2 = h * h;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      w(i, i - 1) = 1.0 / h2;
      w(i, i) = -2.0 / h2;
      w(i, i + 1) = 1.0 / h2;
    }
    w(0, 0) = 2.0 / h2;
    w(0, 1) = -5.0 / h2;
    w(0, 2) = 4.0 / h2;
    w(0, 3) = -1.0 / h2;
    w(n - 1, n - 1) = 2.0 / h2;
    w(n - 1, n - 2) = -5.0 / h2;
    w(n - 1, n - 3) = 4.0 / h2;
    w(n - 1, n - 4) = -1.0 / h2;
  }
  return DerivOperator{m, grid, std::move(w)};
}

DcOperators dc_operators(const Grid2D& grid) {
  const Matrix ax = dq_weights_first(grid.gx).w;
  const Matrix ay = dq_weights_first(grid.gy).w;
  Matrix ex = kron(ax, Matrix::identity(grid.ny()));
  Matrix ey = kron(Matrix::identity(grid.nx()), ay);
  Matrix fx = ex * ex;
  Matrix fy = ey * ey;
  Matrix fxy = ex * ey;
  return DcOperators{
      {DcKind::Ex, grid, std::move(ex)},  {DcKind::Ey, grid, std::move(ey)},
      {DcKind::Fx, grid, std::move(fx)},  {DcKind::Fy, grid, std::move(fy)},
      {DcKind::Fxy, grid, std::move(fxy)},
  };
}

}  // namespace dqdc
