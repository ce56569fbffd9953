#include "dqdc/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace dqdc {

DirichletBC1D transform_bc_power(DirichletBC1D bc, int p) {
  return {std::pow(bc.left, p), std::pow(bc.right, p)};
}

Vector apply(const ReducedOperator& op, const Vector& u) { return op.B * u + op.b; }

ReducedOperator reduce_dirichlet_1d(const DerivOperator& op, DirichletBC1D bc) {
  const std::size_t n_full = op.grid.size();
  if (n_full < 3) {
    throw std::invalid_argument("reduce_dirichlet_1d: grid has no interior nodes");
  }
  const std::size_t n = n_full - 2;
  ReducedOperator out;
  out.B = Matrix(n, n);
  out.b = Vector(n);
  out.interior_index.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.interior_index[i] = i + 1;
    for (std::size_t j = 0; j < n; ++j) out.B(i, j) = op.w(i + 1, j + 1);
    out.b[i] = op.w(i + 1, 0) * bc.left + op.w(i + 1, n_full - 1) * bc.right;
  }
  return out;
}

ReducedOperator reduce_dirichlet_2d(const DerivOperator2D& op,
                                    const std::map<std::size_t, double>& boundary_values) {
  const Grid2D& grid = op.grid;
  const std::size_t nx = grid.nx();
  const std::size_t ny = grid.ny();
  if (nx < 3 || ny < 3) {
    throw std::invalid_argument("reduce_dirichlet_2d: grid has no interior nodes");
  }
  std::vector<std::size_t> interior;
  for (std::size_t ix = 1; ix + 1 < nx; ++ix)
    for (std::size_t iy = 1; iy + 1 < ny; ++iy) interior.push_back(grid.index(ix, iy));

  std::vector<std::size_t> boundary;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (!grid.is_boundary(j)) continue;
    if (!boundary_values.count(j)) {
      throw std::invalid_argument("reduce_dirichlet_2d: missing boundary value at node " +
                                  std::to_string(j));
    }
    boundary.push_back(j);
  }

  const std::size_t n = interior.size();
  ReducedOperator out;
  out.B = Matrix(n, n);
  out.b = Vector(n);
  out.interior_index = interior;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.B(i, j) = op.w(interior[i], interior[j]);
    double s = 0.0;
    for (std::size_t bj : boundary) s += op.w(interior[i], bj) * boundary_values.at(bj);
    out.b[i] = s;
  }
  return out;
}

Vector lift(const Grid1D& grid, const Vector& interior, DirichletBC1D bc) {
  if (interior.size() + 2 != grid.size()) {
    throw DimensionError("lift: interior length does not match grid");
  }
  Vector full(grid.size());
  full[0] = bc.left;
  for (std::size_t i = 0; i < interior.size(); ++i) full[i + 1] = interior[i];
  full[grid.size() - 1] = bc.right;
  return full;
}

Vector lift(const Grid2D& grid, const Vector& interior,
            const std::map<std::size_t, double>& boundary_values) {
  const std::size_t n_int = (grid.nx() - 2) * (grid.ny() - 2);
  if (interior.size() != n_int) {
    throw DimensionError("lift: interior length does not match grid");
  }
  Vector full(grid.size());
  std::size_t pos = 0;
  for (std::size_t ix = 1; ix + 1 < grid.nx(); ++ix)
    for (std::size_t iy = 1; iy + 1 < grid.ny(); ++iy)
      full[grid.index(ix, iy)] = interior[pos++];
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid.is_boundary(j)) full[j] = boundary_values.at(j);
  }
  return full;
}

}  // namespace dqdc
