#pragma once

#include <map>

#include "dqdc/operators.hpp"

namespace dqdc {

struct DirichletBC1D {
  double left = 0.0;
  double right = 0.0;
};

// Boundary data for the auxiliary variable U^p: (left^p, right^p).
DirichletBC1D transform_bc_power(DirichletBC1D bc, int p);

// Boundary-condition-absorbed operator over interior nodes: applying the full
// operator to a lifted interior vector, restricted to interior rows, equals
// B·u + b.
struct ReducedOperator {
  Matrix B;                                 // n x n interior block
  Vector b;                                 // length-n shift
  std::vector<std::size_t> interior_index;  // interior position -> full-grid node
};

Vector apply(const ReducedOperator& op, const Vector& u);

ReducedOperator reduce_dirichlet_1d(const DerivOperator& op, DirichletBC1D bc);

// Every node on the boundary ring of the tensor grid must carry a value.
ReducedOperator reduce_dirichlet_2d(const DerivOperator2D& op,
                                    const std::map<std::size_t, double>& boundary_values);

// Full-grid vector from interior values plus the Dirichlet data.
Vector lift(const Grid1D& grid, const Vector& interior, DirichletBC1D bc);
Vector lift(const Grid2D& grid, const Vector& interior,
            const std::map<std::size_t, double>& boundary_values);

}  // namespace dqdc
