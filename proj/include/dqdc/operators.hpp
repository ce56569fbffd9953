#pragma once

#include "dqdc/grid.hpp"
#include "dqdc/matrix.hpp"

namespace dqdc {

// Weighting-coefficient matrix mapping nodal values to nodal m-th derivative
// values along one coordinate line.
struct DerivOperator {
  int order = 1;
  Grid1D grid;
  Matrix w;  // N x N
};

// First-order weights from the Lagrange interpolation basis:
// off-diagonal w_ij = P'(x_i) / ((x_i - x_j) P'(x_j)) with
// P'(x_i) = prod_{k!=i}(x_i - x_k); diagonal = negative row sum.
DerivOperator dq_weights_first(const Grid1D& grid);

// Higher orders by matrix multiplication: B = A*A, C = A*B, D = B*B.
DerivOperator dq_weights_higher(const DerivOperator& first, int m);

// Convenience: order 1..4 directly from the grid.
DerivOperator dq_weights(const Grid1D& grid, int m);

// Uniform-grid finite-difference backend: 3-point central rows at interior
// nodes, one-sided second-order stencils at the two boundary rows.  m = 1 or 2.
DerivOperator fd_operator(const Grid1D& grid, int m);

enum class DcKind { Ex, Ey, Fx, Fy, Fxy };

// Whole-domain derivative operator on a tensor grid (x-major ordering).
struct DerivOperator2D {
  DcKind which = DcKind::Ex;
  Grid2D grid;
  Matrix w;  // N x N, N = Nx*Ny
};

struct DcOperators {
  DerivOperator2D ex, ey, fx, fy, fxy;
};

// E_x = A_x ⊗ I_Ny, E_y = I_Nx ⊗ A_y; F_x = E_x², F_y = E_y², F_xy = E_x·E_y.
DcOperators dc_operators(const Grid2D& grid);

}  // namespace dqdc
