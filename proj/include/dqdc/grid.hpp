#pragma once

#include <cstddef>
#include <vector>

namespace dqdc {

// Ordered collocation nodes on [a, b], endpoints included.
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> nodes;

  std::size_t size() const { return nodes.size(); }
  bool is_uniform(double rel_tol = 1e-12) const;
  double spacing() const;  // nodes[1] - nodes[0]; meaningful for uniform grids
};

Grid1D grid_uniform(std::size_t n, double a, double b);

// Endpoints plus the n-2 roots of the degree-(n-2) Chebyshev polynomial of
// the first kind mapped to (a, b), sorted ascending.
Grid1D grid_chebyshev_roots(std::size_t n, double a, double b);

// Chebyshev-Gauss-Lobatto points mapped to [a, b]; alternative grid reading.
Grid1D grid_gauss_lobatto(std::size_t n, double a, double b);

// Tensor grid with x-major linear ordering: node j = ix*Ny + iy (0-based).
struct Grid2D {
  Grid1D gx;
  Grid1D gy;

  std::size_t nx() const { return gx.size(); }
  std::size_t ny() const { return gy.size(); }
  std::size_t size() const { return nx() * ny(); }

  std::size_t index(std::size_t ix, std::size_t iy) const { return ix * ny() + iy; }
  std::size_t ix_of(std::size_t j) const { return j / ny(); }
  std::size_t iy_of(std::size_t j) const { return j % ny(); }
  double x(std::size_t j) const { return gx.nodes[ix_of(j)]; }
  double y(std::size_t j) const { return gy.nodes[iy_of(j)]; }

  // The full boundary ring; corner nodes are boundary nodes.
  bool is_boundary(std::size_t j) const;
};

}  // namespace dqdc
