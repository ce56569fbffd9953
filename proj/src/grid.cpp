#include "dqdc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqdc {

bool Grid1D::is_uniform(double rel_tol) const {
  if (nodes.size() < 2) return true;
  const double h = spacing();
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (std::abs((nodes[i] - nodes[i - 1]) - h) > rel_tol * std::abs(b - a)) {
      return false;
    }
  }
  return true;
}

double Grid1D::spacing() const { return nodes[1] - nodes[0]; }

namespace {
void check_args(std::size_t n, double a, double b, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 nodes");
  if (!(a < b)) throw std::invalid_argument(std::string(who) + ": need a < b");
}
}  // namespace

Grid1D grid_uniform(std::size_t n, double a, double b) {
  check_args(n, a, b, "grid_uniform");
  Grid1D g{a, b, {}};
  g.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  g.nodes.front() = a;
  g.nodes.back() = b;
  return g;
}

Grid1D grid_chebyshev_roots(std::size_t n, double a, double b) {
  check_args(n, a, b, "grid_chebyshev_roots");
  Grid1D g{a, b, {}};
  g.nodes.push_back(a);
  const std::size_t deg = n - 2;
  for (std::size_t k = 1; k <= deg; ++k) {
    const double t =
        std::cos((2.0 * static_cast<double>(k) - 1.0) * std::numbers::pi /
                 (2.0 * static_cast<double>(deg)));
    g.nodes.push_back(a + (b - a) * (1.0 - t) / 2.0);
  }
  g.nodes.push_back(b);
  std::sort(g.nodes.begin(), g.nodes.end());
  return g;
}

Grid1D grid_gauss_lobatto(std::size_t n, double a, double b) {
  check_args(n, a, b, "grid_gauss_lobatto");
  Grid1D g{a, b, {}};
  g.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::cos(std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(n - 1));
    g.nodes[i] = a + (b - a) * (1.0 - t) / 2.0;
  }
  g.nodes.front() = a;
  g.nodes.back() = b;
  return g;
}

bool Grid2D::is_boundary(std::size_t j) const {
  const std::size_t ix = ix_of(j);
  const std::size_t iy = iy_of(j);
  return ix == 0 || ix == nx() - 1 || iy == 0 || iy == ny() - 1;
}

}  // namespace dqdc
