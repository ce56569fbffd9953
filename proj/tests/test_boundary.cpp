#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "dqdc/boundary.hpp"
#include "test_util.hpp"

using namespace dqdc;
using testutil::max_abs_diff;
using testutil::random_vector;

TEST_CASE("three-node second-derivative reduction, by hand") {
  // B = [[4,-8,4],...] on [0,1]; with y(0)=1, y(1)=2 the interior row becomes
  // -8*y1 + (4*1 + 4*2)
  const Grid1D g = grid_uniform(3, 0.0, 1.0);
  const ReducedOperator r = reduce_dirichlet_1d(dq_weights(g, 2), DirichletBC1D{1.0, 2.0});
  REQUIRE(r.B.rows() == 1);
  REQUIRE(r.interior_index == std::vector<std::size_t>{1});
  CHECK(r.B(0, 0) == doctest::Approx(-8.0));
  CHECK(r.b[0] == doctest::Approx(12.0));

  // y'' = 0 with those boundary values: -8 y1 + 12 = 0 -> y1 = 1.5
  const Vector y1 = lu_solve(r.B, -1.0 * r.b);
  CHECK(y1[0] == doctest::Approx(1.5));

  // homogeneous data leaves no shift
  const ReducedOperator r0 = reduce_dirichlet_1d(dq_weights(g, 2), DirichletBC1D{0.0, 0.0});
  CHECK(r0.b.max_abs() == 0.0);
}

TEST_CASE("two-node grid has no interior nodes") {
  CHECK_THROWS_AS(reduce_dirichlet_1d(dq_weights(grid_uniform(2, 0.0, 1.0), 1), {}),
                  std::invalid_argument);
}

TEST_CASE("reduced operator reproduces the full operator on lifted vectors") {
  for (std::size_t n : {5, 8}) {
    for (const Grid1D& g :
         {grid_uniform(n, 0.0, 1.0), grid_chebyshev_roots(n, -1.0, 2.0)}) {
      const DirichletBC1D bc{testutil::uniform(-2.0, 2.0), testutil::uniform(-2.0, 2.0)};
      for (int m = 1; m <= 4; ++m) {
        const DerivOperator op = dq_weights(g, m);
        const ReducedOperator r = reduce_dirichlet_1d(op, bc);
        const Vector u = random_vector(n - 2);
        const Vector full = lift(g, u, bc);
        CHECK(full[0] == bc.left);
        CHECK(full[n - 1] == bc.right);
        const Vector whole = op.w * full;
        Vector interior_rows(n - 2);
        for (std::size_t i = 0; i < n - 2; ++i) interior_rows[i] = whole[r.interior_index[i]];
        CHECK(max_abs_diff(apply(r, u), interior_rows) <
              1e-11 * std::max(1.0, op.w.max_abs()));
      }
    }
  }
}

TEST_CASE("boundary data for a power of the unknown") {
  const DirichletBC1D bc{2.0, -3.0};
  const DirichletBC1D sq = transform_bc_power(bc, 2);
  CHECK(sq.left == doctest::Approx(4.0));
  CHECK(sq.right == doctest::Approx(9.0));
  const DirichletBC1D cu = transform_bc_power(bc, 3);
  CHECK(cu.left == doctest::Approx(8.0));
  CHECK(cu.right == doctest::Approx(-27.0));
}

TEST_CASE("solving a linear bvp through the reduction") {
  // y'' = 0, y(0)=2, y(1)=5 on 7 chebyshev-roots nodes: exact line 2 + 3x
  const Grid1D g = grid_chebyshev_roots(7, 0.0, 1.0);
  const DirichletBC1D bc{2.0, 5.0};
  const ReducedOperator r = reduce_dirichlet_1d(dq_weights(g, 2), bc);
  const Vector u = lu_solve(r.B, -1.0 * r.b);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = g.nodes[r.interior_index[i]];
    CHECK(u[i] == doctest::Approx(2.0 + 3.0 * x).epsilon(1e-10));
  }
}

TEST_CASE("tensor-grid reduction against the lifted full operator") {
  Grid2D g{grid_chebyshev_roots(5, 0.0, 1.0), grid_chebyshev_roots(6, 0.0, 1.0)};
  std::map<std::size_t, double> bv;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.is_boundary(j)) bv[j] = testutil::uniform(-1.0, 1.0);
  }
  const DcOperators ops = dc_operators(g);
  for (const DerivOperator2D* op : {&ops.ex, &ops.fx, &ops.fy, &ops.fxy}) {
    const ReducedOperator r = reduce_dirichlet_2d(*op, bv);
    REQUIRE(r.B.rows() == (g.nx() - 2) * (g.ny() - 2));
    const Vector u = random_vector(r.B.rows());
    const Vector full = lift(g, u, bv);
    const Vector whole = op->w * full;
    Vector interior_rows(r.B.rows());
    for (std::size_t i = 0; i < interior_rows.size(); ++i)
      interior_rows[i] = whole[r.interior_index[i]];
    CHECK(max_abs_diff(apply(r, u), interior_rows) <
          1e-11 * std::max(1.0, op->w.max_abs()));
  }

  // interior ordering is x-major over interior indices
  const ReducedOperator r = reduce_dirichlet_2d(ops.ex, bv);
  CHECK(r.interior_index.front() == g.index(1, 1));
  CHECK(r.interior_index.back() == g.index(g.nx() - 2, g.ny() - 2));
}

TEST_CASE("tensor-grid reduction requires the whole boundary ring") {
  Grid2D g{grid_uniform(4, 0.0, 1.0), grid_uniform(4, 0.0, 1.0)};
  const DcOperators ops = dc_operators(g);
  std::map<std::size_t, double> bv;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.is_boundary(j)) bv[j] = 0.0;
  bv.erase(bv.begin()->first);
  CHECK_THROWS_AS(reduce_dirichlet_2d(ops.fx, bv), std::invalid_argument);
}

TEST_CASE("homogeneous tensor-grid data leaves no shift") {
  Grid2D g{grid_uniform(4, 0.0, 1.0), grid_uniform(5, 0.0, 1.0)};
  const DcOperators ops = dc_operators(g);
  std::map<std::size_t, double> bv;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.is_boundary(j)) bv[j] = 0.0;
  CHECK(reduce_dirichlet_2d(ops.fxy, bv).b.max_abs() == 0.0);
}
