#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "dqdc/matrix.hpp"
#include "test_util.hpp"

using namespace dqdc;
using testutil::max_abs_diff;
using testutil::random_matrix;
using testutil::random_vector;

TEST_CASE("constructors reject non-finite entries") {
  CHECK_THROWS_AS(Vector({1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(Matrix({{1.0, 2.0}, {std::numeric_limits<double>::infinity(), 0.0}}),
                  DomainError);
  CHECK_THROWS_AS(Matrix({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("hadamard product, elementwise examples") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{5, 6}, {7, 8}};
  CHECK(hadamard(a, b) == Matrix{{5, 12}, {21, 32}});
  CHECK(hadamard(Vector{1, -2, 3}, Vector{4, 5, -6}) == Vector{4, -10, -18});
  CHECK_THROWS_AS(hadamard(a, Matrix{{1, 2, 3}}), DimensionError);
  CHECK_THROWS_AS(hadamard(Vector{1}, Vector{1, 2}), DimensionError);
}

TEST_CASE("hadamard power: exponents, identities, domain errors") {
  const Matrix a{{1, 4}, {9, 16}};
  CHECK(hadamard_power(a, 0.5) == Matrix{{1, 2}, {3, 4}});
  CHECK(hadamard_power(a, 0.0) == Matrix::ones(2, 2));
  CHECK(hadamard_power(Vector{2, 4}, -1.0) == Vector{0.5, 0.25});
  // negative base with integer exponent is fine
  CHECK(hadamard_power(Vector{-2, 3}, 2.0) == Vector{4, 9});
  CHECK(hadamard_power(Vector{-2, 3}, 3.0) == Vector{-8, 27});
  // zero entry with negative exponent
  CHECK_THROWS_AS(hadamard_power(Vector{1, 0}, -1.0), DomainError);
  // negative entry with fractional exponent
  CHECK_THROWS_AS(hadamard_power(Vector{-1, 4}, 0.5), DomainError);

  const Matrix r = random_matrix(3, 4, 0.1, 2.0);
  CHECK(max_abs_diff(hadamard_power(hadamard_power(r, 3.0), 1.0 / 3.0), r) < 1e-12);
  CHECK(max_abs_diff(hadamard(r, r), hadamard_power(r, 2.0)) < 1e-15);
}

TEST_CASE("hadamard matrix functions use the registered scalar pair") {
  const ScalarFn& s = scalar_fn("sin");
  const ScalarFn& e = scalar_fn("exp");
  CHECK(hadamard_fn(Matrix(2, 2, 0.0), s) == Matrix(2, 2, 0.0));
  CHECK(hadamard_fn(Matrix(2, 2, 0.0), e) == Matrix::ones(2, 2));
  const Vector v{0.3, -1.2, 2.0};
  const Vector sv = hadamard_fn(v, s);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(sv[i] == doctest::Approx(std::sin(v[i])));
  CHECK(s.df(0.3) == doctest::Approx(std::cos(0.3)));
  CHECK_THROWS_AS(hadamard_fn(Vector{-1.0}, scalar_fn("log")), DomainError);
  CHECK_THROWS_AS(scalar_fn("tanh"), std::invalid_argument);
}

TEST_CASE("row- and column-scaling products") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(sjt_row(a, Vector{10, 100}) == Matrix{{10, 20}, {300, 400}});
  CHECK(sjt_col(Vector{10, 100}, a) == Matrix{{10, 200}, {30, 400}});
  CHECK_THROWS_AS(sjt_row(a, Vector{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(sjt_col(Vector{1}, a), DimensionError);

  // row scaling is the Hadamard product with the column-broadcast vector
  const Matrix r = random_matrix(4, 3);
  const Vector v = random_vector(4);
  Matrix bcast(4, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) bcast(i, j) = v[i];
  CHECK(max_abs_diff(sjt_row(r, v), hadamard(bcast, r)) == 0.0);
}

TEST_CASE("scaling-product algebra laws on random instances") {
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_matrix(4, 5);
    const Matrix b = random_matrix(4, 5);
    const Vector c = random_vector(4);
    const Vector d = random_vector(4);
    const double k = testutil::uniform(-3.0, 3.0);
    // scalar association
    CHECK(max_abs_diff(k * sjt_row(a, c), sjt_row(k * a, c)) < 1e-13);
    CHECK(max_abs_diff(k * sjt_row(a, c), sjt_row(a, k * c)) < 1e-13);
    // distribution over matrix addition
    CHECK(max_abs_diff(sjt_row(a + b, c), sjt_row(a, c) + sjt_row(b, c)) < 1e-13);
    // repeated scaling merges into the Hadamard product of the scalings
    CHECK(max_abs_diff(sjt_row(sjt_row(a, c), d), sjt_row(a, hadamard(c, d))) < 1e-13);
    // scaling commutes with an elementwise factor
    CHECK(max_abs_diff(sjt_row(hadamard(a, b), d), hadamard(a, sjt_row(b, d))) < 1e-13);
  }
}

TEST_CASE("hadamard algebra laws on random instances") {
  for (int t = 0; t < 100; ++t) {
    const Matrix a = random_matrix(3, 4);
    const Matrix b = random_matrix(3, 4);
    const Matrix c = random_matrix(3, 4);
    const double k = testutil::uniform(-2.0, 2.0);
    CHECK(max_abs_diff(hadamard(a, b), hadamard(b, a)) == 0.0);
    CHECK(max_abs_diff(hadamard(hadamard(a, b), c), hadamard(a, hadamard(b, c))) < 1e-14);
    CHECK(max_abs_diff(k * hadamard(a, b), hadamard(k * a, b)) < 1e-14);
    CHECK(max_abs_diff(hadamard(a + b, c), hadamard(a, c) + hadamard(b, c)) < 1e-13);
  }
}

TEST_CASE("kronecker product against the block-expansion definition") {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 5}, {6, 7}};
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(k(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));

  CHECK(kron(Vector{1, 2}, Vector{3, 4, 5}) == Vector{3, 4, 5, 6, 8, 10});

  // mixed-product rule (A⊗B)(u⊗v) = (Au)⊗(Bv)
  for (int t = 0; t < 20; ++t) {
    const Matrix ra = random_matrix(3, 3);
    const Matrix rb = random_matrix(4, 4);
    const Vector u = random_vector(3);
    const Vector v = random_vector(4);
    CHECK(max_abs_diff(kron(ra, rb) * kron(u, v), kron(ra * u, rb * v)) < 1e-12);
  }
}

TEST_CASE("selection matrix extracts the hadamard product from the kronecker product") {
  const Matrix e2 = selection_matrix(2);
  REQUIRE(e2.rows() == 4);
  REQUIRE(e2.cols() == 2);
  CHECK(e2 == Matrix{{1, 0}, {0, 0}, {0, 0}, {0, 1}});

  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix en = selection_matrix(n);
    for (int t = 0; t < 20; ++t) {
      const Matrix a = random_matrix(n, n);
      const Matrix b = random_matrix(n, n);
      const Matrix lhs = transpose(en) * kron(a, b) * en;
      CHECK(max_abs_diff(lhs, hadamard(a, b)) < 1e-12);
    }
  }
}

TEST_CASE("lu_solve: exact systems and the long-double elimination oracle") {
  CHECK(lu_solve(Matrix::identity(3), Vector{1, 2, 3}) == Vector{1, 2, 3});
  CHECK(max_abs_diff(lu_solve(Matrix{{2, 0}, {0, 4}}, Vector{2, 2}), Vector{1, 0.5}) < 1e-15);
  // pivoting required: zero in the leading position
  CHECK(max_abs_diff(lu_solve(Matrix{{0, 1}, {1, 0}}, Vector{3, 7}), Vector{7, 3}) < 1e-15);

  // 4x4 Hilbert system solved independently by Gaussian elimination with
  // partial pivoting in long double
  const std::size_t n = 4;
  Matrix hil(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hil(i, j) = 1.0 / static_cast<double>(i + j + 1);
  const Vector rhs{1, -2, 3, -4};

  std::vector<std::vector<long double>> aug(n, std::vector<long double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = hil(i, j);
    aug[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(aug[r][c]) > std::abs(aug[p][c])) p = r;
    std::swap(aug[c], aug[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = aug[r][c] / aug[c][c];
      for (std::size_t j = c; j <= n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  Vector expected(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = aug[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= aug[i][j] * expected[j];
    expected[i] = static_cast<double>(s / aug[i][i]);
  }

  const Vector got = lu_solve(hil, rhs);
  // Hilbert 4x4 condition number is ~1.6e4; answers are O(1e4)
  CHECK(max_abs_diff(got, expected) / expected.max_abs() < 1e-10);

  CHECK_THROWS_AS(lu_solve(Matrix{{1, 2}, {2, 4}}, Vector{1, 1}), SingularMatrixError);
  CHECK_THROWS_AS(lu_solve(Matrix{{1, 2, 3}, {4, 5, 6}}, Vector{1, 1}), DimensionError);
  CHECK_THROWS_AS(lu_solve(Matrix::identity(2), Vector{1, 2, 3}), DimensionError);
}

TEST_CASE("central-difference jacobian") {
  // affine map: jacobian equals the matrix for any state
  const Matrix m{{1, -2, 0.5}, {0, 3, 1}, {2, 2, -1}};
  const Vector c{1, 2, 3};
  const auto affine = [&](const Vector& u) { return m * u + c; };
  CHECK(max_abs_diff(fd_jacobian(affine, random_vector(3)), m) < 1e-8);

  // scalar square: d(u^2)/du at 3 is 6
  const auto sq = [](const Vector& u) { return hadamard(u, u); };
  const Matrix j = fd_jacobian(sq, Vector{3.0});
  CHECK(j(0, 0) == doctest::Approx(6.0).epsilon(1e-8));
}

TEST_CASE("matrix arithmetic shape checks") {
  CHECK_THROWS_AS(Matrix::identity(2) + Matrix::identity(3), DimensionError);
  CHECK_THROWS_AS(Matrix::identity(2) * Matrix(3, 2), DimensionError);
  const Vector v3{1, 2, 3};
  CHECK_THROWS_AS(Matrix::identity(2) * v3, DimensionError);
  const Vector v1{1};
  const Vector v2{1, 2};
  CHECK_THROWS_AS(v1 + v2, DimensionError);
}
