#include "dqdc/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqdc {

Grid1D make_grid(GridKind kind, std::size_t n, double a, double b) {
  switch (kind) {
    case GridKind::Uniform:
      return grid_uniform(n, a, b);
    case GridKind::ChebyshevRoots:
      return grid_chebyshev_roots(n, a, b);
  }
  throw std::logic_error("make_grid: unreachable");
}

namespace {

DerivOperator make_op(const Grid1D& grid, int m, Backend backend) {
  return backend == Backend::FD ? fd_operator(grid, m) : dq_weights(grid, m);
}

Vector interior_samples(const Grid1D& grid, const std::function<double(double)>& f) {
  Vector v(grid.size() - 2);
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) v[i] = f(grid.nodes[i + 1]);
  return v;
}

Vector ones(std::size_t n) { return Vector(n, 1.0); }

std::vector<double> interior_rel_errors(const Grid1D& grid, const Vector& full,
                                        const std::function<double(double)>& exact) {
  std::vector<double> errs;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double ref = exact(grid.nodes[i]);
    errs.push_back(std::abs(full[i] - ref) / std::abs(ref));
  }
  return errs;
}

SolveResult run_bvp(const BvpSetup& s, const NewtonConfig& cfg,
                    const std::function<double(double)>* exact) {
  SolveResult out;
  out.grid = s.grid;
  try {
    NewtonResult nr = newton(s.residual, s.initial_guess, cfg);
    out.report = nr.report;
    out.solution = lift(s.grid, nr.solution, s.bc);
  } catch (const DivergenceError& e) {
    SolveResult partial;
    partial.grid = s.grid;
    partial.report = e.report;
    partial.solution = lift(s.grid, e.last_iterate, s.bc);
    if (exact) partial.rel_errors = interior_rel_errors(s.grid, partial.solution, *exact);
    throw SolveDiverged(e.what(), std::move(partial));
  }
  if (exact) out.rel_errors = interior_rel_errors(s.grid, out.solution, *exact);
  return out;
}

}  // namespace

BvpSetup build_example_a(std::size_t n, GridKind kind) {
  BvpSetup s;
  s.grid = make_grid(kind, n, 0.0, 1.0);
  s.bc = {1.0, 2.0};
  s.first = reduce_dirichlet_1d(dq_weights(s.grid, 1), s.bc);
  s.second = reduce_dirichlet_1d(dq_weights(s.grid, 2), s.bc);
  const std::size_t m = n - 2;
  Expr y = Expr::var(m);
  s.residual = Expr::sum({hadamard(y, Expr::affine(s.second, y)),
                          Expr::constant(ones(m)),
                          Expr::pow(Expr::affine(s.first, y), 2.0)});
  // y'' = 0 with the same Dirichlet data.
  s.initial_guess = lu_solve(s.second.B, -1.0 * s.second.b);
  return s;
}

BvpSetup build_example_b(std::size_t n, GridKind kind) {
  BvpSetup s;
  s.grid = make_grid(kind, n, 0.0, 1.0);
  s.bc = {0.0, 1.0};
  s.first = reduce_dirichlet_1d(dq_weights(s.grid, 1), s.bc);
  s.second = reduce_dirichlet_1d(dq_weights(s.grid, 2), s.bc);
  const std::size_t m = n - 2;
  Expr y = Expr::var(m);
  s.residual = Expr::sum({Expr::affine(s.second, y),
                          Expr::fn(scalar_fn("sin"), Expr::affine(s.first, y)),
                          Expr::constant(ones(m))});
  // y'' + 1 = 0 with the same Dirichlet data.
  s.initial_guess = lu_solve(s.second.B, -1.0 * (s.second.b + ones(m)));
  return s;
}

BvpSetup build_example_c(std::size_t n, Mode mode, GridKind kind, Backend backend) {
  BvpSetup s;
  s.grid = make_grid(kind, n, 0.0, 1.0);
  s.bc = {0.0, 1.0};
  s.first = reduce_dirichlet_1d(make_op(s.grid, 1, backend), s.bc);
  s.second = reduce_dirichlet_1d(make_op(s.grid, 2, backend), s.bc);
  const std::size_t m = n - 2;
  Expr u = Expr::var(m);
  if (mode == Mode::Conventional) {
    s.residual = Expr::sum({Expr::pow(Expr::affine(s.first, u), 2.0),
                            hadamard(u, Expr::affine(s.second, u)),
                            Expr::affine(s.second, u)});
  } else {
    s.second_aux =
        reduce_dirichlet_1d(make_op(s.grid, 2, backend), transform_bc_power(s.bc, 2));
    s.residual = Expr::sum({Expr::scale(0.5, Expr::affine(s.second_aux, Expr::pow(u, 2.0))),
                            Expr::affine(s.second, u)});
  }
  // U'' = 0 with the same Dirichlet data.
  s.initial_guess = lu_solve(s.second.B, -1.0 * s.second.b);
  return s;
}

Matrix example_a_frechet_closed(const BvpSetup& s, const Vector& y) {
  const std::size_t m = y.size();
  return sjt_row(Matrix::identity(m), apply(s.second, y)) + sjt_row(s.second.B, y) +
         2.0 * sjt_row(s.first.B, apply(s.first, y));
}

Matrix example_b_frechet_closed(const BvpSetup& s, const Vector& y) {
  return s.second.B + sjt_row(s.first.B, hadamard_fn(apply(s.first, y), scalar_fn("cos")));
}

Matrix example_c_frechet_closed(const BvpSetup& s, Mode mode, const Vector& u) {
  const std::size_t m = u.size();
  if (mode == Mode::Conventional) {
    return 2.0 * sjt_row(s.first.B, apply(s.first, u)) + sjt_row(s.second.B, u) +
           sjt_row(Matrix::identity(m), apply(s.second, u)) + s.second.B;
  }
  return sjt_col(u, s.second_aux.B) + s.second.B;
}

double example_a_exact(double x) { return std::sqrt(1.0 + 4.0 * x - x * x); }
double example_c_exact(double x) { return std::sqrt(1.0 + 3.0 * x) - 1.0; }

namespace {

// y'' = -1 - sin(y'), integrated from x = 0 with y(0) = 0 and slope s.
double shoot_example_b(double s, double x_stop, double dt) {
  double y = 0.0, v = s, x = 0.0;
  const auto fv = [](double vv) { return -1.0 - std::sin(vv); };
  while (x < x_stop - 1e-15) {
    const double h = std::min(dt, x_stop - x);
    const double k1y = v, k1v = fv(v);
    const double k2y = v + 0.5 * h * k1v, k2v = fv(v + 0.5 * h * k1v);
    const double k3y = v + 0.5 * h * k2v, k3v = fv(v + 0.5 * h * k2v);
    const double k4y = v + h * k3v, k4v = fv(v + h * k3v);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    x += h;
  }
  return y;
}

double example_b_slope() {
  const double dt = 1e-4;
  double lo = 0.0, hi = 3.0;
  // y(1; s) is increasing in s; bracket then bisect.
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (shoot_example_b(mid, 1.0, dt) < 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> example_b_oracle(const std::vector<double>& xs) {
  static const double slope = example_b_slope();
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(shoot_example_b(slope, x, 1e-4));
  return ys;
}

SolveResult solve_example_a(std::size_t n, GridKind kind, const NewtonConfig& cfg) {
  const std::function<double(double)> exact = example_a_exact;
  return run_bvp(build_example_a(n, kind), cfg, &exact);
}

SolveResult solve_example_b(std::size_t n, GridKind kind, const NewtonConfig& cfg) {
  BvpSetup s = build_example_b(n, kind);
  std::vector<double> interior_x(s.grid.nodes.begin() + 1, s.grid.nodes.end() - 1);
  const std::vector<double> oracle = example_b_oracle(interior_x);
  const std::function<double(double)> exact = [&oracle, &interior_x](double x) {
    for (std::size_t i = 0; i < interior_x.size(); ++i) {
      if (interior_x[i] == x) return oracle[i];
    }
    throw std::logic_error("example_b oracle: unexpected abscissa");
  };
  return run_bvp(s, cfg, &exact);
}

SolveResult solve_example_c(std::size_t n, Mode mode, GridKind kind, Backend backend,
                            const NewtonConfig& cfg) {
  const std::function<double(double)> exact = example_c_exact;
  return run_bvp(build_example_c(n, mode, kind, backend), cfg, &exact);
}

// --- plate -------------------------------------------------------------------

PlateSetup build_plate(std::size_t n, double load, double rho0) {
  PlateSetup s;
  s.grid = grid_chebyshev_roots(n, rho0, 1.0);
  s.load = load;
  s.y2 = interior_samples(s.grid, [](double y) { return y * y; });
  const DirichletBC1D homogeneous{0.0, 0.0};
  s.second_phi = reduce_dirichlet_1d(dq_weights(s.grid, 2), homogeneous);
  s.second_s = reduce_dirichlet_1d(dq_weights(s.grid, 2), homogeneous);

  const std::size_t m = n - 2;
  Expr phi = Expr::var(m);
  Expr y2 = Expr::constant(s.y2);
  Expr inner = Expr::sum(
      {Expr::mul({Expr::pow(phi, -1.0), y2, Expr::affine(s.second_phi, phi)}),
       Expr::scale(-load, Expr::mul({y2, Expr::pow(phi, -1.0)}))});
  s.residual = Expr::sum({Expr::mul({y2, Expr::affine(s.second_s, inner)}),
                          Expr::scale(0.5, Expr::pow(phi, 2.0))});
  return s;
}

Vector plate_residual(const PlateSetup& s, const Vector& phi) {
  return s.residual.eval(phi);
}

Matrix plate_frechet(const PlateSetup& s, const Vector& phi) {
  return s.residual.frechet(phi);
}

Matrix plate_frechet_closed(const PlateSetup& s, const Vector& phi) {
  const std::size_t m = phi.size();
  const Matrix eye = Matrix::identity(m);
  const Vector phi_m1 = hadamard_power(phi, -1.0);
  const Vector phi_m2 = hadamard_power(phi, -2.0);
  const Matrix d_inv = sjt_row(-1.0 * eye, phi_m2);  // D{φ°(-1)}
  const Matrix t1 = sjt_row(d_inv, hadamard(s.y2, apply(s.second_phi, phi)));
  const Matrix t2 = sjt_row(s.second_phi.B, hadamard(phi_m1, s.y2));
  const Matrix t3 = -s.load * sjt_row(d_inv, s.y2);
  return sjt_row(s.second_s.B * (t1 + t2 + t3), s.y2) + sjt_row(eye, phi);
}

Vector plate_recover_s(const PlateSetup& s, const Vector& phi) {
  const Vector phi_m1 = hadamard_power(phi, -1.0);
  return hadamard(phi_m1, hadamard(s.y2, apply(s.second_phi, phi))) -
         s.load * hadamard(s.y2, phi_m1);
}

// --- DC example --------------------------------------------------------------

double dc_exact(double x, double y) { return x * std::exp(-x * y); }

namespace {
double dc_forcing(double x, double y) {
  const double e = std::exp(-x * y);
  return e * (x * y * y - 2.0 * y + x * x * x * e - x * x * x * x * y * e);
}
}  // namespace

DcSetup build_dc_example(std::size_t nx, std::size_t ny) {
  if (nx < 4 || ny < 4) {
    throw std::invalid_argument("build_dc_example: need at least 4 nodes per direction");
  }
  DcSetup s;
  s.grid = Grid2D{grid_chebyshev_roots(nx, 0.0, 1.0), grid_chebyshev_roots(ny, 0.0, 1.0)};
  for (std::size_t j = 0; j < s.grid.size(); ++j) {
    if (s.grid.is_boundary(j)) {
      s.boundary_values[j] = dc_exact(s.grid.x(j), s.grid.y(j));
    }
  }
  const DcOperators ops = dc_operators(s.grid);
  s.ex = reduce_dirichlet_2d(ops.ex, s.boundary_values);
  s.fx = reduce_dirichlet_2d(ops.fx, s.boundary_values);
  s.fy = reduce_dirichlet_2d(ops.fy, s.boundary_values);

  const std::size_t m = s.ex.interior_index.size();
  Vector rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = s.ex.interior_index[i];
    rhs[i] = dc_forcing(s.grid.x(j), s.grid.y(j));
  }
  s.rhs = rhs;

  Expr w = Expr::var(m);
  s.residual = Expr::sum({Expr::affine(s.fx, w),
                          hadamard(Expr::affine(s.ex, w), Expr::affine(s.fy, w)),
                          Expr::constant(-1.0 * rhs)});
  return s;
}

Matrix dc_frechet_closed(const DcSetup& s, const Vector& w) {
  return s.fx.B + sjt_row(s.fy.B, apply(s.ex, w)) + sjt_row(s.ex.B, apply(s.fy, w));
}

DcSolveResult solve_dc_example(std::size_t nx, std::size_t ny, const NewtonConfig& cfg) {
  DcSetup s = build_dc_example(nx, ny);
  const std::size_t m = s.ex.interior_index.size();
  // Initial guess from the linearized problem F̄_x·W = rhs (boundary shifts
  // absorbed), matching the linear-problem guesses of the 1-D examples.
  const Vector w0 = lu_solve(s.fx.B, s.rhs - s.fx.b);
  NewtonResult nr = newton(s.residual, w0, cfg);

  DcSolveResult out;
  out.grid = s.grid;
  out.report = nr.report;
  out.solution = lift(s.grid, nr.solution, s.boundary_values);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = s.ex.interior_index[i];
    const double ref = dc_exact(s.grid.x(j), s.grid.y(j));
    out.rel_errors.push_back(std::abs(out.solution[j] - ref) / std::abs(ref));
  }
  return out;
}

// --- Burgers -----------------------------------------------------------------

BurgersSetup build_burgers(std::size_t n, double eps, Mode mode, GridKind kind,
                           DirichletBC1D bc) {
  if (!(eps > 0.0)) throw std::invalid_argument("build_burgers: viscosity must be > 0");
  BurgersSetup s;
  s.grid = make_grid(kind, n, 0.0, 1.0);
  s.eps = eps;
  s.bc = bc;
  s.mode = mode;
  s.first = reduce_dirichlet_1d(dq_weights(s.grid, 1), bc);
  s.first_aux = reduce_dirichlet_1d(dq_weights(s.grid, 1), transform_bc_power(bc, 2));
  s.second = reduce_dirichlet_1d(dq_weights(s.grid, 2), bc);
  return s;
}

Vector burgers_rhs(const BurgersSetup& s, const Vector& u) {
  const Vector diffusion = s.eps * apply(s.second, u);
  if (s.mode == Mode::Conventional) {
    return diffusion - hadamard(u, apply(s.first, u));
  }
  return diffusion - 0.5 * apply(s.first_aux, hadamard_power(u, 2.0));
}

Trajectory burgers_integrate(const BurgersSetup& s, const Vector& u0_full, double t_end,
                             double dt, double output_every) {
  if (u0_full.size() != s.grid.size()) {
    throw DimensionError("burgers_integrate: initial state does not match grid");
  }
  if (!(dt > 0.0) || t_end < 0.0) {
    throw std::invalid_argument("burgers_integrate: need dt > 0 and t_end >= 0");
  }
  const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
  if (n_steps > 100'000'000) {
    throw IntegrationError("burgers_integrate: step count overflow");
  }

  const std::size_t m = s.grid.size() - 2;
  Vector u(m);
  for (std::size_t i = 0; i < m; ++i) u[i] = u0_full[i + 1];

  Trajectory traj;
  const auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.push_back(lift(s.grid, u, s.bc));
  };
  record(0.0);

  const std::size_t stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(output_every / dt)));
  for (std::size_t step = 1; step <= n_steps; ++step) {
    const Vector k1 = burgers_rhs(s, u);
    const Vector k2 = burgers_rhs(s, u + 0.5 * dt * k1);
    const Vector k3 = burgers_rhs(s, u + 0.5 * dt * k2);
    const Vector k4 = burgers_rhs(s, u + dt * k3);
    u = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    for (double x : u) {
      if (!std::isfinite(x)) {
        throw IntegrationError("burgers_integrate: non-finite state at t = " +
                               std::to_string(static_cast<double>(step) * dt));
      }
    }
    if (step % stride == 0 || step == n_steps) {
      record(static_cast<double>(step) * dt);
    }
  }
  return traj;
}

std::vector<double> burgers_reference(std::size_t n_nodes, double eps, double t_end,
                                      double dt, const std::vector<double>& eval_points) {
  const std::size_t n = n_nodes;
  const double h = 1.0 / static_cast<double>(n - 1);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = std::sin(std::numbers::pi * static_cast<double>(i) * h);
  }
  u.front() = 0.0;
  u.back() = 0.0;

  const auto rhs_at = [&](const std::vector<double>& w, std::size_t i) {
    return eps * (w[i + 1] - 2.0 * w[i] + w[i - 1]) / (h * h) -
           w[i] * (w[i + 1] - w[i - 1]) / (2.0 * h);
  };

  const std::size_t n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
  const std::size_t m = n - 2;
  std::vector<double> lower(m), diag(m), upper(m), res(m), delta(m);

  for (std::size_t step = 0; step < n_steps; ++step) {
    const std::vector<double> u_old = u;
    // Crank-Nicolson step solved by Newton with a tridiagonal Jacobian.
    for (int it = 0; it < 30; ++it) {
      double max_res = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = k + 1;
        res[k] = u[i] - u_old[i] - 0.5 * dt * (rhs_at(u, i) + rhs_at(u_old, i));
        max_res = std::max(max_res, std::abs(res[k]));
        lower[k] = -0.5 * dt * (eps / (h * h) + u[i] / (2.0 * h));
        diag[k] = 1.0 - 0.5 * dt * (-2.0 * eps / (h * h) - (u[i + 1] - u[i - 1]) / (2.0 * h));
        upper[k] = -0.5 * dt * (eps / (h * h) - u[i] / (2.0 * h));
      }
      if (max_res <= 1e-13) break;
      // Thomas elimination.
      for (std::size_t k = 1; k < m; ++k) {
        const double f = lower[k] / diag[k - 1];
        diag[k] -= f * upper[k - 1];
        res[k] -= f * res[k - 1];
      }
      delta[m - 1] = res[m - 1] / diag[m - 1];
      for (std::size_t k = m - 1; k-- > 0;) {
        delta[k] = (res[k] - upper[k] * delta[k + 1]) / diag[k];
      }
      for (std::size_t k = 0; k < m; ++k) u[k + 1] -= delta[k];
    }
  }

  std::vector<double> out;
  out.reserve(eval_points.size());
  for (double x : eval_points) {
    const double pos = x / h;
    const std::size_t i = std::min(static_cast<std::size_t>(pos), n - 2);
    const double w = pos - static_cast<double>(i);
    out.push_back((1.0 - w) * u[i] + w * u[i + 1]);
  }
  return out;
}

// --- Boussinesq --------------------------------------------------------------

BoussinesqFragments boussinesq_semidiscrete(const Grid1D& grid, const Vector& u,
                                            const Vector& h, DirichletBC1D bc_u,
                                            DirichletBC1D bc_h, double g, double H) {
  if (u.size() != grid.size() - 2 || h.size() != grid.size() - 2) {
    throw DimensionError("boussinesq_semidiscrete: state length does not match grid");
  }
  const DerivOperator first = dq_weights(grid, 1);
  const ReducedOperator a_u = reduce_dirichlet_1d(first, bc_u);
  const ReducedOperator a_h = reduce_dirichlet_1d(first, bc_h);
  const ReducedOperator a_u2 = reduce_dirichlet_1d(first, transform_bc_power(bc_u, 2));
  const ReducedOperator a_uh = reduce_dirichlet_1d(
      first, DirichletBC1D{bc_u.left * bc_h.left, bc_u.right * bc_h.right});

  BoussinesqFragments out;
  out.du_terms = 0.5 * apply(a_u2, hadamard_power(u, 2.0)) + g * apply(a_h, h);
  out.dh_terms = apply(a_uh, hadamard(u, h));
  out.u_xtt_operator = (H / 3.0) * a_u.B;
  return out;
}

}  // namespace dqdc
