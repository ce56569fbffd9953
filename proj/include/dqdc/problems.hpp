#pragma once

#include <map>

#include "dqdc/expr.hpp"

namespace dqdc {

enum class GridKind { Uniform, ChebyshevRoots };
enum class Mode { Conventional, Reduced };
enum class Backend { DQ, FD };  // FD = uniform-grid finite-difference stencils

Grid1D make_grid(GridKind kind, std::size_t n, double a, double b);

// One-dimensional boundary value problem wired for Newton: reduced operators,
// residual tree, and the linear-problem initial guess.
struct BvpSetup {
  Grid1D grid;
  DirichletBC1D bc;
  ReducedOperator first;   // order-1, reduced with bc
  ReducedOperator second;  // order-2, reduced with bc
  ReducedOperator second_aux;  // order-2 for the auxiliary variable (reduced mode only)
  Expr residual = Expr::var(1);
  Vector initial_guess;  // interior
};

// y'' + 1/y + y'^2/y = 0, y(0)=1, y(1)=2; residual in the y-multiplied
// Hadamard form y∘(B̄y+b̄) + 1 + (Āy+ā)°2.  Exact solution sqrt(1+4x-x²).
BvpSetup build_example_a(std::size_t n, GridKind kind = GridKind::ChebyshevRoots);

// y'' + sin(y') + 1 = 0, y(0)=0, y(1)=1; Hadamard matrix-function form.
BvpSetup build_example_b(std::size_t n, GridKind kind = GridKind::ChebyshevRoots);

// U'^2 + U·U'' + U'' = 0, U(0)=0, U(1)=1.  Conventional Hadamard form, or the
// operator-reduced form ½B̄_{u²}·U°2 + B̄_u·U (+ shifts).  Exact solution
// sqrt(1+3x) - 1.
BvpSetup build_example_c(std::size_t n, Mode mode,
                         GridKind kind = GridKind::ChebyshevRoots,
                         Backend backend = Backend::DQ);

// Hand-coded closed-form Frechet matrices (SJT-product formulas).
Matrix example_a_frechet_closed(const BvpSetup& s, const Vector& y);
Matrix example_b_frechet_closed(const BvpSetup& s, const Vector& y);
Matrix example_c_frechet_closed(const BvpSetup& s, Mode mode, const Vector& u);

double example_a_exact(double x);
double example_c_exact(double x);

// Shooting oracle for example B: bisection on y'(0) with a 4th-order
// fixed-step integrator; returns y at the requested abscissae.
std::vector<double> example_b_oracle(const std::vector<double>& xs);

struct SolveResult {
  Grid1D grid;
  Vector solution;  // full grid, boundary values included
  NewtonReport report;
  std::vector<double> rel_errors;  // interior nodes; empty when no oracle
};

// Thrown when Newton diverges inside a problem driver; carries the partial
// result so the report can still be written.
class SolveDiverged : public std::runtime_error {
 public:
  SolveDiverged(const std::string& msg, SolveResult partial)
      : std::runtime_error(msg), result(std::move(partial)) {}
  SolveResult result;
};

SolveResult solve_example_a(std::size_t n, GridKind kind = GridKind::ChebyshevRoots,
                            const NewtonConfig& cfg = {});
SolveResult solve_example_b(std::size_t n, GridKind kind = GridKind::ChebyshevRoots,
                            const NewtonConfig& cfg = {});
SolveResult solve_example_c(std::size_t n, Mode mode,
                            GridKind kind = GridKind::ChebyshevRoots,
                            Backend backend = Backend::DQ, const NewtonConfig& cfg = {});

// --- circular plate (decoupled deflection system) ---------------------------

struct PlateSetup {
  Grid1D grid;  // radial coordinate in [rho0, 1]
  double load = 1.0;
  Vector y2;  // interior samples of y²
  ReducedOperator second_phi;  // B̄_φ
  ReducedOperator second_s;    // B̄_s
  Expr residual = Expr::var(1);
};

PlateSetup build_plate(std::size_t n, double load, double rho0 = 0.05);

Vector plate_residual(const PlateSetup& s, const Vector& phi);
Matrix plate_frechet(const PlateSetup& s, const Vector& phi);
Matrix plate_frechet_closed(const PlateSetup& s, const Vector& phi);

// Solved form of the first plate equation: S̄ recovered from φ.
Vector plate_recover_s(const PlateSetup& s, const Vector& phi);

// --- two-dimensional DC example ----------------------------------------------

struct DcSetup {
  Grid2D grid;
  std::map<std::size_t, double> boundary_values;
  ReducedOperator ex, fx, fy;
  Vector rhs;  // interior samples of the forcing
  Expr residual = Expr::var(1);
};

// W_xx + W_x·W_yy = forcing on [0,1]² with Dirichlet data from the exact
// solution W = x·exp(-xy).
DcSetup build_dc_example(std::size_t nx, std::size_t ny);

Matrix dc_frechet_closed(const DcSetup& s, const Vector& w);
double dc_exact(double x, double y);

struct DcSolveResult {
  Grid2D grid;
  Vector solution;  // full grid
  NewtonReport report;
  std::vector<double> rel_errors;  // interior nodes
};

DcSolveResult solve_dc_example(std::size_t nx, std::size_t ny,
                               const NewtonConfig& cfg = {});

// --- Burgers method of lines -------------------------------------------------

struct BurgersSetup {
  Grid1D grid;
  double eps = 0.1;
  DirichletBC1D bc;
  Mode mode = Mode::Reduced;
  ReducedOperator first;      // Ā_u
  ReducedOperator first_aux;  // Ā_{u²} (bc squared)
  ReducedOperator second;     // B̄_u
};

BurgersSetup build_burgers(std::size_t n, double eps, Mode mode,
                           GridKind kind = GridKind::ChebyshevRoots,
                           DirichletBC1D bc = {0.0, 0.0});

// du/dt at the interior nodes: ε·(B̄u + b̄) minus the convection term in the
// chosen formulation.
Vector burgers_rhs(const BurgersSetup& s, const Vector& u_interior);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;  // full-grid states
};

// Classical 4th-order one-step integration with fixed step; full-grid states
// recorded every output_every time units.
Trajectory burgers_integrate(const BurgersSetup& s, const Vector& u0_full, double t_end,
                             double dt, double output_every = 0.05);

// Fine implicit finite-difference reference (Crank-Nicolson on a uniform
// grid, ic sin(pi x), homogeneous Dirichlet), interpolated to eval_points.
std::vector<double> burgers_reference(std::size_t n_nodes, double eps, double t_end,
                                      double dt, const std::vector<double>& eval_points);

// --- Boussinesq shallow-water semi-discrete assembly -------------------------

struct BoussinesqFragments {
  Vector du_terms;        // ½Ā_{u²}u°2 + gĀ_h·h (+ shifts)
  Vector dh_terms;        // Ā_{uh}(u∘h) (+ shift)
  Matrix u_xtt_operator;  // (H/3)·Ā_u, the operator on d²/dt² of u
};

BoussinesqFragments boussinesq_semidiscrete(const Grid1D& grid, const Vector& u,
                                            const Vector& h, DirichletBC1D bc_u,
                                            DirichletBC1D bc_h, double g, double H);

}  // namespace dqdc
