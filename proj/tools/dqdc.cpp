// Command-line front end: emit weighting operators, run the worked problems,
// produce Table-1-style comparisons, and integrate the Burgers equation.
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqdc/problems.hpp"
#include "dqdc/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

using dqdc::format_double;

struct WeightsArgs {
  std::string grid = "cheb";
  std::size_t n = 6;
  int order = 1;
  bool fd = false;
  std::vector<std::size_t> two_d;
  std::string axis = "x";
  std::string out;
  std::string format = "csv";
};

struct SolveArgs {
  std::string problem;
  std::size_t n = 6;
  std::size_t nx = 7, ny = 7;
  std::string mode = "conventional";
  std::string grid = "cheb";
  double tol = 1e-10;
  int max_iter = 25;
  std::string out;
  std::string format = "json";
};

struct CompareArgs {
  std::string problem;
  std::size_t n = 6;
  std::string out;
};

struct BurgersArgs {
  double epsilon = 0.1;
  std::size_t n = 16;
  double t_end = 0.5;
  double dt = 1e-3;
  std::string mode = "reduced";
  std::string ic = "sin";
  std::string out;
};

dqdc::GridKind parse_grid(const std::string& s) {
  return s == "uniform" ? dqdc::GridKind::Uniform : dqdc::GridKind::ChebyshevRoots;
}

int write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  f.flush();
  if (!f.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int write_manifest(const std::string& command, const nlohmann::json& spec,
                   const std::string& out_path) {
  nlohmann::json m;
  m["command"] = command;
  m["spec"] = spec;
  m["outputs"] = {out_path};
  m["exitCodes"] = {{"0", "success"}, {"2", "usage"}, {"3", "io"}, {"4", "numerical"}};
  return write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

std::string matrix_csv(const dqdc::Matrix& w, int order, const std::string& grid_kind,
                       std::size_t n) {
  std::ostringstream os;
  os << "# dqdc weights order=" << order << " grid=" << grid_kind << " n=" << n << "\n";
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j) os << ",";
      os << format_double(w(i, j));
    }
    os << "\n";
  }
  return os.str();
}

int run_weights(const WeightsArgs& a) {
  nlohmann::json spec = {{"grid", a.grid}, {"n", a.n},        {"order", a.order},
                         {"fd", a.fd},     {"axis", a.axis},  {"format", a.format}};
  if (!a.two_d.empty()) spec["two_d"] = a.two_d;
  if (int rc = write_manifest("weights", spec, a.out)) return rc;

  const dqdc::GridKind kind = parse_grid(a.grid);
  if (a.two_d.empty()) {
    const dqdc::Grid1D grid = dqdc::make_grid(kind, a.n, 0.0, 1.0);
    const dqdc::DerivOperator op =
        a.fd ? dqdc::fd_operator(grid, a.order) : dqdc::dq_weights(grid, a.order);
    if (a.format == "csv") {
      return write_file(a.out, matrix_csv(op.w, a.order, a.grid, a.n));
    }
    nlohmann::json j = {{"order", a.order},
                        {"grid", a.grid},
                        {"n", a.n},
                        {"nodes", grid.nodes}};
    std::vector<std::vector<double>> rows(a.n, std::vector<double>(a.n));
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t k = 0; k < a.n; ++k) rows[i][k] = op.w(i, k);
    j["matrix"] = rows;
    return write_file(a.out, j.dump(2) + "\n");
  }

  // Two-dimensional DC operator on a tensor grid.
  if (a.order > 2) {
    std::cerr << "error: 2-D operators support orders 1 and 2 only\n";
    return kExitUsage;
  }
  const dqdc::Grid2D grid{dqdc::make_grid(kind, a.two_d[0], 0.0, 1.0),
                          dqdc::make_grid(kind, a.two_d[1], 0.0, 1.0)};
  const dqdc::DcOperators ops = dqdc::dc_operators(grid);
  const dqdc::Matrix* w = nullptr;
  if (a.order == 1 && a.axis == "x") w = &ops.ex.w;
  else if (a.order == 1 && a.axis == "y") w = &ops.ey.w;
  else if (a.order == 2 && a.axis == "x") w = &ops.fx.w;
  else if (a.order == 2 && a.axis == "y") w = &ops.fy.w;
  else if (a.order == 2 && a.axis == "xy") w = &ops.fxy.w;
  if (!w) {
    std::cerr << "error: unsupported order/axis combination\n";
    return kExitUsage;
  }
  if (a.format == "csv") {
    return write_file(a.out, matrix_csv(*w, a.order, a.grid, grid.size()));
  }
  nlohmann::json j = {{"order", a.order},     {"grid", a.grid},
                      {"axis", a.axis},       {"nodes_x", grid.gx.nodes},
                      {"nodes_y", grid.gy.nodes}};
  std::vector<std::vector<double>> rows(w->rows(), std::vector<double>(w->cols()));
  for (std::size_t i = 0; i < w->rows(); ++i)
    for (std::size_t k = 0; k < w->cols(); ++k) rows[i][k] = (*w)(i, k);
  j["matrix"] = rows;
  return write_file(a.out, j.dump(2) + "\n");
}

std::string bvp_csv(const dqdc::SolveResult& r,
                    const std::function<double(double)>& oracle) {
  std::ostringstream os;
  os << "x,solution,oracle,rel_error\n";
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const double x = r.grid.nodes[i];
    const double ref = oracle(x);
    const double err =
        (i == 0 || i + 1 == r.grid.size()) ? 0.0 : r.rel_errors[i - 1];
    os << format_double(x) << "," << format_double(r.solution[i]) << ","
       << format_double(ref) << "," << format_double(err) << "\n";
  }
  return os.str();
}

int write_bvp_result(const dqdc::SolveResult& r, const std::string& problem,
                     const std::function<double(double)>& oracle,
                     const std::string& out, const std::string& format) {
  if (format == "csv") return write_file(out, bvp_csv(r, oracle));
  return write_file(out, dqdc::solve_result_to_json(r, problem).dump(2) + "\n");
}

int run_solve(const SolveArgs& a) {
  nlohmann::json spec = {{"problem", a.problem}, {"n", a.n},
                         {"nx", a.nx},           {"ny", a.ny},
                         {"mode", a.mode},       {"grid", a.grid},
                         {"tol", a.tol},         {"maxIter", a.max_iter},
                         {"format", a.format}};
  if (int rc = write_manifest("solve", spec, a.out)) return rc;

  const dqdc::GridKind kind = parse_grid(a.grid);
  const dqdc::NewtonConfig cfg{a.tol, a.max_iter, 1e6};
  const dqdc::Mode mode =
      a.mode == "reduced" ? dqdc::Mode::Reduced : dqdc::Mode::Conventional;

  if (a.problem == "dc-example") {
    dqdc::DcSolveResult r;
    bool dc_diverged = false;
    try {
      r = dqdc::solve_dc_example(a.nx, a.ny, cfg);
    } catch (const dqdc::DivergenceError& e) {
      std::cerr << "error: " << e.what() << "\n";
      const dqdc::DcSetup s = dqdc::build_dc_example(a.nx, a.ny);
      r.grid = s.grid;
      r.report = e.report;
      r.solution = dqdc::lift(s.grid, e.last_iterate, s.boundary_values);
      r.rel_errors.assign(e.last_iterate.size(), 0.0);
      dc_diverged = true;
    }
    if (a.format == "csv") {
      std::ostringstream os;
      os << "x,y,solution,oracle,rel_error\n";
      std::size_t interior = 0;
      for (std::size_t j = 0; j < r.grid.size(); ++j) {
        const double x = r.grid.x(j), y = r.grid.y(j);
        const double err = r.grid.is_boundary(j) ? 0.0 : r.rel_errors[interior++];
        os << format_double(x) << "," << format_double(y) << ","
           << format_double(r.solution[j]) << "," << format_double(dqdc::dc_exact(x, y))
           << "," << format_double(err) << "\n";
      }
      const int rc = write_file(a.out, os.str());
      if (rc != kExitOk) return rc;
      return dc_diverged ? kExitNumerical : kExitOk;
    }
    nlohmann::json j;
    j["problem"] = a.problem;
    j["grid"] = {{"nodes_x", r.grid.gx.nodes}, {"nodes_y", r.grid.gy.nodes}};
    j["solution"] = r.solution.data();
    j["converged"] = r.report.converged;
    j["iterations"] = r.report.iterations;
    j["residualHistory"] = r.report.residual_history;
    j["errors"] = r.rel_errors;
    const int rc = write_file(a.out, j.dump(2) + "\n");
    if (rc != kExitOk) return rc;
    return dc_diverged ? kExitNumerical : kExitOk;
  }

  dqdc::SolveResult result;
  std::function<double(double)> oracle;
  bool diverged = false;
  try {
    if (a.problem == "example-a") {
      oracle = dqdc::example_a_exact;
      result = dqdc::solve_example_a(a.n, kind, cfg);
    } else if (a.problem == "example-b") {
      oracle = [](double x) {
        return dqdc::example_b_oracle({x})[0];
      };
      result = dqdc::solve_example_b(a.n, kind, cfg);
    } else if (a.problem == "example-c") {
      oracle = dqdc::example_c_exact;
      result = dqdc::solve_example_c(a.n, mode, kind, dqdc::Backend::DQ, cfg);
    } else {
      std::cerr << "error: unknown problem '" << a.problem << "'\n";
      return kExitUsage;
    }
  } catch (const dqdc::SolveDiverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    result = e.result;
    diverged = true;
  }
  const int rc = write_bvp_result(result, a.problem, oracle, a.out, a.format);
  if (rc != kExitOk) return rc;
  return diverged ? kExitNumerical : kExitOk;
}

int run_compare(const CompareArgs& a) {
  if (a.problem != "example-c") {
    std::cerr << "error: compare is defined only for example-c\n";
    return kExitUsage;
  }
  nlohmann::json spec = {{"problem", a.problem}, {"n", a.n}};
  if (int rc = write_manifest("compare", spec, a.out)) return rc;

  const dqdc::SolveResult conv =
      dqdc::solve_example_c(a.n, dqdc::Mode::Conventional);
  const dqdc::SolveResult red = dqdc::solve_example_c(a.n, dqdc::Mode::Reduced);
  std::ostringstream os;
  os << "node,x,e_u_conventional,e_u_present\n";
  for (std::size_t i = 0; i < conv.rel_errors.size(); ++i) {
    os << "x" << i + 2 << "," << format_double(conv.grid.nodes[i + 1]) << ","
       << format_double(conv.rel_errors[i]) << "," << format_double(red.rel_errors[i])
       << "\n";
  }
  return write_file(a.out, os.str());
}

int run_burgers(const BurgersArgs& a) {
  nlohmann::json spec = {{"epsilon", a.epsilon}, {"n", a.n},   {"tEnd", a.t_end},
                         {"dt", a.dt},           {"mode", a.mode}, {"ic", a.ic}};
  if (int rc = write_manifest("burgers", spec, a.out)) return rc;

  const dqdc::Mode mode =
      a.mode == "conventional" ? dqdc::Mode::Conventional : dqdc::Mode::Reduced;
  const dqdc::BurgersSetup setup =
      dqdc::build_burgers(a.n, a.epsilon, mode, dqdc::GridKind::ChebyshevRoots);
  dqdc::Vector u0(setup.grid.size());
  for (std::size_t i = 0; i < setup.grid.size(); ++i) {
    u0[i] = std::sin(std::numbers::pi * setup.grid.nodes[i]);
  }
  u0[0] = 0.0;
  u0[setup.grid.size() - 1] = 0.0;

  const dqdc::Trajectory traj =
      a.t_end == 0.0
          ? dqdc::Trajectory{{0.0}, {u0}}
          : dqdc::burgers_integrate(setup, u0, a.t_end, a.dt);

  std::ostringstream os;
  os << "t";
  for (std::size_t i = 1; i <= setup.grid.size(); ++i) os << ",x" << i;
  os << "\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    os << format_double(traj.times[k]);
    for (double v : traj.states[k]) os << "," << format_double(v);
    os << "\n";
  }
  return write_file(a.out, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DQ/DC nonlinear solver kit"};
  app.require_subcommand(1);

  WeightsArgs wa;
  CLI::App* weights = app.add_subcommand("weights", "Emit a weighting operator");
  weights->add_option("--grid", wa.grid)->check(CLI::IsMember({"uniform", "cheb"}));
  weights->add_option("--n", wa.n);
  weights->add_option("--order", wa.order)->required()->check(CLI::Range(1, 4));
  weights->add_flag("--fd", wa.fd, "Finite-difference backend (uniform grids)");
  weights->add_option("--two-d", wa.two_d, "Tensor-grid sizes NX NY")->expected(2);
  weights->add_option("--axis", wa.axis)->check(CLI::IsMember({"x", "y", "xy"}));
  weights->add_option("--out", wa.out)->required();
  weights->add_option("--format", wa.format)->check(CLI::IsMember({"csv", "json"}));

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "Run a named problem");
  solve->add_option("--problem", sa.problem)->required();
  solve->add_option("--n", sa.n);
  solve->add_option("--nx", sa.nx);
  solve->add_option("--ny", sa.ny);
  solve->add_option("--mode", sa.mode)->check(CLI::IsMember({"conventional", "reduced"}));
  solve->add_option("--grid", sa.grid)->check(CLI::IsMember({"uniform", "cheb"}));
  solve->add_option("--tol", sa.tol);
  solve->add_option("--max-iter", sa.max_iter);
  solve->add_option("--out", sa.out)->required();
  solve->add_option("--format", sa.format)->check(CLI::IsMember({"csv", "json"}));

  CompareArgs ca;
  CLI::App* compare = app.add_subcommand("compare", "Conventional vs reduced errors");
  compare->add_option("--problem", ca.problem)->required();
  compare->add_option("--n", ca.n);
  compare->add_option("--out", ca.out)->required();

  BurgersArgs ba;
  CLI::App* burgers = app.add_subcommand("burgers", "Integrate the Burgers equation");
  burgers->add_option("--epsilon", ba.epsilon)->required();
  burgers->add_option("--n", ba.n);
  burgers->add_option("--t-end", ba.t_end)->required();
  burgers->add_option("--dt", ba.dt)->required();
  burgers->add_option("--mode", ba.mode)->check(CLI::IsMember({"conventional", "reduced"}));
  burgers->add_option("--ic", ba.ic)->check(CLI::IsMember({"sin"}));
  burgers->add_option("--out", ba.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (weights->parsed()) return run_weights(wa);
    if (solve->parsed()) return run_solve(sa);
    if (compare->parsed()) return run_compare(ca);
    if (burgers->parsed()) return run_burgers(ba);
  } catch (const dqdc::SolveDiverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dqdc::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dqdc::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dqdc::IntegrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const dqdc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
