#include "dqdc/report_io.hpp"

#include <cstdio>

namespace dqdc {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json solve_result_to_json(const SolveResult& r, const std::string& problem) {
  nlohmann::json j;
  j["problem"] = problem;
  j["grid"] = {{"a", r.grid.a}, {"b", r.grid.b}, {"nodes", r.grid.nodes}};
  j["solution"] = r.solution.data();
  j["converged"] = r.report.converged;
  j["iterations"] = r.report.iterations;
  j["residualHistory"] = r.report.residual_history;
  j["errors"] = r.rel_errors;
  return j;
}

SolveResult solve_result_from_json(const nlohmann::json& j) {
  SolveResult r;
  r.grid.a = j.at("grid").at("a").get<double>();
  r.grid.b = j.at("grid").at("b").get<double>();
  r.grid.nodes = j.at("grid").at("nodes").get<std::vector<double>>();
  r.solution = Vector(j.at("solution").get<std::vector<double>>());
  r.report.converged = j.at("converged").get<bool>();
  r.report.iterations = j.at("iterations").get<int>();
  r.report.residual_history = j.at("residualHistory").get<std::vector<double>>();
  r.rel_errors = j.at("errors").get<std::vector<double>>();
  return r;
}

}  // namespace dqdc
