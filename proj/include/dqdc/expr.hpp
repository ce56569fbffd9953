#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dqdc/boundary.hpp"
#include "dqdc/matrix.hpp"

namespace dqdc {

// Immutable expression tree over one unknown interior vector u of length n.
// Every node evaluates to a length-n vector; the Jacobian (Frechet derivative
// matrix) is assembled exactly by structural recursion over SJT-product chain
// rules.
class Expr {
 public:
  enum class Kind { Var, ConstVec, Affine, HadamardMul, HadamardPow, HadamardFn, Scale, Sum };

  static Expr var(std::size_t n);
  static Expr constant(Vector v);
  static Expr affine(Matrix m, Vector c, Expr child);
  static Expr affine(const ReducedOperator& op, Expr child);
  static Expr mul(std::vector<Expr> children);
  static Expr pow(Expr child, double q);
  static Expr fn(ScalarFn f, Expr child);
  static Expr scale(double k, Expr child);
  static Expr sum(std::vector<Expr> children);

  std::size_t length() const;
  Kind kind() const;
  bool depends_on_state() const;

  // True if any HadamardMul node multiplies two or more state-dependent
  // children (a "cross nonlinear" algebraic term).
  bool has_state_cross_product() const;

  Vector eval(const Vector& u) const;
  Matrix frechet(const Vector& u) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator*(double k, Expr e);
Expr hadamard(Expr a, Expr b);

struct NewtonConfig {
  double tol = 1e-10;            // max-abs residual threshold
  int max_iter = 25;
  double divergence_factor = 1e6;
};

struct NewtonReport {
  bool converged = false;
  int iterations = 0;
  std::vector<double> residual_history;  // length = iterations + 1
};

struct NewtonResult {
  Vector solution;
  NewtonReport report;
  std::vector<Vector> iterates;  // u0 ... u_final
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string msg, NewtonReport report, Vector last_iterate)
      : std::runtime_error(std::move(msg)),
        report(std::move(report)),
        last_iterate(std::move(last_iterate)) {}
  NewtonReport report;
  Vector last_iterate;
};

// Undamped Newton-Raphson: u <- u - J^{-1} r(u) until max|r| <= tol.
NewtonResult newton(const Expr& residual, Vector u0, const NewtonConfig& cfg = {});

// Quadratic system L·u + Q·(u⊗u) + C with Q built through the selection
// matrix, so that Q·(u⊗u) reproduces sums of (W1·u)∘(W2·u) terms.
struct QuadraticSystem {
  Matrix L;  // n x n
  Matrix Q;  // n x n²
  Vector C;  // length n
};

struct LinearTerm {
  double coef;
  Matrix w;
};

struct QuadTerm {
  double coef;
  Matrix w1, w2;
};

QuadraticSystem assemble_quadratic(const std::vector<LinearTerm>& linear,
                                   const std::vector<QuadTerm>& quadratic, Vector c);
Vector eval(const QuadraticSystem& q, const Vector& u);

// Operator-reduction rewrites: replace a cross-nonlinear differential term by
// a linear operator applied to a simpler nonlinear function of the unknown.
// The reduced operator must have been built with boundary data transformed for
// the auxiliary variable (e.g. via transform_bc_power).
enum class ReductionRule {
  WWx,        // W·W'        -> 1/2 · A·{W²}
  W2Wx,       // W²·W'       -> 1/3 · A·{W³}
  Wx2pWWxx,   // (W')²+W·W'' -> 1/2 · B·{W²}
  ProductUH,  // u·h_x+h·u_x ->       A·{u∘h}
};

ReductionRule reduction_rule(const std::string& id);

Expr reduce_nonlinear(ReductionRule rule, const ReducedOperator& op);
Expr reduce_nonlinear(ReductionRule rule, const ReducedOperator& op, const Vector& h);

}  // namespace dqdc
