#include "dqdc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqdc {

struct Expr::Node {
  Kind kind;
  std::size_t n = 0;  // output length
  bool state_dep = false;

  std::vector<Expr> children;

  Vector vec;     // ConstVec value / Affine shift
  Matrix mat;     // Affine matrix
  double scalar = 0.0;  // HadamardPow exponent / Scale factor
  ScalarFn func;  // HadamardFn
};

Expr Expr::var(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Expr::var: length must be positive");
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::Var;
  node->n = n;
  node->state_dep = true;
  return Expr(std::move(node));
}

Expr Expr::constant(Vector v) {
  if (v.size() == 0) throw std::invalid_argument("Expr::constant: empty vector");
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::ConstVec;
  node->n = v.size();
  node->vec = std::move(v);
  return Expr(std::move(node));
}

Expr Expr::affine(Matrix m, Vector c, Expr child) {
  if (m.cols() != child.length() || m.rows() != c.size()) {
    throw DimensionError("Expr::affine: operator shape does not match child");
  }
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::Affine;
  node->n = m.rows();
  node->state_dep = child.depends_on_state();
  node->mat = std::move(m);
  node->vec = std::move(c);
  node->children = {std::move(child)};
  return Expr(std::move(node));
}

Expr Expr::affine(const ReducedOperator& op, Expr child) {
  return affine(op.B, op.b, std::move(child));
}

Expr Expr::mul(std::vector<Expr> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("Expr::mul: need at least 2 factors");
  }
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::HadamardMul;
  node->n = children.front().length();
  for (const Expr& c : children) {
    if (c.length() != node->n) throw DimensionError("Expr::mul: factor length mismatch");
    node->state_dep = node->state_dep || c.depends_on_state();
  }
  node->children = std::move(children);
  return Expr(std::move(node));
}

Expr Expr::pow(Expr child, double q) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::HadamardPow;
  node->n = child.length();
  node->state_dep = child.depends_on_state();
  node->scalar = q;
  node->children = {std::move(child)};
  return Expr(std::move(node));
}

Expr Expr::fn(ScalarFn f, Expr child) {
  if (!f.f || !f.df) {
    throw std::invalid_argument("Expr::fn: function and derivative are both required");
  }
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::HadamardFn;
  node->n = child.length();
  node->state_dep = child.depends_on_state();
  node->func = std::move(f);
  node->children = {std::move(child)};
  return Expr(std::move(node));
}

Expr Expr::scale(double k, Expr child) {
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::Scale;
  node->n = child.length();
  node->state_dep = child.depends_on_state();
  node->scalar = k;
  node->children = {std::move(child)};
  return Expr(std::move(node));
}

Expr Expr::sum(std::vector<Expr> children) {
  if (children.empty()) throw std::invalid_argument("Expr::sum: no terms");
  auto node = std::make_shared<Expr::Node>();
  node->kind = Kind::Sum;
  node->n = children.front().length();
  for (const Expr& c : children) {
    if (c.length() != node->n) throw DimensionError("Expr::sum: term length mismatch");
    node->state_dep = node->state_dep || c.depends_on_state();
  }
  node->children = std::move(children);
  return Expr(std::move(node));
}

std::size_t Expr::length() const { return node_->n; }
Expr::Kind Expr::kind() const { return node_->kind; }
bool Expr::depends_on_state() const { return node_->state_dep; }

bool Expr::has_state_cross_product() const {
  if (node_->kind == Kind::HadamardMul) {
    int dep = 0;
    for (const Expr& c : node_->children) dep += c.depends_on_state() ? 1 : 0;
    if (dep >= 2) return true;
  }
  return std::any_of(node_->children.begin(), node_->children.end(),
                     [](const Expr& c) { return c.has_state_cross_product(); });
}

Vector Expr::eval(const Vector& u) const {
  switch (node_->kind) {
    case Kind::Var:
      if (u.size() != node_->n) throw DimensionError("Expr::eval: state length mismatch");
      return u;
    case Kind::ConstVec:
      return node_->vec;
    case Kind::Affine:
      return node_->mat * node_->children[0].eval(u) + node_->vec;
    case Kind::HadamardMul: {
      Vector out = node_->children[0].eval(u);
      for (std::size_t i = 1; i < node_->children.size(); ++i) {
        out = hadamard(out, node_->children[i].eval(u));
      }
      return out;
    }
    case Kind::HadamardPow:
      try {
        return hadamard_power(node_->children[0].eval(u), node_->scalar);
      } catch (const DomainError& e) {
        throw DomainError(std::string("HadamardPow node: ") + e.what());
      }
    case Kind::HadamardFn:
      try {
        return hadamard_fn(node_->children[0].eval(u), node_->func);
      } catch (const DomainError& e) {
        throw DomainError("HadamardFn node '" + node_->func.name + "': " + e.what());
      }
    case Kind::Scale:
      return node_->scalar * node_->children[0].eval(u);
    case Kind::Sum: {
      Vector out = node_->children[0].eval(u);
      for (std::size_t i = 1; i < node_->children.size(); ++i) {
        out = out + node_->children[i].eval(u);
      }
      return out;
    }
  }
  throw std::logic_error("Expr::eval: unreachable");
}

Matrix Expr::frechet(const Vector& u) const {
  const std::size_t nu = u.size();
  switch (node_->kind) {
    case Kind::Var:
      return Matrix::identity(node_->n);
    case Kind::ConstVec:
      return Matrix(node_->n, nu);
    case Kind::Affine:
      if (!node_->children[0].depends_on_state()) return Matrix(node_->n, nu);
      return node_->mat * node_->children[0].frechet(u);
    case Kind::HadamardMul: {
      // k-ary product rule: sum over factors of the factor Jacobian
      // row-scaled by the product of the remaining factor values.
      const auto& cs = node_->children;
      std::vector<Vector> vals;
      vals.reserve(cs.size());
      for (const Expr& c : cs) vals.push_back(c.eval(u));
      Matrix jac(node_->n, nu);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].depends_on_state()) continue;
        Vector rest(node_->n, 1.0);
        for (std::size_t j = 0; j < cs.size(); ++j) {
          if (j != i) rest = hadamard(rest, vals[j]);
        }
        jac = jac + sjt_row(cs[i].frechet(u), rest);
      }
      return jac;
    }
    case Kind::HadamardPow: {
      if (!node_->children[0].depends_on_state()) return Matrix(node_->n, nu);
      const Vector v = node_->children[0].eval(u);
      return node_->scalar *
             sjt_row(node_->children[0].frechet(u), hadamard_power(v, node_->scalar - 1.0));
    }
    case Kind::HadamardFn: {
      if (!node_->children[0].depends_on_state()) return Matrix(node_->n, nu);
      const Vector v = node_->children[0].eval(u);
      Vector dv(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        dv[i] = node_->func.df(v[i]);
        if (!std::isfinite(dv[i])) {
          throw DomainError("HadamardFn node '" + node_->func.name +
                            "': derivative undefined at entry");
        }
      }
      return sjt_row(node_->children[0].frechet(u), dv);
    }
    case Kind::Scale:
      return node_->scalar * node_->children[0].frechet(u);
    case Kind::Sum: {
      Matrix jac(node_->n, nu);
      for (const Expr& c : node_->children) {
        if (c.depends_on_state()) jac = jac + c.frechet(u);
      }
      return jac;
    }
  }
  throw std::logic_error("Expr::frechet: unreachable");
}

Expr operator+(Expr a, Expr b) { return Expr::sum({std::move(a), std::move(b)}); }
Expr operator*(double k, Expr e) { return Expr::scale(k, std::move(e)); }
Expr hadamard(Expr a, Expr b) { return Expr::mul({std::move(a), std::move(b)}); }

NewtonResult newton(const Expr& residual, Vector u, const NewtonConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("newton: tol must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("newton: maxIter must be >= 1");

  NewtonResult out;
  Vector r = residual.eval(u);
  double res = r.max_abs();
  const double initial = res;
  out.report.residual_history.push_back(res);
  out.iterates.push_back(u);

  int iter = 0;
  while (res > cfg.tol) {
    if (iter >= cfg.max_iter) {
      out.report.iterations = iter;
      throw DivergenceError("newton: iteration limit reached", out.report, u);
    }
    if (res > cfg.divergence_factor * initial) {
      out.report.iterations = iter;
      throw DivergenceError("newton: residual diverged", out.report, u);
    }
    const Matrix jac = residual.frechet(u);
    u = u - lu_solve(jac, r);
    r = residual.eval(u);
    res = r.max_abs();
    ++iter;
    out.report.residual_history.push_back(res);
    out.iterates.push_back(u);
  }
  out.report.converged = true;
  out.report.iterations = iter;
  out.solution = std::move(u);
  return out;
}

QuadraticSystem assemble_quadratic(const std::vector<LinearTerm>& linear,
                                   const std::vector<QuadTerm>& quadratic, Vector c) {
  const std::size_t n = c.size();
  QuadraticSystem sys;
  sys.L = Matrix(n, n);
  sys.C = std::move(c);
  for (const LinearTerm& t : linear) {
    if (t.w.rows() != n || t.w.cols() != n) {
      throw DimensionError("assemble_quadratic: linear operator dimension mismatch");
    }
    sys.L = sys.L + t.coef * t.w;
  }
  Matrix kron_sum(n * n, n * n);
  for (const QuadTerm& t : quadratic) {
    if (t.w1.rows() != n || t.w1.cols() != n || t.w2.rows() != n || t.w2.cols() != n) {
      throw DimensionError("assemble_quadratic: quadratic operator dimension mismatch");
    }
    kron_sum = kron_sum + t.coef * kron(t.w1, t.w2);
  }
  sys.Q = transpose(selection_matrix(n)) * kron_sum;
  return sys;
}

Vector eval(const QuadraticSystem& q, const Vector& u) {
  return q.L * u + q.Q * kron(u, u) + q.C;
}

ReductionRule reduction_rule(const std::string& id) {
  if (id == "WWx") return ReductionRule::WWx;
  if (id == "W2Wx") return ReductionRule::W2Wx;
  if (id == "Wx2pWWxx") return ReductionRule::Wx2pWWxx;
  if (id == "productUH") return ReductionRule::ProductUH;
  throw std::invalid_argument("reduction_rule: unknown rule id '" + id + "'");
}

Expr reduce_nonlinear(ReductionRule rule, const ReducedOperator& op) {
  const std::size_t n = op.B.rows();
  Expr u = Expr::var(n);
  switch (rule) {
    case ReductionRule::WWx:
      return Expr::scale(0.5, Expr::affine(op, Expr::pow(u, 2.0)));
    case ReductionRule::W2Wx:
      return Expr::scale(1.0 / 3.0, Expr::affine(op, Expr::pow(u, 3.0)));
    case ReductionRule::Wx2pWWxx:
      return Expr::scale(0.5, Expr::affine(op, Expr::pow(u, 2.0)));
    case ReductionRule::ProductUH:
      throw std::invalid_argument("reduce_nonlinear: productUH needs the second state");
  }
  throw std::logic_error("reduce_nonlinear: unreachable");
}

Expr reduce_nonlinear(ReductionRule rule, const ReducedOperator& op, const Vector& h) {
  if (rule != ReductionRule::ProductUH) {
    throw std::invalid_argument("reduce_nonlinear: only productUH takes a second state");
  }
  const std::size_t n = op.B.rows();
  return Expr::affine(op, Expr::mul({Expr::var(n), Expr::constant(h)}));
}

}  // namespace dqdc
