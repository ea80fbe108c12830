#include "facekit/convex_set.hpp"

#include <stdexcept>

namespace facekit {

void HPolyhedron::push_row(Vec a, Rat rhs, Rel r) {
  if (r == Rel::Lt) throw std::invalid_argument("HPolyhedron rows are Le or Eq");
  LinearSystem s{std::move(A), std::move(b), std::move(rel)};
  s.push_row(std::move(a), std::move(rhs), r);
  A = std::move(s.A);
  b = std::move(s.b);
  rel = std::move(s.rel);
}

HPolyhedron HPolyhedron::empty_of_dim(std::size_t d) {
  HPolyhedron k;
  k.A = Mat(1, d);
  k.b = {Rat(-1)};
  k.rel = {Rel::Le};
  return k;
}

ConvexSetPtr make_set(HPolyhedron h) { return std::make_shared<const ConvexSet>(std::move(h)); }
ConvexSetPtr make_set(VPolytope v) { return std::make_shared<const ConvexSet>(std::move(v)); }

std::size_t set_dim(const ConvexSet& k) {
  return std::visit([](const auto& s) { return s.dim(); }, k);
}

bool set_contains(const ConvexSet& k, const Vec& x) {
  if (const auto* h = std::get_if<HPolyhedron>(&k)) return h->contains(x);
  return vpolytope_contains(std::get<VPolytope>(k), x);
}

namespace {

// System over weights lambda (n vars): sum lambda_j v_j = target,
// sum lambda = 1, lambda >= 0. Extra columns can be appended by callers.
LinearSystem combination_system(const VPolytope& k, const Vec& target, std::size_t extra_cols) {
  const std::size_t n = k.vertices.size();
  const std::size_t d = k.dim();
  LinearSystem sys;
  sys.A = Mat(0, n + extra_cols);
  for (std::size_t coord = 0; coord < d; ++coord) {
    Vec row(n + extra_cols);
    for (std::size_t j = 0; j < n; ++j) row[j] = k.vertices[j][coord];
    sys.push_row(std::move(row), target[coord], Rel::Eq);
  }
  {
    Vec row(n + extra_cols);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1;
    sys.push_row(std::move(row), Rat(1), Rel::Eq);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(n + extra_cols);
    row[j] = -1;
    sys.push_row(std::move(row), Rat(0), Rel::Le);
  }
  return sys;
}

}  // namespace

bool vpolytope_contains(const VPolytope& k, const Vec& x) {
  if (k.empty()) return false;
  if (x.dim() != k.dim()) throw std::invalid_argument("dimension mismatch");
  LinearSystem sys = combination_system(k, x, 0);
  return lp_feasible(sys).status == LpResult::Status::Feasible;
}

StepResult max_step(const HPolyhedron& k, const Vec& x, const Vec& dir) {
  return max_step(k.system(), x, dir);
}

StepResult max_step(const VPolytope& k, const Vec& x, const Vec& dir) {
  if (!vpolytope_contains(k, x)) throw std::invalid_argument("basepoint outside set");
  StepResult out;
  if (dir.is_zero()) {
    out.kind = StepResult::Kind::Unbounded;
    return out;
  }
  const std::size_t n = k.vertices.size();
  // Weights plus the step size eps as the last column:
  // sum lambda v - eps dir = x, eps >= 0, maximize eps.
  LinearSystem sys = combination_system(k, x, 1);
  for (std::size_t coord = 0; coord < k.dim(); ++coord) sys.A(coord, n) = -dir[coord];
  {
    Vec row(n + 1);
    row[n] = -1;
    sys.push_row(std::move(row), Rat(0), Rel::Le);
  }
  Vec obj(n + 1);
  obj[n] = 1;
  LpResult r = lp_feasible(sys, obj);
  if (r.status == LpResult::Status::Unbounded) {
    out.kind = StepResult::Kind::Unbounded;
    return out;
  }
  if (r.status != LpResult::Status::Feasible) throw std::logic_error("max_step: basepoint vanished");
  if (*r.optimum == 0) {
    out.kind = StepResult::Kind::Zero;
    return out;
  }
  out.kind = StepResult::Kind::Bounded;
  out.eps_max = *r.optimum;
  return out;
}

StepResult max_step(const ConvexSet& k, const Vec& x, const Vec& dir) {
  return std::visit([&](const auto& s) { return max_step(s, x, dir); }, k);
}

ImplicitEqualities implicit_equalities(const HPolyhedron& k) {
  LinearSystem sys = k.system();
  LpResult feas = lp_feasible(sys);
  if (feas.status != LpResult::Status::Feasible) throw std::invalid_argument("empty polyhedron");
  Vec w = feas.witness;

  std::vector<std::size_t> implicit;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (k.rel[i] != Rel::Le) continue;
    if (sys.slack(i, w) > 0) continue;
    // Maximize the slack of row i over K: implicit iff the maximum is 0.
    Vec obj(k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j) obj[j] = -k.A(i, j);
    LpResult r = lp_feasible(sys, obj);
    if (r.status == LpResult::Status::Unbounded) {
      // Slack unbounded above; fold the improving ray into the witness.
      w = w + r.ray;
      continue;
    }
    Rat best_slack = k.b[i] + *r.optimum;
    if (best_slack == 0) {
      implicit.push_back(i);
    } else {
      // Midpoint keeps every previously strict row strict and makes row i
      // strict, so later rows often resolve without an LP.
      w = Rat(1, 2) * (w + r.witness);
    }
  }

  // aff(K) = solution set of explicit plus implicit equalities.
  std::vector<Vec> eq_rows;
  std::vector<Rat> eq_rhs;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (k.rel[i] == Rel::Eq) {
      eq_rows.push_back(k.A.row(i));
      eq_rhs.push_back(k.b[i]);
    }
  }
  for (std::size_t i : implicit) {
    eq_rows.push_back(k.A.row(i));
    eq_rhs.push_back(k.b[i]);
  }
  Mat n = eq_rows.empty() ? Mat(0, k.dim()) : Mat::from_rows(eq_rows);
  Vec c(eq_rhs);
  auto aff = AffineSubspace::from_equations(n, c);
  if (!aff) throw std::logic_error("implicit equality system inconsistent on nonempty K");
  return ImplicitEqualities{std::move(implicit), std::move(*aff)};
}

AffineSubspace vpolytope_affine_hull(const VPolytope& k) {
  if (k.empty()) throw std::invalid_argument("empty polyhedron");
  return affine_hull(k.vertices);
}

}  // namespace facekit
