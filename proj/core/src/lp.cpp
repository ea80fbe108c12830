#include "facekit/lp.hpp"

#include <limits>
#include <stdexcept>

namespace facekit {

bool LinearSystem::contains(const Vec& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < rows(); ++i) {
    Rat s = slack(i, x);
    switch (rel[i]) {
      case Rel::Le:
        if (s < 0) return false;
        break;
      case Rel::Eq:
        if (s != 0) return false;
        break;
      case Rel::Lt:
        if (s <= 0) return false;
        break;
    }
  }
  return true;
}

Rat LinearSystem::slack(std::size_t row, const Vec& x) const {
  Rat acc = b[row];
  for (std::size_t j = 0; j < dim(); ++j) acc -= A(row, j) * x[j];
  return acc;
}

void LinearSystem::push_row(Vec a, Rat rhs, Rel r) {
  Mat next(A.rows() + 1, a.dim());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) next(i, j) = A(i, j);
  }
  for (std::size_t j = 0; j < a.dim(); ++j) next(A.rows(), j) = a[j];
  A = std::move(next);
  b.push_back(std::move(rhs));
  rel.push_back(r);
}

LinearSystem LinearSystem::stacked(const LinearSystem& top, const LinearSystem& bottom) {
  if (top.dim() != bottom.dim()) throw std::invalid_argument("dimension mismatch");
  LinearSystem out;
  out.A = Mat(top.rows() + bottom.rows(), top.dim());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.dim(); ++j) out.A(i, j) = top.A(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < top.dim(); ++j) out.A(top.rows() + i, j) = bottom.A(i, j);
  }
  out.b = top.b;
  out.b.insert(out.b.end(), bottom.b.begin(), bottom.b.end());
  out.rel = top.rel;
  out.rel.insert(out.rel.end(), bottom.rel.begin(), bottom.rel.end());
  return out;
}

namespace {

// Dense simplex tableau over standard form  min c.y  s.t.  T y = rhs, y >= 0.
// Basis columns are kept as unit columns by Gauss-Jordan pivoting; reduced
// costs are recomputed per scan, which is cheap at desk scale.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n)
      : m_(m), n_(n), rows_(m, std::vector<Rat>(n + 1, Rat(0))), basis_(m, 0) {}

  Rat& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rat& rhs(std::size_t i) { return rows_[i][n_]; }
  const Rat& rhs(std::size_t i) const { return rows_[i][n_]; }

  std::size_t vars() const { return n_; }
  std::size_t cons() const { return m_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rat inv = Rat(1) / rows_[pr][pc];
    if (inv != 1) {
      for (Rat& v : rows_[pr]) v *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == pr) continue;
      Rat f = rows_[i][pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (rows_[pr][j] != 0) rows_[i][j] -= f * rows_[pr][j];
      }
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  // Physically removes the columns marked true, remapping basis indices.
  void drop_columns(const std::vector<bool>& remove) {
    std::vector<std::size_t> remap(n_, 0);
    std::size_t next = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      remap[j] = next;
      if (!remove[j]) ++next;
    }
    for (auto& row : rows_) {
      std::vector<Rat> packed;
      packed.reserve(next + 1);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!remove[j]) packed.push_back(std::move(row[j]));
      }
      packed.push_back(std::move(row[n_]));
      row = std::move(packed);
    }
    for (std::size_t& bi : basis_) bi = remap[bi];
    n_ = next;
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { Optimal, Unbounded };

// Minimizes cost over the tableau with Bland's rule. cost is indexed by
// tableau variable. On return the tableau holds the final basis; when the
// problem is unbounded the entering column index is reported.
PhaseOutcome run_simplex(Tableau& t, const std::vector<Rat>& cost, std::size_t& unbounded_col) {
  const std::size_t m = t.cons();
  const std::size_t n = t.vars();
  for (;;) {
    // Reduced costs r_j = c_j - c_B . column_j; scan for the least-index
    // negative entry (Bland).
    std::size_t enter = n;
    for (std::size_t j = 0; j < n && enter == n; ++j) {
      Rat r = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (cost[t.basis()[i]] != 0 && t.at(i, j) != 0) r -= cost[t.basis()[i]] * t.at(i, j);
      }
      if (r < 0) enter = j;
    }
    if (enter == n) return PhaseOutcome::Optimal;

    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.at(i, enter) <= 0) continue;
      Rat ratio = t.rhs(i) / t.at(i, enter);
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis()[i] < t.basis()[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      unbounded_col = enter;
      return PhaseOutcome::Unbounded;
    }
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult lp_feasible(const LinearSystem& sys, const std::optional<Vec>& maximize) {
  const std::size_t m = sys.rows();
  const std::size_t d = sys.dim();
  if (maximize && maximize->dim() != d) throw std::invalid_argument("objective dimension mismatch");

  // Standard form variables: x+ (d), x- (d), one slack per Le/Lt row,
  // then one artificial per row.
  std::size_t n_slack = 0;
  for (Rel r : sys.rel) {
    if (r != Rel::Eq) ++n_slack;
  }
  const std::size_t n_struct = 2 * d + n_slack;
  const std::size_t n_total = n_struct + m;

  Tableau t(m, n_total);
  {
    std::size_t slack_at = 2 * d;
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = sys.b[i] < 0;
      const Rat s = flip ? Rat(-1) : Rat(1);
      for (std::size_t j = 0; j < d; ++j) {
        t.at(i, j) = s * sys.A(i, j);
        t.at(i, d + j) = -s * sys.A(i, j);
      }
      if (sys.rel[i] != Rel::Eq) {
        t.at(i, slack_at++) = s;
      }
      t.at(i, n_struct + i) = 1;
      t.rhs(i) = s * sys.b[i];
      t.basis()[i] = n_struct + i;
    }
  }

  // Phase 1: drive the artificials to zero.
  {
    std::vector<Rat> cost(n_total, Rat(0));
    for (std::size_t i = 0; i < m; ++i) cost[n_struct + i] = 1;
    std::size_t unused = 0;
    run_simplex(t, cost, unused);  // bounded below by 0, never unbounded
    Rat value(0);
    for (std::size_t i = 0; i < t.cons(); ++i) {
      if (t.basis()[i] >= n_struct) value += t.rhs(i);
    }
    if (value != 0) {
      LpResult out;
      out.status = LpResult::Status::Infeasible;
      return out;
    }
    // Pivot leftover artificials out of the basis, dropping redundant rows.
    for (std::size_t i = t.cons(); i-- > 0;) {
      if (t.basis()[i] < n_struct) continue;
      std::size_t col = n_struct;
      for (std::size_t j = 0; j < n_struct && col == n_struct; ++j) {
        if (t.at(i, j) != 0) col = j;
      }
      if (col == n_struct) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
      }
    }
    std::vector<bool> remove(t.vars(), false);
    for (std::size_t j = n_struct; j < t.vars(); ++j) remove[j] = true;
    t.drop_columns(remove);
  }

  auto extract_point = [&](const Tableau& tt) {
    Vec x(d);
    for (std::size_t i = 0; i < tt.cons(); ++i) {
      std::size_t v = tt.basis()[i];
      if (v < d) x[v] += tt.rhs(i);
      else if (v < 2 * d) x[v - d] -= tt.rhs(i);
    }
    return x;
  };

  LpResult out;
  out.status = LpResult::Status::Feasible;

  if (!maximize) {
    out.witness = extract_point(t);
    return out;
  }

  // Phase 2: maximize f.x == minimize (-f).x+ + f.x-.
  std::vector<Rat> cost(t.vars(), Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    cost[j] = -(*maximize)[j];
    cost[d + j] = (*maximize)[j];
  }
  std::size_t unbounded_col = 0;
  PhaseOutcome ph = run_simplex(t, cost, unbounded_col);
  if (ph == PhaseOutcome::Optimal) {
    out.witness = extract_point(t);
    out.optimum = dot(*maximize, out.witness);
    return out;
  }

  // Unbounded: the entering variable direction is a recession ray.
  out.status = LpResult::Status::Unbounded;
  out.witness = extract_point(t);
  Vec ray(d);
  if (unbounded_col < d) ray[unbounded_col] += 1;
  else if (unbounded_col < 2 * d) ray[unbounded_col - d] -= 1;
  for (std::size_t i = 0; i < t.cons(); ++i) {
    std::size_t v = t.basis()[i];
    const Rat& coef = t.at(i, unbounded_col);
    if (coef == 0) continue;
    if (v < d) ray[v] -= coef;
    else if (v < 2 * d) ray[v - d] += coef;
  }
  out.ray = std::move(ray);
  return out;
}

std::optional<std::pair<Vec, Rat>> relative_interior_point(const LinearSystem& sys) {
  const std::size_t d = sys.dim();
  // Auxiliary variable s: maximize s subject to a_i . x + s <= b_i on every
  // Le/Lt row, equalities unchanged, and s <= 1 to keep the LP bounded.
  LinearSystem aux;
  aux.A = Mat(0, d + 1);
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    Vec row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = sys.A(i, j);
    if (sys.rel[i] == Rel::Eq) {
      aux.push_row(std::move(row), sys.b[i], Rel::Eq);
    } else {
      row[d] = 1;
      aux.push_row(std::move(row), sys.b[i], Rel::Le);
    }
  }
  {
    Vec cap(d + 1);
    cap[d] = 1;
    aux.push_row(std::move(cap), Rat(1), Rel::Le);
  }
  Vec obj(d + 1);
  obj[d] = 1;
  LpResult r = lp_feasible(aux, obj);
  if (r.status != LpResult::Status::Feasible) return std::nullopt;
  if (*r.optimum <= 0) return std::nullopt;
  Vec x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = r.witness[j];
  return std::make_pair(std::move(x), *r.optimum);
}

StepResult max_step(const LinearSystem& sys, const Vec& x, const Vec& dir) {
  if (!sys.contains(x)) throw std::invalid_argument("basepoint outside set");
  if (dir.dim() != sys.dim()) throw std::invalid_argument("dimension mismatch");

  StepResult out;
  if (dir.is_zero()) {
    out.kind = StepResult::Kind::Unbounded;
    return out;
  }

  bool has_bound = false;
  Rat bound;
  bool attained = true;
  for (std::size_t i = 0; i < sys.rows(); ++i) {
    Rat g = dot(sys.A.row(i), dir);
    if (sys.rel[i] == Rel::Eq) {
      if (g != 0) {
        out.kind = StepResult::Kind::Zero;
        return out;
      }
      continue;
    }
    if (g <= 0) continue;
    Rat ratio = sys.slack(i, x) / g;
    const bool open = sys.rel[i] == Rel::Lt;
    if (!has_bound || ratio < bound) {
      has_bound = true;
      bound = ratio;
      attained = !open;
    } else if (ratio == bound && open) {
      attained = false;
    }
  }
  if (!has_bound) {
    out.kind = StepResult::Kind::Unbounded;
    return out;
  }
  if (bound == 0) {
    out.kind = StepResult::Kind::Zero;
    return out;
  }
  out.kind = StepResult::Kind::Bounded;
  out.eps_max = std::move(bound);
  out.attained = attained;
  return out;
}

}  // namespace facekit
