#ifndef FACEKIT_LP_HPP
#define FACEKIT_LP_HPP

#include "facekit/linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace facekit {

/// Row relation of a linear system. Lt rows appear only in relatively open
/// cell systems; the LP kernel solves over the closure (Lt treated as Le)
/// and strictness is recovered through relative_interior_point.
enum class Rel { Le, Eq, Lt };

/// A finite system of rational linear rows a_i . x rel b_i.
struct LinearSystem {
  Mat A;
  std::vector<Rat> b;
  std::vector<Rel> rel;

  std::size_t dim() const { return A.cols(); }
  std::size_t rows() const { return A.rows(); }

  /// Exact membership, honoring Lt rows strictly.
  bool contains(const Vec& x) const;

  /// Slack b_i - a_i . x of one row.
  Rat slack(std::size_t row, const Vec& x) const;

  void push_row(Vec a, Rat rhs, Rel r);

  /// Both systems stacked over a common ambient dimension.
  static LinearSystem stacked(const LinearSystem& top, const LinearSystem& bottom);
};

struct LpResult {
  enum class Status { Feasible, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  /// Feasible: a point of the system (an optimizer when an objective was
  /// given). Unbounded: the last feasible point visited.
  Vec witness;
  /// Objective value at the witness when an objective was maximized to
  /// optimality.
  std::optional<Rat> optimum;
  /// Unbounded: a recession direction with objective . ray > 0.
  Vec ray;
};

/// Exact rational simplex over free variables with Bland's least-index
/// anti-cycling rule; deterministic across platforms. Solves the closure
/// of the system (Lt rows as Le). All outcomes are values, witnesses
/// re-verify by substitution.
LpResult lp_feasible(const LinearSystem& sys, const std::optional<Vec>& maximize = std::nullopt);

/// A point satisfying Eq rows with equality and every Le/Lt row strictly,
/// together with the uniform slack margin that was attained. nullopt when
/// no such point exists.
std::optional<std::pair<Vec, Rat>> relative_interior_point(const LinearSystem& sys);

struct StepResult {
  enum class Kind { Zero, Bounded, Unbounded };
  Kind kind = Kind::Zero;
  Rat eps_max;    // Bounded: sup { eps >= 0 : x + eps dir stays in the system }
  bool attained = true;  // false when the binding row is strict (Lt)
};

/// Exact ratio test along x + eps * dir. Requires contains(x); throws
/// std::invalid_argument("basepoint outside set") otherwise.
StepResult max_step(const LinearSystem& sys, const Vec& x, const Vec& dir);

}  // namespace facekit

#endif
