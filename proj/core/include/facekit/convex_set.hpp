#ifndef FACEKIT_CONVEX_SET_HPP
#define FACEKIT_CONVEX_SET_HPP

#include "facekit/lp.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace facekit {

/// Convex polyhedron {y : a_i . y <= b_i or = b_i per row}. The computable
/// stand-in for a general convex set; emptiness is a valid value.
struct HPolyhedron {
  Mat A;
  std::vector<Rat> b;
  std::vector<Rel> rel;  // Le or Eq per row

  std::size_t dim() const { return A.cols(); }
  std::size_t rows() const { return A.rows(); }
  LinearSystem system() const { return LinearSystem{A, b, rel}; }
  bool contains(const Vec& x) const { return system().contains(x); }

  void push_row(Vec a, Rat rhs, Rel r = Rel::Le);
  static HPolyhedron empty_of_dim(std::size_t d);
};

/// Convex hull of a finite generator list. The list may contain redundant
/// points; descriptors always saturate to every listed point on a face.
struct VPolytope {
  std::vector<Vec> vertices;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
  bool empty() const { return vertices.empty(); }
};

using ConvexSet = std::variant<HPolyhedron, VPolytope>;
using ConvexSetPtr = std::shared_ptr<const ConvexSet>;

ConvexSetPtr make_set(HPolyhedron h);
ConvexSetPtr make_set(VPolytope v);

std::size_t set_dim(const ConvexSet& k);
bool set_contains(const ConvexSet& k, const Vec& x);
inline bool set_contains(const ConvexSetPtr& k, const Vec& x) { return set_contains(*k, x); }

/// Membership in conv(vertices) decided by LP (x as a convex combination).
bool vpolytope_contains(const VPolytope& k, const Vec& x);

/// sup { eps >= 0 : x + eps dir in K } by exact ratio test.
StepResult max_step(const HPolyhedron& k, const Vec& x, const Vec& dir);

/// Same quantity for a V-polytope, decided by one LP over combination
/// weights and the step size.
StepResult max_step(const VPolytope& k, const Vec& x, const Vec& dir);

StepResult max_step(const ConvexSet& k, const Vec& x, const Vec& dir);

struct ImplicitEqualities {
  /// Le rows satisfied with equality by every point of K.
  std::vector<std::size_t> rows;
  /// aff(K), the solution set of the implicit plus explicit equalities.
  AffineSubspace aff;
};

/// One slack-maximizing LP per undecided row; throws
/// std::invalid_argument("empty polyhedron") when K is empty.
ImplicitEqualities implicit_equalities(const HPolyhedron& k);

/// Affine hull of a V-polytope (hull of its generator list).
AffineSubspace vpolytope_affine_hull(const VPolytope& k);

}  // namespace facekit

#endif
