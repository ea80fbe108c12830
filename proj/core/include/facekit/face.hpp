#ifndef FACEKIT_FACE_HPP
#define FACEKIT_FACE_HPP

#include "facekit/certificates_fwd.hpp"
#include "facekit/convex_set.hpp"
#include "facekit/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace facekit {

/// A nonempty face of a polyhedral convex set, stored canonically: the
/// H-representation keeps every row that is tight on the whole face
/// (saturated), the V-representation keeps every listed generator point
/// that lies on the face. Descriptor equality is then point-set equality.
struct FaceDescriptor {
  ConvexSetPtr parent;
  std::vector<std::size_t> forced_eq;      // H-rep: saturated tight-row set, sorted
  std::vector<std::size_t> vertex_subset;  // V-rep: saturated generator set, sorted

  bool is_h() const { return std::holds_alternative<HPolyhedron>(*parent); }

  /// Closed system of the face (H-rep only): forced rows as equalities.
  LinearSystem closed_system() const;

  /// Exact membership in the face point set.
  bool contains_point(const Vec& x) const;

  /// Same parent object and same saturated index set.
  bool same_face(const FaceDescriptor& other) const;
};

/// rai(face): forced equalities plus strict complementary rows (H-rep), or
/// all-positive combinations of the vertex subset (V-rep). This is the
/// d-face generated by any of its points.
struct RelOpenCell {
  FaceDescriptor face;
  std::vector<std::size_t> strict;  // H-rep: all non-forced rows, sorted

  /// Mixed system with Lt rows (H-rep only).
  LinearSystem open_system() const;

  bool contains_point(const Vec& x) const;
  bool same_cell(const RelOpenCell& other) const { return face.same_face(other.face); }
};

/// A union of rai-cells over a common parent; per the d-extreme
/// characterization such unions are exactly the d-extreme sets.
struct ExtremeSetDescriptor {
  std::vector<RelOpenCell> cells;
};

/// Smallest face of K containing x, computed from the rows active at x
/// (H-rep) or as the saturated generator subset whose hull's relative
/// algebraic interior contains x (V-rep). Throws when x is outside K.
FaceDescriptor face_of_point(const ConvexSetPtr& k, const Vec& x);

struct AlfsenResult {
  bool member = false;
  std::optional<EpsCertificate> cert;  // member only
};

/// Membership of y in the face generated by x, decided by the one-sided
/// step test: member iff sup { eps : x + eps (x - y) in K } is positive.
/// The certificate eps is eps_max/2 (bounded) or 1 (unbounded).
AlfsenResult face_membership_alfsen(const ConvexSetPtr& k, const Vec& x, const Vec& y);

/// Internal-point test: every non-implicit inequality is strict at x.
bool rai_contains(const ConvexSetPtr& k, const Vec& x);

/// aff(F_K(x)), the two-sided step cone at x.
AffineSubspace face_affine_hull(const ConvexSetPtr& k, const Vec& x);

/// Smallest face containing S, computed as the face generated by the
/// equal-weights centroid of S.
FaceDescriptor face_of_set(const ConvexSetPtr& k, const std::vector<Vec>& s);

struct FaceIntersection {
  ConvexSetPtr stacked;             // K cap L as one H-system
  FaceDescriptor in_intersection;   // F_{K cap L}(x)
  FaceDescriptor in_k;              // F_K(x)
  FaceDescriptor in_l;              // F_L(x)
};

/// Faces of x in K, L and the stacked system K cap L (H-polyhedra only).
FaceIntersection face_intersect(const ConvexSetPtr& k, const ConvexSetPtr& l, const Vec& x);

struct ImageFaceResult {
  ConvexSetPtr image;      // hull of the mapped generator points
  Vec image_point;         // alpha(x)
  RelOpenCell image_cell;  // d-face of alpha(x) in the image
  std::size_t samples_checked = 0;
  bool all_samples_in_cell = false;
};

/// Pushes the d-face of x through the affine map y -> M y + t (V-rep
/// parents only) and verifies on samples that rai points map into the
/// rai of the image face.
ImageFaceResult image_face(const ConvexSetPtr& k, const Mat& m, const Vec& t, const Vec& x,
                           RngEngine& rng, std::size_t samples = 50);

/// The d-face generated by x: rai(F_K(x)). Its membership test holds at x.
RelOpenCell d_face_of_point(const ConvexSetPtr& k, const Vec& x);

/// All distinct nonempty faces of a V-polytope with at most 12 listed
/// generator points; brute force over generator subsets with dedup.
/// Includes every vertex face and K itself.
std::vector<FaceDescriptor> enumerate_faces(const ConvexSetPtr& k);

/// rai of every enumerated face; a partition of K.
std::vector<RelOpenCell> partition_cells(const ConvexSetPtr& k);

enum class ExtremeSetKind { ExtremeAndDextreme, DextremeOnly, NeitherReport };

struct ExtremeSetVerdict {
  ExtremeSetKind kind;
  std::string report;  // missing subface cells, or the validation failure
};

/// Any union of cells is d-extreme; it is extreme iff the full closed face
/// of each cell (all its subfaces) is covered, checked on the enumerated
/// lattice (V-rep parents).
ExtremeSetVerdict is_extreme_set(const ConvexSetPtr& k, const ExtremeSetDescriptor& e);

/// The face of K generated by the subpolytope C: the union of the faces
/// generated by the points of C, as an extreme-set descriptor listing the
/// cells of all its subfaces.
ExtremeSetDescriptor union_of_generated_faces(const ConvexSetPtr& k, const VPolytope& c);

/// True iff the cell, viewed as a convex set of its own, has exactly the
/// two faces (empty and itself): sampled points must all generate the whole
/// cell, the forced set never grows.
bool two_face_check(const RelOpenCell& cell, RngEngine& rng, std::size_t samples = 50);

// Deterministic seeded sampling helpers.

/// A point of K (vertex-biased so boundary faces get exercised).
Vec sample_set_point(RngEngine& rng, const ConvexSetPtr& k);

/// A point of the face.
Vec sample_face_point(RngEngine& rng, const FaceDescriptor& f);

/// A point of the cell (relative algebraic interior of the face).
Vec sample_cell_point(RngEngine& rng, const RelOpenCell& cell);

/// A relative-interior point of K, or nullopt when K is empty.
std::optional<Vec> rai_point(const ConvexSetPtr& k);

}  // namespace facekit

#endif
