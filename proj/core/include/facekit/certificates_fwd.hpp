#ifndef FACEKIT_CERTIFICATES_FWD_HPP
#define FACEKIT_CERTIFICATES_FWD_HPP

#include "facekit/convex_set.hpp"

namespace facekit {

/// A rational eps > 0 witnessing x + eps (x - y) in K; the atom of the
/// one-sided step test. Carries its parent set so verification is
/// self-contained.
struct EpsCertificate {
  ConvexSetPtr parent;
  Vec base;    // x
  Vec target;  // y
  Rat eps;

  Vec stepped() const { return base + eps * (base - target); }

  /// eps > 0, base and target in the parent, and the stepped point in the
  /// parent, all by exact membership.
  bool verify() const;
};

}  // namespace facekit

#endif
