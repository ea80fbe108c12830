#ifndef FACEKIT_LINALG_HPP
#define FACEKIT_LINALG_HPP

#include "facekit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace facekit {

/// Dense exact-rational vector of fixed dimension. Immutable use is the
/// norm: operations return fresh values. Dimensions stay at desk scale
/// (d <= 8), so dense storage is the right shape.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim, Rat(0)) {}
  Vec(std::initializer_list<Rat> init) : coords_(init) {}
  explicit Vec(std::vector<Rat> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }

  bool operator==(const Vec& other) const { return coords_ == other.coords_; }
  bool operator!=(const Vec& other) const { return coords_ != other.coords_; }

  bool is_zero() const;

  const std::vector<Rat>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

 private:
  std::vector<Rat> coords_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
Vec operator-(const Vec& v);
Rat dot(const Vec& a, const Vec& b);

/// Dense exact-rational matrix, row major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void swap_rows(std::size_t i, std::size_t j);

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

Vec mat_vec(const Mat& m, const Vec& x);

/// In-place reduced row echelon form. Returns the pivot column per pivot
/// row, in order; rank is the number of pivots.
std::vector<std::size_t> rref_inplace(Mat& m);

std::size_t rank(Mat m);

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Basis of {x : A x = 0}.
std::vector<Vec> nullspace(const Mat& a);

/// Affine subspace {base + span(basis)} of Q^d with exact membership.
/// The basis is kept linearly independent.
class AffineSubspace {
 public:
  AffineSubspace(Vec base, std::vector<Vec> basis);
  static AffineSubspace single_point(Vec point);

  std::size_t ambient_dim() const { return base_.dim(); }
  std::size_t dim() const { return basis_.size(); }
  const Vec& base() const { return base_; }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& x) const;
  bool contains_direction(const Vec& v) const;

  /// Equation form {x : N x = c}; N has full row rank.
  std::pair<Mat, Vec> equations() const;

  /// Solution set of N x = c as a subspace; nullopt when the system is
  /// inconsistent (empty set).
  static std::optional<AffineSubspace> from_equations(const Mat& n, const Vec& c);

  std::optional<AffineSubspace> intersect(const AffineSubspace& other) const;

  /// Point-set equality.
  bool operator==(const AffineSubspace& other) const;

 private:
  Vec base_;
  std::vector<Vec> basis_;
};

/// Affine hull of a nonempty point set. Throws std::invalid_argument on
/// empty input ("empty point set").
AffineSubspace affine_hull(const std::vector<Vec>& points);

enum class SegmentClass { NotOnLine, Endpoint, OpenInterior, OutsideSegment };

/// Classifies x against the segment with endpoints a, b. A degenerate
/// segment (a == b) yields Endpoint iff x == a.
SegmentClass segment_classify(const Vec& x, const Vec& a, const Vec& b);

}  // namespace facekit

#endif
