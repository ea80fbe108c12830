#include "facekit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace facekit {

namespace {

void check_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

bool Vec::is_zero() const {
  for (const Rat& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  check_dim(a, b);
  std::vector<Rat> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return Vec(std::move(out));
}

Vec operator-(const Vec& a, const Vec& b) {
  check_dim(a, b);
  std::vector<Rat> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return Vec(std::move(out));
}

Vec operator*(const Rat& s, const Vec& v) {
  std::vector<Rat> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return Vec(std::move(out));
}

Vec operator-(const Vec& v) { return Rat(-1) * v; }

Rat dot(const Vec& a, const Vec& b) {
  check_dim(a, b);
  Rat acc(0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), rows[0].dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].dim() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::row(std::size_t i) const {
  std::vector<Rat> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return Vec(std::move(out));
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

Vec mat_vec(const Mat& m, const Vec& x) {
  if (m.cols() != x.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return Vec(std::move(out));
}

std::vector<std::size_t> rref_inplace(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t sel = pr;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(pr, sel);
    Rat inv = Rat(1) / m(pr, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pr, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pr || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(pr, j);
    }
    pivots.push_back(col);
    ++pr;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref_inplace(m).size(); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.rows() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref_inplace(aug);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == a.cols()) return std::nullopt;  // pivot in the rhs column
  }
  Vec x(a.cols());
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug(p, a.cols());
  return x;
}

std::vector<Vec> nullspace(const Mat& a) {
  Mat m = a;
  auto pivots = rref_inplace(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

AffineSubspace::AffineSubspace(Vec base, std::vector<Vec> basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  for (const Vec& v : basis_) {
    if (v.dim() != base_.dim()) throw std::invalid_argument("dimension mismatch");
  }
  if (!basis_.empty() && rank(Mat::from_rows(basis_)) != basis_.size()) {
    throw std::invalid_argument("basis vectors linearly dependent");
  }
}

AffineSubspace AffineSubspace::single_point(Vec point) {
  return AffineSubspace(std::move(point), {});
}

bool AffineSubspace::contains(const Vec& x) const {
  if (x.dim() != base_.dim()) throw std::invalid_argument("dimension mismatch");
  return contains_direction(x - base_);
}

bool AffineSubspace::contains_direction(const Vec& v) const {
  if (v.is_zero()) return true;
  if (basis_.empty()) return false;
  // v in span(basis) iff stacking v does not raise the rank.
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rank(Mat::from_rows(rows)) == basis_.size();
}

std::pair<Mat, Vec> AffineSubspace::equations() const {
  // Rows n with n . d = 0 for every basis direction d.
  Mat d = basis_.empty() ? Mat(0, base_.dim()) : Mat::from_rows(basis_);
  std::vector<Vec> normals = nullspace(d);
  Mat n = normals.empty() ? Mat(0, base_.dim()) : Mat::from_rows(normals);
  Vec c(n.rows());
  for (std::size_t i = 0; i < n.rows(); ++i) c[i] = dot(n.row(i), base_);
  return {std::move(n), std::move(c)};
}

std::optional<AffineSubspace> AffineSubspace::from_equations(const Mat& n, const Vec& c) {
  if (n.rows() == 0) {
    // Whole space; the caller must know the ambient dimension from n.cols().
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < n.cols(); ++j) {
      Vec e(n.cols());
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return AffineSubspace(Vec(n.cols()), std::move(basis));
  }
  auto particular = solve(n, c);
  if (!particular) return std::nullopt;
  return AffineSubspace(*particular, nullspace(n));
}

std::optional<AffineSubspace> AffineSubspace::intersect(const AffineSubspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  auto [n1, c1] = equations();
  auto [n2, c2] = other.equations();
  Mat n(n1.rows() + n2.rows(), ambient_dim());
  Vec c(n1.rows() + n2.rows());
  for (std::size_t i = 0; i < n1.rows(); ++i) {
    for (std::size_t j = 0; j < ambient_dim(); ++j) n(i, j) = n1(i, j);
    c[i] = c1[i];
  }
  for (std::size_t i = 0; i < n2.rows(); ++i) {
    for (std::size_t j = 0; j < ambient_dim(); ++j) n(n1.rows() + i, j) = n2(i, j);
    c[n1.rows() + i] = c2[i];
  }
  if (n.rows() == 0) {
    // Both are the whole space.
    return *this;
  }
  return from_equations(n, c);
}

bool AffineSubspace::operator==(const AffineSubspace& other) const {
  if (ambient_dim() != other.ambient_dim() || dim() != other.dim()) return false;
  if (!other.contains(base_)) return false;
  for (const Vec& v : basis_) {
    if (!other.contains_direction(v)) return false;
  }
  return true;
}

AffineSubspace affine_hull(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
  if (dirs.empty()) return AffineSubspace::single_point(points[0]);
  Mat m = Mat::from_rows(dirs);
  auto pivots = rref_inplace(m);
  std::vector<Vec> basis;
  for (std::size_t p = 0; p < pivots.size(); ++p) basis.push_back(m.row(p));
  return AffineSubspace(points[0], std::move(basis));
}

SegmentClass segment_classify(const Vec& x, const Vec& a, const Vec& b) {
  if (x.dim() != a.dim() || a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a == b) return x == a ? SegmentClass::Endpoint : SegmentClass::NotOnLine;
  Vec d = b - a;
  Vec r = x - a;
  // lambda from the first nonzero coordinate of d, verified componentwise.
  std::size_t k = 0;
  while (d[k] == 0) ++k;
  Rat lambda = r[k] / d[k];
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (r[i] != lambda * d[i]) return SegmentClass::NotOnLine;
  }
  if (lambda == 0 || lambda == 1) return SegmentClass::Endpoint;
  if (lambda > 0 && lambda < 1) return SegmentClass::OpenInterior;
  return SegmentClass::OutsideSegment;
}

}  // namespace facekit
