#include "facekit/face.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace facekit {

namespace {

const HPolyhedron& as_h(const ConvexSetPtr& k) {
  if (const auto* h = std::get_if<HPolyhedron>(k.get())) return *h;
  throw std::invalid_argument("operation requires an H-polyhedron parent");
}

const VPolytope& as_v(const ConvexSetPtr& k) {
  if (const auto* v = std::get_if<VPolytope>(k.get())) return *v;
  throw std::invalid_argument("operation requires a V-polytope parent");
}

bool is_v(const ConvexSetPtr& k) { return std::holds_alternative<VPolytope>(*k); }

std::vector<std::size_t> active_rows(const HPolyhedron& h, const Vec& x) {
  LinearSystem sys = h.system();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (sys.slack(i, x) == 0) out.push_back(i);
  }
  return out;
}

// System over weights lambda_j (j in subset) and the margin s:
// sum lambda v_j = x, sum lambda = 1, lambda_j >= 0, lambda_j >= s, s <= 1.
// max s > 0  iff  x lies in rai(conv subset).
std::optional<Rat> positive_rep_margin(const VPolytope& v, const std::vector<std::size_t>& subset,
                                       const Vec& x) {
  const std::size_t kcnt = subset.size();
  const std::size_t d = v.dim();
  LinearSystem sys;
  sys.A = Mat(0, kcnt + 1);
  for (std::size_t coord = 0; coord < d; ++coord) {
    Vec row(kcnt + 1);
    for (std::size_t j = 0; j < kcnt; ++j) row[j] = v.vertices[subset[j]][coord];
    sys.push_row(std::move(row), x[coord], Rel::Eq);
  }
  {
    Vec row(kcnt + 1);
    for (std::size_t j = 0; j < kcnt; ++j) row[j] = 1;
    sys.push_row(std::move(row), Rat(1), Rel::Eq);
  }
  for (std::size_t j = 0; j < kcnt; ++j) {
    Vec row(kcnt + 1);
    row[j] = -1;
    sys.push_row(std::move(row), Rat(0), Rel::Le);  // lambda_j >= 0
    Vec row2(kcnt + 1);
    row2[j] = -1;
    row2[kcnt] = 1;
    sys.push_row(std::move(row2), Rat(0), Rel::Le);  // s <= lambda_j
  }
  {
    Vec row(kcnt + 1);
    row[kcnt] = 1;
    sys.push_row(std::move(row), Rat(1), Rel::Le);  // s <= 1
  }
  Vec obj(kcnt + 1);
  obj[kcnt] = 1;
  LpResult r = lp_feasible(sys, obj);
  if (r.status != LpResult::Status::Feasible) return std::nullopt;
  return *r.optimum;
}

// Saturated generator subset of the face generated by x: the union of the
// supports of all convex representations of x. Grown by repeatedly
// maximizing the total weight outside the current support.
std::optional<std::vector<std::size_t>> v_closure(const VPolytope& v, const Vec& x) {
  const std::size_t n = v.vertices.size();
  const std::size_t d = v.dim();
  LinearSystem sys;
  sys.A = Mat(0, n);
  for (std::size_t coord = 0; coord < d; ++coord) {
    Vec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = v.vertices[j][coord];
    sys.push_row(std::move(row), x[coord], Rel::Eq);
  }
  {
    Vec row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = 1;
    sys.push_row(std::move(row), Rat(1), Rel::Eq);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec row(n);
    row[j] = -1;
    sys.push_row(std::move(row), Rat(0), Rel::Le);
  }
  LpResult r = lp_feasible(sys);
  if (r.status != LpResult::Status::Feasible) return std::nullopt;

  std::vector<bool> in(n, false);
  auto merge = [&](const Vec& w) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] > 0) in[j] = true;
    }
  };
  merge(r.witness);
  for (;;) {
    Vec obj(n);
    bool any_out = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!in[j]) {
        obj[j] = 1;
        any_out = true;
      }
    }
    if (!any_out) break;
    LpResult grow = lp_feasible(sys, obj);
    if (*grow.optimum == 0) break;
    merge(grow.witness);
  }
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < n; ++j) {
    if (in[j]) subset.push_back(j);
  }
  return subset;
}

std::uint32_t mask_of(const std::vector<std::size_t>& subset) {
  std::uint32_t m = 0;
  for (std::size_t j : subset) m |= (std::uint32_t{1} << j);
  return m;
}

std::vector<std::size_t> subset_of_mask(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (mask & (std::uint32_t{1} << j)) out.push_back(j);
  }
  return out;
}

Vec centroid(const std::vector<Vec>& pts) {
  Vec acc(pts.at(0).dim());
  for (const Vec& p : pts) acc = acc + p;
  return Rat(1, static_cast<long>(pts.size())) * acc;
}

Vec sample_system_point(RngEngine& rng, const LinearSystem& sys) {
  // Vertex-biased: collect one to three optimizer witnesses for random
  // objectives and mix them with random positive weights.
  std::size_t picks = 1 + gen_index(rng, 0, 2);
  std::vector<Vec> witnesses;
  for (std::size_t t = 0; t < picks; ++t) {
    Vec obj(sys.dim());
    for (std::size_t j = 0; j < sys.dim(); ++j) obj[j] = gen_rat(rng);
    LpResult r = lp_feasible(sys, obj);
    if (r.status == LpResult::Status::Infeasible) throw std::invalid_argument("empty polyhedron");
    witnesses.push_back(r.witness);
  }
  Rat total(0);
  std::vector<Rat> w(witnesses.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = gen_rat(rng, 1, 9, 9);
    total += w[i];
  }
  Vec out(sys.dim());
  for (std::size_t i = 0; i < w.size(); ++i) out = out + (w[i] / total) * witnesses[i];
  return out;
}

Vec sample_subset_combination(RngEngine& rng, const VPolytope& v,
                              const std::vector<std::size_t>& subset, bool all_positive) {
  std::vector<std::size_t> chosen = subset;
  if (!all_positive && subset.size() > 1) {
    // Drop a random (possibly empty) tail of generators.
    std::size_t keep = 1 + gen_index(rng, 0, subset.size() - 1);
    for (std::size_t i = subset.size(); i-- > 0 && chosen.size() > keep;) {
      if (gen_index(rng, 0, 1) == 0) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  Rat total(0);
  std::vector<Rat> w(chosen.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = gen_rat(rng, 1, 9, 9);
    total += w[i];
  }
  Vec out(v.dim());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    out = out + (w[i] / total) * v.vertices[chosen[i]];
  }
  return out;
}

}  // namespace

LinearSystem FaceDescriptor::closed_system() const {
  const HPolyhedron& h = as_h(parent);
  LinearSystem sys = h.system();
  for (std::size_t i : forced_eq) sys.rel[i] = Rel::Eq;
  return sys;
}

bool FaceDescriptor::contains_point(const Vec& x) const {
  if (is_h()) return closed_system().contains(x);
  const VPolytope& v = as_v(parent);
  VPolytope sub;
  for (std::size_t j : vertex_subset) sub.vertices.push_back(v.vertices[j]);
  return vpolytope_contains(sub, x);
}

bool FaceDescriptor::same_face(const FaceDescriptor& other) const {
  if (parent != other.parent) return false;
  return is_h() ? forced_eq == other.forced_eq : vertex_subset == other.vertex_subset;
}

LinearSystem RelOpenCell::open_system() const {
  const HPolyhedron& h = as_h(face.parent);
  LinearSystem sys = h.system();
  for (std::size_t i : face.forced_eq) sys.rel[i] = Rel::Eq;
  for (std::size_t i : strict) sys.rel[i] = Rel::Lt;
  return sys;
}

bool RelOpenCell::contains_point(const Vec& x) const {
  if (face.is_h()) return open_system().contains(x);
  const VPolytope& v = as_v(face.parent);
  auto margin = positive_rep_margin(v, face.vertex_subset, x);
  return margin.has_value() && *margin > 0;
}

FaceDescriptor face_of_point(const ConvexSetPtr& k, const Vec& x) {
  if (!set_contains(k, x)) throw std::invalid_argument("point outside set");
  FaceDescriptor f;
  f.parent = k;
  if (is_v(k)) {
    auto subset = v_closure(as_v(k), x);
    f.vertex_subset = std::move(*subset);
  } else {
    // The rows active at x are exactly the rows tight on the whole face
    // generated by x, so the descriptor is already saturated.
    f.forced_eq = active_rows(as_h(k), x);
  }
  return f;
}

AlfsenResult face_membership_alfsen(const ConvexSetPtr& k, const Vec& x, const Vec& y) {
  if (!set_contains(k, x) || !set_contains(k, y)) throw std::invalid_argument("point outside set");
  StepResult step = max_step(*k, x, x - y);
  AlfsenResult out;
  switch (step.kind) {
    case StepResult::Kind::Zero:
      out.member = false;
      return out;
    case StepResult::Kind::Bounded:
      out.member = true;
      out.cert = EpsCertificate{k, x, y, step.eps_max / 2};
      return out;
    case StepResult::Kind::Unbounded:
      out.member = true;
      out.cert = EpsCertificate{k, x, y, Rat(1)};
      return out;
  }
  return out;
}

bool rai_contains(const ConvexSetPtr& k, const Vec& x) {
  if (!set_contains(k, x)) throw std::invalid_argument("point outside set");
  if (is_v(k)) {
    const VPolytope& v = as_v(k);
    std::vector<std::size_t> all(v.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    auto margin = positive_rep_margin(v, all, x);
    return margin.has_value() && *margin > 0;
  }
  const HPolyhedron& h = as_h(k);
  ImplicitEqualities impl = implicit_equalities(h);
  LinearSystem sys = h.system();
  std::vector<bool> implicit(h.rows(), false);
  for (std::size_t i : impl.rows) implicit[i] = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.rel[i] == Rel::Le && !implicit[i] && sys.slack(i, x) == 0) return false;
  }
  return true;
}

AffineSubspace face_affine_hull(const ConvexSetPtr& k, const Vec& x) {
  FaceDescriptor f = face_of_point(k, x);
  if (f.is_h()) {
    const HPolyhedron& h = as_h(k);
    std::vector<Vec> rows;
    std::vector<Rat> rhs;
    for (std::size_t i : f.forced_eq) {
      rows.push_back(h.A.row(i));
      rhs.push_back(h.b[i]);
    }
    Mat n = rows.empty() ? Mat(0, h.dim()) : Mat::from_rows(rows);
    auto aff = AffineSubspace::from_equations(n, Vec(rhs));
    if (!aff) throw std::logic_error("face equation system inconsistent");
    return *aff;
  }
  const VPolytope& v = as_v(k);
  std::vector<Vec> pts;
  for (std::size_t j : f.vertex_subset) pts.push_back(v.vertices[j]);
  return affine_hull(pts);
}

FaceDescriptor face_of_set(const ConvexSetPtr& k, const std::vector<Vec>& s) {
  if (s.empty()) throw std::invalid_argument("empty point set");
  for (const Vec& p : s) {
    if (!set_contains(k, p)) throw std::invalid_argument("point outside set");
  }
  return face_of_point(k, centroid(s));
}

FaceIntersection face_intersect(const ConvexSetPtr& k, const ConvexSetPtr& l, const Vec& x) {
  const HPolyhedron& hk = as_h(k);
  const HPolyhedron& hl = as_h(l);
  if (hk.dim() != hl.dim()) throw std::invalid_argument("dimension mismatch");
  HPolyhedron stacked;
  stacked.A = Mat(hk.rows() + hl.rows(), hk.dim());
  LinearSystem st = LinearSystem::stacked(hk.system(), hl.system());
  stacked.A = std::move(st.A);
  stacked.b = std::move(st.b);
  stacked.rel = std::move(st.rel);
  if (!stacked.contains(x)) throw std::invalid_argument("point outside intersection");
  FaceIntersection out;
  out.stacked = make_set(std::move(stacked));
  out.in_intersection = face_of_point(out.stacked, x);
  out.in_k = face_of_point(k, x);
  out.in_l = face_of_point(l, x);
  return out;
}

ImageFaceResult image_face(const ConvexSetPtr& k, const Mat& m, const Vec& t, const Vec& x,
                           RngEngine& rng, std::size_t samples) {
  const VPolytope& v = as_v(k);
  if (m.cols() != v.dim() || m.rows() != t.dim()) throw std::invalid_argument("dimension mismatch");
  if (!set_contains(k, x)) throw std::invalid_argument("point outside set");

  auto alpha = [&](const Vec& p) { return mat_vec(m, p) + t; };
  VPolytope image;
  for (const Vec& vert : v.vertices) image.vertices.push_back(alpha(vert));

  ImageFaceResult out;
  out.image = make_set(std::move(image));
  out.image_point = alpha(x);
  out.image_cell = d_face_of_point(out.image, out.image_point);

  RelOpenCell source_cell = d_face_of_point(k, x);
  out.all_samples_in_cell = out.image_cell.contains_point(out.image_point);
  for (std::size_t i = 0; i < samples; ++i) {
    Vec p = sample_cell_point(rng, source_cell);
    ++out.samples_checked;
    if (!out.image_cell.contains_point(alpha(p))) out.all_samples_in_cell = false;
  }
  return out;
}

RelOpenCell d_face_of_point(const ConvexSetPtr& k, const Vec& x) {
  RelOpenCell cell;
  cell.face = face_of_point(k, x);
  if (cell.face.is_h()) {
    std::vector<bool> forced(as_h(k).rows(), false);
    for (std::size_t i : cell.face.forced_eq) forced[i] = true;
    for (std::size_t i = 0; i < forced.size(); ++i) {
      if (!forced[i]) cell.strict.push_back(i);
    }
  }
  return cell;
}

std::vector<FaceDescriptor> enumerate_faces(const ConvexSetPtr& k) {
  const VPolytope& v = as_v(k);
  const std::size_t n = v.vertices.size();
  if (n == 0) throw std::invalid_argument("empty polyhedron");
  if (n > 12) throw std::invalid_argument("instance above desk scale");

  std::vector<std::uint32_t> masks;  // canonical faces found so far
  auto known = [&](std::uint32_t m) {
    return std::find(masks.begin(), masks.end(), m) != masks.end();
  };

  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> subset = subset_of_mask(mask, n);
    std::vector<Vec> pts;
    for (std::size_t j : subset) pts.push_back(v.vertices[j]);
    Vec c = centroid(pts);

    // Fast path: the face generated by the subset is the smallest known
    // face whose rai contains the centroid.
    std::uint32_t closure = 0;
    bool found = false;
    for (std::uint32_t cand : masks) {
      if ((mask & cand) != mask) continue;
      auto margin = positive_rep_margin(v, subset_of_mask(cand, n), c);
      if (margin && *margin > 0) {
        closure = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      auto sub = v_closure(v, c);
      closure = mask_of(*sub);
    }
    if (!known(closure)) masks.push_back(closure);
  }

  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<FaceDescriptor> out;
  for (std::uint32_t m : masks) {
    FaceDescriptor f;
    f.parent = k;
    f.vertex_subset = subset_of_mask(m, n);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<RelOpenCell> partition_cells(const ConvexSetPtr& k) {
  std::vector<RelOpenCell> cells;
  for (FaceDescriptor& f : enumerate_faces(k)) {
    RelOpenCell cell;
    cell.face = std::move(f);
    cells.push_back(std::move(cell));
  }
  return cells;
}

ExtremeSetVerdict is_extreme_set(const ConvexSetPtr& k, const ExtremeSetDescriptor& e) {
  const VPolytope& v = as_v(k);
  for (const RelOpenCell& c : e.cells) {
    if (c.face.parent != k) throw std::invalid_argument("mixed parents");
  }
  std::vector<FaceDescriptor> lattice = enumerate_faces(k);
  std::vector<std::uint32_t> lattice_masks;
  for (const FaceDescriptor& f : lattice) lattice_masks.push_back(mask_of(f.vertex_subset));

  std::vector<std::uint32_t> covered;
  for (const RelOpenCell& c : e.cells) {
    std::uint32_t m = mask_of(c.face.vertex_subset);
    if (std::find(lattice_masks.begin(), lattice_masks.end(), m) == lattice_masks.end()) {
      std::ostringstream os;
      os << "cell over generators {";
      for (std::size_t j : c.face.vertex_subset) os << j << ",";
      os << "} is not a canonical cell of K";
      return {ExtremeSetKind::NeitherReport, os.str()};
    }
    covered.push_back(m);
  }
  (void)v;

  std::vector<std::uint32_t> missing;
  for (std::uint32_t m : covered) {
    for (std::uint32_t g : lattice_masks) {
      if ((g & m) != g) continue;  // g is not a subface of m
      if (std::find(covered.begin(), covered.end(), g) == covered.end()) missing.push_back(g);
    }
  }
  if (missing.empty()) return {ExtremeSetKind::ExtremeAndDextreme, ""};
  std::ostringstream os;
  os << "union is d-extreme but not extreme; " << missing.size()
     << " subface cell(s) missing from the union";
  return {ExtremeSetKind::DextremeOnly, os.str()};
}

ExtremeSetDescriptor union_of_generated_faces(const ConvexSetPtr& k, const VPolytope& c) {
  for (const Vec& p : c.vertices) {
    if (!set_contains(k, p)) throw std::invalid_argument("generator set outside K");
  }
  FaceDescriptor g = face_of_set(k, c.vertices);
  std::uint32_t gmask = mask_of(g.vertex_subset);
  ExtremeSetDescriptor out;
  for (FaceDescriptor& f : enumerate_faces(k)) {
    std::uint32_t m = mask_of(f.vertex_subset);
    if ((m & gmask) != m) continue;
    RelOpenCell cell;
    cell.face = std::move(f);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

bool two_face_check(const RelOpenCell& cell, RngEngine& rng, std::size_t samples) {
  if (cell.face.is_h()) {
    if (!relative_interior_point(cell.open_system())) throw std::invalid_argument("empty cell");
  } else if (cell.face.vertex_subset.empty()) {
    throw std::invalid_argument("empty cell");
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Vec y = sample_cell_point(rng, cell);
    FaceDescriptor f = face_of_point(cell.face.parent, y);
    if (!f.same_face(cell.face)) return false;
  }
  return true;
}

Vec sample_set_point(RngEngine& rng, const ConvexSetPtr& k) {
  if (is_v(k)) {
    const VPolytope& v = as_v(k);
    std::vector<std::size_t> all(v.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    return sample_subset_combination(rng, v, all, false);
  }
  return sample_system_point(rng, as_h(k).system());
}

Vec sample_face_point(RngEngine& rng, const FaceDescriptor& f) {
  if (f.is_h()) return sample_system_point(rng, f.closed_system());
  return sample_subset_combination(rng, as_v(f.parent), f.vertex_subset, false);
}

Vec sample_cell_point(RngEngine& rng, const RelOpenCell& cell) {
  if (!cell.face.is_h()) {
    return sample_subset_combination(rng, as_v(cell.face.parent), cell.face.vertex_subset, true);
  }
  auto rip = relative_interior_point(cell.open_system());
  if (!rip) throw std::invalid_argument("empty cell");
  if (gen_index(rng, 0, 2) == 0) return rip->first;
  // Blend toward a face point; strictness survives for t < 1.
  Vec q = sample_face_point(rng, cell.face);
  Rat t = gen_rat_open01(rng);
  return (Rat(1) - t) * rip->first + t * q;
}

std::optional<Vec> rai_point(const ConvexSetPtr& k) {
  if (is_v(k)) {
    const VPolytope& v = as_v(k);
    if (v.empty()) return std::nullopt;
    return centroid(v.vertices);
  }
  const HPolyhedron& h = as_h(k);
  if (lp_feasible(h.system()).status != LpResult::Status::Feasible) return std::nullopt;
  ImplicitEqualities impl = implicit_equalities(h);
  LinearSystem sys = h.system();
  for (std::size_t i : impl.rows) sys.rel[i] = Rel::Eq;
  auto rip = relative_interior_point(sys);
  if (!rip) throw std::logic_error("nonempty polyhedron without relative interior point");
  return rip->first;
}

}  // namespace facekit
