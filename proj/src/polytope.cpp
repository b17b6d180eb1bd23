/*
  Copyright (c) 2026 the mpl authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace mpl {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/* Chain order: strictly decreasing slope of the normal. */
bool chain_before(const IVec2& a, const IVec2& b) {
  // slope(a) > slope(b)  <=>  a.y*b.x > b.y*a.x  (x components positive)
  return a.y * b.x > b.y * a.x;
}

struct WallData {
  Vec2 upper_root;  // root vanishing on the upper wall
  Vec2 lower_root;  // root vanishing on the lower wall
  Vec2 upper_ray;   // direction of the upper wall inside the chamber
  Vec2 lower_ray;
};

WallData walls_of(const RootSystem& rs) {
  const Vec2& lo = rs.positive_roots()[rs.lower_extreme_root()];
  const Vec2& up = rs.positive_roots()[rs.upper_extreme_root()];
  WallData w;
  w.upper_root = lo;             // the lower-extreme root vanishes on the upper wall
  w.lower_root = up;
  w.upper_ray = Vec2{-lo.y, lo.x};
  w.lower_ray = Vec2{up.y, -up.x};
  return w;
}

}  // namespace

Rat GroupPolytope::fano_lambda(const RootSystem& rs, const IVec2& u) {
  return Rat(1) + Rat(2) * dot(rs.rho(), to_vec2(u));
}

GroupPolytope GroupPolytope::from_chamber_facets(RootSystemPtr rs,
                                                 const std::vector<FacetSpec>& specs) {
  if (!rs) throw input_error("missing root system");
  if (!rs->orthogonal())
    throw input_error("polytope construction requires an orthogonally realized root system "
                      "(A1xA1 or B2)");
  if (specs.empty()) throw input_error("unbounded");

  GroupPolytope poly;
  poly.rs_ = rs;
  poly.fano_ = true;

  std::vector<HalfPlane> facets;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& s = specs[i];
    std::string idx = std::to_string(i);
    if (s.u.x == 0 && s.u.y == 0) throw input_error("zero normal " + idx);
    if (gcd64(s.u.x, s.u.y) != 1) throw input_error("non-primitive normal " + idx);
    for (const auto& a : rs->positive_roots())
      if (dot(a, to_vec2(s.u)) < 0)
        throw input_error("facet normal " + idx + " is not on the dominant side");
    Rat lam = s.lambda ? *s.lambda : fano_lambda(*rs, s.u);
    if (!(lam > 0)) throw input_error("facet " + idx + " has nonpositive constant");
    if (s.lambda && !(lam == fano_lambda(*rs, s.u))) poly.fano_ = false;
    for (const auto& f : facets)
      if (f.u == s.u) throw input_error("redundant facet " + idx);
    facets.push_back({s.u, lam});
  }
  std::sort(facets.begin(), facets.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return chain_before(a.u, b.u); });

  // clip the chamber wedge (closed by a far line) with the facet half-planes
  WallData w = walls_of(*rs);
  Rat maxl(0), maxu(1);
  for (const auto& f : facets) {
    maxl = std::max(maxl, f.lambda);
    maxu = std::max({maxu, Rat(std::abs(f.u.x)), Rat(std::abs(f.u.y))});
  }
  Rat M = Rat(8) * (maxl + 1) * (maxu + 1);
  Vec2 far_dir = w.upper_ray + w.lower_ray;
  Polygon wedge{Vec2{Rat(0), Rat(0)}, (M / dot(far_dir, w.upper_ray)) * w.upper_ray,
                (M / dot(far_dir, w.lower_ray)) * w.lower_ray};

  Polygon cell = wedge;
  for (const auto& f : facets) cell = clip_halfplane(cell, to_vec2(f.u), f.lambda);

  if (cell.size() < 3) throw input_error("empty positive part");
  for (const auto& v : cell)
    if (dot(far_dir, v) == M) throw input_error("unbounded");

  // rotate the cycle to start at the origin, upper wall first
  auto it = std::find(cell.begin(), cell.end(), Vec2{Rat(0), Rat(0)});
  if (it == cell.end()) throw Error(ErrorKind::Internal, "origin lost during clipping");
  std::rotate(cell.begin(), it, cell.end());
  if (!(dot(w.upper_root, cell[1]) == 0)) {
    std::reverse(cell.begin() + 1, cell.end());
    if (!(dot(w.upper_root, cell[1]) == 0))
      throw Error(ErrorKind::Internal, "cell does not meet the upper wall");
  }

  // label edges and check each facet supports a genuine edge
  ChamberCell cc;
  cc.vertices = cell;
  const std::size_t n = cell.size();
  std::vector<bool> used(facets.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = cell[i];
    const Vec2& b = cell[(i + 1) % n];
    if (dot(w.upper_root, a) == 0 && dot(w.upper_root, b) == 0) {
      cc.edges.push_back({EdgeKind::WallUpper, -1});
      continue;
    }
    if (dot(w.lower_root, a) == 0 && dot(w.lower_root, b) == 0) {
      cc.edges.push_back({EdgeKind::WallLower, -1});
      continue;
    }
    int hit = -1;
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (facets[j].value(a) == 0 && facets[j].value(b) == 0) {
        hit = static_cast<int>(j);
        break;
      }
    if (hit < 0) throw Error(ErrorKind::Internal, "unlabeled cell edge");
    used[hit] = true;
    cc.edges.push_back({EdgeKind::Facet, hit});
  }
  for (std::size_t j = 0; j < facets.size(); ++j)
    if (!used[j]) throw input_error("redundant facet " + std::to_string(j));

  // reject concurrent lines: every vertex lies on exactly two of {walls, facets}
  for (const auto& v : cell) {
    int binding = 0;
    if (dot(w.upper_root, v) == 0) ++binding;
    if (dot(w.lower_root, v) == 0) ++binding;
    for (const auto& f : facets)
      if (f.value(v) == 0) ++binding;
    if (binding != 2) throw input_error("degenerate vertex (concurrent facet lines)");
  }

  poly.facets_ = std::move(facets);
  poly.cell_ = std::move(cc);
  return poly;
}

Polygon GroupPolytope::cell_polygon(const Rat& dilate) const {
  Polygon p;
  p.reserve(cell_.vertices.size());
  for (const auto& v : cell_.vertices) p.push_back(dilate * v);
  return p;
}

std::vector<HalfPlane> GroupPolytope::full_facets(const Rat& dilate) const {
  std::vector<HalfPlane> out;
  for (const auto& f : facets_) {
    Vec2 u0 = to_vec2(f.u);
    for (const auto& w : rs_->weyl()) {
      Vec2 wu = w.apply(u0);
      IVec2 key{static_cast<std::int64_t>(wu.x.convert_to<long long>()),
                static_cast<std::int64_t>(wu.y.convert_to<long long>())};
      bool seen = false;
      for (const auto& g : out)
        if (g.u == key) {
          seen = true;
          break;
        }
      if (!seen) out.push_back({key, dilate * f.lambda});
    }
  }
  return out;
}

namespace {

int angle_half(const IVec2& u) {
  // 0 for the open upper half plane plus the positive x-axis, 1 below
  if (u.y > 0 || (u.y == 0 && u.x > 0)) return 0;
  return 1;
}

bool angle_less(const IVec2& a, const IVec2& b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;  // counterclockwise within the half
}

}  // namespace

Polygon GroupPolytope::full_vertices(const Rat& dilate) const {
  std::vector<HalfPlane> fac = full_facets(dilate);
  std::sort(fac.begin(), fac.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return angle_less(a.u, b.u); });
  Polygon verts;
  const std::size_t n = fac.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f1 = fac[i];
    const auto& f2 = fac[(i + 1) % n];
    verts.push_back(line_intersect(to_vec2(f1.u), f1.lambda, to_vec2(f2.u), f2.lambda));
  }
  return verts;
}

bool GroupPolytope::is_fine() const {
  auto fac = full_facets();
  for (const auto& v : full_vertices()) {
    int binding = 0;
    for (const auto& f : fac)
      if (f.value(v) == 0) ++binding;
    if (binding != 2) return false;
  }
  return true;
}

Int GroupPolytope::multiple() const {
  Int m(1);
  for (const auto& v : full_vertices()) {
    m = int_lcm(m, rat_den(v.x));
    m = int_lcm(m, rat_den(v.y));
  }
  return m;
}

std::int64_t GroupPolytope::p_zero() const {
  std::int64_t p = 0;
  for (const auto& f : facets_) p = std::max(p, f.u.x);
  return p;
}

GroupPolytope GroupPolytope::canonical_form() const {
  if (!rs_->diagram_sym()) return *this;
  const Mat2& sym = *rs_->diagram_sym();
  std::vector<HalfPlane> mirrored;
  for (const auto& f : facets_) {
    Vec2 mu = sym.apply(to_vec2(f.u));
    mirrored.push_back({IVec2{mu.x.convert_to<long long>(), mu.y.convert_to<long long>()},
                        f.lambda});
  }
  std::sort(mirrored.begin(), mirrored.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return chain_before(a.u, b.u); });
  // lexicographic on the chain, elements ordered by decreasing slope
  bool mirror_wins = false;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (mirrored[i].u == facets_[i].u) continue;
    mirror_wins = chain_before(mirrored[i].u, facets_[i].u);
    break;
  }
  if (!mirror_wins) return *this;
  std::vector<FacetSpec> specs;
  for (const auto& f : mirrored) specs.push_back({f.u, f.lambda});
  GroupPolytope out = from_chamber_facets(rs_, specs);
  out.fano_ = fano_;
  return out;
}

GroupPolytope GroupPolytope::scale(const Rat& t) const {
  if (!(t > 0)) throw input_error("scale factor must be positive");
  std::vector<FacetSpec> specs;
  for (const auto& f : facets_) specs.push_back({f.u, t * f.lambda});
  GroupPolytope out = from_chamber_facets(rs_, specs);
  out.fano_ = fano_ && t == 1;
  return out;
}

}  // namespace mpl
