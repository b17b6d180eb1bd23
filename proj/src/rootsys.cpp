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

#include "rootsys.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mpl {

RootSystem RootSystem::make(std::string name, std::vector<Vec2> roots,
                            std::vector<Mat2> generators, std::optional<Mat2> diagram_sym,
                            bool orthogonal) {
  RootSystem rs;
  rs.name_ = std::move(name);
  rs.positive_roots_ = std::move(roots);
  rs.diagram_sym_ = diagram_sym;
  rs.orthogonal_ = orthogonal;

  // close the generators into the full Weyl group
  std::vector<Mat2> W{mat2_identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < W.size(); ++i)
      for (const auto& g : generators) {
        Mat2 c = g * W[i];
        if (std::find(W.begin(), W.end(), c) == W.end()) {
          W.push_back(c);
          grew = true;
        }
        if (W.size() > 64) throw input_error("Weyl closure did not terminate");
      }
  }
  rs.weyl_ = std::move(W);

  Vec2 sum;
  for (auto& a : rs.positive_roots_) sum = sum + a;
  rs.rho_ = Rat(1, 2) * sum;

  // extreme rays of the cone spanned by the positive roots
  int up = 0, lo = 0;
  for (int i = 1; i < static_cast<int>(rs.positive_roots_.size()); ++i) {
    if (cross(rs.positive_roots_[up], rs.positive_roots_[i]) > 0) up = i;
    if (cross(rs.positive_roots_[lo], rs.positive_roots_[i]) < 0) lo = i;
  }
  rs.upper_root_ = up;
  rs.lower_root_ = lo;
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::preset(const std::string& name) {
  auto v = [](std::int64_t a, std::int64_t b) { return Vec2(Rat(a), Rat(b)); };
  RootSystem rs;
  if (name == "A1xA1") {
    Mat2 swap{{{{0, 1}, {1, 0}}}};        // reflection across the wall y = x
    Mat2 nswap{{{{0, -1}, {-1, 0}}}};     // reflection across the wall y = -x
    Mat2 mirror{{{{1, 0}, {0, -1}}}};     // diagram symmetry y -> -y
    rs = make("A1xA1", {v(1, -1), v(1, 1)}, {swap, nswap}, mirror, true);
  } else if (name == "B2") {
    Mat2 swap{{{{0, 1}, {1, 0}}}};
    Mat2 flipy{{{{1, 0}, {0, -1}}}};
    rs = make("B2", {v(1, -1), v(0, 1), v(1, 0), v(1, 1)}, {swap, flipy}, std::nullopt, true);
  } else if (name == "A2") {
    // simple-root-basis coordinates; Weyl acts by integer (non-orthogonal) maps
    Mat2 s1{{{{-1, 1}, {0, 1}}}};
    Mat2 s2{{{{1, 0}, {1, -1}}}};
    Mat2 sym{{{{0, 1}, {1, 0}}}};
    rs = make("A2", {v(1, 0), v(0, 1), v(1, 1)}, {s1, s2}, sym, false);
  } else if (name == "G2") {
    Mat2 s1{{{{-1, 3}, {0, 1}}}};
    Mat2 s2{{{{1, 0}, {1, -1}}}};
    rs = make("G2", {v(1, 0), v(0, 1), v(1, 1), v(2, 1), v(3, 1), v(3, 2)}, {s1, s2},
              std::nullopt, false);
  } else {
    throw input_error("unknown root system '" + name + "'");
  }
  rs.validate();
  return std::make_shared<const RootSystem>(std::move(rs));
}

void RootSystem::validate() const {
  if (positive_roots_.empty()) throw input_error("root system has no positive roots");
  if (std::find(weyl_.begin(), weyl_.end(), mat2_identity()) == weyl_.end())
    throw input_error("Weyl group misses the identity");
  for (const auto& a : weyl_)
    for (const auto& b : weyl_) {
      Mat2 c = a * b;
      if (std::find(weyl_.begin(), weyl_.end(), c) == weyl_.end())
        throw input_error("Weyl group not closed under composition");
    }
  auto is_pm_root = [&](const Vec2& w) {
    for (const auto& a : positive_roots_)
      if (w == a || w == Rat(-1) * a) return true;
    return false;
  };
  for (const auto& w : weyl_)
    for (const auto& a : positive_roots_)
      if (!is_pm_root(w.apply(a))) throw input_error("Weyl element does not permute roots");
  Vec2 sum;
  for (auto& a : positive_roots_) sum = sum + a;
  if (!(rho_ == Rat(1, 2) * sum)) throw input_error("rho is not the half-sum of roots");
  if (diagram_sym_) {
    for (const auto& a : positive_roots_)
      if (!is_pm_root(diagram_sym_->apply(a)))
        throw input_error("diagram symmetry does not permute roots");
  }
}

Poly2 RootSystem::weight_poly() const {
  Poly2 p = Poly2::constant(Rat(1));
  for (const auto& a : positive_roots_) {
    Poly2 l = Poly2::affine(a, Rat(0));
    p = p * (l * l);
  }
  return p;
}

std::pair<Rat, Rat> RootSystem::shifted_cone_coords(const Vec2& point, const Rat& scale) const {
  const Vec2& lo = positive_roots_[lower_root_];
  const Vec2& up = positive_roots_[upper_root_];
  Vec2 d = point - (Rat(2) * scale) * rho_;
  Rat det = cross(lo, up);
  return {cross(d, up) / det, cross(lo, d) / det};
}

ConeVerdict RootSystem::in_shifted_cone(const Vec2& point, const Rat& scale) const {
  auto [c1, c2] = shifted_cone_coords(point, scale);
  if (c1 > 0 && c2 > 0) return ConeVerdict::Interior;
  if (c1 >= 0 && c2 >= 0) return ConeVerdict::Boundary;
  return ConeVerdict::Outside;
}

bool RootSystem::in_closed_chamber(const Vec2& y) const {
  for (const auto& a : positive_roots_)
    if (dot(a, y) < 0) return false;
  return true;
}

}  // namespace mpl
