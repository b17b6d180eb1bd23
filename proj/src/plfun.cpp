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

#include "plfun.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mpl {

void PLFunction::dedup() {
  std::vector<Piece> out;
  for (auto& p : pieces_) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  pieces_ = std::move(out);
}

PLFunction PLFunction::from_pieces(std::vector<Piece> pieces, bool winvariant) {
  if (pieces.empty()) throw input_error("piecewise-linear function needs at least one piece");
  PLFunction u;
  u.pieces_ = std::move(pieces);
  u.winvariant_ = winvariant;
  u.dedup();
  return u;
}

PLFunction PLFunction::w_closed(const RootSystem& rs, std::vector<Piece> pieces) {
  std::vector<Piece> closed;
  for (const auto& p : pieces)
    for (const auto& w : rs.weyl()) closed.push_back({w.apply(p.a), p.c});
  return from_pieces(std::move(closed), true);
}

PLFunction PLFunction::abs_root(const RootSystem& rs, int root_index) {
  const auto& roots = rs.positive_roots();
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    throw input_error("root index out of range");
  return w_closed(rs, {{roots[root_index], Rat(0)}});
}

Rat PLFunction::value(const Vec2& y) const {
  Rat best = dot(pieces_[0].a, y) + pieces_[0].c;
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    best = std::max(best, dot(pieces_[i].a, y) + pieces_[i].c);
  return best;
}

double PLFunction::value(double y1, double y2) const {
  double best = -1e308;
  for (const auto& p : pieces_)
    best = std::max(best, to_double(p.a.x) * y1 + to_double(p.a.y) * y2 + to_double(p.c));
  return best;
}

PLFunction PLFunction::shifted(const Rat& c) const {
  PLFunction u = *this;
  for (auto& p : u.pieces_) p.c += c;
  return u;
}

PLFunction PLFunction::legendre_linear(const PLFunction& u0, const PLFunction& u1, const Rat& t) {
  // t*max_j + (1-t)*max_k = max over pairs of the convex combination
  std::vector<Piece> pieces;
  Rat s = Rat(1) - t;
  for (const auto& p1 : u1.pieces_)
    for (const auto& p0 : u0.pieces_)
      pieces.push_back({t * p1.a + s * p0.a, t * p1.c + s * p0.c});
  return from_pieces(std::move(pieces), u0.winvariant_ && u1.winvariant_);
}

Rat PLFunction::max_on(const Polygon& domain) const {
  if (domain.empty()) throw input_error("empty domain");
  Rat best = value(domain[0]);
  for (std::size_t i = 1; i < domain.size(); ++i) best = std::max(best, value(domain[i]));
  return best;
}

std::vector<PLFunction::Region> PLFunction::regions(const Polygon& domain) const {
  std::vector<Region> out;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    Polygon r = domain;
    for (std::size_t j = 0; j < pieces_.size() && r.size() >= 3; ++j) {
      if (j == k) continue;
      // keep (a_k - a_j).y + (c_k - c_j) >= 0
      Vec2 d = pieces_[j].a - pieces_[k].a;
      Rat c = pieces_[k].c - pieces_[j].c;
      r = clip_halfplane(r, d, c);
    }
    if (r.size() >= 3 && polygon_area2(r) != 0) out.push_back({k, std::move(r)});
  }
  return out;
}

std::vector<Vec2> PLFunction::subdivision_points(const Polygon& domain) const {
  std::vector<Vec2> pts;
  auto push = [&](const Vec2& v) {
    if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  };
  for (const auto& r : regions(domain))
    for (const auto& v : r.polygon) push(v);
  if (pts.empty())
    for (const auto& v : domain) push(v);
  return pts;
}

}  // namespace mpl
