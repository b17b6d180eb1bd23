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

#pragma once

#include <vector>

#include "geom.hpp"
#include "rootsys.hpp"

namespace mpl {

/* W-invariant convex piecewise-linear function: value = max over pieces of
   <a, y> + c.  Convex by construction. */
class PLFunction {
 public:
  struct Piece {
    Vec2 a;
    Rat c;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  static PLFunction zero() {
    PLFunction u;
    u.pieces_.push_back({Vec2{}, Rat(0)});
    u.winvariant_ = true;
    return u;
  }

  /* Closes the given pieces under the W-action on the slopes (c unchanged). */
  static PLFunction w_closed(const RootSystem& rs, std::vector<Piece> pieces);

  /* The orbit-max |alpha_i(y)| of a positive root. */
  static PLFunction abs_root(const RootSystem& rs, int root_index);

  static PLFunction from_pieces(std::vector<Piece> pieces, bool winvariant);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool winvariant() const { return winvariant_; }

  Rat value(const Vec2& y) const;
  double value(double y1, double y2) const;

  /* u + c */
  PLFunction shifted(const Rat& c) const;

  /* The function whose Legendre dual interpolates linearly:
     u_t = t u1 + (1-t) u0, realized as the max over piece pairs. */
  static PLFunction legendre_linear(const PLFunction& u0, const PLFunction& u1, const Rat& t);

  /* Max over a convex polygon (attained at a polygon vertex). */
  Rat max_on(const Polygon& domain) const;

  /* The linearity regions of u intersected with a convex polygon.
     Regions tile the polygon up to shared edges; empty pieces are skipped. */
  struct Region {
    std::size_t piece;
    Polygon polygon;
  };
  std::vector<Region> regions(const Polygon& domain) const;

  /* Vertices of the crease subdivision of `domain` (the candidate set where
     sup_y <x,y> - u(y) is attained). */
  std::vector<Vec2> subdivision_points(const Polygon& domain) const;

 private:
  std::vector<Piece> pieces_;
  bool winvariant_ = false;

  void dedup();
};

}  // namespace mpl
