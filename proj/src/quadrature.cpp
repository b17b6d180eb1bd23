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

#include "quadrature.hpp"

#include "errors.hpp"

namespace mpl {

namespace {

const Int& factorial(int n) {
  static std::vector<Int> table = [] {
    std::vector<Int> t{Int(1)};
    for (int i = 1; i <= 64; ++i) t.push_back(t.back() * i);
    return t;
  }();
  return table.at(n);
}

/* Signed integral over the triangle (a, b, c). */
Rat triangle_integral(const Poly2& f, const Vec2& a, const Vec2& b, const Vec2& c) {
  Vec2 e1 = b - a, e2 = c - a;
  Rat jac = cross(e1, e2);
  if (jac == 0) return Rat(0);
  Poly2 X, Y;  // x(s,t), y(s,t) as polynomials in (s,t)
  X.set(0, 0, a.x);
  X.set(1, 0, e1.x);
  X.set(0, 1, e2.x);
  Y.set(0, 0, a.y);
  Y.set(1, 0, e1.y);
  Y.set(0, 1, e2.y);
  Poly2 comp = f.compose_affine(X, Y);
  Rat total(0);
  for (const auto& [k, coef] : comp.terms())
    total += coef * Rat(factorial(k.first) * factorial(k.second),
                        factorial(k.first + k.second + 2));
  return jac * total;
}

}  // namespace

Rat integrate_poly(const Polygon& cell, const Poly2& f) {
  if (cell.size() < 3) return Rat(0);
  Rat total(0);
  for (std::size_t i = 1; i + 1 < cell.size(); ++i)
    total += triangle_integral(f, cell[0], cell[i], cell[i + 1]);
  // fan signs follow the cycle orientation; normalize to the plain integral
  return polygon_area2(cell) < 0 ? Rat(-total) : total;
}

Rat weighted_volume(const Polygon& cell, const RootSystem& rs) {
  return integrate_poly(cell, rs.weight_poly());
}

Vec2 barycenter(const Polygon& cell, const RootSystem& rs) {
  Poly2 pi = rs.weight_poly();
  Rat vol = integrate_poly(cell, pi);
  if (vol == 0) throw domain_error("degenerate cell: zero weighted volume");
  Rat mx = integrate_poly(cell, Poly2::var_x() * pi);
  Rat my = integrate_poly(cell, Poly2::var_y() * pi);
  return {mx / vol, my / vol};
}

Rat integrate_pl(const Polygon& cell, const PLFunction& u, const RootSystem& rs) {
  Poly2 pi = rs.weight_poly();
  Rat total(0);
  for (const auto& region : u.regions(cell)) {
    const auto& piece = u.pieces()[region.piece];
    Poly2 lin = Poly2::affine(piece.a, piece.c);
    total += integrate_poly(region.polygon, lin * pi);
  }
  return total;
}

}  // namespace mpl
