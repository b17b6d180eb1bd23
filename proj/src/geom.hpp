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

#include <array>
#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace mpl {

struct Vec2 {
  Rat x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rat& t, const Vec2& a) { return {t * a.x, t * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/* Integer 2x2 matrix acting on column vectors; used for Weyl elements. */
struct Mat2 {
  std::array<std::array<std::int64_t, 2>, 2> m;

  Vec2 apply(const Vec2& v) const {
    return {Rat(m[0][0]) * v.x + Rat(m[0][1]) * v.y, Rat(m[1][0]) * v.x + Rat(m[1][1]) * v.y};
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

inline Mat2 mat2_identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }

/* Primitive integer facet normal. */
struct IVec2 {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const IVec2& a, const IVec2& b) { return a.x == b.x && a.y == b.y; }
  friend auto operator<=>(const IVec2& a, const IVec2& b) = default;
};

inline Vec2 to_vec2(const IVec2& u) { return {Rat(u.x), Rat(u.y)}; }

using Polygon = std::vector<Vec2>;

/* Intersection of lines a1.x = c1, a2.x = c2 (normals must be independent). */
inline Vec2 line_intersect(const Vec2& a1, const Rat& c1, const Vec2& a2, const Rat& c2) {
  Rat d = cross(a1, a2);
  return {(c1 * a2.y - c2 * a1.y) / d, (a1.x * c2 - a2.x * c1) / d};
}

/* Clip polygon to the half-plane dot(a, p) <= c (Sutherland-Hodgman, exact). */
inline Polygon clip_halfplane(const Polygon& poly, const Vec2& a, const Rat& c) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& P = poly[i];
    const Vec2& Q = poly[(i + 1) % n];
    Rat fp = dot(a, P) - c;
    Rat fq = dot(a, Q) - c;
    if (fp <= 0) out.push_back(P);
    if ((fp < 0 && fq > 0) || (fq < 0 && fp > 0)) {
      Rat t = fp / (fp - fq);
      out.push_back(P + t * (Q - P));
    }
  }
  Polygon res;
  for (auto& v : out) {
    if (res.empty() || !(res.back() == v)) res.push_back(v);
  }
  if (res.size() > 1 && res.front() == res.back()) res.pop_back();
  return res;
}

/* Twice the signed area. */
inline Rat polygon_area2(const Polygon& poly) {
  Rat s(0);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
  return s;
}

inline Vec2 polygon_centroid(const Polygon& poly) {
  Vec2 s;
  for (auto& v : poly) s = s + v;
  Rat inv = Rat(1) / Rat(static_cast<std::int64_t>(poly.size()));
  return inv * s;
}

inline bool polygon_contains(const Polygon& poly, const Vec2& p) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  bool neg = false, pos = false;
  for (std::size_t i = 0; i < n; ++i) {
    Rat c = cross(poly[(i + 1) % n] - poly[i], p - poly[i]);
    if (c < 0) neg = true;
    if (c > 0) pos = true;
  }
  return !(neg && pos);
}

}  // namespace mpl
