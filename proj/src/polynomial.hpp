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

#include <map>
#include <utility>

#include "geom.hpp"
#include "rational.hpp"

namespace mpl {

/* Sparse bivariate polynomial with exact rational coefficients.
   Zero coefficients are never stored. */
class Poly2 {
 public:
  using Key = std::pair<int, int>;  // (deg x, deg y)

  Poly2() = default;

  static Poly2 constant(Rat c) {
    Poly2 p;
    p.set(0, 0, std::move(c));
    return p;
  }
  static Poly2 var_x() {
    Poly2 p;
    p.set(1, 0, Rat(1));
    return p;
  }
  static Poly2 var_y() {
    Poly2 p;
    p.set(0, 1, Rat(1));
    return p;
  }
  /* The linear form <a, (x,y)> + c. */
  static Poly2 affine(const Vec2& a, const Rat& c) {
    Poly2 p;
    p.set(1, 0, a.x);
    p.set(0, 1, a.y);
    p.set(0, 0, c);
    return p;
  }

  void set(int i, int j, Rat c) {
    if (c == 0)
      terms_.erase({i, j});
    else
      terms_[{i, j}] = std::move(c);
  }
  Rat coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int total_degree() const {
    int d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }

  Poly2& operator+=(const Poly2& o) {
    for (auto& [k, c] : o.terms_) {
      Rat v = coeff(k.first, k.second) + c;
      set(k.first, k.second, v);
    }
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        Rat v = r.coeff(k.first, k.second) + ca * cb;
        r.set(k.first, k.second, v);
      }
    return r;
  }
  friend Poly2 operator*(const Rat& t, const Poly2& a) {
    Poly2 r;
    for (auto& [k, c] : a.terms_) r.set(k.first, k.second, t * c);
    return r;
  }

  Rat eval(const Vec2& p) const {
    Rat s(0);
    for (auto& [k, c] : terms_) s += c * rat_pow(p.x, k.first) * rat_pow(p.y, k.second);
    return s;
  }
  double eval(double x, double y) const {
    double s = 0;
    for (auto& [k, c] : terms_) {
      double t = to_double(c);
      for (int i = 0; i < k.first; ++i) t *= x;
      for (int j = 0; j < k.second; ++j) t *= y;
      s += t;
    }
    return s;
  }

  /* Substitute x -> X(s,t), y -> Y(s,t) with affine X, Y (polynomials in s,t). */
  Poly2 compose_affine(const Poly2& X, const Poly2& Y) const {
    int dx = 0, dy = 0;
    for (auto& [k, c] : terms_) {
      dx = std::max(dx, k.first);
      dy = std::max(dy, k.second);
    }
    std::vector<Poly2> xp(dx + 1), yp(dy + 1);
    xp[0] = constant(Rat(1));
    yp[0] = constant(Rat(1));
    for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * X;
    for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * Y;
    Poly2 r;
    for (auto& [k, c] : terms_) r += c * (xp[k.first] * yp[k.second]);
    return r;
  }

  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, Rat> terms_;
};

}  // namespace mpl
