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

#include "plfun.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"
#include "rootsys.hpp"

namespace mpl {

/* Exact integral of f over a convex polygon: fan triangulation from vertex 0,
   affine substitution onto the standard simplex and the closed monomial
   formula  int_simplex s^a t^b ds dt = a! b! / (a+b+2)!. */
Rat integrate_poly(const Polygon& cell, const Poly2& f);

/* int_cell pi dy with pi the weight polynomial of rs. */
Rat weighted_volume(const Polygon& cell, const RootSystem& rs);

/* Barycenter of the weighted measure pi dy; throws on zero volume. */
Vec2 barycenter(const Polygon& cell, const RootSystem& rs);

/* Exact int_cell u * pi dy for piecewise-linear u: the cell is subdivided
   along the creases of u and each piece integrates a linear * pi polynomial. */
Rat integrate_pl(const Polygon& cell, const PLFunction& u, const RootSystem& rs);

}  // namespace mpl
