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

#include <optional>
#include <vector>

#include "geom.hpp"
#include "rootsys.hpp"

namespace mpl {

/* Inner form l(y) = lambda - <u, y> >= 0 with primitive integer normal u
   on the dominant side (u in the closed dual chamber). */
struct HalfPlane {
  IVec2 u;
  Rat lambda;

  Rat value(const Vec2& y) const { return lambda - dot(to_vec2(u), y); }
  friend bool operator==(const HalfPlane& a, const HalfPlane& b) {
    return a.u == b.u && a.lambda == b.lambda;
  }
};

enum class EdgeKind { WallUpper, WallLower, Facet };

struct EdgeLabel {
  EdgeKind kind;
  int facet = -1;  // index into chamber_facets() for EdgeKind::Facet
};

/* The positive part P+ as an exact vertex cycle with labeled edges.
   Vertex 0 is the origin; the cycle runs origin, upper-wall vertex,
   outer vertices in chain order, lower-wall vertex. */
struct ChamberCell {
  Polygon vertices;
  std::vector<EdgeLabel> edges;  // edges[i] joins vertices[i] -> vertices[(i+1) % n]
};

/* Exact W-invariant rational polytope given by its chamber facets. */
class GroupPolytope {
 public:
  struct FacetSpec {
    IVec2 u;
    std::optional<Rat> lambda;  // nullopt: Fano normalization 1 + 2 rho(u)
  };

  static GroupPolytope from_chamber_facets(RootSystemPtr rs, const std::vector<FacetSpec>& specs);

  const RootSystemPtr& root_system() const { return rs_; }
  /* Chamber facets in chain order (slopes strictly decreasing). */
  const std::vector<HalfPlane>& chamber_facets() const { return facets_; }
  bool fano_normalized() const { return fano_; }

  const ChamberCell& positive_part() const { return cell_; }
  /* Cell of the dilated polytope tP+ (plain polygon). */
  Polygon cell_polygon(const Rat& dilate = Rat(1)) const;

  /* Full facet list of tP: the W-orbits of the chamber facets. */
  std::vector<HalfPlane> full_facets(const Rat& dilate = Rat(1)) const;
  /* Vertices of the full polytope tP, in angular order. */
  Polygon full_vertices(const Rat& dilate = Rat(1)) const;

  bool is_fine() const;
  /* Least m with mP a lattice polytope (lcm of vertex-coordinate denominators). */
  Int multiple() const;
  /* The p of the facet binding at the positive x-axis (max p over facets). */
  std::int64_t p_zero() const;

  GroupPolytope canonical_form() const;
  GroupPolytope scale(const Rat& t) const;

  /* Fano facet constant for a dominant normal: 1 + 2 rho(u). */
  static Rat fano_lambda(const RootSystem& rs, const IVec2& u);

  friend bool operator==(const GroupPolytope& a, const GroupPolytope& b) {
    return a.rs_->name() == b.rs_->name() && a.facets_ == b.facets_;
  }

 private:
  RootSystemPtr rs_;
  std::vector<HalfPlane> facets_;  // chain order
  bool fano_ = true;
  ChamberCell cell_;
};

}  // namespace mpl
