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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "geom.hpp"
#include "polynomial.hpp"

namespace mpl {

enum class ConeVerdict { Interior, Boundary, Outside };

/* Immutable rank-2 root-system data.

   Presets A1xA1 and B2 are realized in coordinates where the Weyl group acts
   by orthogonal integer matrices, so the standard dot product is the pairing
   used throughout (the convention all reproducible numbers live in). A2 and
   G2 are data-only presets in simple-root-basis coordinates; their Weyl
   groups are not dot-orthogonal and polytope construction rejects them. */
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> preset(const std::string& name);

  const std::string& name() const { return name_; }
  int rank() const { return 2; }
  const std::vector<Vec2>& positive_roots() const { return positive_roots_; }
  const std::vector<Mat2>& weyl() const { return weyl_; }
  const Vec2& rho() const { return rho_; }
  const std::optional<Mat2>& diagram_sym() const { return diagram_sym_; }
  /* Weyl group is orthogonal for the standard dot product in these coords. */
  bool orthogonal() const { return orthogonal_; }

  /* prod over positive roots of <alpha, y>^2, expanded. */
  Poly2 weight_poly() const;

  /* Membership of `point` in the relative interior of scale*2rho + Xi,
     where Xi is the open cone spanned by the positive roots. */
  ConeVerdict in_shifted_cone(const Vec2& point, const Rat& scale) const;

  /* Coefficients of (point - scale*2rho) on the two extreme rays of the
     cone spanned by the positive roots; verdict is the sign pattern. */
  std::pair<Rat, Rat> shifted_cone_coords(const Vec2& point, const Rat& scale) const;

  /* Indices into positive_roots() of the extreme rays of cone(Phi+). */
  int upper_extreme_root() const { return upper_root_; }
  int lower_extreme_root() const { return lower_root_; }

  bool in_closed_chamber(const Vec2& y) const;

  /* Throws on any violated structural invariant; called by preset(). */
  void validate() const;

 private:
  std::string name_;
  std::vector<Vec2> positive_roots_;
  std::vector<Mat2> weyl_;
  Vec2 rho_;
  std::optional<Mat2> diagram_sym_;
  bool orthogonal_ = false;
  int upper_root_ = 0, lower_root_ = 0;

  static RootSystem make(std::string name, std::vector<Vec2> roots,
                         std::vector<Mat2> generators, std::optional<Mat2> diagram_sym,
                         bool orthogonal);
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace mpl
