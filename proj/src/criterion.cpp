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

#include "criterion.hpp"

#include "errors.hpp"
#include "quadrature.hpp"

namespace mpl {

Rat destabilizer_L(const GroupPolytope& p, int root_index) {
  const RootSystem& rs = *p.root_system();
  if (!p.fano_normalized()) throw input_error("destabilizer_L needs a Fano-normalized polytope");
  PLFunction u = PLFunction::abs_root(rs, root_index);
  Polygon cell = p.cell_polygon();
  Rat vol = weighted_volume(cell, rs);
  Rat integral = integrate_pl(cell, u, rs);
  Vec2 two_rho = Rat(2) * rs.rho();
  return integral / vol - u.value(two_rho);
}

KEVerdict ke_test(const GroupPolytope& p) {
  const RootSystem& rs = *p.root_system();
  if (!p.fano_normalized()) throw input_error("ke_test needs a Fano-normalized polytope");

  KEVerdict v;
  v.barycenter_P = barycenter(p.cell_polygon(), rs);
  v.barycenter_2P = Rat(2) * v.barycenter_P;
  ConeVerdict c = rs.in_shifted_cone(v.barycenter_P, Rat(1));
  switch (c) {
    case ConeVerdict::Interior: v.exists = KEKind::Yes; break;
    case ConeVerdict::Boundary: v.exists = KEKind::Boundary; break;
    case ConeVerdict::Outside: v.exists = KEKind::No; break;
  }

  if (v.exists != KEKind::Yes) {
    // the violated defining inequality of Xi corresponds to an extreme root
    int lo_i = rs.lower_extreme_root();
    int up_i = rs.upper_extreme_root();
    Vec2 two_rho = Rat(2) * rs.rho();
    Rat m_lo = dot(rs.positive_roots()[lo_i], v.barycenter_P - two_rho);
    Rat m_up = dot(rs.positive_roots()[up_i], v.barycenter_P - two_rho);
    int idx = m_lo <= m_up ? lo_i : up_i;
    v.violated_root = idx;
    v.margin = std::min(m_lo, m_up);
    if (v.exists == KEKind::No) {
      v.witness = PLFunction::abs_root(rs, idx);
      v.witness_L = destabilizer_L(p, idx);
    }
  }
  return v;
}

}  // namespace mpl
