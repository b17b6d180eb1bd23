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

#include "plfun.hpp"
#include "polytope.hpp"

namespace mpl {

enum class KEKind { Yes, No, Boundary };

struct KEVerdict {
  KEKind exists;
  Vec2 barycenter_P;
  Vec2 barycenter_2P;
  std::optional<int> violated_root;   // index into positive_roots()
  std::optional<Rat> margin;          // alpha_i(bar(P+)) - alpha_i(2 rho), signed
  std::optional<PLFunction> witness;  // |alpha_i| when exists == No
  std::optional<Rat> witness_L;       // exact L(|alpha_i|), P+ convention
};

/* Barycenter criterion: exists iff bar(P+) lies strictly inside 2rho + Xi
   (equivalently bar(2P+) inside 4rho + Xi). */
KEVerdict ke_test(const GroupPolytope& p);

/* Exact L(|alpha_i|) in the P+ convention:
   (1/V) int_{P+} |alpha_i| pi dy - alpha_i(2 rho). */
Rat destabilizer_L(const GroupPolytope& p, int root_index);

}  // namespace mpl
