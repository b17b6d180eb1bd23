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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mpl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

/* Canonical "num/den" form; plain "num" when the denominator is 1. */
inline std::string rat_str(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

/* Accepts "n", "n/d", optional sign, arbitrary precision. */
inline Rat rat_parse(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) bad();
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_pow(const Rat& q, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace mpl
