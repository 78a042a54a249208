/*
 * Copyright 2026 the modframe authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>

#include "modframe/circle.hpp"
#include "modframe/graph.hpp"
#include "modframe/laurent.hpp"
#include "modframe/torus.hpp"

namespace fixtures {

using modframe::cplx;
using modframe::LaurentPoly;

inline LaurentPoly haar_low() {
  const double r = 1.0 / std::sqrt(2.0);
  return LaurentPoly({{0, cplx(r, 0.0)}, {1, cplx(r, 0.0)}});
}

inline LaurentPoly haar_high() {
  const double r = 1.0 / std::sqrt(2.0);
  return LaurentPoly({{0, cplx(-r, 0.0)}, {1, cplx(r, 0.0)}});
}

inline modframe::FilterBank haar_bank() {
  return {modframe::CircleSystem(2),
          {haar_low(), haar_high()},
          modframe::BankKind::orthonormal};
}

// Four-tap orthonormal low-pass with sqrt(3) coefficients.
inline LaurentPoly d4_low() {
  const double s = std::sqrt(3.0);
  const double r = 1.0 / (4.0 * std::sqrt(2.0));
  return LaurentPoly({{0, cplx((1.0 + s) * r, 0.0)},
                      {1, cplx((3.0 + s) * r, 0.0)},
                      {2, cplx((3.0 - s) * r, 0.0)},
                      {3, cplx((1.0 - s) * r, 0.0)}});
}

inline modframe::FilterBank d4_bank() {
  auto sys = modframe::CircleSystem(2);
  return {sys,
          {d4_low(), modframe::qmf_partner(d4_low(), sys)},
          modframe::BankKind::orthonormal};
}

// Half-band symbols: sqrt(2) on half of the circle, zero on the other half.
// Their cascade is an exact indicator, so every resolution identity closes
// in exact arithmetic on dyadic grids.
struct HalfBandLow {
  cplx operator()(long long num, long long den) const {
    long long r = num % den;
    if (r < 0) r += den;
    return 2 * r < den ? cplx(std::sqrt(2.0), 0.0) : cplx(0.0, 0.0);
  }
};

struct HalfBandHigh {
  cplx operator()(long long num, long long den) const {
    long long r = num % den;
    if (r < 0) r += den;
    if (2 * r < den) return cplx(0.0, 0.0);
    const double angle = 2.0 * 3.14159265358979323846 *
                         (static_cast<double>(r) / static_cast<double>(den));
    return std::polar(std::sqrt(2.0), angle);
  }
};

// Two vertices, three edges; u has out-degree 2, v has out-degree 1.
inline modframe::graph::DirectedGraph g1() {
  return modframe::graph::make_graph(
      {"u", "v"},
      {{"a", "u", "u"}, {"b", "u", "v"}, {"c", "v", "u"}});
}

// Filter row all ones; second row kills v and alternates on u.
inline modframe::graph::OrthoBank g1_bank() {
  modframe::graph::OrthoBank bank;
  bank.rows.push_back({cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0)});
  bank.rows.push_back({cplx(1.0, 0.0), cplx(-1.0, 0.0), cplx(0.0, 0.0)});
  return bank;
}

inline modframe::graph::WeightSystem g1_weights() {
  return modframe::graph::make_weight_system(g1(), g1_bank().rows[0]);
}

}  // namespace fixtures
