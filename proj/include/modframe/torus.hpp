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

/*
 * Sections of twisted line bundles over the two-torus, sampled on uniform
 * grids, together with the covering map (z, t) -> (z^c, d t).
 *
 * A section with twist (q, a) obeys xi(z, t + q) = z^{-a} xi(z, t).  We
 * store one fundamental domain, t normalized to units of q so that the
 * stored window is always t in [0, 1) regardless of q; eval() unwinds the
 * law for sample requests outside the window.  With that normalization
 * every identity below is independent of q, which therefore acts purely as
 * compatibility metadata between operands.
 *
 * All operations are exact sample arithmetic: the covering and its
 * transfer only ever read true grid points, which is why the coarse-grid
 * outputs require the divisibility checks.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "modframe/laurent.hpp"

namespace modframe::torus {

struct TwistedParams {
  long q = 1;
  long a = 0;
};

inline TwistedParams make_params(long q, long a) {
  if (q < 1) throw std::invalid_argument("make_params: q must be >= 1");
  return TwistedParams{q, a};
}

inline bool same_params(const TwistedParams& x, const TwistedParams& y) {
  return x.q == y.q && x.a == y.a;
}

// Plain doubly periodic grid function on the torus.
struct TorusFn {
  long z_res = 1;
  long t_res = 1;
  std::vector<cplx> v;  // row-major, v[zi * t_res + ti]

  cplx at(long zi, long ti) const {
    zi %= z_res;
    if (zi < 0) zi += z_res;
    ti %= t_res;
    if (ti < 0) ti += t_res;
    return v[static_cast<std::size_t>(zi * t_res + ti)];
  }
};

inline TorusFn make_torus_fn(long z_res, long t_res) {
  if (z_res < 1 || t_res < 1)
    throw std::invalid_argument("make_torus_fn: resolution must be >= 1");
  TorusFn f;
  f.z_res = z_res;
  f.t_res = t_res;
  f.v.assign(static_cast<std::size_t>(z_res * t_res), cplx(0.0, 0.0));
  return f;
}

// Twisted section sampled on one fundamental domain.
struct TwistedFn {
  TwistedParams par;
  long z_res = 1;
  long t_res = 1;
  std::vector<cplx> v;  // row-major, v[zi * t_res + ti]

  // Sample at z index zi and t numerator tn (units of q / t_res).  Requests
  // outside the stored window unwind through the twist law: shifting t by
  // one period multiplies by z^{-a}.
  cplx eval(long zi, long tn) const {
    zi %= z_res;
    if (zi < 0) zi += z_res;
    long n = tn / t_res;
    if (tn % t_res < 0) --n;  // floor division
    const long ti = tn - n * t_res;
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(par.a) *
                         static_cast<double>(n) * static_cast<double>(zi) /
                         static_cast<double>(z_res);
    return std::polar(1.0, angle) *
           v[static_cast<std::size_t>(zi * t_res + ti)];
  }
};

inline TwistedFn make_twisted_fn(TwistedParams par, long z_res, long t_res) {
  if (z_res < 1 || t_res < 1)
    throw std::invalid_argument("make_twisted_fn: resolution must be >= 1");
  TwistedFn f;
  f.par = par;
  f.z_res = z_res;
  f.t_res = t_res;
  f.v.assign(static_cast<std::size_t>(z_res * t_res), cplx(0.0, 0.0));
  return f;
}

inline TwistedFn random_twisted(TwistedParams par, long z_res, long t_res,
                                std::mt19937_64& rng) {
  TwistedFn f = make_twisted_fn(par, z_res, t_res);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto& x : f.v) x = cplx(dist(rng), dist(rng));
  return f;
}

inline void require_same_grid(const TwistedFn& x, const TwistedFn& y,
                              const char* who) {
  if (x.z_res != y.z_res || x.t_res != y.t_res)
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
  if (!same_params(x.par, y.par))
    throw std::invalid_argument(std::string(who) + ": twist mismatch");
}

// The conjugate pointwise product of two sections with the same twist is an
// honest function on the torus; the law phases cancel.
inline TorusFn inner(const TwistedFn& x, const TwistedFn& y) {
  require_same_grid(x, y, "inner");
  TorusFn out = make_torus_fn(x.z_res, x.t_res);
  for (std::size_t i = 0; i < out.v.size(); ++i)
    out.v[i] = std::conj(x.v[i]) * y.v[i];
  return out;
}

inline void require_divisible(long z_res, long t_res, long c, long d,
                              const char* who) {
  if (c < 1 || d < 1)
    throw std::invalid_argument(std::string(who) +
                                ": covering degrees must be >= 1");
  if (c * d < 2)
    throw std::invalid_argument(std::string(who) +
                                ": covering must have degree >= 2");
  if (z_res % c != 0)
    throw std::invalid_argument(std::string(who) + ": c must divide z_res");
  if (t_res % d != 0)
    throw std::invalid_argument(std::string(who) + ": d must divide t_res");
}

// Transfer for the covering: average over the c*d preimages of each coarse
// grid point.  Output lives on the (z_res/c, t_res/d) grid.
inline TorusFn transfer(const TorusFn& f, long c, long d) {
  require_divisible(f.z_res, f.t_res, c, d, "transfer");
  TorusFn out = make_torus_fn(f.z_res / c, f.t_res / d);
  for (long zj = 0; zj < out.z_res; ++zj)
    for (long tj = 0; tj < out.t_res; ++tj) {
      cplx s(0.0, 0.0);
      for (long i = 0; i < c; ++i)
        for (long l = 0; l < d; ++l)
          s += f.at(zj + i * (f.z_res / c), tj + l * (f.t_res / d));
      out.v[static_cast<std::size_t>(zj * out.t_res + tj)] =
          s / static_cast<double>(c * d);
    }
  return out;
}

// Pull-back through the covering: (z, t) -> f(z^c, d t), same grid.
inline TorusFn compose_cover(const TorusFn& f, long c, long d) {
  TorusFn out = make_torus_fn(f.z_res, f.t_res);
  for (long zi = 0; zi < f.z_res; ++zi)
    for (long ti = 0; ti < f.t_res; ++ti)
      out.v[static_cast<std::size_t>(zi * f.t_res + ti)] =
          f.at(c * zi, d * ti);
  return out;
}

// Module action of a torus function on a section: pointwise multiply.
inline TwistedFn action(const TorusFn& f, const TwistedFn& x) {
  if (f.z_res != x.z_res || f.t_res != x.t_res)
    throw std::invalid_argument("action: grid mismatch");
  TwistedFn out = x;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = f.v[i] * x.v[i];
  return out;
}

// Restriction of a section to the coarse grid embedded in the fine one.
inline TwistedFn restrict_grid(const TwistedFn& x, long c, long d) {
  require_divisible(x.z_res, x.t_res, c, d, "restrict_grid");
  TwistedFn out = make_twisted_fn(x.par, x.z_res / c, x.t_res / d);
  for (long zj = 0; zj < out.z_res; ++zj)
    for (long tj = 0; tj < out.t_res; ++tj)
      out.v[static_cast<std::size_t>(zj * out.t_res + tj)] =
          x.v[static_cast<std::size_t>((c * zj) * x.t_res + d * tj)];
  return out;
}

// Twist a symbol must carry so that multiplying the pulled-back section
// lands back in the twist of the original.
inline long symbol_twist(const TwistedParams& par, long c, long d) {
  return par.a * (1 - c * d);
}

inline void require_symbol(const TwistedFn& m, const TwistedFn& x, long c,
                           long d, const char* who) {
  if (m.z_res != x.z_res || m.t_res != x.t_res)
    throw std::invalid_argument(std::string(who) + ": grid mismatch");
  if (m.par.q != x.par.q)
    throw std::invalid_argument(std::string(who) + ": period mismatch");
  if (m.par.a != symbol_twist(x.par, c, d))
    throw std::invalid_argument(std::string(who) + ": symbol twist must be a*(1-c*d)");
}

// Synthesis operator: multiply the symbol against the section pulled back
// through the covering.  Output keeps the twist of the input section.
inline TwistedFn synthesis(const TwistedFn& m, const TwistedFn& x, long c,
                           long d) {
  require_symbol(m, x, c, d, "synthesis");
  TwistedFn out = make_twisted_fn(x.par, x.z_res, x.t_res);
  for (long zi = 0; zi < x.z_res; ++zi)
    for (long ti = 0; ti < x.t_res; ++ti) {
      long wz = (c * zi) % x.z_res;
      out.v[static_cast<std::size_t>(zi * x.t_res + ti)] =
          m.v[static_cast<std::size_t>(zi * x.t_res + ti)] *
          x.eval(wz, d * ti);
    }
  return out;
}

// Adjoint of synthesis: average conj(m) * eta over the preimages of each
// coarse point, with the phase that compensates the unwinding of the
// section law across the d branches.  Output lives on the coarse grid.
inline TwistedFn analysis(const TwistedFn& m, const TwistedFn& eta, long c,
                          long d) {
  require_symbol(m, eta, c, d, "analysis");
  require_divisible(eta.z_res, eta.t_res, c, d, "analysis");
  TwistedFn out = make_twisted_fn(eta.par, eta.z_res / c, eta.t_res / d);
  const double tau = 2.0 * std::numbers::pi;
  for (long zj = 0; zj < out.z_res; ++zj)
    for (long tj = 0; tj < out.t_res; ++tj) {
      cplx s(0.0, 0.0);
      for (long i = 0; i < c; ++i) {
        const long wi = zj + i * (eta.z_res / c);
        for (long l = 0; l < d; ++l) {
          const long sn = tj + l * (eta.t_res / d);
          // phase of z^{a l} at the coarse point z with fine index c*zj
          const double angle = tau * static_cast<double>(eta.par.a) *
                               static_cast<double>(l) *
                               static_cast<double>(c * zj) /
                               static_cast<double>(eta.z_res);
          s += std::polar(1.0, angle) * std::conj(m.eval(wi, sn)) *
               eta.eval(wi, sn);
        }
      }
      out.v[static_cast<std::size_t>(zj * out.t_res + tj)] =
          s / static_cast<double>(c * d);
    }
  return out;
}

// Symbol-valued inner product: transfer of the conjugate product.  For a
// filter this must be the constant one.
inline TorusFn symbol_inner(const TwistedFn& m, const TwistedFn& n, long c,
                            long d) {
  if (m.z_res != n.z_res || m.t_res != n.t_res)
    throw std::invalid_argument("symbol_inner: grid mismatch");
  if (!same_params(m.par, n.par))
    throw std::invalid_argument("symbol_inner: twist mismatch");
  TorusFn prod = make_torus_fn(m.z_res, m.t_res);
  for (std::size_t i = 0; i < prod.v.size(); ++i)
    prod.v[i] = std::conj(m.v[i]) * n.v[i];
  return transfer(prod, c, d);
}

inline double torus_distance(const TorusFn& f, const TorusFn& g) {
  if (f.z_res != g.z_res || f.t_res != g.t_res)
    throw std::invalid_argument("torus_distance: grid mismatch");
  double mx = 0.0;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    mx = std::max(mx, std::abs(f.v[i] - g.v[i]));
  return mx;
}

inline double twisted_distance(const TwistedFn& x, const TwistedFn& y) {
  require_same_grid(x, y, "twisted_distance");
  double mx = 0.0;
  for (std::size_t i = 0; i < x.v.size(); ++i)
    mx = std::max(mx, std::abs(x.v[i] - y.v[i]));
  return mx;
}

// Deviation of <m, m> from the constant one.
inline double filter_residual(const TwistedFn& m, long c, long d) {
  const TorusFn ip = symbol_inner(m, m, c, d);
  double mx = 0.0;
  for (const auto& x : ip.v) mx = std::max(mx, std::abs(x - cplx(1.0, 0.0)));
  return mx;
}

// Cosine symbol (1 + e^{2 pi i t}) / sqrt(2), constant in z.  Its squared
// modulus averages to one over the branches of any covering with d >= 2,
// so it is a filter for every such covering and any twist.
inline TwistedFn default_filter(const TwistedParams& module_par, long c, long d,
                                long z_res, long t_res) {
  if (d < 2)
    throw std::invalid_argument("default_filter: needs d >= 2");
  TwistedFn m = make_twisted_fn(
      make_params(module_par.q, symbol_twist(module_par, c, d)), z_res, t_res);
  const double tau = 2.0 * std::numbers::pi;
  for (long zi = 0; zi < z_res; ++zi)
    for (long ti = 0; ti < t_res; ++ti) {
      const cplx w = std::polar(1.0, tau * static_cast<double>(ti) /
                                         static_cast<double>(t_res));
      m.v[static_cast<std::size_t>(zi * t_res + ti)] =
          (cplx(1.0, 0.0) + w) / std::sqrt(2.0);
    }
  return m;
}

}  // namespace modframe::torus
