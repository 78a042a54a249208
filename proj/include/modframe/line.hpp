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
 * Functions on the real line sampled on dyadic-style grids, and the cascade
 * construction that approximates scaling functions.  A SampledLine stores
 * exact point values at t = n/grid; operations only ever read values at
 * points that are themselves grid points, so no interpolation happens
 * anywhere:
 *
 *   - the forward dilation sqrt(N) * xi(N t) keeps the step (N*n is a grid
 *     index whenever n is);
 *   - the inverse dilation divides the resolution by N, which is why grids
 *     fed through it must be divisible by N;
 *   - the translate-sum inner product shifts by whole integers.
 *
 * Circle symbols (anything evaluable at rational points of the circle) act
 * pointwise; Laurent polynomials are the common case.
 */

#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <vector>

#include "modframe/laurent.hpp"

namespace modframe {

template <typename F>
concept CircleSymbol = requires(const F f, long long num, long long den) {
  { f(num, den) } -> std::convertible_to<cplx>;
};

// Adaptor so a LaurentPoly can be used wherever a symbol is expected.
struct PolySymbol {
  const LaurentPoly* p;
  cplx operator()(long long num, long long den) const {
    return p->eval(num, den);
  }
};

struct SampledLine {
  long grid = 1;    // samples per unit interval; step = 1/grid
  long t_min = 0;   // window [t_min, t_max), integer endpoints
  long t_max = 0;
  std::vector<cplx> v;  // v[i] is the value at t = t_min + i/grid

  long size() const { return (t_max - t_min) * grid; }

  // Value at t = n/grid for a global integer index n; zero off-window.
  cplx at_index(long n) const {
    const long i = n - t_min * grid;
    if (i < 0 || i >= size()) return cplx(0.0, 0.0);
    return v[static_cast<std::size_t>(i)];
  }

  double t_of(long i) const {
    return static_cast<double>(t_min) + static_cast<double>(i) / grid;
  }
};

inline SampledLine make_line(long grid, long t_min, long t_max) {
  if (grid < 1 || t_max < t_min)
    throw std::invalid_argument("make_line: bad grid or window");
  SampledLine x;
  x.grid = grid;
  x.t_min = t_min;
  x.t_max = t_max;
  x.v.assign(static_cast<std::size_t>((t_max - t_min) * grid), cplx(0.0, 0.0));
  return x;
}

// Largest |difference| over the union of the windows (grids must agree).
inline double line_distance(const SampledLine& x, const SampledLine& y) {
  if (x.grid != y.grid)
    throw std::invalid_argument("line_distance: grid mismatch");
  const long lo = std::min(x.t_min, y.t_min) * x.grid;
  const long hi = std::max(x.t_max, y.t_max) * x.grid;
  double m = 0.0;
  for (long n = lo; n < hi; ++n)
    m = std::max(m, std::abs(x.at_index(n) - y.at_index(n)));
  return m;
}

// Finite cascade product: value at t is the product over k = 1..K of
// N^{-1/2} m(t / N^k).
template <CircleSymbol Sym>
SampledLine cascade_product(const Sym& m, int N, int K, long grid, long t_min,
                            long t_max) {
  if (N < 2 || K < 0) throw std::invalid_argument("cascade_product: bad N/K");
  SampledLine out = make_line(grid, t_min, t_max);
  const double root = 1.0 / std::sqrt(static_cast<double>(N));
  for (long i = 0; i < out.size(); ++i) {
    const long long n = static_cast<long long>(t_min) * grid + i;
    cplx prod(1.0, 0.0);
    long long den = grid;
    for (int k = 1; k <= K; ++k) {
      den *= N;  // t / N^k = n / (grid * N^k)
      prod *= root * m(n, den);
    }
    out.v[static_cast<std::size_t>(i)] = prod;
  }
  return out;
}

inline SampledLine cascade_product(const LaurentPoly& m, int N, int K,
                                   long grid, long t_min, long t_max) {
  return cascade_product(PolySymbol{&m}, N, K, grid, t_min, t_max);
}

// Forward dilation sqrt(N) * xi(N t) on the same step; the window shrinks to
// the integer hull of [t_min/N, t_max/N) and reads off-window values as 0.
inline SampledLine dilate(const SampledLine& xi, int N) {
  if (N < 2) throw std::invalid_argument("dilate: N must be >= 2");
  const auto fdiv = [](long a, long b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
  };
  const auto cdiv = [](long a, long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
  };
  SampledLine out = make_line(xi.grid, fdiv(xi.t_min, N), cdiv(xi.t_max, N));
  const double root = std::sqrt(static_cast<double>(N));
  for (long i = 0; i < out.size(); ++i) {
    const long n = out.t_min * out.grid + i;
    out.v[static_cast<std::size_t>(i)] = root * xi.at_index(N * n);
  }
  return out;
}

// Inverse dilation N^{-1/2} * xi(t / N).  The resolution drops by a factor
// of N (every output sample is an input sample), so grid % N must be 0.
inline SampledLine dilate_inverse(const SampledLine& xi, int N) {
  if (N < 2) throw std::invalid_argument("dilate_inverse: N must be >= 2");
  if (xi.grid % N != 0)
    throw std::invalid_argument(
        "dilate_inverse: grid resolution not divisible by N");
  SampledLine out;
  out.grid = xi.grid / N;
  out.t_min = xi.t_min * N;
  out.t_max = xi.t_max * N;
  out.v = xi.v;  // global index n keeps its meaning: n/out.grid = N*(n/xi.grid)
  const double root = 1.0 / std::sqrt(static_cast<double>(N));
  for (auto& a : out.v) a *= root;
  return out;
}

// Exact restriction to a coarser grid dividing the current one.
inline SampledLine coarsen(const SampledLine& xi, long grid2) {
  if (grid2 < 1 || xi.grid % grid2 != 0)
    throw std::invalid_argument("coarsen: target grid must divide source");
  const long stride = xi.grid / grid2;
  SampledLine out = make_line(grid2, xi.t_min, xi.t_max);
  for (long i = 0; i < out.size(); ++i)
    out.v[static_cast<std::size_t>(i)] = xi.v[static_cast<std::size_t>(i * stride)];
  return out;
}

// Pointwise multiplication by the symbol evaluated at the sample point.
template <CircleSymbol Sym>
SampledLine apply_symbol(const SampledLine& xi, const Sym& f) {
  SampledLine out = xi;
  for (long i = 0; i < out.size(); ++i) {
    const long long n = static_cast<long long>(out.t_min) * out.grid + i;
    out.v[static_cast<std::size_t>(i)] *= f(n, out.grid);
  }
  return out;
}

inline SampledLine apply_symbol(const SampledLine& xi, const LaurentPoly& f) {
  return apply_symbol(xi, PolySymbol{&f});
}

// Function on the circle sampled at t = j/res.
struct CircleGridFn {
  long res = 1;
  std::vector<cplx> v;

  cplx at(long j) const {
    j %= res;
    if (j < 0) j += res;
    return v[static_cast<std::size_t>(j)];
  }
};

inline double grid_distance_to_const(const CircleGridFn& f, cplx c) {
  double m = 0.0;
  for (const auto& a : f.v) m = std::max(m, std::abs(a - c));
  return m;
}

// Translate-sum inner product: result(t) = sum over |k| <= kmax of
// conj(xi(t-k)) * eta(t-k), sampled for t in [0,1).  Exact whenever both
// supports sit inside [-kmax, kmax].
inline CircleGridFn bracket_inner(const SampledLine& xi, const SampledLine& eta,
                                  long kmax) {
  if (xi.grid != eta.grid)
    throw std::invalid_argument("bracket_inner: grid mismatch");
  CircleGridFn out;
  out.res = xi.grid;
  out.v.assign(static_cast<std::size_t>(out.res), cplx(0.0, 0.0));
  for (long j = 0; j < out.res; ++j) {
    cplx s(0.0, 0.0);
    for (long k = -kmax; k <= kmax; ++k) {
      const long n = j - k * xi.grid;
      s += std::conj(xi.at_index(n)) * eta.at_index(n);
    }
    out.v[static_cast<std::size_t>(j)] = s;
  }
  return out;
}

// Defect of the scaling relation sqrt(N) * next(N t) = m(t) * cur(t) over
// the grid points of cur whose image N*t lands inside next's window.
template <CircleSymbol Sym>
double scaling_defect(const SampledLine& cur, const SampledLine& next,
                      const Sym& m, int N) {
  if (cur.grid != next.grid)
    throw std::invalid_argument("scaling_defect: grid mismatch");
  const double root = std::sqrt(static_cast<double>(N));
  double worst = 0.0;
  for (long i = 0; i < cur.size(); ++i) {
    const long n = cur.t_min * cur.grid + i;
    const long nn = N * n;
    if (nn < next.t_min * next.grid || nn >= next.t_max * next.grid) continue;
    const cplx lhs = root * next.at_index(nn);
    const cplx rhs = m(n, cur.grid) * cur.at_index(n);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

inline double scaling_defect(const SampledLine& cur, const SampledLine& next,
                             const LaurentPoly& m, int N) {
  return scaling_defect(cur, next, PolySymbol{&m}, N);
}

// psi = inverse dilation of (phi * m1); with two-band systems this is the
// mother wavelet attached to phi.
template <CircleSymbol Sym>
SampledLine mother_wavelet(const SampledLine& phi, const Sym& m1, int N = 2) {
  return dilate_inverse(apply_symbol(phi, m1), N);
}

inline SampledLine mother_wavelet(const SampledLine& phi, const LaurentPoly& m1,
                                  int N = 2) {
  return mother_wavelet(phi, PolySymbol{&m1}, N);
}

namespace detail {

// Symbol of the word (j_1, ..., j_k): product of the letters with the l-th
// letter read at N^{l-1} * t.
template <typename Sym>
struct WordSymbol {
  const std::vector<Sym>* letters;
  const std::vector<int>* word;
  int N;

  cplx operator()(long long num, long long den) const {
    cplx prod(1.0, 0.0);
    long long scale = 1;
    for (int j : *word) {
      prod *= (*letters)[static_cast<std::size_t>(j)](num * scale, den);
      scale *= N;
    }
    return prod;
  }
};

}  // namespace detail

// The level-K family {phi} + {D^{-k}(phi * word) : fresh words, 1 <= k <= K},
// all restricted to the common resolution grid/N^K.  Words are enumerated in
// length-lexicographic order; letter 0 is the low-pass symbol.
template <typename Sym>
std::vector<SampledLine> mra_basis(const SampledLine& phi,
                                   const std::vector<Sym>& symbols, int N,
                                   int K) {
  long scale = 1;
  for (int i = 0; i < K; ++i) scale *= N;
  if (phi.grid % scale != 0)
    throw std::invalid_argument("mra_basis: grid resolution not divisible by N^K");
  const long common = phi.grid / scale;
  std::vector<SampledLine> out;
  out.push_back(coarsen(phi, common));
  const int alphabet = static_cast<int>(symbols.size());
  if (alphabet < 2) return out;
  std::vector<std::vector<int>> words;
  for (int len = 1; len <= K; ++len) {
    std::vector<int> w(static_cast<std::size_t>(len), 0);
    w[0] = 1;
    while (true) {
      words.push_back(w);
      int i = len - 1;
      while (i >= 0) {
        if (++w[static_cast<std::size_t>(i)] < alphabet) break;
        w[static_cast<std::size_t>(i)] = (i == 0) ? 1 : 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  for (const auto& w : words) {
    detail::WordSymbol<Sym> ws{&symbols, &w, N};
    SampledLine x = apply_symbol(phi, ws);
    for (std::size_t l = 0; l < w.size(); ++l) x = dilate_inverse(x, N);
    out.push_back(coarsen(x, common));
  }
  return out;
}

inline std::vector<SampledLine> mra_basis(const SampledLine& phi,
                                          const std::vector<LaurentPoly>& bank,
                                          int N, int K) {
  std::vector<PolySymbol> symbols;
  symbols.reserve(bank.size());
  for (const auto& m : bank) symbols.push_back(PolySymbol{&m});
  return mra_basis(phi, symbols, N, K);
}

}  // namespace modframe
