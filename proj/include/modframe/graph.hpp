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
 * Backward-shift dynamics on the path space of a finite directed graph.
 *
 * Paths are edge sequences c_0 c_1 c_2 ... with src(c_i) == rng(c_{i+1}),
 * so c_0 is the most recent edge and the sequence extends into the past of
 * the walk.  Cylinder functions of depth d depend on the first d edges;
 * two-sided cylinders carry an extra finite window into the opposite
 * direction, indexed by negative positions.  Everything below is a finite
 * exact computation: transfer averages over the edges that can be
 * prepended, weights renormalize per-vertex out-degrees, and the dilation
 * slides the two-sided window by one position.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "modframe/laurent.hpp"

namespace modframe::graph {

// Per-vertex weight normalization must hold to this tolerance at load time.
inline constexpr double kWeightNormTol = 1e-12;

struct DirectedGraph {
  std::vector<std::string> vertex_ids;
  std::vector<std::string> edge_ids;
  std::vector<int> edge_src;
  std::vector<int> edge_rng;
  std::vector<std::vector<int>> out_edges;  // edges leaving each vertex
  std::vector<std::vector<int>> in_edges;   // edges arriving at each vertex

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int edge_count() const { return static_cast<int>(edge_ids.size()); }
  int out_degree(int v) const {
    return static_cast<int>(out_edges[static_cast<std::size_t>(v)].size());
  }
};

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string rng;
};

// Builds and validates a graph.  Every vertex must emit at least one edge
// and receive at least one edge, otherwise the shift dynamics degenerate.
inline DirectedGraph make_graph(const std::vector<std::string>& vertices,
                                const std::vector<EdgeSpec>& edges) {
  DirectedGraph g;
  std::map<std::string, int> vid;
  for (const auto& v : vertices) {
    if (vid.count(v))
      throw std::invalid_argument("make_graph: duplicate vertex '" + v + "'");
    vid[v] = static_cast<int>(g.vertex_ids.size());
    g.vertex_ids.push_back(v);
  }
  g.out_edges.resize(vertices.size());
  g.in_edges.resize(vertices.size());
  std::map<std::string, int> eid;
  for (const auto& e : edges) {
    if (eid.count(e.id))
      throw std::invalid_argument("make_graph: duplicate edge '" + e.id + "'");
    if (!vid.count(e.src))
      throw std::invalid_argument("make_graph: edge '" + e.id +
                                  "' has unknown src '" + e.src + "'");
    if (!vid.count(e.rng))
      throw std::invalid_argument("make_graph: edge '" + e.id +
                                  "' has unknown rng '" + e.rng + "'");
    const int idx = static_cast<int>(g.edge_ids.size());
    eid[e.id] = idx;
    g.edge_ids.push_back(e.id);
    g.edge_src.push_back(vid[e.src]);
    g.edge_rng.push_back(vid[e.rng]);
    g.out_edges[static_cast<std::size_t>(vid[e.src])].push_back(idx);
    g.in_edges[static_cast<std::size_t>(vid[e.rng])].push_back(idx);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.in_edges[static_cast<std::size_t>(v)].empty())
      throw std::invalid_argument("make_graph: vertex '" + g.vertex_ids[v] +
                                  "' receives no edge");
    if (g.out_edges[static_cast<std::size_t>(v)].empty())
      throw std::invalid_argument("make_graph: vertex '" + g.vertex_ids[v] +
                                  "' emits no edge");
  }
  return g;
}

using Path = std::vector<int>;  // edge indices, position 0 first

inline bool composable(const DirectedGraph& g, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.edge_src[static_cast<std::size_t>(p[i])] !=
        g.edge_rng[static_cast<std::size_t>(p[i + 1])])
      return false;
  return true;
}

// All composable paths of the given length, lexicographic in edge indices.
inline std::vector<Path> paths(const DirectedGraph& g, int len) {
  if (len < 0) throw std::invalid_argument("paths: negative length");
  std::vector<Path> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  Path cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!cur.empty() &&
          g.edge_src[static_cast<std::size_t>(cur.back())] !=
              g.edge_rng[static_cast<std::size_t>(e)])
        continue;
      cur.push_back(e);
      self(self, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, len);
  return out;
}

// Function depending on the first `depth` edges of a path.
struct CylFn {
  int depth = 1;
  std::map<Path, cplx> values;  // keys of exact length `depth`

  // Reads through any window at least `depth` long.
  cplx at(const Path& window) const {
    if (static_cast<int>(window.size()) < depth)
      throw std::invalid_argument("CylFn::at: window too short");
    if (static_cast<int>(window.size()) == depth) {
      auto it = values.find(window);
      return it == values.end() ? cplx(0.0, 0.0) : it->second;
    }
    Path key(window.begin(), window.begin() + depth);
    auto it = values.find(key);
    return it == values.end() ? cplx(0.0, 0.0) : it->second;
  }
};

template <typename Fn>
CylFn make_cyl(const DirectedGraph& g, int depth, Fn&& f) {
  if (depth < 1) throw std::invalid_argument("make_cyl: depth must be >= 1");
  CylFn out;
  out.depth = depth;
  for (const auto& p : paths(g, depth)) out.values[p] = f(p);
  return out;
}

// Vertex data enters at depth 1 through the range of the leading edge.
template <typename Fn>
CylFn vertex_fn(const DirectedGraph& g, Fn&& f) {
  return make_cyl(g, 1, [&](const Path& p) {
    return f(g.edge_rng[static_cast<std::size_t>(p[0])]);
  });
}

inline CylFn promote(const DirectedGraph& g, const CylFn& f, int depth) {
  if (depth < f.depth) throw std::invalid_argument("promote: depth decrease");
  if (depth == f.depth) return f;
  return make_cyl(g, depth, [&](const Path& p) { return f.at(p); });
}

inline CylFn cyl_add(const DirectedGraph& g, const CylFn& f, const CylFn& h) {
  const int d = std::max(f.depth, h.depth);
  return make_cyl(g, d, [&](const Path& p) { return f.at(p) + h.at(p); });
}

inline CylFn cyl_mul(const DirectedGraph& g, const CylFn& f, const CylFn& h) {
  const int d = std::max(f.depth, h.depth);
  return make_cyl(g, d, [&](const Path& p) { return f.at(p) * h.at(p); });
}

inline CylFn cyl_scale(cplx a, const CylFn& f) {
  CylFn out = f;
  for (auto& [p, v] : out.values) v = a * v;
  return out;
}

inline CylFn cyl_conj(const CylFn& f) {
  CylFn out = f;
  for (auto& [p, v] : out.values) v = std::conj(v);
  return out;
}

inline double cyl_distance(const DirectedGraph& g, const CylFn& f,
                           const CylFn& h) {
  const int d = std::max(f.depth, h.depth);
  double m = 0.0;
  for (const auto& p : paths(g, d))
    m = std::max(m, std::abs(f.at(p) - h.at(p)));
  return m;
}

// Composition with the backward shift: depth grows by one and the leading
// edge is ignored.
inline CylFn shift_pullback(const DirectedGraph& g, const CylFn& f) {
  return make_cyl(g, f.depth + 1, [&](const Path& p) {
    return f.at(Path(p.begin() + 1, p.end()));
  });
}

// Transfer operator: average of f over the edges that can be prepended.
inline CylFn transfer(const DirectedGraph& g, const CylFn& f) {
  const int d = std::max(f.depth - 1, 1);
  return make_cyl(g, d, [&](const Path& p) {
    const int v = g.edge_rng[static_cast<std::size_t>(p[0])];
    cplx s(0.0, 0.0);
    Path ext;
    ext.reserve(p.size() + 1);
    for (int e : g.out_edges[static_cast<std::size_t>(v)]) {
      ext.assign(1, e);
      ext.insert(ext.end(), p.begin(), p.end());
      s += f.at(ext);
    }
    return s / static_cast<double>(g.out_degree(v));
  });
}

// k-fold transfer in closed form: weighted sum over prepended length-k
// paths, the weight being the product of inverse out-degrees of the sources
// along the prepended part.
inline CylFn transfer_pow(const DirectedGraph& g, const CylFn& f, int k) {
  if (k < 0) throw std::invalid_argument("transfer_pow: negative power");
  if (k == 0) return f;
  const int d = std::max(f.depth - k, 1);
  const auto pre = paths(g, k);
  return make_cyl(g, d, [&](const Path& p) {
    cplx s(0.0, 0.0);
    for (const auto& nu : pre) {
      if (g.edge_src[static_cast<std::size_t>(nu.back())] !=
          g.edge_rng[static_cast<std::size_t>(p[0])])
        continue;
      double weight = 1.0;
      for (int e : nu)
        weight /= g.out_degree(g.edge_src[static_cast<std::size_t>(e)]);
      Path ext = nu;
      ext.insert(ext.end(), p.begin(), p.end());
      s += weight * f.at(ext);
    }
    return s;
  });
}

struct WeightSystem {
  std::vector<cplx> w;  // by edge index
};

// Validates that no weight vanishes and each vertex satisfies
// sum |w(e)|^2 = out_degree over its outgoing edges.
inline WeightSystem make_weight_system(const DirectedGraph& g,
                                       std::vector<cplx> w) {
  if (static_cast<int>(w.size()) != g.edge_count())
    throw std::invalid_argument("make_weight_system: size mismatch");
  for (int e = 0; e < g.edge_count(); ++e)
    if (std::abs(w[static_cast<std::size_t>(e)]) == 0.0)
      throw std::invalid_argument("make_weight_system: zero weight on edge '" +
                                  g.edge_ids[static_cast<std::size_t>(e)] +
                                  "'");
  for (int v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (int e : g.out_edges[static_cast<std::size_t>(v)])
      s += std::norm(w[static_cast<std::size_t>(e)]);
    if (std::abs(s - g.out_degree(v)) > kWeightNormTol)
      throw std::invalid_argument(
          "make_weight_system: norm law violated at vertex '" +
          g.vertex_ids[static_cast<std::size_t>(v)] + "'");
  }
  return WeightSystem{std::move(w)};
}

inline CylFn filter_of(const DirectedGraph& g, const WeightSystem& w) {
  return make_cyl(g, 1, [&](const Path& p) {
    return w.w[static_cast<std::size_t>(p[0])];
  });
}

// Weight of a prepended past word: product of w(e)/sqrt(out_degree(src(e))).
inline cplx path_weight(const DirectedGraph& g, const WeightSystem& w,
                        const Path& nu) {
  cplx out(1.0, 0.0);
  for (int e : nu)
    out *= w.w[static_cast<std::size_t>(e)] /
           std::sqrt(static_cast<double>(
               g.out_degree(g.edge_src[static_cast<std::size_t>(e)])));
  return out;
}

// Checks that pushing one more edge into the past preserves squared mass,
// level by level up to kmax.
inline double weight_consistency(const DirectedGraph& g, const WeightSystem& w,
                                 int kmax) {
  double worst = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (int e : g.out_edges[static_cast<std::size_t>(v)])
      s += std::norm(path_weight(g, w, {e}));
    worst = std::max(worst, std::abs(s - 1.0));
  }
  for (int k = 1; k < kmax; ++k) {
    for (const auto& nu : paths(g, k)) {
      double s = 0.0;
      const int v = g.edge_rng[static_cast<std::size_t>(nu[0])];
      for (int e : g.out_edges[static_cast<std::size_t>(v)]) {
        Path ext;
        ext.reserve(nu.size() + 1);
        ext.push_back(e);
        ext.insert(ext.end(), nu.begin(), nu.end());
        s += std::norm(path_weight(g, w, ext));
      }
      worst = std::max(worst, std::abs(s - std::norm(path_weight(g, w, nu))));
    }
  }
  return worst;
}

// Integral of f against the level-k measure anchored at the given path:
// weighted sum over the length-k pasts that can be prepended to the anchor.
inline cplx fiber_measure(const DirectedGraph& g, const WeightSystem& w,
                          const Path& anchor, int k, const CylFn& f) {
  if (anchor.empty())
    throw std::invalid_argument("fiber_measure: empty anchor");
  if (k == 0) return f.at(anchor);
  cplx s(0.0, 0.0);
  for (const auto& nu : paths(g, k)) {
    if (g.edge_src[static_cast<std::size_t>(nu.back())] !=
        g.edge_rng[static_cast<std::size_t>(anchor[0])])
      continue;
    Path ext = nu;
    ext.insert(ext.end(), anchor.begin(), anchor.end());
    s += std::norm(path_weight(g, w, nu)) * f.at(ext);
  }
  return s;
}

// Window function over positions -past .. future-1; keys run oldest-past
// first, so key[i] holds position i - past.
struct TwoSided {
  int past = 0;
  int future = 1;
  std::map<Path, cplx> values;  // keys of exact length past+future

  cplx at(const Path& window) const {
    auto it = values.find(window);
    return it == values.end() ? cplx(0.0, 0.0) : it->second;
  }
};

template <typename Fn>
TwoSided make_two_sided(const DirectedGraph& g, int past, int future, Fn&& f) {
  if (past < 0 || future < 1)
    throw std::invalid_argument("make_two_sided: bad window");
  TwoSided out;
  out.past = past;
  out.future = future;
  for (const auto& p : paths(g, past + future)) out.values[p] = f(p);
  return out;
}

inline TwoSided promote_two(const DirectedGraph& g, const TwoSided& x,
                            int past, int future) {
  if (past < x.past || future < x.future)
    throw std::invalid_argument("promote_two: window shrink");
  if (past == x.past && future == x.future) return x;
  return make_two_sided(g, past, future, [&](const Path& p) {
    Path key(p.begin() + (past - x.past),
             p.begin() + (past - x.past) + (x.past + x.future));
    return x.at(key);
  });
}

inline TwoSided two_add(const DirectedGraph& g, const TwoSided& x,
                        const TwoSided& y) {
  const int past = std::max(x.past, y.past);
  const int fut = std::max(x.future, y.future);
  const TwoSided xp = promote_two(g, x, past, fut);
  const TwoSided yp = promote_two(g, y, past, fut);
  return make_two_sided(g, past, fut, [&](const Path& p) {
    return xp.at(p) + yp.at(p);
  });
}

inline double two_distance(const DirectedGraph& g, const TwoSided& x,
                           const TwoSided& y) {
  const int past = std::max(x.past, y.past);
  const int fut = std::max(x.future, y.future);
  const TwoSided xp = promote_two(g, x, past, fut);
  const TwoSided yp = promote_two(g, y, past, fut);
  double m = 0.0;
  for (const auto& p : paths(g, past + fut))
    m = std::max(m, std::abs(xp.at(p) - yp.at(p)));
  return m;
}

// Inner product over the past fibers: promote to a common window, then sum
// the conjugate product against squared path weights of the common past.
inline CylFn pathspace_inner(const DirectedGraph& g, const WeightSystem& w,
                             const TwoSided& x, const TwoSided& y) {
  const int K = std::max(x.past, y.past);
  const int d = std::max(x.future, y.future);
  const TwoSided xp = promote_two(g, x, K, d);
  const TwoSided yp = promote_two(g, y, K, d);
  const auto pasts = paths(g, K);
  return make_cyl(g, d, [&](const Path& p) {
    cplx s(0.0, 0.0);
    if (K == 0) return std::conj(xp.at(p)) * yp.at(p);
    for (const auto& nu : pasts) {
      if (g.edge_src[static_cast<std::size_t>(nu.back())] !=
          g.edge_rng[static_cast<std::size_t>(p[0])])
        continue;
      Path ext = nu;
      ext.insert(ext.end(), p.begin(), p.end());
      s += std::conj(xp.at(ext)) * yp.at(ext) *
           std::norm(path_weight(g, w, nu));
    }
    return s;
  });
}

// Module action of a cylinder function on a two-sided window: multiply by
// the value read from the non-negative positions.
inline TwoSided two_action(const DirectedGraph& g, const TwoSided& x,
                           const CylFn& f) {
  const int fut = std::max(x.future, f.depth);
  const TwoSided xp = promote_two(g, x, x.past, fut);
  return make_two_sided(g, xp.past, fut, [&](const Path& p) {
    return xp.at(p) * f.at(Path(p.begin() + xp.past, p.end()));
  });
}

// Dilation: multiply by the filter weight at position 0 and slide the
// window one step (past shrinks, future grows).
inline TwoSided dilate_two(const DirectedGraph& g, const WeightSystem& w,
                           const TwoSided& x) {
  if (x.past >= 1) {
    TwoSided out;
    out.past = x.past - 1;
    out.future = x.future + 1;
    for (const auto& [p, v] : x.values)
      out.values[p] =
          w.w[static_cast<std::size_t>(p[static_cast<std::size_t>(x.past - 1)])] * v;
    return out;
  }
  return make_two_sided(g, 0, x.future + 1, [&](const Path& p) {
    return w.w[static_cast<std::size_t>(p[0])] *
           x.at(Path(p.begin() + 1, p.end()));
  });
}

inline TwoSided dilate_two_inverse(const DirectedGraph& g,
                                   const WeightSystem& w, const TwoSided& x) {
  const TwoSided xp =
      (x.future >= 2) ? x : promote_two(g, x, x.past, 2);
  TwoSided out;
  out.past = xp.past + 1;
  out.future = xp.future - 1;
  for (const auto& [p, v] : xp.values)
    out.values[p] =
        v / w.w[static_cast<std::size_t>(p[static_cast<std::size_t>(xp.past)])];
  return out;
}

// Rows are 1-based weight families; row 0 is the filter row and must be a
// valid weight system on its own.
struct OrthoBank {
  std::vector<std::vector<cplx>> rows;  // rows[n-1][edge index]
};

struct BankDefect {
  double max_defect = 0.0;
  std::string witness;
};

// Per-vertex column orthonormality: the vectors
// (w_n(e)/sqrt(out_degree(v)))_{e in out(v)}, n = 1..out_degree(v), must be
// orthonormal, and rows beyond the out-degree must vanish there.
inline BankDefect check_ortho_bank(const DirectedGraph& g,
                                   const OrthoBank& bank) {
  BankDefect rep;
  const int rows = static_cast<int>(bank.rows.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& out = g.out_edges[static_cast<std::size_t>(v)];
    const int deg = static_cast<int>(out.size());
    for (int n = 1; n <= rows; ++n) {
      for (int m = n; m <= rows; ++m) {
        cplx ip(0.0, 0.0);
        for (int e : out)
          ip += std::conj(bank.rows[static_cast<std::size_t>(n - 1)]
                                   [static_cast<std::size_t>(e)]) *
                bank.rows[static_cast<std::size_t>(m - 1)]
                         [static_cast<std::size_t>(e)] /
                static_cast<double>(deg);
        const bool live = n <= deg && m <= deg;
        const cplx expect = (live && n == m) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
        const double d = std::abs(ip - expect);
        if (d > rep.max_defect) {
          rep.max_defect = d;
          rep.witness = "vertex '" + g.vertex_ids[static_cast<std::size_t>(v)] +
                        "' rows " + std::to_string(n) + "," + std::to_string(m);
        }
      }
      if (n > deg)
        for (int e : out) {
          const double d = std::abs(
              bank.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(e)]);
          if (d > rep.max_defect) {
            rep.max_defect = d;
            rep.witness = "row " + std::to_string(n) + " must vanish on edge '" +
                          g.edge_ids[static_cast<std::size_t>(e)] + "'";
          }
        }
    }
  }
  return rep;
}

inline CylFn bank_filter(const DirectedGraph& g, const OrthoBank& bank, int n) {
  if (n < 1 || n > static_cast<int>(bank.rows.size()))
    throw std::invalid_argument("bank_filter: row out of range");
  return make_cyl(g, 1, [&](const Path& p) {
    return bank.rows[static_cast<std::size_t>(n - 1)]
                    [static_cast<std::size_t>(p[0])];
  });
}

// Indicator of the paths whose leading range vertex still has at least n
// outgoing edges; this is the expected value of <m_n, m_n>.
inline CylFn degree_projection(const DirectedGraph& g, int n) {
  return make_cyl(g, 1, [&](const Path& p) {
    const int v = g.edge_rng[static_cast<std::size_t>(p[0])];
    return g.out_degree(v) >= n ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
  });
}

// Defect of sum_n m_n * shift_pullback(transfer(conj(m_n) * f)) = f over
// all indicator functions of the given depth.
inline double resolution_defect(const DirectedGraph& g, const OrthoBank& bank,
                                int depth) {
  double worst = 0.0;
  std::vector<CylFn> filters;
  for (int n = 1; n <= static_cast<int>(bank.rows.size()); ++n)
    filters.push_back(bank_filter(g, bank, n));
  for (const auto& b : paths(g, depth)) {
    const CylFn f = make_cyl(g, depth, [&](const Path& p) {
      return p == b ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    });
    CylFn acc = make_cyl(g, 1, [](const Path&) { return cplx(0.0, 0.0); });
    for (const auto& m : filters) {
      const CylFn inner = transfer(g, cyl_mul(g, cyl_conj(m), f));
      acc = cyl_add(g, acc, cyl_mul(g, m, shift_pullback(g, inner)));
    }
    worst = std::max(worst, cyl_distance(g, acc, f));
  }
  return worst;
}

// Isometry from the level-k module: multiply by the filter weights of the
// first k positions and read x through the shifted window.
inline CylFn v_map(const DirectedGraph& g, const WeightSystem& w, int k,
                   const TwoSided& x) {
  if (x.past > k) throw std::invalid_argument("v_map: past depth exceeds k");
  return make_cyl(g, k + x.future, [&](const Path& p) {
    cplx c(1.0, 0.0);
    for (int j = 0; j < k; ++j)
      c *= w.w[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
    Path key(p.begin() + (k - x.past), p.end());
    return c * x.at(key);
  });
}

// One level up: multiply by the filter and compose with the shift.
inline CylFn t_map(const DirectedGraph& g, const WeightSystem& w,
                   const CylFn& f) {
  return cyl_mul(g, filter_of(g, w), shift_pullback(g, f));
}

// t_map after v_map must agree with v_map one level later.
inline double intertwine_defect(const DirectedGraph& g, const WeightSystem& w,
                                int k, const TwoSided& x) {
  return cyl_distance(g, t_map(g, w, v_map(g, w, k, x)),
                      v_map(g, w, k + 1, x));
}

// Frame of the dilation tower through level K: the constant unit plus, for
// every word over rows 2..R followed by free letters, the k-fold inverse
// dilation of the word cylinder.  Letters are 1-based; a word is fresh when
// its first letter is not the filter row.
inline std::vector<TwoSided> frame_elements(const DirectedGraph& g,
                                            const OrthoBank& bank, int K) {
  const WeightSystem w{bank.rows.at(0)};
  std::vector<TwoSided> out;
  out.push_back(make_two_sided(g, 0, 1, [](const Path&) {
    return cplx(1.0, 0.0);
  }));
  const int rows = static_cast<int>(bank.rows.size());
  if (rows < 2) return out;
  std::vector<std::vector<int>> words;
  for (int len = 1; len <= K; ++len) {
    std::vector<int> word(static_cast<std::size_t>(len), 1);
    word[0] = 2;
    while (true) {
      words.push_back(word);
      int i = len - 1;
      while (i >= 0) {
        if (++word[static_cast<std::size_t>(i)] <= rows) break;
        word[static_cast<std::size_t>(i)] = (i == 0) ? 2 : 1;
        --i;
      }
      if (i < 0) break;
    }
  }
  for (const auto& word : words) {
    const int k = static_cast<int>(word.size());
    TwoSided x = make_two_sided(g, 0, k, [&](const Path& p) {
      cplx c(1.0, 0.0);
      for (int l = 0; l < k; ++l)
        c *= bank.rows[static_cast<std::size_t>(word[static_cast<std::size_t>(l)] - 1)]
                      [static_cast<std::size_t>(p[static_cast<std::size_t>(l)])];
      return c;
    });
    for (int l = 0; l < k; ++l) x = dilate_two_inverse(g, w, x);
    out.push_back(std::move(x));
  }
  return out;
}

struct FrameDefects {
  double identity = 0.0;
  double reconstruction = 0.0;
};

// Frame identity and reconstruction for one target window function.
inline FrameDefects frame_defects(const DirectedGraph& g, const OrthoBank& bank,
                                  const std::vector<TwoSided>& frame,
                                  const TwoSided& x) {
  const WeightSystem w{bank.rows.at(0)};
  const CylFn target = pathspace_inner(g, w, x, x);
  CylFn acc = make_cyl(g, 1, [](const Path&) { return cplx(0.0, 0.0); });
  TwoSided rec = make_two_sided(g, 0, 1, [](const Path&) {
    return cplx(0.0, 0.0);
  });
  for (const auto& el : frame) {
    const CylFn a = pathspace_inner(g, w, x, el);
    const CylFn b = pathspace_inner(g, w, el, x);
    acc = cyl_add(g, acc, cyl_mul(g, a, b));
    rec = two_add(g, rec, two_action(g, el, b));
  }
  FrameDefects out;
  out.identity = cyl_distance(g, acc, target);
  out.reconstruction = two_distance(g, rec, x);
  return out;
}

}  // namespace modframe::graph
