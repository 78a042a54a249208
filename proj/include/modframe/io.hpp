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
 * File formats.  All JSON, all small:
 *
 *   Laurent polynomial   {"coeffs": [[exponent, re, im], ...]}
 *   filter bank          {"N": 2, "filters": [poly, ...]}   first = low-pass
 *   graph                {"vertices": [..], "edges": [{"id","src","rng"}]}
 *   graph weight bank    {"w1": {edge: value}, "w2": ...}   value = x | [re, im]
 *   twisted section      {"q","a","z_res","t_res","values":[value, ...]}
 *                        row-major over (z index, t index)
 *
 * Sampled line data goes out as CSV with a "t,re,im" header.  Errors carry
 * the file name and the offending field so a bad input names itself.
 */

#pragma once

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "modframe/circle.hpp"
#include "modframe/graph.hpp"
#include "modframe/laurent.hpp"
#include "modframe/line.hpp"
#include "modframe/torus.hpp"

namespace modframe::io {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

inline const json& need(const json& j, const char* key,
                        const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline long need_long(const json& j, const char* key,
                      const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer())
    throw InputError(where + ": field '" + key + "' must be an integer");
  return v.get<long>();
}

// A scalar is either a real number or a [re, im] pair.
inline cplx parse_scalar(const json& v, const std::string& where) {
  if (v.is_number()) return cplx(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return cplx(v[0].get<double>(), v[1].get<double>());
  throw InputError(where + ": expected a number or [re, im]");
}

inline json scalar_json(cplx z) {
  if (z.imag() == 0.0) return json(z.real());
  return json::array({z.real(), z.imag()});
}

inline LaurentPoly poly_from_json(const json& j, const std::string& where) {
  const json& coeffs = need(j, "coeffs", where);
  if (!coeffs.is_array())
    throw InputError(where + ": 'coeffs' must be an array");
  std::map<long, cplx> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
    const json& t = coeffs[i];
    if (!t.is_array() || (t.size() != 2 && t.size() != 3) ||
        !t[0].is_number_integer())
      throw InputError(at + ": expected [exponent, re] or [exponent, re, im]");
    const long k = t[0].get<long>();
    if (!t[1].is_number() || (t.size() == 3 && !t[2].is_number()))
      throw InputError(at + ": coefficient entries must be numbers");
    const double re = t[1].get<double>();
    const double im = t.size() == 3 ? t[2].get<double>() : 0.0;
    terms[k] += cplx(re, im);
  }
  return LaurentPoly(std::move(terms));
}

inline json poly_to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& [k, a] : p.coeffs())
    coeffs.push_back(json::array({k, a.real(), a.imag()}));
  json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline FilterBank bank_from_json(const json& j,
                                         const std::string& where) {
  const long n = need_long(j, "N", where);
  if (n < 2) throw InputError(where + ": 'N' must be at least 2");
  const json& filters = need(j, "filters", where);
  if (!filters.is_array() || filters.empty())
    throw InputError(where + ": 'filters' must be a non-empty array");
  FilterBank bank{CircleSystem(static_cast<int>(n)),
                          {},
                          BankKind::unverified};
  for (std::size_t i = 0; i < filters.size(); ++i)
    bank.filters.push_back(poly_from_json(
        filters[i], where + ".filters[" + std::to_string(i) + "]"));
  return bank;
}

inline json bank_to_json(const FilterBank& bank) {
  json j;
  j["N"] = bank.system.N;
  j["filters"] = json::array();
  for (const auto& m : bank.filters) j["filters"].push_back(poly_to_json(m));
  return j;
}

inline FilterBank load_bank(const std::string& path) {
  return bank_from_json(load_json(path), path);
}

inline graph::DirectedGraph graph_from_json(const json& j,
                                            const std::string& where) {
  const json& verts = need(j, "vertices", where);
  if (!verts.is_array())
    throw InputError(where + ": 'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : verts) {
    if (!v.is_string())
      throw InputError(where + ": vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  const json& edges = need(j, "edges", where);
  if (!edges.is_array())
    throw InputError(where + ": 'edges' must be an array");
  std::vector<graph::EdgeSpec> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = where + ".edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    graph::EdgeSpec s;
    const json& id = need(e, "id", at);
    const json& src = need(e, "src", at);
    const json& rng = need(e, "rng", at);
    if (!id.is_string() || !src.is_string() || !rng.is_string())
      throw InputError(at + ": 'id', 'src', 'rng' must be strings");
    s.id = id.get<std::string>();
    s.src = src.get<std::string>();
    s.rng = rng.get<std::string>();
    specs.push_back(std::move(s));
  }
  try {
    return graph::make_graph(vertices, specs);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline graph::DirectedGraph load_graph(const std::string& path) {
  return graph_from_json(load_json(path), path);
}

// Rows are keyed "w1", "w2", ... and must cover every edge of the graph.
inline graph::OrthoBank weight_bank_from_json(const graph::DirectedGraph& g,
                                              const json& j,
                                              const std::string& where) {
  graph::OrthoBank bank;
  for (int n = 1;; ++n) {
    const std::string key = "w" + std::to_string(n);
    if (!j.is_object() || !j.contains(key)) break;
    const json& row = j.at(key);
    if (!row.is_object())
      throw InputError(where + ": '" + key + "' must be an object");
    std::vector<cplx> w(static_cast<std::size_t>(g.edge_count()),
                        cplx(0.0, 0.0));
    for (int e = 0; e < g.edge_count(); ++e) {
      const std::string& id = g.edge_ids[static_cast<std::size_t>(e)];
      if (!row.contains(id))
        throw InputError(where + ": '" + key + "' missing edge '" + id + "'");
      w[static_cast<std::size_t>(e)] =
          parse_scalar(row.at(id), where + "." + key + "." + id);
    }
    bank.rows.push_back(std::move(w));
  }
  if (bank.rows.empty())
    throw InputError(where + ": no weight rows ('w1', 'w2', ...) found");
  return bank;
}

inline graph::OrthoBank load_weight_bank(const graph::DirectedGraph& g,
                                         const std::string& path) {
  return weight_bank_from_json(g, load_json(path), path);
}

struct TwistedFile {
  torus::TwistedParams par;
  torus::TwistedFn fn;
};

inline TwistedFile twisted_from_json(const json& j, const std::string& where) {
  TwistedFile out;
  const long q = need_long(j, "q", where);
  const long a = need_long(j, "a", where);
  try {
    out.par = torus::make_params(q, a);
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  const long z_res = need_long(j, "z_res", where);
  const long t_res = need_long(j, "t_res", where);
  if (z_res < 1 || t_res < 1)
    throw InputError(where + ": resolutions must be positive");
  const json& values = need(j, "values", where);
  if (!values.is_array() ||
      static_cast<long>(values.size()) != z_res * t_res)
    throw InputError(where + ": 'values' must hold z_res*t_res entries");
  out.fn = torus::make_twisted_fn(out.par, z_res, t_res);
  for (std::size_t i = 0; i < values.size(); ++i)
    out.fn.v[i] =
        parse_scalar(values[i], where + ".values[" + std::to_string(i) + "]");
  return out;
}

inline TwistedFile load_twisted(const std::string& path) {
  return twisted_from_json(load_json(path), path);
}

inline json twisted_to_json(const torus::TwistedFn& fn) {
  json j;
  j["q"] = fn.par.q;
  j["a"] = fn.par.a;
  j["z_res"] = fn.z_res;
  j["t_res"] = fn.t_res;
  j["values"] = json::array();
  for (const auto& z : fn.v) j["values"].push_back(scalar_json(z));
  return j;
}

inline void write_line_csv(std::ostream& os, const SampledLine& xi) {
  os << "t,re,im\n";
  os << std::setprecision(17);
  for (long n = xi.t_min * xi.grid; n < xi.t_max * xi.grid; ++n) {
    const cplx z = xi.at_index(n);
    os << (static_cast<double>(n) / static_cast<double>(xi.grid)) << ","
       << z.real() << "," << z.imag() << "\n";
  }
}

inline void write_line_csv_file(const std::string& path,
                                const SampledLine& xi) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot open for writing");
  write_line_csv(out, xi);
}

}  // namespace modframe::io
