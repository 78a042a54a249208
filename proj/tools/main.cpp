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
 * Command line front end.  Every command loads its inputs, runs a fixed
 * list of named checks, prints one line per check, and optionally writes
 * the same data as JSON.  Exit codes: 0 all checks pass, 1 a check failed,
 * 2 the input could not be used.  Reports are byte reproducible: fixed
 * seeds, no timestamps, no absolute paths.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modframe/circle.hpp"
#include "modframe/frames.hpp"
#include "modframe/graph.hpp"
#include "modframe/io.hpp"
#include "modframe/laurent.hpp"
#include "modframe/line.hpp"
#include "modframe/report.hpp"
#include "modframe/torus.hpp"

using modframe::cplx;
using modframe::LaurentPoly;
namespace mg = modframe::graph;
namespace mio = modframe::io;
namespace mt = modframe::torus;
namespace rep = modframe::report;

namespace {

int finish(const rep::Report& r, const std::string& report_path) {
  r.print(std::cout);
  if (!report_path.empty()) mio::write_json(report_path, r.to_json());
  return rep::exit_code(r);
}

// ---- circle verify-filter ------------------------------------------------

struct VerifyFilterOpts {
  std::string bank_path;
  std::string report_path;
  double eps = 1e-10;
};

int cmd_verify_filter(const VerifyFilterOpts& opt) {
  const auto bank = mio::load_bank(opt.bank_path);
  rep::Report r;
  r.command = "circle verify-filter";

  for (std::size_t i = 0; i < bank.filters.size(); ++i) {
    const double d = modframe::filter_defect(bank.filters[i], bank.system);
    r.add("filter-condition-" + std::to_string(i), d <= opt.eps, d, opt.eps);
  }

  const auto ortho = modframe::check_orthonormal_bank(bank, opt.eps);
  std::string witness;
  if (!ortho.ok) {
    std::ostringstream os;
    os << "filters " << ortho.worst_i << " and " << ortho.worst_j;
    witness = os.str();
  }
  r.add("bank-orthonormality", ortho.ok, ortho.max_defect, opt.eps, witness);

  std::mt19937_64 rng(1);
  double identity = 0.0;
  double floor = 0.0;
  const auto frame = modframe::frame_at_level(bank, 1);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = modframe::random_laurent(rng, -6, 6);
    const auto fc =
        modframe::verify_frame_identity(x, frame, bank, 1, opt.eps);
    identity = std::max(identity, fc.max_error);
    floor = std::min(floor, fc.partial_floor);
  }
  r.add("level-1-frame-identity", identity <= opt.eps && floor >= -opt.eps,
        std::max(identity, -floor), opt.eps);

  r.add_info("low-pass-normalization",
             modframe::lowpass_defect(bank.filters[0], bank.system),
             "deviation of the first filter from sqrt(N) at z = 1");
  return finish(r, opt.report_path);
}

// ---- circle frame --------------------------------------------------------

struct FrameOpts {
  std::string bank_path;
  std::string report_path;
  int level = 2;
  unsigned long seed = 1;
  int count = 5;
  double eps = 1e-10;
};

int cmd_frame(const FrameOpts& opt) {
  if (opt.level < 1) throw mio::InputError("frame: --level must be >= 1");
  if (opt.count < 1) throw mio::InputError("frame: --count must be >= 1");
  const auto bank = mio::load_bank(opt.bank_path);
  rep::Report r;
  r.command = "circle frame";

  const auto frame = modframe::frame_at_level(bank, opt.level);
  r.add_info("frame-size", static_cast<double>(frame.size()),
             "elements at level " + std::to_string(opt.level));

  std::mt19937_64 rng(opt.seed);
  double identity = 0.0;
  double floor = 0.0;
  double reconstruction = 0.0;
  for (int trial = 0; trial < opt.count; ++trial) {
    const auto x = modframe::random_laurent(rng, -8, 8);
    const auto fc =
        modframe::verify_frame_identity(x, frame, bank, opt.level, opt.eps);
    identity = std::max(identity, fc.max_error);
    floor = std::min(floor, fc.partial_floor);
    const auto rc =
        modframe::verify_reconstruction(x, frame, bank, opt.level, opt.eps);
    reconstruction = std::max(reconstruction, rc.max_error);
  }
  r.add("frame-identity", identity <= opt.eps, identity, opt.eps);
  r.add("partial-sum-floor", floor >= -opt.eps, -floor, opt.eps,
        "partial sums must stay below the full inner product");
  r.add("reconstruction", reconstruction <= opt.eps, reconstruction, opt.eps);

  const auto comp = modframe::complement_check(bank, opt.level, opt.eps);
  r.add("complement-orthogonality", comp.ok, comp.max_error, opt.eps,
        comp.witness);
  return finish(r, opt.report_path);
}

// ---- circle cascade ------------------------------------------------------

struct CascadeOpts {
  std::string bank_path;
  std::string report_path;
  std::string out_path;
  int K = 8;
  long grid = 64;
  long window = 8;
  double eps = 1e-10;
};

int cmd_cascade(const CascadeOpts& opt) {
  if (opt.K < 1) throw mio::InputError("cascade: --K must be >= 1");
  if (opt.grid < 1) throw mio::InputError("cascade: --grid must be >= 1");
  if (opt.window < 1) throw mio::InputError("cascade: --window must be >= 1");
  const auto bank = mio::load_bank(opt.bank_path);
  const auto& m0 = bank.filters[0];
  const int n = bank.system.N;
  rep::Report r;
  r.command = "circle cascade";

  const double fd = modframe::filter_defect(m0, bank.system);
  r.add("filter-condition", fd <= opt.eps, fd, opt.eps);

  const auto cur = modframe::cascade_product(m0, n, opt.K, opt.grid,
                                             -opt.window, opt.window);
  const auto next = modframe::cascade_product(
      m0, n, opt.K + 1, opt.grid, -opt.window * n, opt.window * n);
  const double sd = modframe::scaling_defect(cur, next, m0, n);
  r.add("two-scale-consistency", sd <= opt.eps, sd, opt.eps);

  const auto sums = modframe::bracket_inner(cur, cur, opt.window);
  r.add_info("translate-sum-flatness",
             modframe::grid_distance_to_const(sums, cplx(1.0, 0.0)),
             "distance of the translate sums from the constant one; shrinks "
             "with wider --window");

  if (!opt.out_path.empty()) mio::write_line_csv_file(opt.out_path, cur);
  return finish(r, opt.report_path);
}

// ---- graph mra -----------------------------------------------------------

struct GraphOpts {
  std::string graph_path;
  std::string bank_path;
  std::string report_path;
  int depth = 3;
  unsigned long seed = 1;
  double eps = 1e-10;
};

int cmd_graph_mra(const GraphOpts& opt) {
  if (opt.depth < 1) throw mio::InputError("mra: --depth must be >= 1");
  const auto g = mio::load_graph(opt.graph_path);
  const auto bank = mio::load_weight_bank(g, opt.bank_path);
  rep::Report r;
  r.command = "graph mra";

  mg::WeightSystem w;
  try {
    w = mg::make_weight_system(g, bank.rows.at(0));
  } catch (const std::invalid_argument& e) {
    r.add("weight-norm-law", false, 1.0, 0.0, e.what());
    return finish(r, opt.report_path);
  }
  r.add("weight-norm-law", true, 0.0, 0.0);

  const auto ortho = mg::check_ortho_bank(g, bank);
  r.add("bank-orthogonality", ortho.max_defect <= opt.eps, ortho.max_defect,
        opt.eps, ortho.witness);

  const double wc = mg::weight_consistency(g, w, opt.depth);
  r.add("weight-consistency", wc <= opt.eps, wc, opt.eps);

  double projection = 0.0;
  for (int nrow = 1; nrow <= static_cast<int>(bank.rows.size()); ++nrow) {
    const auto m = mg::bank_filter(g, bank, nrow);
    const auto ip = mg::transfer(g, mg::cyl_mul(g, mg::cyl_conj(m), m));
    projection = std::max(
        projection, mg::cyl_distance(g, ip, mg::degree_projection(g, nrow)));
  }
  r.add("projection-identity", projection <= opt.eps, projection, opt.eps);

  double resolution = 0.0;
  for (int depth = 1; depth <= opt.depth; ++depth)
    resolution = std::max(resolution, mg::resolution_defect(g, bank, depth));
  r.add("resolution-identity", resolution <= opt.eps, resolution, opt.eps);

  const int K = 2;
  const auto frame = mg::frame_elements(g, bank, K);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double identity = 0.0;
  double reconstruction = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = mg::make_two_sided(g, K, 1, [&](const mg::Path&) {
      return cplx(dist(rng), dist(rng));
    });
    const auto d = mg::frame_defects(g, bank, frame, x);
    identity = std::max(identity, d.identity);
    reconstruction = std::max(reconstruction, d.reconstruction);
  }
  r.add("frame-identity", identity <= opt.eps, identity, opt.eps);
  r.add("reconstruction", reconstruction <= opt.eps, reconstruction, opt.eps);

  double intertwine = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const auto x = mg::make_two_sided(g, k, 1, [&](const mg::Path&) {
      return cplx(dist(rng), dist(rng));
    });
    intertwine = std::max(intertwine, mg::intertwine_defect(g, w, k, x));
  }
  r.add("transfer-intertwine", intertwine <= opt.eps, intertwine, opt.eps);
  return finish(r, opt.report_path);
}

// ---- torus2 verify -------------------------------------------------------

struct TorusOpts {
  std::string params;
  std::string m_path;
  std::string xi_path;
  std::string report_path;
  long z_res = 32;
  long t_res = 128;
  unsigned long seed = 1;
  double eps = 1e-10;
};

int cmd_torus_verify(const TorusOpts& opt) {
  std::vector<long> vals;
  {
    std::istringstream in(opt.params);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        vals.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw mio::InputError("--params: '" + tok + "' is not an integer");
      }
    }
  }
  if (vals.size() != 4)
    throw mio::InputError("--params must be q,a,c,d");
  const long c = vals[2];
  const long d = vals[3];
  mt::TwistedParams par;
  try {
    par = mt::make_params(vals[0], vals[1]);
    if (c < 1 || d < 1 || c * d < 2)
      throw std::invalid_argument(
          "covering degrees must be >= 1 with c*d >= 2");
  } catch (const std::invalid_argument& e) {
    throw mio::InputError(std::string("--params: ") + e.what());
  }

  mt::TwistedFn m;
  try {
    if (!opt.m_path.empty()) {
      const auto file = mio::load_twisted(opt.m_path);
      if (file.par.q != par.q)
        throw std::invalid_argument(opt.m_path + ": period q does not match");
      if (file.par.a != mt::symbol_twist(par, c, d))
        throw std::invalid_argument(opt.m_path +
                                    ": symbol twist must be a*(1-c*d)");
      m = file.fn;
    } else {
      m = mt::default_filter(par, c, d, opt.z_res, opt.t_res);
    }
    mt::require_divisible(m.z_res, m.t_res, c, d, "torus2 verify");
  } catch (const std::invalid_argument& e) {
    throw mio::InputError(e.what());
  }

  std::mt19937_64 rng(opt.seed);
  mt::TwistedFn xi;
  if (!opt.xi_path.empty()) {
    const auto file = mio::load_twisted(opt.xi_path);
    if (file.par.q != par.q || file.par.a != par.a)
      throw mio::InputError(opt.xi_path +
                            ": section twist does not match --params");
    if (file.fn.z_res != m.z_res || file.fn.t_res != m.t_res)
      throw mio::InputError(opt.xi_path +
                            ": grid does not match the symbol grid");
    xi = file.fn;
  } else {
    xi = mt::random_twisted(par, m.z_res, m.t_res, rng);
  }
  const auto eta = mt::random_twisted(par, m.z_res, m.t_res, rng);

  rep::Report r;
  r.command = "torus2 verify";

  const double fr = mt::filter_residual(m, c, d);
  r.add("filter-condition", fr <= opt.eps, fr, opt.eps);

  const auto sm = mt::synthesis(m, xi, c, d);
  const double iso = mt::twisted_distance(mt::analysis(m, sm, c, d),
                                          mt::restrict_grid(xi, c, d));
  r.add("synthesis-isometry", iso <= opt.eps, iso, opt.eps);

  const double adj =
      mt::torus_distance(mt::transfer(mt::inner(sm, eta), c, d),
                         mt::inner(mt::restrict_grid(xi, c, d),
                                   mt::analysis(m, eta, c, d)));
  r.add("analysis-adjoint", adj <= opt.eps, adj, opt.eps);

  const auto n = mt::random_twisted(m.par, m.z_res, m.t_res, rng);
  const auto lhs = mt::analysis(m, mt::synthesis(n, xi, c, d), c, d);
  const auto rhs = mt::action(mt::symbol_inner(m, n, c, d),
                              mt::restrict_grid(xi, c, d));
  const double mult = mt::twisted_distance(lhs, rhs);
  r.add("multiplier-consistency", mult <= opt.eps, mult, opt.eps,
        "composing analysis with synthesis must act as the symbol inner "
        "product");
  return finish(r, opt.report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frames, filters and multiresolution checks for circle, "
               "graph and torus modules"};
  app.require_subcommand(1);

  auto* circle = app.add_subcommand("circle", "filter banks over the circle");
  circle->require_subcommand(1);

  VerifyFilterOpts vf_opt;
  auto* vf = circle->add_subcommand(
      "verify-filter", "check a bank for the filter and orthonormality laws");
  vf->add_option("--bank", vf_opt.bank_path, "bank JSON file")->required();
  vf->add_option("--eps", vf_opt.eps, "tolerance");
  vf->add_option("--report", vf_opt.report_path, "write JSON report here");

  FrameOpts fr_opt;
  auto* fr = circle->add_subcommand(
      "frame", "verify the tensor frame of a bank at a given level");
  fr->add_option("--bank", fr_opt.bank_path, "bank JSON file")->required();
  fr->add_option("--level", fr_opt.level, "tensor depth");
  fr->add_option("--seed", fr_opt.seed, "seed for the probe functions");
  fr->add_option("--count", fr_opt.count, "number of probe functions");
  fr->add_option("--eps", fr_opt.eps, "tolerance");
  fr->add_option("--report", fr_opt.report_path, "write JSON report here");

  CascadeOpts ca_opt;
  auto* ca = circle->add_subcommand(
      "cascade", "iterate the scaling products of the first filter");
  ca->add_option("--bank", ca_opt.bank_path, "bank JSON file")->required();
  ca->add_option("--K", ca_opt.K, "number of cascade factors");
  ca->add_option("--grid", ca_opt.grid, "samples per unit interval");
  ca->add_option("--window", ca_opt.window, "half width of the sample window");
  ca->add_option("--eps", ca_opt.eps, "tolerance");
  ca->add_option("--out", ca_opt.out_path, "write the sampled product as CSV");
  ca->add_option("--report", ca_opt.report_path, "write JSON report here");

  auto* graph = app.add_subcommand("graph", "path spaces of directed graphs");
  graph->require_subcommand(1);

  GraphOpts gr_opt;
  auto* gr = graph->add_subcommand(
      "mra", "verify the weighted multiresolution tower of a graph");
  gr->add_option("--graph", gr_opt.graph_path, "graph JSON file")->required();
  gr->add_option("--bank", gr_opt.bank_path, "weight bank JSON file")
      ->required();
  gr->add_option("--depth", gr_opt.depth, "consistency depth");
  gr->add_option("--seed", gr_opt.seed, "seed for the probe windows");
  gr->add_option("--eps", gr_opt.eps, "tolerance");
  gr->add_option("--report", gr_opt.report_path, "write JSON report here");

  auto* torus = app.add_subcommand("torus2", "twisted bundles over the torus");
  torus->require_subcommand(1);

  TorusOpts to_opt;
  auto* to = torus->add_subcommand(
      "verify", "verify the covering operators for a twisted module");
  to->add_option("--params", to_opt.params, "q,a,c,d parameters")->required();
  to->add_option("--z-res", to_opt.z_res, "z samples");
  to->add_option("--t-res", to_opt.t_res, "t samples per period");
  to->add_option("--seed", to_opt.seed, "seed for the probe sections");
  to->add_option("--m", to_opt.m_path, "symbol JSON file (default cosine)");
  to->add_option("--xi", to_opt.xi_path, "section JSON file (default random)");
  to->add_option("--eps", to_opt.eps, "tolerance");
  to->add_option("--report", to_opt.report_path, "write JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rep::kExitBadInput;
  }

  try {
    if (vf->parsed()) return cmd_verify_filter(vf_opt);
    if (fr->parsed()) return cmd_frame(fr_opt);
    if (ca->parsed()) return cmd_cascade(ca_opt);
    if (gr->parsed()) return cmd_graph_mra(gr_opt);
    if (to->parsed()) return cmd_torus_verify(to_opt);
  } catch (const mio::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rep::kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rep::kExitBadInput;
  }
  return rep::kExitBadInput;
}
