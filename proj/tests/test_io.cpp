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

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "modframe/io.hpp"
#include "support/fixtures.hpp"

using modframe::cplx;
namespace mio = modframe::io;

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

TEST_CASE("scalars parse as numbers or pairs", "[io]") {
  CHECK(mio::parse_scalar(mio::json(2.5), "x") == cplx(2.5, 0.0));
  CHECK(mio::parse_scalar(mio::json::array({1.0, -2.0}), "x") ==
        cplx(1.0, -2.0));
  CHECK_THROWS_MATCHES(mio::parse_scalar(mio::json("nope"), "spot"),
                       mio::InputError,
                       MessageMatches(ContainsSubstring("spot")));
  CHECK(mio::scalar_json(cplx(3.0, 0.0)).is_number());
  CHECK(mio::scalar_json(cplx(3.0, 1.0)).is_array());
}

TEST_CASE("polynomials survive a json round trip", "[io]") {
  std::mt19937_64 rng(61);
  const auto p = modframe::random_laurent(rng, -5, 7);
  const auto back = mio::poly_from_json(mio::poly_to_json(p), "p");
  CHECK(modframe::coeff_distance(p, back) == 0.0);

  // duplicate exponents accumulate, two-entry terms read as real
  const auto q = mio::poly_from_json(
      mio::json::parse(R"({"coeffs": [[1, 2], [1, 0, 3], [-2, 0.5]]})"), "q");
  CHECK(q.coeff(1) == cplx(2.0, 3.0));
  CHECK(q.coeff(-2) == cplx(0.5, 0.0));
}

TEST_CASE("malformed polynomials name the offending field", "[io]") {
  CHECK_THROWS_MATCHES(mio::poly_from_json(mio::json::object(), "f"),
                       mio::InputError,
                       MessageMatches(ContainsSubstring("'coeffs'")));
  CHECK_THROWS_MATCHES(
      mio::poly_from_json(mio::json::parse(R"({"coeffs": [[0.5, 1]]})"), "f"),
      mio::InputError, MessageMatches(ContainsSubstring("coeffs[0]")));
  CHECK_THROWS_MATCHES(
      mio::poly_from_json(mio::json::parse(R"({"coeffs": [[0, "x"]]})"), "f"),
      mio::InputError, MessageMatches(ContainsSubstring("numbers")));
}

TEST_CASE("filter banks round trip and validate", "[io]") {
  const auto bank = fixtures::haar_bank();
  const auto back = mio::bank_from_json(mio::bank_to_json(bank), "bank");
  REQUIRE(back.system.N == 2);
  REQUIRE(back.filters.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(modframe::coeff_distance(bank.filters[i], back.filters[i]) == 0.0);
  CHECK(back.kind == modframe::BankKind::unverified);

  CHECK_THROWS_MATCHES(
      mio::bank_from_json(mio::json::parse(R"({"N": 1, "filters": []})"), "b"),
      mio::InputError, MessageMatches(ContainsSubstring("'N'")));
  CHECK_THROWS_MATCHES(
      mio::bank_from_json(mio::json::parse(R"({"N": 2, "filters": []})"), "b"),
      mio::InputError, MessageMatches(ContainsSubstring("non-empty")));
  CHECK_THROWS_MATCHES(
      mio::bank_from_json(
          mio::json::parse(R"({"N": 2, "filters": [{"coeffs": "x"}]})"), "b"),
      mio::InputError, MessageMatches(ContainsSubstring("filters[0]")));
}

TEST_CASE("graphs parse and reject broken wiring", "[io]") {
  const auto j = mio::json::parse(R"({
    "vertices": ["u", "v"],
    "edges": [
      {"id": "a", "src": "u", "rng": "u"},
      {"id": "b", "src": "u", "rng": "v"},
      {"id": "c", "src": "v", "rng": "u"}
    ]
  })");
  const auto g = mio::graph_from_json(j, "g");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);

  auto bad = j;
  bad["edges"][2]["src"] = "w";
  CHECK_THROWS_AS(mio::graph_from_json(bad, "g"), mio::InputError);

  auto incomplete = j;
  incomplete["edges"][0].erase("rng");
  CHECK_THROWS_MATCHES(mio::graph_from_json(incomplete, "g"), mio::InputError,
                       MessageMatches(ContainsSubstring("'rng'")));
}

TEST_CASE("weight banks read rows until the keys run out", "[io]") {
  const auto g = fixtures::g1();
  const auto j = mio::json::parse(R"({
    "w1": {"a": 1, "b": 1, "c": 1},
    "w2": {"a": [0, 1], "b": -1, "c": 0}
  })");
  const auto bank = mio::weight_bank_from_json(g, j, "w");
  REQUIRE(bank.rows.size() == 2);
  CHECK(bank.rows[0][0] == cplx(1.0, 0.0));
  CHECK(bank.rows[1][0] == cplx(0.0, 1.0));
  CHECK(bank.rows[1][1] == cplx(-1.0, 0.0));

  CHECK_THROWS_MATCHES(
      mio::weight_bank_from_json(
          g, mio::json::parse(R"({"w1": {"a": 1, "b": 1}})"), "w"),
      mio::InputError, MessageMatches(ContainsSubstring("'c'")));
  CHECK_THROWS_MATCHES(mio::weight_bank_from_json(g, mio::json::object(), "w"),
                       mio::InputError,
                       MessageMatches(ContainsSubstring("w1")));
}

TEST_CASE("twisted sections round trip with their parameters", "[io]") {
  std::mt19937_64 rng(62);
  const auto xi = modframe::torus::random_twisted(
      modframe::torus::make_params(2, -1), 3, 4, rng);
  const auto file = mio::twisted_from_json(mio::twisted_to_json(xi), "xi");
  REQUIRE(file.par.q == 2);
  REQUIRE(file.par.a == -1);
  REQUIRE(modframe::torus::twisted_distance(file.fn, xi) == 0.0);

  auto j = mio::twisted_to_json(xi);
  j["values"].erase(0);
  CHECK_THROWS_MATCHES(mio::twisted_from_json(j, "xi"), mio::InputError,
                       MessageMatches(ContainsSubstring("z_res*t_res")));
  j = mio::twisted_to_json(xi);
  j["q"] = 0;
  CHECK_THROWS_AS(mio::twisted_from_json(j, "xi"), mio::InputError);
}

TEST_CASE("file loads report the path on failure", "[io]") {
  CHECK_THROWS_MATCHES(
      mio::load_json("no_such_file.json"), mio::InputError,
      MessageMatches(ContainsSubstring("no_such_file.json")));

  const std::string path = "io_test_garbage.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_MATCHES(mio::load_json(path), mio::InputError,
                       MessageMatches(ContainsSubstring(path)));

  const std::string good = "io_test_roundtrip.json";
  mio::write_json(good, mio::poly_to_json(fixtures::haar_low()));
  const auto p = mio::poly_from_json(mio::load_json(good), good);
  CHECK(modframe::coeff_distance(p, fixtures::haar_low()) == 0.0);
}

TEST_CASE("line samples export as csv", "[io]") {
  auto xi = modframe::make_line(2, 0, 1);
  xi.v[0] = cplx(1.0, -0.5);
  xi.v[1] = cplx(0.25, 0.0);
  std::ostringstream os;
  mio::write_line_csv(os, xi);
  CHECK(os.str() == "t,re,im\n0,1,-0.5\n0.5,0.25,0\n");
}
