// Copyright 2026 The qfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qfield/error.hpp"
#include "qfield/serialization.hpp"
#include "test_oracles.hpp"

using namespace qfield;
namespace ref = qfield::testing;

TEST_SUITE("serialization") {

TEST_CASE("format_double round trips") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-2.5) == "-2.5");
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 200; ++k) {
    const double v = u(rng) * std::pow(10.0, k % 40 - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(std::strtod(format_double(std::numeric_limits<double>::denorm_min()).c_str(), nullptr) ==
        std::numeric_limits<double>::denorm_min());
}

TEST_CASE("mode vector JSON and CSV") {
  const BeamGeometry g(1.1, 0.9);
  const ModeBasis b(g, 3);
  std::mt19937 rng(62);
  const ModeVector v = ref::random_unit_vector(b, rng, 3);
  const Metadata meta = {{"w0", "1.1"}, {"note", "x"}};

  const std::string js = mode_vector_to_json(v, meta);
  const auto doc = nlohmann::json::parse(js);
  CHECK(doc["n_max"] == 3);
  CHECK(doc["metadata"]["w0"] == "1.1");
  const ModeVector back = mode_vector_from_json(js, g);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == v[i]);

  const std::string csv = mode_vector_to_csv(v, meta);
  CHECK(csv.rfind("# w0: 1.1\n", 0) == 0);
  CHECK(csv.find("n,m,re,im\n") != std::string::npos);
  const ModeVector back_csv = mode_vector_from_csv(csv, g);
  CHECK(back_csv.basis().n_max() == 3);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(back_csv[i] == v[i]);

  CHECK_THROWS_AS(mode_vector_from_json("{\"n_max\": 1, \"coeffs\": [[1,0]]}", g), InvalidArgument);
  CHECK_THROWS_AS(mode_vector_from_json("not json", g), InvalidArgument);
  CHECK_THROWS_AS(mode_vector_from_csv("n,m,re,im\n0,0,abc,0\n", g), InvalidArgument);
  // Sparse CSV: missing entries are zero.
  const ModeVector sparse = mode_vector_from_csv("n,m,re,im\n2,1,0.5,0\n", g);
  CHECK(sparse.basis().n_max() == 2);
  CHECK(sparse[ModeIndex{2, 1}] == Complex(0.5));
  CHECK(sparse[ModeIndex{0, 0}] == Complex(0.0));
}

TEST_CASE("R surface output") {
  RSurface s;
  s.xi1 = {0.0, 1.0};
  s.xi2 = {0.5};
  s.values = {{0.1}, {0.2}};
  const std::string csv = r_surface_to_csv(s, {{"k", "v"}}, true);
  CHECK(csv.find("# k: v\nxi1,xi2,R,R_closed_form,abs_diff\n") == 0);
  CHECK(csv.find("\n1,0.5,0.20000000000000001,") != std::string::npos);
  const auto doc = nlohmann::json::parse(r_surface_to_json(s, {}, true));
  CHECK(doc["values"][1][0] == 0.2);
  CHECK(doc["closed_form"][0][0] == r_closed_form(0.0, 0.5));
  CHECK(r_surface_to_csv(s).find("xi1,xi2,R\n") == 0);
}

TEST_CASE("photon outputs as JSON") {
  const ModeBasis b(BeamGeometry(1, 1), 1);
  const auto out = single_photon_output(ModeVector::unit(b, {0, 1}), SplitterCoefficients::balanced());
  const auto doc = nlohmann::json::parse(to_json(out));
  CHECK(doc["port1"]["amp"][0].get<double>() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(doc["port2"]["amp"][1].get<double>() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(doc["port2"]["mode"]["coeffs"][1][0].get<double>() == -1.0);
  const auto c = nlohmann::json::parse(to_json(coherent_output(2.0, ModeVector::unit(b, {0, 0}),
                                                               SplitterCoefficients::balanced())));
  CHECK(c["port1"]["amp"][0].get<double>() == doctest::Approx(2 * std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("tables") {
  const Table t{{"a", "b"}, {{1.0, 0.1}, {2.0, -3.0}}};
  CHECK(table_to_csv(t, {{"x", "1"}}) == "# x: 1\na,b\n1,0.10000000000000001\n2,-3\n");
  const auto doc = nlohmann::json::parse(table_to_json(t, {{"x", "1"}}));
  CHECK(doc["rows"][1][1] == -3.0);
  CHECK(doc["metadata"]["x"] == "1");
  CHECK_THROWS_AS(table_to_csv(Table{{"a"}, {{1.0, 2.0}}}), InvalidArgument);
}

}  // TEST_SUITE
