// Copyright 2026 The edge-advisor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "edgeadvisor/arch.hpp"
#include "edgeadvisor/error.hpp"
#include "oracles.hpp"

using namespace edgeadvisor;

namespace {

ArchitectureSpec make_spec(std::uint32_t input, std::vector<std::uint32_t> hidden,
                           std::uint32_t output) {
  return ArchitectureSpec{input, std::move(hidden), output};
}

std::vector<ArchitectureSpec> all_grid_specs() {
  std::vector<ArchitectureSpec> all;
  for (GridId id : {GridId::set1, GridId::set2, GridId::set3}) {
    auto specs = generate_grid(id);
    all.insert(all.end(), specs.begin(), specs.end());
  }
  return all;
}

}  // namespace

TEST_CASE("parameter counts match hand-checked totals") {
  CHECK(layer_param_counts(make_spec(377, {64, 32}, 9)).total == 26569);
  CHECK(layer_param_counts(make_spec(1, {}, 1)).total == 2);
  CHECK(layer_param_counts(make_spec(377, {10000, 32}, 9)).total == 4100329);
}

TEST_CASE("parameter breakdown has one entry per non-input layer") {
  const auto breakdown = layer_param_counts(make_spec(377, {64, 32}, 9));
  REQUIRE(breakdown.per_layer.size() == 3);
  CHECK(breakdown.per_layer[0].weight_count == 377u * 64u);
  CHECK(breakdown.per_layer[0].bias_count == 64);
  CHECK(breakdown.per_layer[1].weight_count == 64u * 32u);
  CHECK(breakdown.per_layer[2].weight_count == 32u * 9u);
  CHECK(breakdown.per_layer[2].bias_count == 9);

  std::uint64_t sum = 0;
  for (const auto& layer : breakdown.per_layer) sum += layer.weight_count + layer.bias_count;
  CHECK(sum == breakdown.total);
}

TEST_CASE("parameter counts equal the brute-force oracle on every grid spec") {
  for (const ArchitectureSpec& spec : all_grid_specs())
    CHECK(layer_param_counts(spec).total == oracles::brute_force_param_total(spec));
}

TEST_CASE("model size with the default profile") {
  const QuantizationProfile defaults;

  SUBCASE("small-model floor") {
    const auto bytes = model_size_bytes(make_spec(377, {64, 32}, 9), defaults);
    CHECK(bytes == 26569);
    CHECK(bytes_to_mb(bytes) == doctest::Approx(0.0253391).epsilon(1e-4));
    CHECK(bytes_to_mb(bytes) > 0.02);
    CHECK(bytes_to_mb(bytes) < 0.03);
  }

  SUBCASE("wide-hidden sizes track the measured 1.85-3.69 MB range") {
    const double mb5000 = bytes_to_mb(model_size_bytes(make_spec(377, {5000, 32}, 9), defaults));
    const double mb10000 =
        bytes_to_mb(model_size_bytes(make_spec(377, {10000, 32}, 9), defaults));
    CHECK(std::abs(mb5000 - 1.85) / 1.85 < 0.10);
    CHECK(std::abs(mb10000 - 3.69) / 3.69 < 0.10);
  }

  SUBCASE("overhead-only profile") {
    const QuantizationProfile overhead_only{1e-12, 0.0, 4096};
    // bytes_per_weight must stay positive; 1e-12 rounds away for any grid spec.
    CHECK(model_size_bytes(make_spec(377, {64, 32}, 9), overhead_only) == 4096);
  }
}

TEST_CASE("model size is strictly monotone in any single width") {
  const QuantizationProfile defaults;
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<std::uint32_t> width(1, 400);
  std::uniform_int_distribution<std::size_t> depth(0, 6);
  std::uniform_int_distribution<std::uint32_t> bump(1, 16);

  for (int trial = 0; trial < 200; ++trial) {
    ArchitectureSpec spec;
    spec.input_width = width(rng);
    spec.hidden_widths.resize(depth(rng));
    for (auto& h : spec.hidden_widths) h = width(rng);
    spec.output_width = width(rng);

    const std::uint64_t base = model_size_bytes(spec, defaults);
    std::uniform_int_distribution<std::size_t> pick(0, spec.hidden_widths.size() + 1);
    const std::size_t slot = pick(rng);
    ArchitectureSpec larger = spec;
    if (slot == 0)
      larger.input_width += bump(rng);
    else if (slot == spec.hidden_widths.size() + 1)
      larger.output_width += bump(rng);
    else
      larger.hidden_widths[slot - 1] += bump(rng);
    CHECK(model_size_bytes(larger, defaults) > base);
  }
}

TEST_CASE("max layer width scans input, hidden and output") {
  std::vector<std::uint32_t> deep(63, 64);
  deep.push_back(32);
  CHECK(max_layer_width(make_spec(9072, deep, 9)) == 9072);
  CHECK(max_layer_width(make_spec(377, {8100, 32}, 9)) == 8100);
  std::vector<std::uint32_t> fifteen(15, 64);
  fifteen.push_back(32);
  CHECK(max_layer_width(make_spec(5400, fifteen, 9)) == 5400);
}

TEST_CASE("set1 is the 6x10 depth-by-input product") {
  const auto specs = generate_grid(GridId::set1);
  REQUIRE(specs.size() == 60);
  for (const auto& spec : specs) {
    CHECK(spec.output_width == 9);
    CHECK(spec.hidden_widths.back() == 32);
    for (std::size_t i = 0; i + 1 < spec.hidden_widths.size(); ++i)
      CHECK(spec.hidden_widths[i] == 64);
  }
  // One spec per (depth, input) combination.
  CHECK(specs.front().hidden_widths.size() == 2);
  CHECK(specs.back().hidden_widths.size() == 64);
}

TEST_CASE("set2 applies the width pairs to the two layer blocks") {
  const auto specs = generate_grid(GridId::set2);
  REQUIRE(specs.size() == 11);
  const ArchitectureSpec& last = specs.back();  // (512, 128)
  CHECK(last.input_width == 5400);
  REQUIRE(last.hidden_widths.size() == 128);
  CHECK(last.hidden_widths.front() == 512);
  CHECK(last.hidden_widths[62] == 512);
  CHECK(last.hidden_widths[63] == 128);
  CHECK(last.hidden_widths[126] == 128);
  CHECK(last.hidden_widths[127] == 32);
}

TEST_CASE("set3 sweeps the first hidden width in steps of 100") {
  const auto specs = generate_grid(GridId::set3);
  REQUIRE(specs.size() == 51);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CHECK(specs[i].input_width == 377);
    REQUIRE(specs[i].hidden_widths.size() == 2);
    CHECK(specs[i].hidden_widths[0] == 5000 + 100 * i);
    CHECK(specs[i].hidden_widths[1] == 32);
  }
}

TEST_CASE("grid generation is deterministic") {
  for (GridId id : {GridId::set1, GridId::set2, GridId::set3})
    CHECK(generate_grid(id) == generate_grid(id));
  CHECK_THROWS_AS(grid_id_from_string("set4"), Error);
}

TEST_CASE("set1 size envelope") {
  const QuantizationProfile defaults;
  double min_mb = 1e9;
  double max_mb = 0.0;
  double max_small_mb = 0.0;
  for (const auto& spec : generate_grid(GridId::set1)) {
    const double mb = bytes_to_mb(model_size_bytes(spec, defaults));
    min_mb = std::min(min_mb, mb);
    max_mb = std::max(max_mb, mb);
    if (spec.input_width <= 5400) max_small_mb = std::max(max_small_mb, mb);
  }
  CHECK(min_mb == doctest::Approx(0.025).epsilon(0.05));
  CHECK(max_mb == doctest::Approx(2.4).epsilon(0.05));
  CHECK(max_small_mb < 1.0);
}

TEST_CASE("architecture JSON round trip") {
  const ArchitectureSpec spec = make_spec(5400, {64, 32}, 9);
  CHECK(arch_from_json(arch_to_json(spec)) == spec);

  CHECK_THROWS_AS(arch_from_json("not json"), Error);
  CHECK_THROWS_AS(arch_from_json("{\"input_width\": 1}"), Error);
  CHECK_THROWS_AS(
      arch_from_json("{\"input_width\":0,\"hidden_widths\":[],\"output_width\":1}"), Error);

  const auto specs = generate_grid(GridId::set2);
  const std::string json = grid_to_json(specs);
  CHECK(json.find("5400") != std::string::npos);
}

TEST_CASE("invalid specs and profiles are rejected") {
  CHECK_THROWS_AS(make_spec(1, {0}, 1).validate(), Error);
  QuantizationProfile bad;
  bad.bytes_per_weight = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  QuantizationProfile negative_bias;
  negative_bias.bytes_per_bias = -1.0;
  CHECK_THROWS_AS(negative_bias.validate(), Error);
}
