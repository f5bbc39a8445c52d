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

#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "edgeadvisor/analysis.hpp"
#include "edgeadvisor/error.hpp"
#include "json.hpp"

using namespace edgeadvisor;

TEST_CASE("the default context ships the three calibrated platforms") {
  const AnalysisContext ctx = default_context();
  CHECK(platform(ctx, kPlatformTpu).power_watts == 2.0);
  CHECK(platform(ctx, kPlatformA53).power_watts == 2.0);
  CHECK_NOTHROW(platform(ctx, kPlatformI7));
  CHECK_THROWS_AS(platform(ctx, "riscv"), Error);
  CHECK(ctx.thresholds.crossover1_mb == 0.15);
  CHECK(ctx.budget.on_chip_bytes == 8ull * 1024 * 1024);
}

TEST_CASE("analyze composes the modules into one row") {
  const AnalysisContext ctx = default_context();

  SUBCASE("on-chip recommendation") {
    const SweepRow row = analyze(ctx, ArchitectureSpec{5400, {64, 32}, 9});
    CHECK(row.placement.residency == Residency::on_chip);
    CHECK(row.recommendation.platform == PlatformChoice::edge_tpu);
    CHECK(row.recommendation.rule_fired == DecisionRule::sweet_spot);
    CHECK(row.size_mb == doctest::Approx(0.331918).epsilon(1e-5));
    CHECK(row.ratio > 1.0);
    CHECK(!row.low_confidence);
    REQUIRE(row.recommendation.predicted_energy_mj.size() == 2);
  }

  SUBCASE("wide input flips to the CPU and the fallback segment") {
    std::vector<std::uint32_t> hidden(63, 64);
    hidden.push_back(32);
    const SweepRow row = analyze(ctx, ArchitectureSpec{9072, hidden, 9});
    CHECK(row.placement.residency == Residency::off_chip);
    CHECK(row.recommendation.platform == PlatformChoice::cortex_a53);
    CHECK(row.recommendation.rule_fired == DecisionRule::width_exceeded);
    CHECK(row.low_confidence);
    CHECK(!row.warnings.empty());
    CHECK(row.energy_tpu_mj == doctest::Approx(1.1 * row.energy_a53_mj).epsilon(1e-9));
  }

  SUBCASE("marginal width zone is reported") {
    const SweepRow row = analyze(ctx, ArchitectureSpec{377, {8100, 32}, 9});
    CHECK(row.placement.residency == Residency::off_chip);
    CHECK(row.recommendation.rule_fired == DecisionRule::sweet_spot);
    bool found = false;
    for (const std::string& warning : row.warnings)
      if (warning.find("marginal zone") != std::string::npos) found = true;
    CHECK(found);
  }
}

TEST_CASE("sweep preserves generator order and row counts") {
  const AnalysisContext ctx = default_context();
  const auto rows = sweep(ctx, GridId::set2);
  const auto specs = generate_grid(GridId::set2);
  REQUIRE(rows.size() == 11);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].spec == specs[i]);
}

TEST_CASE("analyzing a sweep row's spec reproduces the row") {
  const AnalysisContext ctx = default_context();
  for (const SweepRow& row : sweep(ctx, GridId::set3)) {
    const SweepRow again = analyze(ctx, row.spec);
    CHECK(row_csv_line(again) == row_csv_line(row));
    CHECK(row_to_json(again) == row_to_json(row));
  }
}

TEST_CASE("csv output is stable, labeled and 13 columns wide") {
  const AnalysisContext ctx = default_context();
  CHECK(csv_header() ==
        "input_width,depth,hidden_spec,size_mb,residency,on_chip_kb,off_chip_kb,"
        "e_tpu_mj,e_a53_mj,e_i7_mj,ratio,recommendation,rule");

  const std::string csv = sweep_csv(ctx, GridId::set3);
  CHECK(csv == sweep_csv(ctx, GridId::set3));

  std::istringstream lines(csv);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    const std::size_t commas = static_cast<std::size_t>(
        std::count(line.begin(), line.end(), ','));
    CHECK(commas == 12);
    ++rows;
  }
  CHECK(rows == 52);  // header + 51 specs
}

TEST_CASE("hidden widths serialize as run-length text") {
  CHECK(hidden_spec_string(ArchitectureSpec{1, {64, 32}, 1}) == "64x1+32x1");
  CHECK(hidden_spec_string(ArchitectureSpec{1, {}, 1}) == "-");
  const auto set2 = generate_grid(GridId::set2);
  CHECK(hidden_spec_string(set2[8]) == "256x127+32x1");   // pair (256, 256)
  CHECK(hidden_spec_string(set2[10]) == "512x63+128x64+32x1");  // pair (512, 128)
}

TEST_CASE("sweep JSON rows mirror the analysis") {
  const AnalysisContext ctx = default_context();
  const nlohmann::json rows = nlohmann::json::parse(sweep_json(ctx, GridId::set2));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0].at("residency") == "ON_CHIP");
  CHECK(rows[8].at("residency") == "OFF_CHIP");  // pair (256, 256), about 9.2 MB
  CHECK(rows[8].at("recommendation").at("rule_fired") == "MARGINAL_TPU");
}

TEST_CASE("calibration files override platforms by name") {
  AnalysisContext ctx = default_context();
  const std::string calibration = R"({
    "platforms": [
      {
        "name": "i7",
        "power_watts": 65.0,
        "segments": [
          {"feature": "size_mb", "slope": 10.0, "intercept": 2.0, "confidence": "high"}
        ]
      },
      {
        "name": "jetson",
        "power_watts": 10.0,
        "segments": [
          {"feature": "size_mb", "slope": 1.0, "intercept": 0.5,
           "band": [0.5, 20.0], "confidence": "low"}
        ]
      }
    ]
  })";
  load_calibration_json(ctx, calibration);

  CHECK(platform(ctx, kPlatformI7).power_watts == 65.0);
  CHECK(platform(ctx, "jetson").segments.front().band->second == 20.0);

  const SweepRow row = analyze(ctx, ArchitectureSpec{5400, {64, 32}, 9});
  CHECK(row.energy_i7_mj == doctest::Approx(10.0 * row.size_mb + 2.0).epsilon(1e-9));
}

TEST_CASE("calibration documents are validated") {
  AnalysisContext ctx = default_context();
  CHECK_THROWS_AS(load_calibration_json(ctx, "not json"), Error);
  CHECK_THROWS_AS(load_calibration_json(ctx, R"({"platforms": "nope"})"), Error);

  // A platform whose final segment is guarded leaves feature holes.
  const std::string holes = R"({
    "platforms": [{
      "name": "holes", "power_watts": 1.0,
      "segments": [
        {"guard": {"residency": "ON_CHIP"},
         "feature": "size_mb", "slope": 1.0, "intercept": 0.0}
      ]
    }]
  })";
  CHECK_THROWS_AS(load_calibration_json(ctx, holes), Error);

  const std::string bad_feature = R"({
    "platforms": [{
      "name": "x", "power_watts": 1.0,
      "segments": [{"feature": "nodes", "slope": 1.0, "intercept": 0.0}]
    }]
  })";
  CHECK_THROWS_AS(load_calibration_json(ctx, bad_feature), Error);

  CHECK_THROWS_AS(load_calibration_file(ctx, "/nonexistent/calibration.json"), Error);
}

TEST_CASE("guards round-trip from calibration JSON") {
  AnalysisContext ctx = default_context();
  const std::string calibration = R"({
    "platforms": [{
      "name": "guarded", "power_watts": 1.0,
      "segments": [
        {"guard": {"residency": "OFF_CHIP", "input_width_max": 5400,
                   "first_hidden_width_range": [100, 200], "max_width_max": 6000},
         "feature": "first_hidden_width", "slope": 0.001, "intercept": 0.0},
        {"feature": "size_mb", "slope": 2.0, "intercept": 0.0}
      ]
    }]
  })";
  load_calibration_json(ctx, calibration);
  const PlatformProfile& guarded = platform(ctx, "guarded");
  REQUIRE(guarded.segments.size() == 2);
  const SegmentGuard& guard = guarded.segments.front().guard;
  CHECK(guard.residency == Residency::off_chip);
  CHECK(guard.input_width_max == 5400u);
  CHECK(guard.first_hidden_width_range->first == 100u);
  CHECK(guard.max_width_max == 6000u);
}

TEST_CASE("thresholds files override fields and are validated") {
  AnalysisContext ctx = default_context();
  load_thresholds_json(ctx, R"({"crossover2_mb": 12.5})");
  CHECK(ctx.thresholds.crossover2_mb == 12.5);
  CHECK(ctx.thresholds.crossover1_mb == 0.15);

  CHECK_THROWS_AS(load_thresholds_json(ctx, R"({"crossover1_mb": 9.0})"), Error);
  CHECK(ctx.thresholds.crossover1_mb == 0.15);  // rejected update leaves state alone
  CHECK_THROWS_AS(load_thresholds_json(ctx, "nope"), Error);
}

TEST_CASE("six-significant-digit formatting is stable") {
  CHECK(format_sig6(0.0253391234) == "0.0253391");
  CHECK(format_sig6(15.363) == "15.363");
  CHECK(format_sig6(0.0) == "0");
  CHECK(format_sig6(2492361.0 / 1024.0) == "2433.95");
}
