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

#include "edgeadvisor/analysis.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgeadvisor/error.hpp"
#include "json.hpp"

namespace edgeadvisor {

AnalysisContext default_context() {
  AnalysisContext ctx;
  ctx.platforms = default_platforms();
  return ctx;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Residency residency_from_json(const nlohmann::json& value) {
  const std::string text = value.get<std::string>();
  if (text == "ON_CHIP") return Residency::on_chip;
  if (text == "OFF_CHIP") return Residency::off_chip;
  fail(Errc::calibration_error, "residency must be ON_CHIP or OFF_CHIP, got '" + text + "'");
}

SegmentGuard guard_from_json(const nlohmann::json& doc) {
  SegmentGuard guard;
  if (doc.contains("residency")) guard.residency = residency_from_json(doc.at("residency"));
  if (doc.contains("input_width_max"))
    guard.input_width_max = doc.at("input_width_max").get<std::uint32_t>();
  if (doc.contains("first_hidden_width_range")) {
    const auto& range = doc.at("first_hidden_width_range");
    if (!range.is_array() || range.size() != 2)
      fail(Errc::calibration_error, "first_hidden_width_range must be [min, max]");
    guard.first_hidden_width_range = {{range[0].get<std::uint32_t>(),
                                       range[1].get<std::uint32_t>()}};
  }
  if (doc.contains("max_width_max"))
    guard.max_width_max = doc.at("max_width_max").get<std::uint32_t>();
  return guard;
}

EnergySegment segment_from_json(const nlohmann::json& doc) {
  EnergySegment segment;
  if (doc.contains("guard")) segment.guard = guard_from_json(doc.at("guard"));

  const std::string feature = doc.at("feature").get<std::string>();
  if (feature == "size_mb")
    segment.feature = RegressionFeature::size_mb;
  else if (feature == "first_hidden_width")
    segment.feature = RegressionFeature::first_hidden_width;
  else
    fail(Errc::calibration_error,
         "feature must be size_mb or first_hidden_width, got '" + feature + "'");

  segment.model.slope = doc.at("slope").get<double>();
  segment.model.intercept = doc.at("intercept").get<double>();

  if (doc.contains("band") && !doc.at("band").is_null()) {
    const auto& band = doc.at("band");
    if (!band.is_array() || band.size() != 2)
      fail(Errc::calibration_error, "band must be [min, max]");
    segment.band = {{band[0].get<double>(), band[1].get<double>()}};
  }

  if (doc.contains("confidence")) {
    const std::string confidence = doc.at("confidence").get<std::string>();
    if (confidence == "high")
      segment.confidence = Confidence::high;
    else if (confidence == "low")
      segment.confidence = Confidence::low;
    else
      fail(Errc::calibration_error, "confidence must be high or low");
  }
  return segment;
}

}  // namespace

void load_calibration_json(AnalysisContext& ctx, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::calibration_error, std::string("invalid calibration JSON: ") + e.what());
  }

  std::vector<PlatformProfile> loaded;
  try {
    if (!doc.contains("platforms") || !doc.at("platforms").is_array())
      fail(Errc::calibration_error, "calibration document needs a 'platforms' array");
    for (const auto& entry : doc.at("platforms")) {
      PlatformProfile platform;
      platform.name = entry.at("name").get<std::string>();
      platform.power_watts = entry.at("power_watts").get<double>();
      for (const auto& seg : entry.at("segments"))
        platform.segments.push_back(segment_from_json(seg));
      platform.validate();
      loaded.push_back(std::move(platform));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::calibration_error, std::string("invalid calibration JSON: ") + e.what());
  }

  for (PlatformProfile& platform : loaded) {
    bool replaced = false;
    for (PlatformProfile& existing : ctx.platforms) {
      if (existing.name == platform.name) {
        existing = std::move(platform);
        replaced = true;
        break;
      }
    }
    if (!replaced) ctx.platforms.push_back(std::move(platform));
  }
}

void load_calibration_file(AnalysisContext& ctx, const std::string& path) {
  load_calibration_json(ctx, read_file(path));
}

void load_thresholds_json(AnalysisContext& ctx, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::calibration_error, std::string("invalid thresholds JSON: ") + e.what());
  }
  Thresholds t = ctx.thresholds;
  try {
    if (doc.contains("crossover1_mb")) t.crossover1_mb = doc.at("crossover1_mb").get<double>();
    if (doc.contains("on_chip_limit_mb"))
      t.on_chip_limit_mb = doc.at("on_chip_limit_mb").get<double>();
    if (doc.contains("width_limit")) t.width_limit = doc.at("width_limit").get<std::uint32_t>();
    if (doc.contains("crossover2_mb")) t.crossover2_mb = doc.at("crossover2_mb").get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::calibration_error, std::string("invalid thresholds JSON: ") + e.what());
  }
  try {
    t.validate();
  } catch (const Error& e) {
    fail(Errc::calibration_error, e.what());
  }
  ctx.thresholds = t;
}

void load_thresholds_file(AnalysisContext& ctx, const std::string& path) {
  load_thresholds_json(ctx, read_file(path));
}

const PlatformProfile& platform(const AnalysisContext& ctx, const std::string& name) {
  for (const PlatformProfile& candidate : ctx.platforms)
    if (candidate.name == name) return candidate;
  fail(Errc::calibration_error, "no calibration for platform '" + name + "'");
}

SweepRow analyze(const AnalysisContext& ctx, const ArchitectureSpec& arch) {
  SweepRow row;
  row.spec = arch;
  row.size_mb = bytes_to_mb(model_size_bytes(arch, ctx.quantization));
  row.placement = place(arch, ctx.quantization, ctx.budget);

  const ArchFeatures f = features(arch, ctx.quantization, ctx.budget);
  const PlatformProfile& tpu = platform(ctx, kPlatformTpu);
  const PlatformProfile& a53 = platform(ctx, kPlatformA53);
  const PlatformProfile& i7 = platform(ctx, kPlatformI7);

  const EnergyEstimate tpu_estimate = estimate_energy(tpu, f);
  const EnergyEstimate a53_estimate = estimate_energy(a53, f);
  const EnergyEstimate i7_estimate = estimate_energy(i7, f);
  row.energy_tpu_mj = tpu_estimate.energy_mj;
  row.energy_a53_mj = a53_estimate.energy_mj;
  row.energy_i7_mj = i7_estimate.energy_mj;
  row.ratio = efficiency_ratio(f, tpu, a53);

  row.recommendation = recommend(f, ctx.thresholds);
  row.recommendation.predicted_energy_mj = {{kPlatformTpu, row.energy_tpu_mj},
                                            {kPlatformA53, row.energy_a53_mj}};

  row.low_confidence =
      tpu_estimate.confidence == Confidence::low || row.recommendation.low_confidence;
  if (tpu_estimate.confidence == Confidence::low)
    row.warnings.push_back(
        "accelerator energy comes from a low-confidence calibration segment");
  for (const EnergyEstimate& estimate : {tpu_estimate, a53_estimate, i7_estimate})
    if (estimate.negative_extrapolation)
      row.warnings.push_back(
          "a calibration segment extrapolated below zero energy; check its domain");
  if (f.max_width >= kMarginalWidthLow && f.max_width <= kMarginalWidthHigh)
    row.warnings.push_back("widest layer is in the marginal zone [8000, 8192]");
  if (row.placement.residency == Residency::off_chip)
    row.warnings.push_back(
        "off-chip byte split models the first weight block only; the real compiler "
        "partitioning is not public");
  return row;
}

std::vector<SweepRow> sweep(const AnalysisContext& ctx, GridId grid) {
  const std::vector<ArchitectureSpec> specs = generate_grid(grid);
  std::vector<SweepRow> rows;
  rows.reserve(specs.size());
  for (const ArchitectureSpec& spec : specs) rows.push_back(analyze(ctx, spec));
  return rows;
}

std::string format_sig6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string hidden_spec_string(const ArchitectureSpec& arch) {
  if (arch.hidden_widths.empty()) return "-";
  std::string out;
  std::size_t i = 0;
  while (i < arch.hidden_widths.size()) {
    std::size_t run = 1;
    while (i + run < arch.hidden_widths.size() &&
           arch.hidden_widths[i + run] == arch.hidden_widths[i])
      ++run;
    if (!out.empty()) out += '+';
    out += std::to_string(arch.hidden_widths[i]) + "x" + std::to_string(run);
    i += run;
  }
  return out;
}

std::string csv_header() {
  return "input_width,depth,hidden_spec,size_mb,residency,on_chip_kb,off_chip_kb,"
         "e_tpu_mj,e_a53_mj,e_i7_mj,ratio,recommendation,rule";
}

std::string row_csv_line(const SweepRow& row) {
  std::string line;
  line += std::to_string(row.spec.input_width);
  line += ',' + std::to_string(row.spec.depth());
  line += ',' + hidden_spec_string(row.spec);
  line += ',' + format_sig6(row.size_mb);
  line += ',' + to_string(row.placement.residency);
  line += ',' + format_sig6(static_cast<double>(row.placement.on_chip_used_bytes) / 1024.0);
  line += ',' + format_sig6(static_cast<double>(row.placement.off_chip_used_bytes) / 1024.0);
  line += ',' + format_sig6(row.energy_tpu_mj);
  line += ',' + format_sig6(row.energy_a53_mj);
  line += ',' + format_sig6(row.energy_i7_mj);
  line += ',' + format_sig6(row.ratio);
  line += ',' + to_string(row.recommendation.platform);
  line += ',' + to_string(row.recommendation.rule_fired);
  return line;
}

std::string sweep_csv(const AnalysisContext& ctx, GridId grid) {
  std::string out = csv_header();
  out += '\n';
  for (const SweepRow& row : sweep(ctx, grid)) {
    out += row_csv_line(row);
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::json row_to_json_obj(const SweepRow& row) {
  nlohmann::json rec = nlohmann::json::parse(recommendation_to_json(row.recommendation));
  return nlohmann::json{
      {"spec", nlohmann::json::parse(arch_to_json(row.spec))},
      {"size_mb", row.size_mb},
      {"residency", to_string(row.placement.residency)},
      {"on_chip_kb", static_cast<double>(row.placement.on_chip_used_bytes) / 1024.0},
      {"off_chip_kb", static_cast<double>(row.placement.off_chip_used_bytes) / 1024.0},
      {"placement_trigger", to_string(row.placement.trigger)},
      {"energy_mj",
       {{kPlatformTpu, row.energy_tpu_mj},
        {kPlatformA53, row.energy_a53_mj},
        {kPlatformI7, row.energy_i7_mj}}},
      {"ratio", row.ratio},
      {"recommendation", rec},
      {"low_confidence", row.low_confidence},
      {"warnings", row.warnings}};
}

}  // namespace

std::string row_to_json(const SweepRow& row) { return row_to_json_obj(row).dump(); }

std::string sweep_json(const AnalysisContext& ctx, GridId grid) {
  nlohmann::json array = nlohmann::json::array();
  for (const SweepRow& row : sweep(ctx, grid)) array.push_back(row_to_json_obj(row));
  return array.dump();
}

}  // namespace edgeadvisor
