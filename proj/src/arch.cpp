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

#include "edgeadvisor/arch.hpp"

#include <algorithm>
#include <cmath>

#include "edgeadvisor/error.hpp"
#include "json.hpp"

namespace edgeadvisor {

std::vector<std::uint32_t> ArchitectureSpec::layer_widths() const {
  std::vector<std::uint32_t> widths;
  widths.reserve(hidden_widths.size() + 2);
  widths.push_back(input_width);
  widths.insert(widths.end(), hidden_widths.begin(), hidden_widths.end());
  widths.push_back(output_width);
  return widths;
}

void ArchitectureSpec::validate() const {
  if (input_width == 0 || output_width == 0)
    fail(Errc::invalid_argument, "layer widths must be at least 1");
  for (std::uint32_t w : hidden_widths)
    if (w == 0) fail(Errc::invalid_argument, "layer widths must be at least 1");
}

void QuantizationProfile::validate() const {
  if (!(bytes_per_weight > 0.0))
    fail(Errc::invalid_argument, "bytes_per_weight must be positive");
  if (bytes_per_bias < 0.0)
    fail(Errc::invalid_argument, "bytes_per_bias must be non-negative");
}

ParamBreakdown layer_param_counts(const ArchitectureSpec& arch) {
  arch.validate();
  const auto widths = arch.layer_widths();
  ParamBreakdown breakdown;
  breakdown.per_layer.reserve(widths.size() - 1);
  for (std::size_t k = 0; k + 1 < widths.size(); ++k) {
    LayerParams layer;
    layer.weight_count =
        static_cast<std::uint64_t>(widths[k]) * static_cast<std::uint64_t>(widths[k + 1]);
    layer.bias_count = widths[k + 1];
    breakdown.total += layer.weight_count + layer.bias_count;
    breakdown.per_layer.push_back(layer);
  }
  return breakdown;
}

std::uint64_t model_size_bytes(const ArchitectureSpec& arch,
                               const QuantizationProfile& profile) {
  profile.validate();
  const ParamBreakdown breakdown = layer_param_counts(arch);
  std::uint64_t weights = 0;
  std::uint64_t biases = 0;
  for (const LayerParams& layer : breakdown.per_layer) {
    weights += layer.weight_count;
    biases += layer.bias_count;
  }
  const double size = profile.bytes_per_weight * static_cast<double>(weights) +
                      profile.bytes_per_bias * static_cast<double>(biases);
  return static_cast<std::uint64_t>(std::llround(size)) + profile.fixed_overhead_bytes;
}

std::uint32_t max_layer_width(const ArchitectureSpec& arch) {
  arch.validate();
  const auto widths = arch.layer_widths();
  return *std::max_element(widths.begin(), widths.end());
}

GridId grid_id_from_string(const std::string& name) {
  if (name == "set1") return GridId::set1;
  if (name == "set2") return GridId::set2;
  if (name == "set3") return GridId::set3;
  fail(Errc::unknown_grid, "unknown grid '" + name + "' (expected set1, set2 or set3)");
}

std::string to_string(GridId id) {
  switch (id) {
    case GridId::set1: return "set1";
    case GridId::set2: return "set2";
    case GridId::set3: return "set3";
  }
  return "?";
}

namespace {

constexpr std::uint32_t kOutputWidth = 9;
constexpr std::uint32_t kLastHiddenWidth = 32;

std::vector<ArchitectureSpec> make_set1() {
  static constexpr std::uint32_t kDepths[] = {2, 4, 8, 16, 32, 64};
  static constexpr std::uint32_t kInputWidths[] = {377,   1350,  3420,  5400,  9072,
                                                   12150, 17424, 22500, 28476, 34875};
  std::vector<ArchitectureSpec> specs;
  specs.reserve(std::size(kDepths) * std::size(kInputWidths));
  for (std::uint32_t depth : kDepths) {
    for (std::uint32_t input : kInputWidths) {
      ArchitectureSpec spec;
      spec.input_width = input;
      spec.hidden_widths.assign(depth - 1, 64);
      spec.hidden_widths.push_back(kLastHiddenWidth);
      spec.output_width = kOutputWidth;
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

std::vector<ArchitectureSpec> make_set2() {
  // (w1, w2): w1 for hidden layers 1-63, w2 for layers 64-127; layer 128 is 32.
  static constexpr std::pair<std::uint32_t, std::uint32_t> kPairs[] = {
      {64, 64},  {128, 64},  {128, 128}, {256, 64}, {300, 64},  {305, 64},
      {310, 64}, {256, 128}, {256, 256}, {512, 64}, {512, 128},
  };
  std::vector<ArchitectureSpec> specs;
  specs.reserve(std::size(kPairs));
  for (const auto& [first_half, second_half] : kPairs) {
    ArchitectureSpec spec;
    spec.input_width = 5400;
    spec.hidden_widths.assign(63, first_half);
    spec.hidden_widths.insert(spec.hidden_widths.end(), 64, second_half);
    spec.hidden_widths.push_back(kLastHiddenWidth);
    spec.output_width = kOutputWidth;
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::vector<ArchitectureSpec> make_set3() {
  std::vector<ArchitectureSpec> specs;
  specs.reserve(51);
  for (std::uint32_t first_hidden = 5000; first_hidden <= 10000; first_hidden += 100) {
    ArchitectureSpec spec;
    spec.input_width = 377;
    spec.hidden_widths = {first_hidden, kLastHiddenWidth};
    spec.output_width = kOutputWidth;
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace

std::vector<ArchitectureSpec> generate_grid(GridId id) {
  switch (id) {
    case GridId::set1: return make_set1();
    case GridId::set2: return make_set2();
    case GridId::set3: return make_set3();
  }
  fail(Errc::unknown_grid, "unknown grid id");
}

namespace {

nlohmann::json arch_to_json_obj(const ArchitectureSpec& arch) {
  return nlohmann::json{{"input_width", arch.input_width},
                        {"hidden_widths", arch.hidden_widths},
                        {"output_width", arch.output_width}};
}

}  // namespace

std::string arch_to_json(const ArchitectureSpec& arch) {
  return arch_to_json_obj(arch).dump();
}

ArchitectureSpec arch_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("invalid architecture JSON: ") + e.what());
  }
  ArchitectureSpec arch;
  try {
    arch.input_width = doc.at("input_width").get<std::uint32_t>();
    arch.hidden_widths = doc.at("hidden_widths").get<std::vector<std::uint32_t>>();
    arch.output_width = doc.at("output_width").get<std::uint32_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("invalid architecture JSON: ") + e.what());
  }
  arch.validate();
  return arch;
}

std::string grid_to_json(const std::vector<ArchitectureSpec>& specs) {
  nlohmann::json array = nlohmann::json::array();
  for (const ArchitectureSpec& spec : specs) array.push_back(arch_to_json_obj(spec));
  return array.dump();
}

}  // namespace edgeadvisor
