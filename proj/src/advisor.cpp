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

#include "edgeadvisor/advisor.hpp"

#include <sstream>

#include "edgeadvisor/error.hpp"
#include "json.hpp"

namespace edgeadvisor {

void Thresholds::validate() const {
  if (!(crossover1_mb > 0.0) || !(crossover2_mb > 0.0) || !(on_chip_limit_mb > 0.0) ||
      width_limit == 0)
    fail(Errc::invalid_argument, "thresholds must be positive");
  if (!(crossover1_mb < on_chip_limit_mb && on_chip_limit_mb < crossover2_mb))
    fail(Errc::invalid_argument,
         "thresholds must satisfy crossover1 < on_chip_limit < crossover2");
}

namespace {

std::string format_mb(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

std::string crossover2_note(const Thresholds& t) {
  std::ostringstream out;
  out << " (cross-over point 2 measured at " << format_mb(t.crossover2_mb)
      << " MB; the flowchart cites 12.5 MB)";
  return out.str();
}

}  // namespace

Recommendation recommend(const ArchFeatures& f, const Thresholds& t) {
  t.validate();
  Recommendation rec;
  std::ostringstream why;

  if (f.size_mb < t.crossover1_mb) {
    rec.platform = PlatformChoice::cortex_a53;
    rec.rule_fired = DecisionRule::too_small;
    why << "model size " << format_mb(f.size_mb) << " MB is below cross-over point 1 ("
        << format_mb(t.crossover1_mb) << " MB); the Cortex-A53 is more energy-efficient "
        << "for very small models";
  } else if (f.max_width > t.width_limit) {
    rec.platform = PlatformChoice::cortex_a53;
    rec.rule_fired = DecisionRule::width_exceeded;
    why << "widest layer (" << f.max_width << " nodes) exceeds the on-chip parameter "
        << "memory (" << t.width_limit << " entries); parameters stream from off-chip "
        << "memory and the Cortex-A53 is more efficient";
  } else if (f.size_mb > t.crossover2_mb) {
    rec.platform = PlatformChoice::cortex_a53;
    rec.rule_fired = DecisionRule::too_large;
    why << "model size " << format_mb(f.size_mb) << " MB is beyond cross-over point 2; "
        << "the Cortex-A53 overtakes the Edge TPU" << crossover2_note(t);
  } else if (f.size_mb <= t.on_chip_limit_mb) {
    rec.platform = PlatformChoice::edge_tpu;
    rec.rule_fired = DecisionRule::sweet_spot;
    why << "model size " << format_mb(f.size_mb) << " MB fits the on-chip memory ("
        << format_mb(t.on_chip_limit_mb) << " MB) and the widest layer (" << f.max_width
        << " nodes) fits the parameter memory (" << t.width_limit
        << " entries); the Edge TPU performs at its sweet spot";
  } else {
    rec.platform = PlatformChoice::edge_tpu;
    rec.rule_fired = DecisionRule::marginal_tpu;
    rec.low_confidence = true;
    why << "model size " << format_mb(f.size_mb) << " MB is between the on-chip limit ("
        << format_mb(t.on_chip_limit_mb) << " MB) and cross-over point 2; the efficiency "
        << "ratio keeps the Edge TPU ahead in this band, but confidence is low"
        << crossover2_note(t);
  }

  if (rec.rule_fired == DecisionRule::sweet_spot && f.max_width >= kMarginalWidthLow &&
      f.max_width <= t.width_limit) {
    why << "; warning: widths in [" << kMarginalWidthLow << ", " << t.width_limit
        << "] passed the limit check but were observed to spill on hardware";
  }

  rec.rationale = why.str();
  return rec;
}

double efficiency_ratio(const ArchFeatures& f, const PlatformProfile& tpu,
                        const PlatformProfile& a53) {
  const double tpu_energy = predict_energy_mj(tpu, f);
  if (tpu_energy <= 0.0)
    fail(Errc::zero_energy,
         "platform '" + tpu.name + "' predicted zero energy; the ratio is undefined");
  return predict_energy_mj(a53, f) / tpu_energy;
}

std::string to_string(PlatformChoice platform) {
  return platform == PlatformChoice::edge_tpu ? "EDGE_TPU" : "CORTEX_A53";
}

std::string to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::too_small: return "TOO_SMALL";
    case DecisionRule::sweet_spot: return "SWEET_SPOT";
    case DecisionRule::width_exceeded: return "WIDTH_EXCEEDED";
    case DecisionRule::too_large: return "TOO_LARGE";
    case DecisionRule::marginal_tpu: return "MARGINAL_TPU";
  }
  return "?";
}

std::string recommendation_to_json(const Recommendation& rec) {
  nlohmann::json energies = nlohmann::json::object();
  for (const auto& [platform_name, energy] : rec.predicted_energy_mj)
    energies[platform_name] = energy;
  return nlohmann::json{{"platform", to_string(rec.platform)},
                        {"rule_fired", to_string(rec.rule_fired)},
                        {"rationale", rec.rationale},
                        {"predicted_energy_mj", energies},
                        {"low_confidence", rec.low_confidence}}
      .dump();
}

}  // namespace edgeadvisor
