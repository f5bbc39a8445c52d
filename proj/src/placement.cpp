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

#include "edgeadvisor/placement.hpp"

#include <cmath>

#include "edgeadvisor/error.hpp"
#include "json.hpp"

namespace edgeadvisor {

void MemoryBudget::validate() const {
  if (on_chip_bytes == 0 || parameter_memory_width == 0)
    fail(Errc::invalid_argument, "memory budget values must be positive");
}

PlacementReport place(const ArchitectureSpec& arch, const QuantizationProfile& profile,
                      const MemoryBudget& budget) {
  arch.validate();
  budget.validate();

  const std::uint64_t size = model_size_bytes(arch, profile);
  const bool size_ok = size <= budget.on_chip_bytes;
  const bool width_ok = max_layer_width(arch) <= budget.parameter_memory_width;

  PlacementReport report;
  if (size_ok && width_ok) {
    report.residency = Residency::on_chip;
    report.on_chip_used_bytes = size;
    report.off_chip_used_bytes = 0;
    report.trigger = PlacementTrigger::none;
    return report;
  }

  // First weight block: input width times the width of the first layer fed
  // by the input (the output layer for a network without hidden layers).
  const std::uint32_t first_fed_width =
      arch.hidden_widths.empty() ? arch.output_width : arch.hidden_widths.front();
  const double block = profile.bytes_per_weight * static_cast<double>(arch.input_width) *
                       static_cast<double>(first_fed_width);
  std::uint64_t off_chip = static_cast<std::uint64_t>(std::llround(block));
  if (off_chip > size) off_chip = size;

  report.residency = Residency::off_chip;
  report.off_chip_used_bytes = off_chip;
  report.on_chip_used_bytes = size - off_chip;
  if (!size_ok && !width_ok)
    report.trigger = PlacementTrigger::both;
  else if (!size_ok)
    report.trigger = PlacementTrigger::size_exceeded;
  else
    report.trigger = PlacementTrigger::width_exceeded;
  return report;
}

std::vector<PlacementReport> placement_sweep(const std::vector<ArchitectureSpec>& specs,
                                             const QuantizationProfile& profile,
                                             const MemoryBudget& budget) {
  std::vector<PlacementReport> reports;
  reports.reserve(specs.size());
  for (const ArchitectureSpec& spec : specs) reports.push_back(place(spec, profile, budget));
  return reports;
}

std::string to_string(Residency residency) {
  return residency == Residency::on_chip ? "ON_CHIP" : "OFF_CHIP";
}

std::string to_string(PlacementTrigger trigger) {
  switch (trigger) {
    case PlacementTrigger::none: return "NONE";
    case PlacementTrigger::size_exceeded: return "SIZE_EXCEEDED";
    case PlacementTrigger::width_exceeded: return "WIDTH_EXCEEDED";
    case PlacementTrigger::both: return "BOTH";
  }
  return "?";
}

std::string placement_to_json(const PlacementReport& report) {
  return nlohmann::json{{"residency", to_string(report.residency)},
                        {"on_chip_used_bytes", report.on_chip_used_bytes},
                        {"off_chip_used_bytes", report.off_chip_used_bytes},
                        {"trigger", to_string(report.trigger)}}
      .dump();
}

}  // namespace edgeadvisor
