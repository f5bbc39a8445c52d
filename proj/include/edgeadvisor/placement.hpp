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

#ifndef EDGEADVISOR_PLACEMENT_HPP_
#define EDGEADVISOR_PLACEMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "edgeadvisor/arch.hpp"

namespace edgeadvisor {

// Accelerator memory limits governing the all-or-nothing residency decision.
struct MemoryBudget {
  std::uint64_t on_chip_bytes = 8ull * 1024 * 1024;

  // Widest layer that still fits the on-chip parameter memory. The physical
  // structure holds 8192 entries, but layers wider than 8000 nodes spill on
  // real hardware, so the usable default is 8000.
  std::uint32_t parameter_memory_width = 8000;

  void validate() const;
};

enum class Residency { on_chip, off_chip };

enum class PlacementTrigger { none, size_exceeded, width_exceeded, both };

struct PlacementReport {
  Residency residency = Residency::on_chip;
  std::uint64_t on_chip_used_bytes = 0;
  std::uint64_t off_chip_used_bytes = 0;
  PlacementTrigger trigger = PlacementTrigger::none;
};

// All-or-nothing residency: the model lives entirely on-chip iff its size
// fits the on-chip memory and its widest layer fits the parameter memory.
// When it spills, the off-chip share is modeled as the first weight block
// (input_width x first hidden width x bytes_per_weight), which is the only
// block whose size is fixed per input width regardless of depth.
PlacementReport place(const ArchitectureSpec& arch,
                      const QuantizationProfile& profile,
                      const MemoryBudget& budget);

std::vector<PlacementReport> placement_sweep(
    const std::vector<ArchitectureSpec>& specs,
    const QuantizationProfile& profile, const MemoryBudget& budget);

std::string to_string(Residency residency);
std::string to_string(PlacementTrigger trigger);

std::string placement_to_json(const PlacementReport& report);

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_PLACEMENT_HPP_
