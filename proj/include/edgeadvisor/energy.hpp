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

#ifndef EDGEADVISOR_ENERGY_HPP_
#define EDGEADVISOR_ENERGY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgeadvisor/arch.hpp"
#include "edgeadvisor/placement.hpp"

namespace edgeadvisor {

// Everything the piecewise energy models key on, derived deterministically
// from (ArchitectureSpec, QuantizationProfile, MemoryBudget).
struct ArchFeatures {
  double size_mb = 0.0;
  std::uint32_t input_width = 0;
  std::uint32_t max_width = 0;          // input and output included
  std::uint32_t first_hidden_width = 0; // 0 when there is no hidden layer
  std::uint32_t depth = 0;
  Residency residency = Residency::on_chip;
};

ArchFeatures features(const ArchitectureSpec& arch,
                      const QuantizationProfile& profile,
                      const MemoryBudget& budget);

struct AffineModel {
  double slope = 0.0;      // mJ per MB, or mJ per node for width-keyed segments
  double intercept = 0.0;  // mJ

  double operator()(double x) const { return slope * x + intercept; }
};

enum class RegressionFeature { size_mb, first_hidden_width };

enum class Confidence { high, low };

// Guard over ArchFeatures; unset fields do not constrain. A default-built
// guard matches everything (catch-all).
struct SegmentGuard {
  std::optional<Residency> residency;
  std::optional<std::uint32_t> input_width_max;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first_hidden_width_range;
  std::optional<std::uint32_t> max_width_max;

  bool matches(const ArchFeatures& f) const;
  bool is_catch_all() const;
};

struct EnergySegment {
  SegmentGuard guard;
  RegressionFeature feature = RegressionFeature::size_mb;
  AffineModel model;
  // Predictions are clamped into this range when present. It records the
  // energy band the segment was calibrated against; calibration points near
  // the band edges are measured, anything clamped is extrapolation.
  std::optional<std::pair<double, double>> band;
  Confidence confidence = Confidence::high;
};

// A named hardware target: power rating plus an ordered segment table. The
// first matching guard wins; the final segment must be a catch-all so that
// every valid feature vector gets a prediction.
struct PlatformProfile {
  std::string name;
  double power_watts = 1.0;
  std::vector<EnergySegment> segments;

  void validate() const;
};

struct EnergyEstimate {
  double energy_mj = 0.0;
  std::size_t segment_index = 0;
  bool clamped_to_band = false;
  bool negative_extrapolation = false;  // raw affine value was below zero
  Confidence confidence = Confidence::high;
};

// Evaluates the first matching segment. Throws Errc::no_segment_matches when
// the table has a hole (impossible with the shipped defaults).
EnergyEstimate estimate_energy(const PlatformProfile& platform,
                               const ArchFeatures& f);

double predict_energy_mj(const PlatformProfile& platform, const ArchFeatures& f);

// latency [ms] = energy [mJ] / power [W]; inverse of deriving energy from a
// measured inference time at the platform's power rating.
double predict_latency_ms(const PlatformProfile& platform, const ArchFeatures& f);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double correlation = 0.0;    // r; 0 when the y values are constant
  double determination = 0.0;  // R^2 = r^2
};

// Ordinary least squares over (x, y) points. Throws Errc::degenerate_input
// with fewer than two distinct x values.
FitResult fit_affine(const std::vector<std::pair<double, double>>& points);

inline constexpr const char kPlatformTpu[] = "edge_tpu";
inline constexpr const char kPlatformA53[] = "cortex_a53";
inline constexpr const char kPlatformI7[] = "i7";

// Shipped calibration: edge_tpu, cortex_a53 and i7 profiles.
std::vector<PlatformProfile> default_platforms();

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_ENERGY_HPP_
