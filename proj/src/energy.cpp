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

#include "edgeadvisor/energy.hpp"

#include <algorithm>
#include <cmath>

#include "edgeadvisor/error.hpp"

namespace edgeadvisor {

ArchFeatures features(const ArchitectureSpec& arch, const QuantizationProfile& profile,
                      const MemoryBudget& budget) {
  ArchFeatures f;
  f.size_mb = bytes_to_mb(model_size_bytes(arch, profile));
  f.input_width = arch.input_width;
  f.max_width = max_layer_width(arch);
  f.first_hidden_width = arch.first_hidden_width();
  f.depth = static_cast<std::uint32_t>(arch.depth());
  f.residency = place(arch, profile, budget).residency;
  return f;
}

bool SegmentGuard::matches(const ArchFeatures& f) const {
  if (residency && *residency != f.residency) return false;
  if (input_width_max && f.input_width > *input_width_max) return false;
  if (first_hidden_width_range) {
    const auto& [lo, hi] = *first_hidden_width_range;
    if (f.first_hidden_width < lo || f.first_hidden_width > hi) return false;
  }
  if (max_width_max && f.max_width > *max_width_max) return false;
  return true;
}

bool SegmentGuard::is_catch_all() const {
  return !residency && !input_width_max && !first_hidden_width_range && !max_width_max;
}

void PlatformProfile::validate() const {
  if (name.empty()) fail(Errc::calibration_error, "platform name must not be empty");
  if (!(power_watts > 0.0))
    fail(Errc::calibration_error, "platform '" + name + "': power_watts must be positive");
  if (segments.empty())
    fail(Errc::calibration_error, "platform '" + name + "': needs at least one segment");
  if (!segments.back().guard.is_catch_all())
    fail(Errc::calibration_error,
         "platform '" + name + "': the final segment must be an unguarded catch-all");
  for (const EnergySegment& segment : segments) {
    if (!std::isfinite(segment.model.slope) || !std::isfinite(segment.model.intercept))
      fail(Errc::calibration_error, "platform '" + name + "': non-finite coefficients");
    if (segment.band && !(segment.band->first <= segment.band->second))
      fail(Errc::calibration_error, "platform '" + name + "': band min exceeds band max");
  }
}

EnergyEstimate estimate_energy(const PlatformProfile& platform, const ArchFeatures& f) {
  for (std::size_t i = 0; i < platform.segments.size(); ++i) {
    const EnergySegment& segment = platform.segments[i];
    if (!segment.guard.matches(f)) continue;

    const double x = segment.feature == RegressionFeature::size_mb
                         ? f.size_mb
                         : static_cast<double>(f.first_hidden_width);
    const double raw = segment.model(x);
    double energy = raw;
    bool clamped = false;
    if (segment.band) {
      const double banded = std::clamp(raw, segment.band->first, segment.band->second);
      clamped = banded != raw;
      energy = banded;
    }
    if (energy < 0.0) energy = 0.0;

    EnergyEstimate estimate;
    estimate.energy_mj = energy;
    estimate.segment_index = i;
    estimate.clamped_to_band = clamped;
    estimate.negative_extrapolation = raw < 0.0;
    estimate.confidence = segment.confidence;
    return estimate;
  }
  fail(Errc::no_segment_matches,
       "platform '" + platform.name + "': no energy segment matches the architecture "
       "features; the calibration table is incomplete");
}

double predict_energy_mj(const PlatformProfile& platform, const ArchFeatures& f) {
  return estimate_energy(platform, f).energy_mj;
}

double predict_latency_ms(const PlatformProfile& platform, const ArchFeatures& f) {
  return estimate_energy(platform, f).energy_mj / platform.power_watts;
}

FitResult fit_affine(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    fail(Errc::degenerate_input, "least squares needs at least two points");

  const double n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    syy += (y - mean_y) * (y - mean_y);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0.0)
    fail(Errc::degenerate_input, "least squares needs at least two distinct x values");

  FitResult result;
  result.slope = sxy / sxx;
  result.intercept = mean_y - result.slope * mean_x;
  // Constant y: the horizontal line fits exactly; correlation is undefined
  // and reported as 0.
  result.correlation = syy == 0.0 ? 0.0 : sxy / std::sqrt(sxx * syy);
  result.correlation = std::clamp(result.correlation, -1.0, 1.0);
  result.determination = result.correlation * result.correlation;
  return result;
}

namespace {

// Regression coefficients measured for the three platforms (energy per
// inference in mJ against model size in MB unless keyed on layer width).
constexpr double kI7Slope = 13.623;
constexpr double kI7Intercept = 1.74;
constexpr double kI7PowerWatts = 84.0;  // nominal TDP of the i7-4790

constexpr double kA53Slope = 2.157;
constexpr double kA53Intercept = 0.001;
constexpr double kA53PowerWatts = 2.0;

constexpr double kTpuPowerWatts = 2.0;
constexpr double kTpuOnChipSlope = 0.84;
constexpr double kTpuOnChipIntercept = 0.161;
// Fitted energies between the smallest measured on-chip prediction and the
// regression value at the 8 MB on-chip limit.
constexpr double kTpuOnChipBandLow = 0.25;
constexpr double kTpuOnChipBandHigh = kTpuOnChipSlope * 8.0 + kTpuOnChipIntercept;

// Plateau and ramp keyed on the first hidden layer width, from the wide-layer
// sweep: flat 0.39 mJ below 6000 nodes, 0.63 -> 0.72 mJ up to 8000 nodes,
// then off-chip 1.72 mJ at 8100 rising to 2.13 mJ at 10000.
constexpr double kWidePlateauMj = 0.39;
constexpr double kWideRampSlope = (0.72 - 0.63) / (8000.0 - 6000.0);
constexpr double kWideRampIntercept = 0.63 - kWideRampSlope * 6000.0;
constexpr double kOffChipWideSlope = (2.13 - 1.72) / (10000.0 - 8100.0);
constexpr double kOffChipWideIntercept = 1.72 - kOffChipWideSlope * 8100.0;

// Off-chip fallback: no published numbers exist for the off-chip input-width
// tiers, so the default just encodes that the embedded CPU stays ahead by a
// 10% margin. Flagged low confidence.
constexpr double kTpuOffChipPenalty = 1.1;

EnergySegment make_segment(SegmentGuard guard, RegressionFeature feature, double slope,
                           double intercept, std::optional<std::pair<double, double>> band,
                           Confidence confidence) {
  EnergySegment segment;
  segment.guard = std::move(guard);
  segment.feature = feature;
  segment.model = {slope, intercept};
  segment.band = band;
  segment.confidence = confidence;
  return segment;
}

PlatformProfile make_tpu_profile() {
  PlatformProfile tpu;
  tpu.name = kPlatformTpu;
  tpu.power_watts = kTpuPowerWatts;

  SegmentGuard plateau;
  plateau.residency = Residency::on_chip;
  plateau.first_hidden_width_range = {{5000, 5999}};
  tpu.segments.push_back(make_segment(plateau, RegressionFeature::first_hidden_width, 0.0,
                                      kWidePlateauMj, {{kWidePlateauMj, kWidePlateauMj}},
                                      Confidence::high));

  SegmentGuard ramp;
  ramp.residency = Residency::on_chip;
  ramp.first_hidden_width_range = {{6000, 8000}};
  tpu.segments.push_back(make_segment(ramp, RegressionFeature::first_hidden_width,
                                      kWideRampSlope, kWideRampIntercept, {{0.63, 0.72}},
                                      Confidence::high));

  // Measured on-chip regression; the guard covers the measured region (input
  // width up to 5400, slim hidden layers).
  SegmentGuard sweet;
  sweet.residency = Residency::on_chip;
  sweet.input_width_max = 5400;
  sweet.first_hidden_width_range = {{1, 512}};
  tpu.segments.push_back(make_segment(sweet, RegressionFeature::size_mb, kTpuOnChipSlope,
                                      kTpuOnChipIntercept,
                                      {{kTpuOnChipBandLow, kTpuOnChipBandHigh}},
                                      Confidence::high));

  // Same regression for on-chip shapes outside the measured region.
  SegmentGuard on_chip_rest;
  on_chip_rest.residency = Residency::on_chip;
  tpu.segments.push_back(make_segment(on_chip_rest, RegressionFeature::size_mb,
                                      kTpuOnChipSlope, kTpuOnChipIntercept,
                                      {{0.0, kTpuOnChipBandHigh}}, Confidence::low));

  SegmentGuard off_chip_wide;
  off_chip_wide.residency = Residency::off_chip;
  off_chip_wide.first_hidden_width_range = {{8100, 10000}};
  tpu.segments.push_back(make_segment(off_chip_wide, RegressionFeature::first_hidden_width,
                                      kOffChipWideSlope, kOffChipWideIntercept,
                                      {{1.72, 2.13}}, Confidence::high));

  tpu.segments.push_back(make_segment(SegmentGuard{}, RegressionFeature::size_mb,
                                      kTpuOffChipPenalty * kA53Slope,
                                      kTpuOffChipPenalty * kA53Intercept, std::nullopt,
                                      Confidence::low));
  return tpu;
}

}  // namespace

std::vector<PlatformProfile> default_platforms() {
  std::vector<PlatformProfile> platforms;
  platforms.push_back(make_tpu_profile());

  PlatformProfile a53;
  a53.name = kPlatformA53;
  a53.power_watts = kA53PowerWatts;
  a53.segments.push_back(make_segment(SegmentGuard{}, RegressionFeature::size_mb, kA53Slope,
                                      kA53Intercept, std::nullopt, Confidence::high));
  platforms.push_back(std::move(a53));

  PlatformProfile i7;
  i7.name = kPlatformI7;
  i7.power_watts = kI7PowerWatts;
  i7.segments.push_back(make_segment(SegmentGuard{}, RegressionFeature::size_mb, kI7Slope,
                                     kI7Intercept, std::nullopt, Confidence::high));
  platforms.push_back(std::move(i7));

  for (const PlatformProfile& platform : platforms) platform.validate();
  return platforms;
}

}  // namespace edgeadvisor
