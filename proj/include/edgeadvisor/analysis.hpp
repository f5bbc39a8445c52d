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

#ifndef EDGEADVISOR_ANALYSIS_HPP_
#define EDGEADVISOR_ANALYSIS_HPP_

#include <string>
#include <vector>

#include "edgeadvisor/advisor.hpp"
#include "edgeadvisor/arch.hpp"
#include "edgeadvisor/energy.hpp"
#include "edgeadvisor/placement.hpp"

namespace edgeadvisor {

// Everything a full analysis needs: quantization assumptions, the memory
// budget, decision thresholds and the platform calibration tables.
struct AnalysisContext {
  QuantizationProfile quantization;
  MemoryBudget budget;
  Thresholds thresholds;
  std::vector<PlatformProfile> platforms;
};

AnalysisContext default_context();

// Calibration files override shipped platforms by name; platforms with new
// names are appended. Throws Errc::calibration_error on schema or validation
// problems. See the README for the document format.
void load_calibration_json(AnalysisContext& ctx, const std::string& json_text);
void load_calibration_file(AnalysisContext& ctx, const std::string& path);

// Thresholds files override individual fields of AnalysisContext::thresholds.
void load_thresholds_json(AnalysisContext& ctx, const std::string& json_text);
void load_thresholds_file(AnalysisContext& ctx, const std::string& path);

// Lookup by name; throws Errc::calibration_error when missing.
const PlatformProfile& platform(const AnalysisContext& ctx,
                                const std::string& name);

// One fully analyzed architecture; every field is reproducible by re-running
// the underlying modules on spec.
struct SweepRow {
  ArchitectureSpec spec;
  double size_mb = 0.0;
  PlacementReport placement;
  double energy_tpu_mj = 0.0;
  double energy_a53_mj = 0.0;
  double energy_i7_mj = 0.0;
  double ratio = 0.0;  // E_A53 / E_TPU
  Recommendation recommendation;
  bool low_confidence = false;  // the accelerator prediction used a low-confidence segment
  std::vector<std::string> warnings;
};

SweepRow analyze(const AnalysisContext& ctx, const ArchitectureSpec& arch);

std::vector<SweepRow> sweep(const AnalysisContext& ctx, GridId grid);

// CSV with the fixed header
//   input_width,depth,hidden_spec,size_mb,residency,on_chip_kb,off_chip_kb,
//   e_tpu_mj,e_a53_mj,e_i7_mj,ratio,recommendation,rule
// one data row per generated spec in generator order. Numeric columns are
// printed with 6 significant digits; output is byte-stable across runs.
std::string sweep_csv(const AnalysisContext& ctx, GridId grid);

std::string sweep_json(const AnalysisContext& ctx, GridId grid);

std::string csv_header();
std::string row_csv_line(const SweepRow& row);
std::string row_to_json(const SweepRow& row);

// Hidden widths as run-length text, e.g. [64,64,32] -> "64x2+32x1"; "-" for
// a network without hidden layers. Keeps the CSV free of commas.
std::string hidden_spec_string(const ArchitectureSpec& arch);

// Fixed 6-significant-digit formatting used for all CSV numbers.
std::string format_sig6(double value);

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_ANALYSIS_HPP_
