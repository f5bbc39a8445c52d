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

#include "edge_advisor.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "edgeadvisor/analysis.hpp"
#include "edgeadvisor/arch.hpp"
#include "edgeadvisor/error.hpp"
#include "edgeadvisor/spectrogram.hpp"

namespace ea = edgeadvisor;

struct ea_arch {
  ea::ArchitectureSpec spec;
};

struct ea_grid {
  std::vector<ea_arch> archs;
};

struct ea_context {
  ea::AnalysisContext ctx;
};

struct ea_spectrogram {
  ea::Spectrogram grid;
};

namespace {

thread_local std::string g_last_error;

ea_status status_from_errc(ea::Errc code) {
  switch (code) {
    case ea::Errc::invalid_argument: return EA_ERR_INVALID_ARGUMENT;
    case ea::Errc::parse_error: return EA_ERR_PARSE;
    case ea::Errc::calibration_error: return EA_ERR_CALIBRATION;
    case ea::Errc::no_segment_matches: return EA_ERR_NO_SEGMENT;
    case ea::Errc::degenerate_input: return EA_ERR_DEGENERATE_INPUT;
    case ea::Errc::dimension_mismatch: return EA_ERR_DIMENSION_MISMATCH;
    case ea::Errc::unknown_resolution: return EA_ERR_UNKNOWN_RESOLUTION;
    case ea::Errc::zero_energy: return EA_ERR_ZERO_ENERGY;
    case ea::Errc::params_exceed_window: return EA_ERR_PARAMS_EXCEED_WINDOW;
    case ea::Errc::unknown_grid: return EA_ERR_UNKNOWN_GRID;
    case ea::Errc::io_error: return EA_ERR_IO;
  }
  return EA_ERR_INTERNAL;
}

// Runs fn, converting exceptions into status codes and recording the message.
template <typename Fn>
ea_status guarded(Fn&& fn) {
  try {
    fn();
    return EA_OK;
  } catch (const ea::Error& e) {
    g_last_error = e.what();
    return status_from_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return EA_ERR_INTERNAL;
  }
}

ea_status invalid(const char* message) {
  g_last_error = message;
  return EA_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* ea_version(void) { return "1.0.0"; }

const char* ea_status_name(ea_status status) {
  switch (status) {
    case EA_OK: return "EA_OK";
    case EA_ERR_INVALID_ARGUMENT: return "EA_ERR_INVALID_ARGUMENT";
    case EA_ERR_PARSE: return "EA_ERR_PARSE";
    case EA_ERR_CALIBRATION: return "EA_ERR_CALIBRATION";
    case EA_ERR_NO_SEGMENT: return "EA_ERR_NO_SEGMENT";
    case EA_ERR_DEGENERATE_INPUT: return "EA_ERR_DEGENERATE_INPUT";
    case EA_ERR_DIMENSION_MISMATCH: return "EA_ERR_DIMENSION_MISMATCH";
    case EA_ERR_UNKNOWN_RESOLUTION: return "EA_ERR_UNKNOWN_RESOLUTION";
    case EA_ERR_ZERO_ENERGY: return "EA_ERR_ZERO_ENERGY";
    case EA_ERR_PARAMS_EXCEED_WINDOW: return "EA_ERR_PARAMS_EXCEED_WINDOW";
    case EA_ERR_UNKNOWN_GRID: return "EA_ERR_UNKNOWN_GRID";
    case EA_ERR_IO: return "EA_ERR_IO";
    case EA_ERR_INTERNAL: return "EA_ERR_INTERNAL";
  }
  return "?";
}

const char* ea_last_error(void) { return g_last_error.c_str(); }

void ea_string_free(char* text) { delete[] text; }

/* ---- architectures ----------------------------------------------------- */

ea_status ea_arch_create(uint32_t input_width, const uint32_t* hidden_widths,
                         size_t hidden_count, uint32_t output_width, ea_arch** out) {
  if (!out || (hidden_count > 0 && !hidden_widths)) return invalid("null argument");
  return guarded([&] {
    ea::ArchitectureSpec spec;
    spec.input_width = input_width;
    spec.hidden_widths.assign(hidden_widths, hidden_widths + hidden_count);
    spec.output_width = output_width;
    spec.validate();
    *out = new ea_arch{std::move(spec)};
  });
}

ea_status ea_arch_from_json(const char* json_text, ea_arch** out) {
  if (!json_text || !out) return invalid("null argument");
  return guarded([&] { *out = new ea_arch{ea::arch_from_json(json_text)}; });
}

ea_status ea_arch_to_json(const ea_arch* arch, char** json_out) {
  if (!arch || !json_out) return invalid("null argument");
  return guarded([&] { *json_out = copy_string(ea::arch_to_json(arch->spec)); });
}

void ea_arch_free(ea_arch* arch) { delete arch; }

ea_status ea_arch_param_total(const ea_arch* arch, uint64_t* out) {
  if (!arch || !out) return invalid("null argument");
  return guarded([&] { *out = ea::layer_param_counts(arch->spec).total; });
}

ea_status ea_arch_max_width(const ea_arch* arch, uint32_t* out) {
  if (!arch || !out) return invalid("null argument");
  return guarded([&] { *out = ea::max_layer_width(arch->spec); });
}

ea_status ea_model_size_bytes(const ea_context* ctx, const ea_arch* arch, uint64_t* out) {
  if (!ctx || !arch || !out) return invalid("null argument");
  return guarded([&] { *out = ea::model_size_bytes(arch->spec, ctx->ctx.quantization); });
}

ea_status ea_grid_generate(const char* grid_id, ea_grid** out) {
  if (!grid_id || !out) return invalid("null argument");
  return guarded([&] {
    auto specs = ea::generate_grid(ea::grid_id_from_string(grid_id));
    auto grid = std::make_unique<ea_grid>();
    grid->archs.reserve(specs.size());
    for (ea::ArchitectureSpec& spec : specs) grid->archs.push_back(ea_arch{std::move(spec)});
    *out = grid.release();
  });
}

size_t ea_grid_count(const ea_grid* grid) { return grid ? grid->archs.size() : 0; }

const ea_arch* ea_grid_arch(const ea_grid* grid, size_t index) {
  if (!grid || index >= grid->archs.size()) return nullptr;
  return &grid->archs[index];
}

ea_status ea_grid_to_json(const ea_grid* grid, char** json_out) {
  if (!grid || !json_out) return invalid("null argument");
  return guarded([&] {
    std::vector<ea::ArchitectureSpec> specs;
    specs.reserve(grid->archs.size());
    for (const ea_arch& arch : grid->archs) specs.push_back(arch.spec);
    *json_out = copy_string(ea::grid_to_json(specs));
  });
}

void ea_grid_free(ea_grid* grid) { delete grid; }

/* ---- context ------------------------------------------------------------ */

ea_status ea_context_create(ea_context** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new ea_context{ea::default_context()}; });
}

void ea_context_free(ea_context* ctx) { delete ctx; }

ea_status ea_context_set_quantization(ea_context* ctx, double bytes_per_weight,
                                      double bytes_per_bias, uint64_t fixed_overhead_bytes) {
  if (!ctx) return invalid("null argument");
  return guarded([&] {
    ea::QuantizationProfile profile{bytes_per_weight, bytes_per_bias, fixed_overhead_bytes};
    profile.validate();
    ctx->ctx.quantization = profile;
  });
}

ea_status ea_context_set_budget(ea_context* ctx, uint64_t on_chip_bytes,
                                uint32_t parameter_memory_width) {
  if (!ctx) return invalid("null argument");
  return guarded([&] {
    ea::MemoryBudget budget{on_chip_bytes, parameter_memory_width};
    budget.validate();
    ctx->ctx.budget = budget;
  });
}

ea_status ea_context_load_calibration_json(ea_context* ctx, const char* json_text) {
  if (!ctx || !json_text) return invalid("null argument");
  return guarded([&] { ea::load_calibration_json(ctx->ctx, json_text); });
}

ea_status ea_context_load_calibration_file(ea_context* ctx, const char* path) {
  if (!ctx || !path) return invalid("null argument");
  return guarded([&] { ea::load_calibration_file(ctx->ctx, path); });
}

ea_status ea_context_load_thresholds_json(ea_context* ctx, const char* json_text) {
  if (!ctx || !json_text) return invalid("null argument");
  return guarded([&] { ea::load_thresholds_json(ctx->ctx, json_text); });
}

ea_status ea_context_load_thresholds_file(ea_context* ctx, const char* path) {
  if (!ctx || !path) return invalid("null argument");
  return guarded([&] { ea::load_thresholds_file(ctx->ctx, path); });
}

/* ---- analyses ----------------------------------------------------------- */

ea_status ea_place_json(const ea_context* ctx, const ea_arch* arch, char** json_out) {
  if (!ctx || !arch || !json_out) return invalid("null argument");
  return guarded([&] {
    const ea::PlacementReport report =
        ea::place(arch->spec, ctx->ctx.quantization, ctx->ctx.budget);
    *json_out = copy_string(ea::placement_to_json(report));
  });
}

ea_status ea_predict_energy_mj(const ea_context* ctx, const char* platform_name,
                               const ea_arch* arch, double* out) {
  if (!ctx || !platform_name || !arch || !out) return invalid("null argument");
  return guarded([&] {
    const ea::ArchFeatures f =
        ea::features(arch->spec, ctx->ctx.quantization, ctx->ctx.budget);
    *out = ea::predict_energy_mj(ea::platform(ctx->ctx, platform_name), f);
  });
}

ea_status ea_predict_latency_ms(const ea_context* ctx, const char* platform_name,
                                const ea_arch* arch, double* out) {
  if (!ctx || !platform_name || !arch || !out) return invalid("null argument");
  return guarded([&] {
    const ea::ArchFeatures f =
        ea::features(arch->spec, ctx->ctx.quantization, ctx->ctx.budget);
    *out = ea::predict_latency_ms(ea::platform(ctx->ctx, platform_name), f);
  });
}

ea_status ea_efficiency_ratio(const ea_context* ctx, const ea_arch* arch, double* out) {
  if (!ctx || !arch || !out) return invalid("null argument");
  return guarded([&] {
    const ea::ArchFeatures f =
        ea::features(arch->spec, ctx->ctx.quantization, ctx->ctx.budget);
    *out = ea::efficiency_ratio(f, ea::platform(ctx->ctx, ea::kPlatformTpu),
                                ea::platform(ctx->ctx, ea::kPlatformA53));
  });
}

ea_status ea_analyze_json(const ea_context* ctx, const ea_arch* arch, char** json_out) {
  if (!ctx || !arch || !json_out) return invalid("null argument");
  return guarded([&] {
    *json_out = copy_string(ea::row_to_json(ea::analyze(ctx->ctx, arch->spec)));
  });
}

ea_status ea_recommend_json(const ea_context* ctx, const ea_arch* arch, char** json_out) {
  if (!ctx || !arch || !json_out) return invalid("null argument");
  return guarded([&] {
    const ea::SweepRow row = ea::analyze(ctx->ctx, arch->spec);
    *json_out = copy_string(ea::recommendation_to_json(row.recommendation));
  });
}

ea_status ea_sweep_csv(const ea_context* ctx, const char* grid_id, char** csv_out) {
  if (!ctx || !grid_id || !csv_out) return invalid("null argument");
  return guarded([&] {
    *csv_out = copy_string(ea::sweep_csv(ctx->ctx, ea::grid_id_from_string(grid_id)));
  });
}

ea_status ea_sweep_json(const ea_context* ctx, const char* grid_id, char** json_out) {
  if (!ctx || !grid_id || !json_out) return invalid("null argument");
  return guarded([&] {
    *json_out = copy_string(ea::sweep_json(ctx->ctx, ea::grid_id_from_string(grid_id)));
  });
}

ea_status ea_fit_affine(const double* xs, const double* ys, size_t count, double* slope,
                        double* intercept, double* correlation, double* determination) {
  if (!xs || !ys) return invalid("null argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> points;
    points.reserve(count);
    for (size_t i = 0; i < count; ++i) points.emplace_back(xs[i], ys[i]);
    const ea::FitResult result = ea::fit_affine(points);
    if (slope) *slope = result.slope;
    if (intercept) *intercept = result.intercept;
    if (correlation) *correlation = result.correlation;
    if (determination) *determination = result.determination;
  });
}

/* ---- spectrogram front end ---------------------------------------------- */

namespace {

ea::SpectrogramParams make_params(const char* window_kind, size_t window_length, size_t hop,
                                  int normalize) {
  ea::SpectrogramParams params;
  params.window_kind = ea::window_kind_from_string(window_kind);
  params.window_length = window_length;
  params.hop = hop;
  params.normalize = normalize != 0;
  params.validate();
  return params;
}

}  // namespace

ea_status ea_spectrogram_compute(const double* samples, size_t axis_count,
                                 size_t sample_count, size_t axis, const char* window_kind,
                                 size_t window_length, size_t hop, int normalize,
                                 ea_spectrogram** out) {
  if (!samples || !window_kind || !out) return invalid("null argument");
  return guarded([&] {
    ea::TimeSeriesWindow window;
    window.samples.assign(axis_count, std::vector<double>(sample_count, 0.0));
    for (size_t a = 0; a < axis_count; ++a)
      for (size_t t = 0; t < sample_count; ++t)
        window.samples[a][t] = samples[a * sample_count + t];
    window.sample_rate_hz = 50.0;
    window.window_seconds = static_cast<double>(sample_count) / window.sample_rate_hz;
    const auto params = make_params(window_kind, window_length, hop, normalize);
    *out = new ea_spectrogram{ea::stft_spectrogram(window, axis, params)};
  });
}

ea_status ea_spectrogram_from_csv_file(const char* path, size_t axis,
                                       const char* window_kind, size_t window_length,
                                       size_t hop, int normalize, ea_spectrogram** out) {
  if (!path || !window_kind || !out) return invalid("null argument");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) ea::fail(ea::Errc::io_error, std::string("cannot open '") + path + "'");
    const ea::TimeSeriesWindow window = ea::read_time_series_csv(in);
    const auto params = make_params(window_kind, window_length, hop, normalize);
    *out = new ea_spectrogram{ea::stft_spectrogram(window, axis, params)};
  });
}

ea_status ea_spectrogram_resize(const ea_spectrogram* grid, int resolution_percent,
                                ea_spectrogram** out) {
  if (!grid || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ea_spectrogram{ea::bicubic_resize(grid->grid, resolution_percent)};
  });
}

ea_status ea_spectrogram_normalize(ea_spectrogram* grid) {
  if (!grid) return invalid("null argument");
  return guarded([&] { ea::normalize_grid(grid->grid); });
}

size_t ea_spectrogram_rows(const ea_spectrogram* grid) { return grid ? grid->grid.rows : 0; }

size_t ea_spectrogram_cols(const ea_spectrogram* grid) { return grid ? grid->grid.cols : 0; }

int ea_spectrogram_resolution(const ea_spectrogram* grid) {
  return grid ? grid->grid.resolution_percent : 0;
}

const double* ea_spectrogram_values(const ea_spectrogram* grid) {
  return grid ? grid->grid.values.data() : nullptr;
}

ea_status ea_spectrogram_to_csv(const ea_spectrogram* grid, char** text_out) {
  if (!grid || !text_out) return invalid("null argument");
  return guarded([&] { *text_out = copy_string(ea::spectrogram_to_csv(grid->grid)); });
}

ea_status ea_spectrogram_to_pgm(const ea_spectrogram* grid, char** text_out) {
  if (!grid || !text_out) return invalid("null argument");
  return guarded([&] { *text_out = copy_string(ea::spectrogram_to_pgm(grid->grid)); });
}

ea_status ea_flatten_inputs(const ea_spectrogram* const* grids, size_t grid_count,
                            double* buffer, size_t buffer_length, size_t* required_length) {
  if (!grids) return invalid("null argument");
  return guarded([&] {
    std::vector<ea::Spectrogram> list;
    list.reserve(grid_count);
    for (size_t i = 0; i < grid_count; ++i) {
      if (!grids[i]) ea::fail(ea::Errc::invalid_argument, "null spectrogram in list");
      list.push_back(grids[i]->grid);
    }
    const std::vector<double> flat = ea::flatten_inputs(list);
    if (required_length) *required_length = flat.size();
    if (buffer) {
      if (buffer_length < flat.size())
        ea::fail(ea::Errc::invalid_argument, "flatten buffer too small");
      std::memcpy(buffer, flat.data(), flat.size() * sizeof(double));
    }
  });
}

void ea_spectrogram_free(ea_spectrogram* grid) { delete grid; }

ea_status ea_resolution_input_width(int resolution_percent, uint32_t* out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = ea::resolution_to_input_width(resolution_percent); });
}

} /* extern "C" */
