/* Copyright 2026 The edge-advisor Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the edge-advisor toolkit.
 *
 * The library models feed-forward classifier architectures for edge
 * deployment: exact parameter counts, quantized model size, the
 * accelerator's all-or-nothing on-chip placement, per-inference energy on
 * three calibrated platforms, and a platform recommendation. A spectrogram
 * front end converts windowed sensor data into network inputs at scaled
 * resolutions.
 *
 * Conventions:
 *   - Every function that can fail returns ea_status; EA_OK is 0.
 *     ea_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread.
 *   - Objects are opaque handles released with their ea_*_free function.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with ea_string_free().
 *   - Model sizes use 1 MB = 2^20 bytes.
 */

#ifndef EDGE_ADVISOR_H_
#define EDGE_ADVISOR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EA_API __declspec(dllexport)
#else
#define EA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ea_status {
  EA_OK = 0,
  EA_ERR_INVALID_ARGUMENT = 1,
  EA_ERR_PARSE = 2,
  EA_ERR_CALIBRATION = 3,
  EA_ERR_NO_SEGMENT = 4,
  EA_ERR_DEGENERATE_INPUT = 5,
  EA_ERR_DIMENSION_MISMATCH = 6,
  EA_ERR_UNKNOWN_RESOLUTION = 7,
  EA_ERR_ZERO_ENERGY = 8,
  EA_ERR_PARAMS_EXCEED_WINDOW = 9,
  EA_ERR_UNKNOWN_GRID = 10,
  EA_ERR_IO = 11,
  EA_ERR_INTERNAL = 12
} ea_status;

typedef struct ea_arch ea_arch;               /* architecture spec */
typedef struct ea_grid ea_grid;               /* generated architecture list */
typedef struct ea_context ea_context;         /* calibration + thresholds */
typedef struct ea_spectrogram ea_spectrogram; /* time-frequency power grid */

EA_API const char* ea_version(void);
EA_API const char* ea_status_name(ea_status status);
EA_API const char* ea_last_error(void);
EA_API void ea_string_free(char* text);

/* ---- architectures ----------------------------------------------------- */

EA_API ea_status ea_arch_create(uint32_t input_width, const uint32_t* hidden_widths,
                                size_t hidden_count, uint32_t output_width,
                                ea_arch** out);
/* JSON: {"input_width": n, "hidden_widths": [n...], "output_width": n} */
EA_API ea_status ea_arch_from_json(const char* json_text, ea_arch** out);
EA_API ea_status ea_arch_to_json(const ea_arch* arch, char** json_out);
EA_API void ea_arch_free(ea_arch* arch);

EA_API ea_status ea_arch_param_total(const ea_arch* arch, uint64_t* out);
EA_API ea_status ea_arch_max_width(const ea_arch* arch, uint32_t* out);
/* Size under the context's quantization profile. */
EA_API ea_status ea_model_size_bytes(const ea_context* ctx, const ea_arch* arch,
                                     uint64_t* out);

/* grid_id is "set1", "set2" or "set3". */
EA_API ea_status ea_grid_generate(const char* grid_id, ea_grid** out);
EA_API size_t ea_grid_count(const ea_grid* grid);
/* Borrowed reference, valid while the grid lives. */
EA_API const ea_arch* ea_grid_arch(const ea_grid* grid, size_t index);
EA_API ea_status ea_grid_to_json(const ea_grid* grid, char** json_out);
EA_API void ea_grid_free(ea_grid* grid);

/* ---- context: quantization, budget, thresholds, calibration ------------ */

/* Creates a context with the shipped defaults: 1 byte per weight and bias,
 * 8 MB on-chip memory, decision thresholds 0.15 / 8 / 8192 / 13.5, and the
 * calibrated edge_tpu / cortex_a53 / i7 energy tables. */
EA_API ea_status ea_context_create(ea_context** out);
EA_API void ea_context_free(ea_context* ctx);

EA_API ea_status ea_context_set_quantization(ea_context* ctx, double bytes_per_weight,
                                             double bytes_per_bias,
                                             uint64_t fixed_overhead_bytes);
EA_API ea_status ea_context_set_budget(ea_context* ctx, uint64_t on_chip_bytes,
                                       uint32_t parameter_memory_width);

/* Calibration documents override shipped platforms by name (see README). */
EA_API ea_status ea_context_load_calibration_json(ea_context* ctx, const char* json_text);
EA_API ea_status ea_context_load_calibration_file(ea_context* ctx, const char* path);
EA_API ea_status ea_context_load_thresholds_json(ea_context* ctx, const char* json_text);
EA_API ea_status ea_context_load_thresholds_file(ea_context* ctx, const char* path);

/* ---- analyses ----------------------------------------------------------- */

/* Placement report: {"residency": "ON_CHIP"|"OFF_CHIP", "on_chip_used_bytes",
 * "off_chip_used_bytes", "trigger"} */
EA_API ea_status ea_place_json(const ea_context* ctx, const ea_arch* arch,
                               char** json_out);

/* platform is "edge_tpu", "cortex_a53" or "i7". */
EA_API ea_status ea_predict_energy_mj(const ea_context* ctx, const char* platform,
                                      const ea_arch* arch, double* out);
EA_API ea_status ea_predict_latency_ms(const ea_context* ctx, const char* platform,
                                       const ea_arch* arch, double* out);

/* E_A53 / E_TPU for the same architecture; > 1 favors the accelerator. */
EA_API ea_status ea_efficiency_ratio(const ea_context* ctx, const ea_arch* arch,
                                     double* out);

/* Full analysis row as JSON: size, placement, per-platform energies, ratio,
 * recommendation, low-confidence flag and warnings. */
EA_API ea_status ea_analyze_json(const ea_context* ctx, const ea_arch* arch,
                                 char** json_out);

/* Recommendation only: platform, rule fired, rationale, energy map. */
EA_API ea_status ea_recommend_json(const ea_context* ctx, const ea_arch* arch,
                                   char** json_out);

/* Full sweep over a grid, as CSV (fixed 13-column header, one row per spec,
 * byte-stable across runs) or as a JSON array of analysis rows. */
EA_API ea_status ea_sweep_csv(const ea_context* ctx, const char* grid_id,
                              char** csv_out);
EA_API ea_status ea_sweep_json(const ea_context* ctx, const char* grid_id,
                               char** json_out);

/* Ordinary least squares. Outputs may be NULL when not wanted. Requires at
 * least two distinct x values. */
EA_API ea_status ea_fit_affine(const double* xs, const double* ys, size_t count,
                               double* slope, double* intercept,
                               double* correlation, double* determination);

/* ---- spectrogram front end ---------------------------------------------- */

/* samples is axis-major: samples[axis * sample_count + t]. window_kind is
 * "hann", "hamming" or "rect". */
EA_API ea_status ea_spectrogram_compute(const double* samples, size_t axis_count,
                                        size_t sample_count, size_t axis,
                                        const char* window_kind, size_t window_length,
                                        size_t hop, int normalize,
                                        ea_spectrogram** out);

/* Reads "timestamp,axis0,axis1,..." CSV (optional header row) and computes
 * the spectrogram of one axis. */
EA_API ea_status ea_spectrogram_from_csv_file(const char* path, size_t axis,
                                              const char* window_kind,
                                              size_t window_length, size_t hop,
                                              int normalize, ea_spectrogram** out);

/* Cubic-convolution rescale of both dimensions to percent/100 (10..100). */
EA_API ea_status ea_spectrogram_resize(const ea_spectrogram* grid, int resolution_percent,
                                       ea_spectrogram** out);
EA_API ea_status ea_spectrogram_normalize(ea_spectrogram* grid);

EA_API size_t ea_spectrogram_rows(const ea_spectrogram* grid);
EA_API size_t ea_spectrogram_cols(const ea_spectrogram* grid);
EA_API int ea_spectrogram_resolution(const ea_spectrogram* grid);
/* Row-major values; valid while the spectrogram lives. */
EA_API const double* ea_spectrogram_values(const ea_spectrogram* grid);

EA_API ea_status ea_spectrogram_to_csv(const ea_spectrogram* grid, char** text_out);
EA_API ea_status ea_spectrogram_to_pgm(const ea_spectrogram* grid, char** text_out);

/* Row-major concatenation of equally-sized grids in axis order. Call with
 * buffer NULL to query the needed length. */
EA_API ea_status ea_flatten_inputs(const ea_spectrogram* const* grids, size_t grid_count,
                                   double* buffer, size_t buffer_length,
                                   size_t* required_length);

EA_API void ea_spectrogram_free(ea_spectrogram* grid);

/* Input-layer width for a resolution in {10,20,...,100}: 10 -> 377 up to
 * 100 -> 34875. */
EA_API ea_status ea_resolution_input_width(int resolution_percent, uint32_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDGE_ADVISOR_H_ */
