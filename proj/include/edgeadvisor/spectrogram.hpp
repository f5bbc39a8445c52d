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

#ifndef EDGEADVISOR_SPECTROGRAM_HPP_
#define EDGEADVISOR_SPECTROGRAM_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edgeadvisor {

// A windowed multi-axis sensor recording, one row of samples per axis.
struct TimeSeriesWindow {
  std::vector<std::vector<double>> samples;  // [axis][time]
  double sample_rate_hz = 50.0;
  double window_seconds = 10.0;

  std::size_t axes() const { return samples.size(); }
  std::size_t length() const { return samples.empty() ? 0 : samples.front().size(); }
  void validate() const;
};

enum class WindowKind { hann, hamming, rectangular };

WindowKind window_kind_from_string(const std::string& name);
std::string to_string(WindowKind kind);

struct SpectrogramParams {
  WindowKind window_kind = WindowKind::hann;
  std::size_t window_length = 64;
  std::size_t hop = 12;
  bool normalize = true;

  void validate() const;  // hop >= 1 and hop <= window_length
};

// Normalized joint time-frequency power grid; rows are one-sided frequency
// bins, columns are time frames.
struct Spectrogram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major, all entries >= 0
  int resolution_percent = 100;

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::size_t pixel_count() const { return rows * cols; }
};

// Window coefficients W[0..length); Hann and Hamming use the periodic form.
std::vector<double> window_coefficients(WindowKind kind, std::size_t length);

// Short-time Fourier power spectrogram of one axis:
//
//   grid[k][f] = | sum_n x[n] W[n - f*hop] e^{-j 2 pi k n / window_length} |^2
//
// over one-sided bins k = 0..floor(window_length/2), with frames placed while
// f*hop + window_length <= signal length. When params.normalize is set the
// grid is scaled so its maximum entry is 1 (an all-zero signal stays zero).
// Throws Errc::params_exceed_window when the window is longer than the data.
Spectrogram stft_spectrogram(const TimeSeriesWindow& window, std::size_t axis,
                             const SpectrogramParams& params);

// Rescales both dimensions to resolution_percent/100 (rounded half-up, at
// least 1 pixel) with cubic-convolution interpolation (a = -0.5); edges clamp
// to the nearest pixel. Interpolation undershoot is floored at zero so the
// grid stays a valid power grid. 100% is the identity.
Spectrogram bicubic_resize(const Spectrogram& source, int resolution_percent);

// Rescale so the maximum entry is 1; leaves an all-zero grid untouched.
void normalize_grid(Spectrogram& grid);

// Row-major concatenation of equally-sized grids, axes in sensor order.
// Throws Errc::dimension_mismatch on inconsistent grids.
std::vector<double> flatten_inputs(const std::vector<Spectrogram>& spectrograms);

// Input-layer width for a spectrogram resolution, 10% -> 377 up to
// 100% -> 34875. Throws Errc::unknown_resolution outside {10,20,...,100}.
std::uint32_t resolution_to_input_width(int resolution_percent);

// CSV rows are "timestamp,axis0,axis1,...". The timestamp column is skipped;
// an optional non-numeric header row is tolerated. The sample rate defaults
// to the 50 Hz use case and window_seconds is derived from the sample count.
TimeSeriesWindow read_time_series_csv(std::istream& in);

std::string spectrogram_to_csv(const Spectrogram& grid);
std::string spectrogram_to_pgm(const Spectrogram& grid);

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_SPECTROGRAM_HPP_
