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

#include "edgeadvisor/spectrogram.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <numbers>
#include <sstream>

#include "edgeadvisor/error.hpp"

namespace edgeadvisor {

void TimeSeriesWindow::validate() const {
  if (samples.empty()) fail(Errc::invalid_argument, "time series needs at least one axis");
  const std::size_t len = samples.front().size();
  if (len == 0) fail(Errc::invalid_argument, "time series must not be empty");
  for (const auto& axis : samples)
    if (axis.size() != len)
      fail(Errc::dimension_mismatch, "all axes must have the same sample count");
  if (!(sample_rate_hz > 0.0) || !(window_seconds > 0.0))
    fail(Errc::invalid_argument, "sample rate and window length must be positive");
  if (static_cast<std::size_t>(std::llround(sample_rate_hz * window_seconds)) != len)
    fail(Errc::invalid_argument,
         "sample count does not match sample_rate_hz * window_seconds");
}

WindowKind window_kind_from_string(const std::string& name) {
  if (name == "hann") return WindowKind::hann;
  if (name == "hamming") return WindowKind::hamming;
  if (name == "rect" || name == "rectangular") return WindowKind::rectangular;
  fail(Errc::invalid_argument, "unknown window '" + name + "' (hann, hamming or rect)");
}

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::hann: return "hann";
    case WindowKind::hamming: return "hamming";
    case WindowKind::rectangular: return "rect";
  }
  return "?";
}

void SpectrogramParams::validate() const {
  if (window_length == 0 || hop == 0)
    fail(Errc::invalid_argument, "window length and hop must be positive");
  if (hop > window_length)
    fail(Errc::invalid_argument, "hop must not exceed the window length");
}

std::vector<double> window_coefficients(WindowKind kind, std::size_t length) {
  std::vector<double> w(length, 1.0);
  const double n = static_cast<double>(length);
  switch (kind) {
    case WindowKind::rectangular:
      break;
    case WindowKind::hann:
      for (std::size_t i = 0; i < length; ++i)
        w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
      break;
    case WindowKind::hamming:
      for (std::size_t i = 0; i < length; ++i)
        w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n);
      break;
  }
  return w;
}

void normalize_grid(Spectrogram& grid) {
  const double peak = grid.values.empty()
                          ? 0.0
                          : *std::max_element(grid.values.begin(), grid.values.end());
  if (peak <= 0.0) return;
  for (double& v : grid.values) v /= peak;
}

Spectrogram stft_spectrogram(const TimeSeriesWindow& window, std::size_t axis,
                             const SpectrogramParams& params) {
  window.validate();
  params.validate();
  if (axis >= window.axes())
    fail(Errc::invalid_argument, "axis index out of range");
  const std::vector<double>& signal = window.samples[axis];
  if (params.window_length > signal.size())
    fail(Errc::params_exceed_window,
         "window length exceeds the available samples");

  const std::size_t bins = params.window_length / 2 + 1;
  const std::size_t frames = (signal.size() - params.window_length) / params.hop + 1;
  const std::vector<double> w = window_coefficients(params.window_kind, params.window_length);

  Spectrogram grid;
  grid.rows = bins;
  grid.cols = frames;
  grid.values.assign(bins * frames, 0.0);
  grid.resolution_percent = 100;

  const double step = -2.0 * std::numbers::pi / static_cast<double>(params.window_length);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t start = f * params.hop;
    for (std::size_t k = 0; k < bins; ++k) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t m = 0; m < params.window_length; ++m) {
        const double phase = step * static_cast<double>(k) * static_cast<double>(m);
        acc += signal[start + m] * w[m] *
               std::complex<double>(std::cos(phase), std::sin(phase));
      }
      grid.at(k, f) = std::norm(acc);
    }
  }

  if (params.normalize) normalize_grid(grid);
  return grid;
}

namespace {

// Cubic convolution kernel with a = -0.5 (Catmull-Rom).
double cubic_weight(double t) {
  constexpr double a = -0.5;
  const double x = std::abs(t);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

std::size_t scaled_dim(std::size_t dim, int percent) {
  const double scaled =
      std::floor(static_cast<double>(dim) * static_cast<double>(percent) / 100.0 + 0.5);
  return std::max<std::size_t>(1, static_cast<std::size_t>(scaled));
}

// One separable pass along the row direction: src (rows x cols) -> (new_rows x cols).
std::vector<double> resample_rows(const std::vector<double>& src, std::size_t rows,
                                  std::size_t cols, std::size_t new_rows) {
  std::vector<double> dst(new_rows * cols, 0.0);
  const double scale = static_cast<double>(rows) / static_cast<double>(new_rows);
  const auto clamp_row = [rows](long r) {
    return static_cast<std::size_t>(std::clamp<long>(r, 0, static_cast<long>(rows) - 1));
  };
  for (std::size_t i = 0; i < new_rows; ++i) {
    const double center = (static_cast<double>(i) + 0.5) * scale - 0.5;
    const long base = static_cast<long>(std::floor(center));
    const double t = center - static_cast<double>(base);
    double weights[4];
    for (int m = -1; m <= 2; ++m) weights[m + 1] = cubic_weight(static_cast<double>(m) - t);
    for (std::size_t c = 0; c < cols; ++c) {
      double acc = 0.0;
      for (int m = -1; m <= 2; ++m)
        acc += weights[m + 1] * src[clamp_row(base + m) * cols + c];
      dst[i * cols + c] = acc;
    }
  }
  return dst;
}

std::vector<double> transpose(const std::vector<double>& src, std::size_t rows,
                              std::size_t cols) {
  std::vector<double> dst(src.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) dst[c * rows + r] = src[r * cols + c];
  return dst;
}

}  // namespace

Spectrogram bicubic_resize(const Spectrogram& source, int resolution_percent) {
  if (resolution_percent < 10 || resolution_percent > 100)
    fail(Errc::invalid_argument, "resolution must be between 10 and 100 percent");
  if (source.rows == 0 || source.cols == 0)
    fail(Errc::invalid_argument, "cannot resize an empty spectrogram");

  const std::size_t new_rows = scaled_dim(source.rows, resolution_percent);
  const std::size_t new_cols = scaled_dim(source.cols, resolution_percent);

  std::vector<double> pass1 = resample_rows(source.values, source.rows, source.cols, new_rows);
  std::vector<double> swapped = transpose(pass1, new_rows, source.cols);
  std::vector<double> pass2 = resample_rows(swapped, source.cols, new_rows, new_cols);

  Spectrogram result;
  result.rows = new_rows;
  result.cols = new_cols;
  result.values = transpose(pass2, new_cols, new_rows);
  result.resolution_percent = resolution_percent;
  // Interpolation undershoot would leave negative power.
  for (double& v : result.values) v = std::max(0.0, v);
  return result;
}

std::vector<double> flatten_inputs(const std::vector<Spectrogram>& spectrograms) {
  if (spectrograms.empty()) return {};
  const std::size_t rows = spectrograms.front().rows;
  const std::size_t cols = spectrograms.front().cols;
  std::vector<double> flat;
  flat.reserve(spectrograms.size() * rows * cols);
  for (const Spectrogram& grid : spectrograms) {
    if (grid.rows != rows || grid.cols != cols)
      fail(Errc::dimension_mismatch, "spectrogram dimensions differ between axes");
    flat.insert(flat.end(), grid.values.begin(), grid.values.end());
  }
  return flat;
}

std::uint32_t resolution_to_input_width(int resolution_percent) {
  switch (resolution_percent) {
    case 10: return 377;
    case 20: return 1350;
    case 30: return 3420;
    case 40: return 5400;
    case 50: return 9072;
    case 60: return 12150;
    case 70: return 17424;
    case 80: return 22500;
    case 90: return 28476;
    case 100: return 34875;
    default:
      fail(Errc::unknown_resolution,
           "resolution must be one of 10, 20, ..., 100 percent");
  }
}

TimeSeriesWindow read_time_series_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double value = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
          ++used;
        if (used != cell.size()) {
          numeric = false;
          break;
        }
        fields.push_back(value);
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first) {  // header row
        first = false;
        continue;
      }
      fail(Errc::parse_error, "non-numeric CSV cell in data row");
    }
    first = false;
    if (fields.size() < 2)
      fail(Errc::parse_error, "CSV rows need a timestamp and at least one axis column");
    if (!rows.empty() && fields.size() != rows.front().size())
      fail(Errc::parse_error, "CSV rows have inconsistent column counts");
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) fail(Errc::parse_error, "CSV contains no samples");

  TimeSeriesWindow window;
  const std::size_t axes = rows.front().size() - 1;  // column 0 is the timestamp
  window.samples.assign(axes, std::vector<double>(rows.size(), 0.0));
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (std::size_t a = 0; a < axes; ++a) window.samples[a][t] = rows[t][a + 1];
  window.sample_rate_hz = 50.0;
  window.window_seconds = static_cast<double>(rows.size()) / window.sample_rate_hz;
  return window;
}

std::string spectrogram_to_csv(const Spectrogram& grid) {
  std::string out;
  char buffer[64];
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      std::snprintf(buffer, sizeof(buffer), "%.6g", grid.at(r, c));
      if (c != 0) out += ',';
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

std::string spectrogram_to_pgm(const Spectrogram& grid) {
  const double peak = grid.values.empty()
                          ? 0.0
                          : *std::max_element(grid.values.begin(), grid.values.end());
  std::string out = "P2\n";
  out += std::to_string(grid.cols) + " " + std::to_string(grid.rows) + "\n255\n";
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      const int level =
          peak > 0.0 ? static_cast<int>(std::lround(grid.at(r, c) / peak * 255.0)) : 0;
      if (c != 0) out += ' ';
      out += std::to_string(level);
    }
    out += '\n';
  }
  return out;
}

}  // namespace edgeadvisor
