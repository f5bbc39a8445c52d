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

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "edgeadvisor/error.hpp"
#include "edgeadvisor/spectrogram.hpp"
#include "oracles.hpp"

using namespace edgeadvisor;

namespace {

TimeSeriesWindow single_axis(std::vector<double> samples) {
  TimeSeriesWindow window;
  window.sample_rate_hz = 50.0;
  window.window_seconds = static_cast<double>(samples.size()) / 50.0;
  window.samples.push_back(std::move(samples));
  return window;
}

SpectrogramParams params(WindowKind kind, std::size_t wl, std::size_t hop,
                         bool normalize = false) {
  SpectrogramParams p;
  p.window_kind = kind;
  p.window_length = wl;
  p.hop = hop;
  p.normalize = normalize;
  return p;
}

Spectrogram ramp_grid(std::size_t rows, std::size_t cols) {
  Spectrogram grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.values.resize(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      grid.at(r, c) = 3.0 * static_cast<double>(r) + 0.5 * static_cast<double>(c) + 1.0;
  return grid;
}

void check_grids_close(const Spectrogram& a, const Spectrogram& b, double tol) {
  REQUIRE(a.rows == b.rows);
  REQUIRE(a.cols == b.cols);
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double scale = std::max(1.0, std::abs(b.values[i]));
    CHECK(std::abs(a.values[i] - b.values[i]) <= tol * scale);
  }
}

}  // namespace

TEST_CASE("a constant signal with a rectangular window is pure DC") {
  const auto grid = stft_spectrogram(single_axis(std::vector<double>(500, 2.5)), 0,
                                     params(WindowKind::rectangular, 64, 12));
  REQUIRE(grid.rows == 33);
  REQUIRE(grid.cols == 37);
  for (std::size_t f = 0; f < grid.cols; ++f) {
    CHECK(grid.at(0, f) == doctest::Approx((2.5 * 64) * (2.5 * 64)).epsilon(1e-12));
    for (std::size_t k = 1; k < grid.rows; ++k) CHECK(grid.at(k, f) < 1e-18);
  }
}

TEST_CASE("a unit impulse at the frame start spreads evenly over all bins") {
  std::vector<double> samples(128, 0.0);
  samples[0] = 1.0;
  const auto grid =
      stft_spectrogram(single_axis(samples), 0, params(WindowKind::rectangular, 16, 16));
  for (std::size_t k = 0; k < grid.rows; ++k)
    CHECK(grid.at(k, 0) == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t f = 1; f < grid.cols; ++f)
    for (std::size_t k = 0; k < grid.rows; ++k) CHECK(grid.at(k, f) == 0.0);
}

TEST_CASE("stft matches the literal definition on random signals") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  const WindowKind kinds[] = {WindowKind::hann, WindowKind::hamming,
                              WindowKind::rectangular};

  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t length = 64 + static_cast<std::size_t>(rng() % 192);
    std::vector<double> samples(length);
    for (double& s : samples) s = amp(rng);
    const std::size_t wl = 16 + 4 * (rng() % 9);  // 16..48, not only powers of two
    const std::size_t hop = 1 + rng() % wl;

    const auto grid = stft_spectrogram(single_axis(samples),
                                       0, params(kinds[trial % 3], wl, hop));
    const auto expected = oracles::naive_stft_power(samples, kinds[trial % 3], wl, hop);
    REQUIRE(grid.rows == expected.size());
    REQUIRE(grid.cols == expected.front().size());
    for (std::size_t k = 0; k < grid.rows; ++k)
      for (std::size_t f = 0; f < grid.cols; ++f) {
        const double scale = std::max(1.0, std::abs(expected[k][f]));
        CHECK(std::abs(grid.at(k, f) - expected[k][f]) <= 1e-9 * scale);
      }
  }
}

TEST_CASE("scaling the signal scales raw power quadratically") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<double> samples(200);
  for (double& s : samples) s = amp(rng);
  std::vector<double> scaled = samples;
  for (double& s : scaled) s *= 3.0;

  const auto base = stft_spectrogram(single_axis(samples), 0, params(WindowKind::hann, 32, 8));
  const auto big = stft_spectrogram(single_axis(scaled), 0, params(WindowKind::hann, 32, 8));
  for (std::size_t i = 0; i < base.values.size(); ++i)
    CHECK(big.values[i] == doctest::Approx(9.0 * base.values[i]).epsilon(1e-9));
}

TEST_CASE("normalization caps the grid at one and keeps zeros zero") {
  std::vector<double> samples(300);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = std::sin(0.37 * static_cast<double>(i));
  const auto grid =
      stft_spectrogram(single_axis(samples), 0, params(WindowKind::hann, 64, 12, true));
  double peak = 0.0;
  for (double v : grid.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
    peak = std::max(peak, v);
  }
  CHECK(peak == doctest::Approx(1.0));

  const auto zeros =
      stft_spectrogram(single_axis(std::vector<double>(300, 0.0)), 0,
                       params(WindowKind::hann, 64, 12, true));
  for (double v : zeros.values) CHECK(v == 0.0);
}

TEST_CASE("stft parameter validation") {
  CHECK_THROWS_AS(stft_spectrogram(single_axis(std::vector<double>(32, 1.0)), 0,
                                   params(WindowKind::hann, 64, 12)),
                  Error);
  CHECK_THROWS_AS(stft_spectrogram(single_axis(std::vector<double>(128, 1.0)), 0,
                                   params(WindowKind::hann, 16, 32)),
                  Error);
  CHECK_THROWS_AS(stft_spectrogram(single_axis(std::vector<double>(128, 1.0)), 3,
                                   params(WindowKind::hann, 16, 8)),
                  Error);
}

TEST_CASE("window coefficient spot checks") {
  const auto hann = window_coefficients(WindowKind::hann, 64);
  CHECK(hann[0] == doctest::Approx(0.0));
  CHECK(hann[32] == doctest::Approx(1.0));
  const auto hamming = window_coefficients(WindowKind::hamming, 64);
  CHECK(hamming[0] == doctest::Approx(0.08));
  const auto rect = window_coefficients(WindowKind::rectangular, 8);
  for (double v : rect) CHECK(v == 1.0);
}

TEST_CASE("bicubic resize at 100% is the identity") {
  const Spectrogram grid = ramp_grid(33, 37);
  const Spectrogram same = bicubic_resize(grid, 100);
  REQUIRE(same.rows == grid.rows);
  REQUIRE(same.cols == grid.cols);
  for (std::size_t i = 0; i < grid.values.size(); ++i)
    CHECK(same.values[i] == grid.values[i]);
}

TEST_CASE("bicubic resize preserves constants") {
  Spectrogram grid;
  grid.rows = 24;
  grid.cols = 31;
  grid.values.assign(grid.rows * grid.cols, 7.25);
  for (int percent : {10, 37, 50, 90}) {
    const Spectrogram small = bicubic_resize(grid, percent);
    for (double v : small.values) CHECK(v == doctest::Approx(7.25).epsilon(1e-12));
  }
}

TEST_CASE("half resolution quarters the pixel count") {
  Spectrogram grid;
  grid.rows = 40;
  grid.cols = 60;
  grid.values.assign(grid.rows * grid.cols, 1.0);
  const Spectrogram half = bicubic_resize(grid, 50);
  CHECK(half.rows == 20);
  CHECK(half.cols == 30);
  CHECK(half.pixel_count() * 4 == grid.pixel_count());
}

TEST_CASE("separable resize equals the direct kernel evaluation") {
  SUBCASE("linear ramp") {
    const Spectrogram grid = ramp_grid(30, 41);
    for (int percent : {10, 25, 50, 73, 90})
      check_grids_close(bicubic_resize(grid, percent),
                        oracles::direct_bicubic(grid, percent), 1e-9);
  }

  SUBCASE("random grids") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> value(0.0, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
      Spectrogram grid;
      grid.rows = 8 + rng() % 40;
      grid.cols = 8 + rng() % 40;
      grid.values.resize(grid.rows * grid.cols);
      for (double& v : grid.values) v = value(rng);
      const int percent = 10 + 10 * (rng() % 10);
      check_grids_close(bicubic_resize(grid, percent),
                        oracles::direct_bicubic(grid, percent), 1e-9);
    }
  }
}

TEST_CASE("resize rejects out-of-range resolutions") {
  const Spectrogram grid = ramp_grid(8, 8);
  CHECK_THROWS_AS(bicubic_resize(grid, 9), Error);
  CHECK_THROWS_AS(bicubic_resize(grid, 101), Error);
}

TEST_CASE("flatten concatenates per axis in row-major order") {
  std::vector<Spectrogram> nine(9);
  for (auto& grid : nine) {
    grid.rows = 5;
    grid.cols = 5;
    grid.values.assign(25, 1.0);
  }
  CHECK(flatten_inputs(nine).size() == 225);

  Spectrogram one;
  one.rows = 1;
  one.cols = 1;
  one.values = {42.0};
  CHECK(flatten_inputs({one}) == std::vector<double>{42.0});

  Spectrogram a;
  a.rows = 2;
  a.cols = 3;
  a.values = {1, 2, 3, 4, 5, 6};
  Spectrogram b;
  b.rows = 2;
  b.cols = 3;
  b.values = {7, 8, 9, 10, 11, 12};
  const std::vector<double> expected{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  CHECK(flatten_inputs({a, b}) == expected);

  Spectrogram odd;
  odd.rows = 3;
  odd.cols = 3;
  odd.values.assign(9, 0.0);
  CHECK_THROWS_AS(flatten_inputs({a, odd}), Error);
  CHECK(flatten_inputs({}).empty());
}

TEST_CASE("resolution table") {
  CHECK(resolution_to_input_width(10) == 377);
  CHECK(resolution_to_input_width(40) == 5400);
  CHECK(resolution_to_input_width(100) == 34875);

  std::uint32_t previous = 0;
  for (int percent = 10; percent <= 100; percent += 10) {
    const std::uint32_t width = resolution_to_input_width(percent);
    CHECK(width > previous);
    previous = width;
  }

  CHECK_THROWS_AS(resolution_to_input_width(15), Error);
  CHECK_THROWS_AS(resolution_to_input_width(0), Error);
  CHECK_THROWS_AS(resolution_to_input_width(110), Error);
}

TEST_CASE("downsampling then flattening shrinks strictly with resolution") {
  std::vector<double> samples(500);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = std::sin(0.11 * static_cast<double>(i));
  const auto grid = stft_spectrogram(single_axis(samples), 0,
                                     params(WindowKind::hann, 64, 12, true));
  std::size_t previous = 0;
  for (int percent = 10; percent <= 100; percent += 10) {
    const std::size_t flat = flatten_inputs({bicubic_resize(grid, percent)}).size();
    CHECK(flat > previous);
    previous = flat;
  }
}

TEST_CASE("time series CSV ingestion") {
  std::istringstream csv(
      "time,ax,ay,az\n"
      "0.00,1.0,2.0,3.0\n"
      "0.02,1.5,2.5,3.5\n"
      "0.04,2.0,3.0,4.0\n");
  const TimeSeriesWindow window = read_time_series_csv(csv);
  REQUIRE(window.axes() == 3);
  REQUIRE(window.length() == 3);
  CHECK(window.samples[0][1] == 1.5);
  CHECK(window.samples[2][2] == 4.0);
  CHECK(window.sample_rate_hz == 50.0);

  std::istringstream ragged("0,1,2\n0,1\n");
  CHECK_THROWS_AS(read_time_series_csv(ragged), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_time_series_csv(empty), Error);
  std::istringstream text_cell("0,1,2\n0,abc,2\n");
  CHECK_THROWS_AS(read_time_series_csv(text_cell), Error);
}

TEST_CASE("serialization formats") {
  Spectrogram grid;
  grid.rows = 2;
  grid.cols = 3;
  grid.values = {0.0, 0.5, 1.0, 0.25, 0.75, 1.0};

  const std::string csv = spectrogram_to_csv(grid);
  CHECK(csv == "0,0.5,1\n0.25,0.75,1\n");

  const std::string pgm = spectrogram_to_pgm(grid);
  CHECK(pgm.rfind("P2\n3 2\n255\n", 0) == 0);
  CHECK(pgm.find("255") != std::string::npos);
}
