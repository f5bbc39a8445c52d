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

#ifndef EDGEADVISOR_ARCH_HPP_
#define EDGEADVISOR_ARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace edgeadvisor {

// Layer widths of a fully connected feed-forward classifier. hidden_widths
// may be empty (a direct input->output network); every width is >= 1.
struct ArchitectureSpec {
  std::uint32_t input_width = 1;
  std::vector<std::uint32_t> hidden_widths;
  std::uint32_t output_width = 1;

  std::size_t depth() const { return hidden_widths.size(); }

  // Full width sequence: input, hidden layers, output.
  std::vector<std::uint32_t> layer_widths() const;

  // First hidden layer width, or 0 for a network without hidden layers.
  std::uint32_t first_hidden_width() const {
    return hidden_widths.empty() ? 0u : hidden_widths.front();
  }

  void validate() const;

  bool operator==(const ArchitectureSpec&) const = default;
};

// Bytes-per-parameter assumptions for a deployed (quantized) model. The
// defaults model 8-bit deployment: one byte per weight and per bias.
struct QuantizationProfile {
  double bytes_per_weight = 1.0;
  double bytes_per_bias = 1.0;
  std::uint64_t fixed_overhead_bytes = 0;

  void validate() const;
};

struct LayerParams {
  std::uint64_t weight_count = 0;
  std::uint64_t bias_count = 0;
};

// Exact per-layer parameter counts; one entry per hidden layer plus one for
// the output layer.
struct ParamBreakdown {
  std::vector<LayerParams> per_layer;
  std::uint64_t total = 0;
};

ParamBreakdown layer_param_counts(const ArchitectureSpec& arch);

// Deployable model size in bytes:
//   bytes_per_weight * total_weights + bytes_per_bias * total_biases + overhead
std::uint64_t model_size_bytes(const ArchitectureSpec& arch,
                               const QuantizationProfile& profile);

// Widest layer, input and output included.
std::uint32_t max_layer_width(const ArchitectureSpec& arch);

// All MB figures use 1 MB = 2^20 bytes.
inline constexpr double kBytesPerMb = 1048576.0;

inline double bytes_to_mb(std::uint64_t bytes) {
  return static_cast<double>(bytes) / kBytesPerMb;
}

// The three experiment grids.
//
//   set1: depth x input-width product. L in {2,4,8,16,32,64}, input width in
//         {377,1350,3420,5400,9072,12150,17424,22500,28476,34875}; hidden
//         layers 64 wide except the last one (32), output 9.
//   set2: input 5400, 128 hidden layers. Eleven (w1, w2) pairs assign w1 to
//         hidden layers 1-63 and w2 to layers 64-127; layer 128 is 32 wide.
//   set3: input 377, two hidden layers; the first is swept 5000..10000 in
//         steps of 100, the second is 32.
enum class GridId { set1, set2, set3 };

GridId grid_id_from_string(const std::string& name);
std::string to_string(GridId id);

std::vector<ArchitectureSpec> generate_grid(GridId id);

// JSON: {"input_width": int, "hidden_widths": [int...], "output_width": int}.
std::string arch_to_json(const ArchitectureSpec& arch);
ArchitectureSpec arch_from_json(const std::string& json_text);
std::string grid_to_json(const std::vector<ArchitectureSpec>& specs);

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_ARCH_HPP_
