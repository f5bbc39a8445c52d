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

#ifndef EDGEADVISOR_ERROR_HPP_
#define EDGEADVISOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace edgeadvisor {

enum class Errc {
  invalid_argument,
  parse_error,
  calibration_error,
  no_segment_matches,
  degenerate_input,
  dimension_mismatch,
  unknown_resolution,
  zero_energy,
  params_exceed_window,
  unknown_grid,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace edgeadvisor

#endif  // EDGEADVISOR_ERROR_HPP_
