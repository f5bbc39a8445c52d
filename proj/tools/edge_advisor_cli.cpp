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

// Command-line front end. Everything flows through the C API in
// edge_advisor.h; this file only parses arguments, moves bytes and formats
// reports.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edge_advisor.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCalibrationError = 3;

int exit_code_for(ea_status status) {
  switch (status) {
    case EA_OK:
      return kExitOk;
    case EA_ERR_CALIBRATION:
    case EA_ERR_NO_SEGMENT:
    case EA_ERR_ZERO_ENERGY:
      return kExitCalibrationError;
    default:
      return kExitInputError;
  }
}

// Exits the process on failure; the CLI has nothing to clean up beyond RAII.
void check(ea_status status, const std::string& context) {
  if (status == EA_OK) return;
  std::cerr << "edge-advisor: " << context << ": " << ea_last_error() << " ["
            << ea_status_name(status) << "]\n";
  std::exit(exit_code_for(status));
}

std::string owned_string(char* text) {
  std::string out = text ? text : "";
  ea_string_free(text);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "edge-advisor: cannot open '" << path << "'\n";
    std::exit(kExitInputError);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "edge-advisor: cannot write '" << path << "'\n";
    std::exit(kExitInputError);
  }
  out << content;
}

std::string iso8601_now() {
  char buffer[32];
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

// Data files must be byte-identical across runs, so run metadata (including
// the timestamp) goes into a sidecar next to the output file.
void write_sidecar(const std::string& out_path, const std::string& command,
                   const std::string& detail, const std::string& calibration_source) {
  if (out_path.empty()) return;
  nlohmann::json meta{{"tool", "edge-advisor"},
                      {"version", ea_version()},
                      {"command", command},
                      {"detail", detail},
                      {"calibration", calibration_source},
                      {"generated_at", iso8601_now()}};
  std::ofstream out(out_path + ".meta.json", std::ios::binary);
  if (out) out << meta.dump(2) << "\n";
}

struct ContextHandle {
  ea_context* ctx = nullptr;
  std::string calibration_source = "defaults";

  ~ContextHandle() { ea_context_free(ctx); }
};

// Builds a context from defaults, EDGE_ADVISOR_CALIBRATION, and the explicit
// flags (an explicit --calibration wins over the environment).
ContextHandle make_context(const std::string& calibration_path,
                           const std::string& thresholds_path) {
  ContextHandle handle;
  check(ea_context_create(&handle.ctx), "context");

  std::string source = calibration_path;
  if (source.empty()) {
    if (const char* env = std::getenv("EDGE_ADVISOR_CALIBRATION"); env && *env)
      source = env;
  }
  if (!source.empty()) {
    check(ea_context_load_calibration_file(handle.ctx, source.c_str()),
          "loading calibration '" + source + "'");
    handle.calibration_source = source;
  }
  if (!thresholds_path.empty())
    check(ea_context_load_thresholds_file(handle.ctx, thresholds_path.c_str()),
          "loading thresholds '" + thresholds_path + "'");
  return handle;
}

ea_arch* arch_from_input(const std::string& path) {
  const std::string text = read_input(path);
  ea_arch* arch = nullptr;
  check(ea_arch_from_json(text.c_str(), &arch), "parsing architecture JSON");
  return arch;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string hidden_widths_text(const nlohmann::json& spec) {
  std::string out = "[";
  bool first = true;
  for (const auto& width : spec.at("hidden_widths")) {
    if (!first) out += ", ";
    out += std::to_string(width.get<unsigned>());
    first = false;
  }
  return out + "]";
}

std::string recommendation_text(const nlohmann::json& rec) {
  std::ostringstream out;
  out << rec.at("platform").get<std::string>() << " ["
      << rec.at("rule_fired").get<std::string>() << "]\n";
  out << "  " << rec.at("rationale").get<std::string>() << "\n";
  out << "  predicted energy:";
  for (const auto& [name, energy] : rec.at("predicted_energy_mj").items())
    out << " " << name << " " << format_number(energy.get<double>()) << " mJ ";
  out << "\n";
  return out.str();
}

std::string row_text(const nlohmann::json& row) {
  std::ostringstream out;
  const auto& spec = row.at("spec");
  out << "architecture      " << spec.at("input_width").get<unsigned>() << " -> "
      << hidden_widths_text(spec) << " -> " << spec.at("output_width").get<unsigned>()
      << "\n";
  out << "model size        " << format_number(row.at("size_mb").get<double>())
      << " MB (1 MB = 2^20 bytes)\n";
  out << "placement         " << row.at("residency").get<std::string>() << " (trigger "
      << row.at("placement_trigger").get<std::string>() << "); on-chip "
      << format_number(row.at("on_chip_kb").get<double>()) << " KB, off-chip "
      << format_number(row.at("off_chip_kb").get<double>()) << " KB\n";
  out << "energy/inference ";
  for (const auto& [name, energy] : row.at("energy_mj").items())
    out << " " << name << " " << format_number(energy.get<double>()) << " mJ ";
  out << "\n";
  out << "efficiency ratio  " << format_number(row.at("ratio").get<double>())
      << " (E_A53 / E_TPU; above 1 favors the Edge TPU)\n";
  out << "recommendation    " << recommendation_text(row.at("recommendation"));
  if (row.contains("warnings") && !row.at("warnings").empty()) {
    out << "warnings\n";
    for (const auto& warning : row.at("warnings"))
      out << "  - " << warning.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design-space exploration and platform selection for feed-forward "
               "networks at the edge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ea_version()));

  std::string calibration_path;
  std::string thresholds_path;
  std::string out_path;

  // analyze -------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "Analyze one architecture JSON file");
  std::string analyze_input;
  analyze->add_option("arch", analyze_input, "Architecture JSON file ('-' for stdin)")
      ->required();
  std::string analyze_format = "text";
  analyze->add_option("--calibration", calibration_path, "Calibration JSON file");
  analyze->add_option("--thresholds", thresholds_path, "Thresholds JSON file");
  analyze->add_option("--format", analyze_format, "text | json (default text)");
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");

  // recommend ------------------------------------------------------------
  auto* recommend = app.add_subcommand("recommend", "Platform recommendation only");
  std::string recommend_input;
  recommend->add_option("arch", recommend_input, "Architecture JSON file ('-' for stdin)")
      ->required();
  recommend->add_option("--calibration", calibration_path, "Calibration JSON file");
  recommend->add_option("--thresholds", thresholds_path, "Thresholds JSON file");
  recommend->add_option("--format", analyze_format, "text | json (default text)");
  recommend->add_option("--out", out_path, "Write the report here instead of stdout");

  // sweep -----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Run a full grid sweep (set1, set2 or set3)");
  std::string grid_id;
  sweep->add_option("grid", grid_id, "set1 | set2 | set3")->required();
  std::string sweep_format = "csv";
  sweep->add_option("--calibration", calibration_path, "Calibration JSON file");
  sweep->add_option("--thresholds", thresholds_path, "Thresholds JSON file");
  sweep->add_option("--format", sweep_format, "csv | json (default csv)");
  sweep->add_option("--out", out_path, "Output file (stdout when omitted)");

  // spectrogram -------------------------------------------------------------
  auto* spectro = app.add_subcommand(
      "spectrogram", "Compute a scaled spectrogram from a time-series CSV");
  std::string spectro_input;
  std::size_t axis = 0;
  int resolution = 100;
  std::string window_kind = "hann";
  std::size_t window_length = 64;
  std::size_t hop = 12;
  bool no_normalize = false;
  spectro->add_option("csv", spectro_input, "Input CSV: timestamp,axis0,axis1,...")
      ->required();
  std::string spectro_format = "csv";
  spectro->add_option("--axis", axis, "Axis column to transform (0-based, default 0)");
  spectro->add_option("--resolution", resolution,
                      "Resolution percent, 10..100 step 10 (default 100)");
  spectro->add_option("--window", window_kind, "hann | hamming | rect (default hann)");
  spectro->add_option("--window-length", window_length,
                      "STFT window length in samples (default 64)");
  spectro->add_option("--hop", hop, "Hop between frames in samples (default 12)");
  spectro->add_flag("--no-normalize", no_normalize, "Keep raw squared magnitudes");
  spectro->add_option("--format", spectro_format, "csv | pgm (default csv)");
  spectro->add_option("--out", out_path, "Output file (stdout when omitted)");

  // fit ----------------------------------------------------------------------
  auto* fit = app.add_subcommand("fit", "Least-squares line through x,y points");
  std::string fit_input;
  fit->add_option("points", fit_input, "CSV of x,y pairs ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (analyze->parsed() || recommend->parsed()) {
    const bool full = analyze->parsed();
    ContextHandle handle = make_context(calibration_path, thresholds_path);
    ea_arch* arch = arch_from_input(full ? analyze_input : recommend_input);
    char* json_text = nullptr;
    if (full)
      check(ea_analyze_json(handle.ctx, arch, &json_text), "analyze");
    else
      check(ea_recommend_json(handle.ctx, arch, &json_text), "recommend");
    const std::string json_report = owned_string(json_text);
    ea_arch_free(arch);

    if (analyze_format == "json") {
      write_output(out_path, json_report + "\n");
    } else if (analyze_format == "text") {
      const nlohmann::json doc = nlohmann::json::parse(json_report);
      write_output(out_path, full ? row_text(doc) : recommendation_text(doc));
    } else {
      std::cerr << "edge-advisor: unknown format '" << analyze_format << "'\n";
      return kExitInputError;
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    ContextHandle handle = make_context(calibration_path, thresholds_path);
    char* text = nullptr;
    if (sweep_format == "csv")
      check(ea_sweep_csv(handle.ctx, grid_id.c_str(), &text), "sweep " + grid_id);
    else if (sweep_format == "json")
      check(ea_sweep_json(handle.ctx, grid_id.c_str(), &text), "sweep " + grid_id);
    else {
      std::cerr << "edge-advisor: unknown format '" << sweep_format << "'\n";
      return kExitInputError;
    }
    std::string content = owned_string(text);
    if (sweep_format == "json") content += "\n";
    write_output(out_path, content);
    write_sidecar(out_path, "sweep", grid_id, handle.calibration_source);
    return kExitOk;
  }

  if (spectro->parsed()) {
    if (resolution % 10 != 0 || resolution < 10 || resolution > 100) {
      std::cerr << "edge-advisor: resolution must be one of 10, 20, ..., 100\n";
      return kExitInputError;
    }
    ea_spectrogram* grid = nullptr;
    check(ea_spectrogram_from_csv_file(spectro_input.c_str(), axis, window_kind.c_str(),
                                       window_length, hop, no_normalize ? 0 : 1, &grid),
          "reading '" + spectro_input + "'");
    ea_spectrogram* resized = nullptr;
    check(ea_spectrogram_resize(grid, resolution, &resized), "resize");
    if (!no_normalize) check(ea_spectrogram_normalize(resized), "normalize");

    char* text = nullptr;
    if (spectro_format == "pgm")
      check(ea_spectrogram_to_pgm(resized, &text), "serialize");
    else if (spectro_format == "csv")
      check(ea_spectrogram_to_csv(resized, &text), "serialize");
    else {
      std::cerr << "edge-advisor: unknown format '" << spectro_format << "'\n";
      return kExitInputError;
    }
    write_output(out_path, owned_string(text));

    uint32_t table_width = 0;
    check(ea_resolution_input_width(resolution, &table_width), "resolution table");
    std::cerr << "spectrogram " << ea_spectrogram_rows(grid) << "x"
              << ea_spectrogram_cols(grid) << " -> " << ea_spectrogram_rows(resized) << "x"
              << ea_spectrogram_cols(resized) << " at " << resolution << "%; "
              << "flattened width "
              << ea_spectrogram_rows(resized) * ea_spectrogram_cols(resized)
              << "; input width at this resolution " << table_width << "\n";
    write_sidecar(out_path, "spectrogram", spectro_input, "n/a");
    ea_spectrogram_free(resized);
    ea_spectrogram_free(grid);
    return kExitOk;
  }

  if (fit->parsed()) {
    const std::string text = read_input(fit_input);
    std::vector<double> xs;
    std::vector<double> ys;
    std::istringstream lines(text);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      double x = 0.0;
      double y = 0.0;
      if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2) {
        if (first) {  // tolerate a header row
          first = false;
          continue;
        }
        std::cerr << "edge-advisor: bad points row '" << line << "'\n";
        return kExitInputError;
      }
      first = false;
      xs.push_back(x);
      ys.push_back(y);
    }
    if (xs.size() < 2) {
      std::cerr << "edge-advisor: need at least two x,y points\n";
      return kExitInputError;
    }
    double m = 0.0;
    double b = 0.0;
    double r = 0.0;
    double r2 = 0.0;
    check(ea_fit_affine(xs.data(), ys.data(), xs.size(), &m, &b, &r, &r2), "fit");
    nlohmann::json result{{"m", m}, {"b", b}, {"r", r}, {"r2", r2}};
    std::cout << result.dump() << "\n";
    return kExitOk;
  }

  return kExitInputError;
}
