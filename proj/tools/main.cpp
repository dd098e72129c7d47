// phasecart: Pancharatnam-phase cartography of the dual-spin-flipper
// interferometer over the (B1y, B2y) parameter plane.

#include <clocale>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phasecart/cartographer.hpp"
#include "phasecart/errors.hpp"
#include "phasecart/io.hpp"
#include "phasecart/scenarios.hpp"

namespace {

using namespace phasecart;
using nlohmann::json;

constexpr int kExitSingular = 2;
constexpr int kExitConfig = 3;
constexpr int kExitConsistency = 4;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

void write_trace_outputs(const ParameterPath& path, const PhaseTrace& trace,
                         const std::string& csv_path, const std::string& json_path) {
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + csv_path);
    write_trace_csv(out, trace);
  }
  if (!json_path.empty()) write_file(json_path, trace_to_json(path, trace));
}

json config_echo(const ApparatusConfig& config) {
  return json::parse(config_to_json(config));
}

struct CommonOpts {
  std::string config_file;

  ApparatusConfig config() const {
    if (config_file.empty()) return {};
    return load_config_file(config_file);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Pancharatnam phase cartography for the dual-spin-flipper interferometer"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config_file, "ApparatusConfig JSON file");

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "Trace the phase along a path");
  std::string trace_path_file, trace_out, trace_json;
  int trace_steps = 0;
  trace_cmd->add_option("--path", trace_path_file, "Path JSON file")->required();
  trace_cmd->add_option("--steps", trace_steps, "Steps per segment (overrides path file)");
  trace_cmd->add_option("--out", trace_out, "Output CSV")->required();
  trace_cmd->add_option("--json", trace_json, "Optional output JSON");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Locate phase singularities in a rectangle");
  std::vector<double> rect_vals;
  int grid_n = 128;
  std::string scan_out;
  scan_cmd->add_option("--rect", rect_vals, "b1_min b1_max b2_min b2_max")
      ->expected(4)
      ->required();
  scan_cmd->add_option("--grid", grid_n, "Grid resolution (default 128)");
  scan_cmd->add_option("--out", scan_out, "Output JSON")->required();

  // figure1
  auto* fig_cmd = app.add_subcommand("figure1", "Field-reversal traces IAF, IBF, ICF");
  std::string fig_dir;
  fig_cmd->add_option("--out", fig_dir, "Output directory")->required();

  // reversal
  auto* rev_cmd = app.add_subcommand("reversal", "Field reversal I -> via... -> F");
  std::vector<double> via_vals;
  std::string rev_out, rev_json;
  int rev_steps = 100;
  rev_cmd->add_option("--via", via_vals, "Via points: b1y b2y [b1y b2y ...]")->required();
  rev_cmd->add_option("--steps", rev_steps, "Steps per segment (default 100)");
  rev_cmd->add_option("--out", rev_out, "Output CSV")->required();
  rev_cmd->add_option("--json", rev_json, "Optional output JSON");

  // dbeta
  auto* db_cmd = app.add_subcommand("dbeta", "Flipper-rotation phase scan");
  std::string db_mode = "ideal", db_out;
  double db_j = 0.5, db_range = 40.0;
  int db_steps = 80;
  db_cmd->add_option("--mode", db_mode, "ideal or realistic (default ideal)");
  db_cmd->add_option("--j", db_j, "Spin j (default 0.5)");
  db_cmd->add_option("--range", db_range, "Scan half-range in degrees (default 40)");
  db_cmd->add_option("--steps", db_steps, "Rows per side (default 80)");
  db_cmd->add_option("--out", db_out, "Output CSV")->required();

  // spin-scan
  auto* spin_cmd = app.add_subcommand("spin-scan", "Spin-n/2 linear phase scan");
  int spin_n = 1, spin_steps = 360;
  double spin_range = 180.0;
  std::string spin_out, spin_mode = "ideal";
  spin_cmd->add_option("--n", spin_n, "Twice the spin (j = n/2)")->required();
  spin_cmd->add_option("--range", spin_range, "Scan half-range in degrees (default 180)");
  spin_cmd->add_option("--steps", spin_steps, "Rows per side (default 360)");
  spin_cmd->add_option("--mode", spin_mode, "ideal or realistic (default ideal)");
  spin_cmd->add_option("--out", spin_out, "Output CSV")->required();

  // optics
  auto* opt_cmd = app.add_subcommand("optics", "Half-wave-plate pair phase shift");
  std::string opt_out;
  opt_cmd->add_option("--out", opt_out, "Output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const auto scan_mode = [](const std::string& name) {
    if (name == "ideal") return ApparatusMode::ideal_transverse;
    if (name == "realistic") return ApparatusMode::realistic_guide;
    throw ConfigError("mode must be 'ideal' or 'realistic'");
  };

  if (*trace_cmd) {
    const ApparatusConfig config = common.config();
    ParameterPath path = load_path_file(trace_path_file);
    if (trace_steps > 0) path.steps_per_segment = trace_steps;
    const PhaseTrace trace = trace_path(path, config);
    write_trace_outputs(path, trace, trace_out, trace_json);
    std::cout << "trace: " << trace.samples.size() << " samples, total phase "
              << format_double(trace.total_phase_deg) << " deg, min contrast "
              << format_double(trace.min_contrast) << "\n";
  } else if (*scan_cmd) {
    const ApparatusConfig config = common.config();
    const ScanRect rect{rect_vals[0], rect_vals[1], rect_vals[2], rect_vals[3]};
    const auto singularities = find_singularities(rect, grid_n, config);
    json j{
        {"singularities", json::parse(singularities_to_json(singularities))},
        {"sign_convention", kSignConvention},
        {"config", config_echo(config)},
    };
    write_file(scan_out, j.dump(2));
    std::cout << "scan: " << singularities.size() << " singularities in ["
              << format_double(rect.b1_min) << "," << format_double(rect.b1_max) << "]x["
              << format_double(rect.b2_min) << "," << format_double(rect.b2_max) << "]\n";
  } else if (*fig_cmd) {
    const ApparatusConfig config = common.config();
    std::filesystem::create_directories(fig_dir);
    const Figure1Result result = run_figure1(config);
    const auto emit = [&](const char* name, const PhaseTrace& trace) {
      std::ofstream out(std::filesystem::path(fig_dir) / (std::string(name) + ".csv"),
                        std::ios::binary);
      write_trace_csv(out, trace);
    };
    emit("iaf", result.iaf);
    emit("ibf", result.ibf);
    emit("icf", result.icf);
    json summary{
        {"iaf_total_deg", result.iaf.total_phase_deg},
        {"ibf_total_deg", result.ibf.total_phase_deg},
        {"icf_total_deg", result.icf.total_phase_deg},
        {"iaf_ibf_split_deg", result.iaf.total_phase_deg - result.ibf.total_phase_deg},
        {"sign_convention", kSignConvention},
        {"config", config_echo(config)},
    };
    write_file((std::filesystem::path(fig_dir) / "summary.json").string(), summary.dump(2));
    std::cout << "figure1: totals " << format_double(result.iaf.total_phase_deg) << " / "
              << format_double(result.ibf.total_phase_deg) << " / "
              << format_double(result.icf.total_phase_deg) << " deg (IAF/IBF/ICF)\n";
  } else if (*rev_cmd) {
    const ApparatusConfig config = common.config();
    if (via_vals.size() < 2 || via_vals.size() % 2 != 0) {
      throw ConfigError("--via needs an even number of coordinates");
    }
    std::vector<ParameterPoint> via;
    for (size_t i = 0; i + 1 < via_vals.size(); i += 2) {
      via.push_back({via_vals[i], via_vals[i + 1]});
    }
    const PhaseTrace trace = run_field_reversal(via, config, rev_steps);
    ParameterPath path;
    path.steps_per_segment = rev_steps;
    path.vertices.push_back(point_I());
    path.vertices.insert(path.vertices.end(), via.begin(), via.end());
    path.vertices.push_back(point_F());
    write_trace_outputs(path, trace, rev_out, rev_json);
    std::cout << "reversal: total phase " << format_double(trace.total_phase_deg)
              << " deg\n";
  } else if (*db_cmd) {
    const auto rows =
        run_dbeta_scan(scan_mode(db_mode), static_cast<int>(std::lround(2.0 * db_j)),
                       db_range, db_steps);
    std::ofstream out(db_out, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + db_out);
    write_dbeta_csv(out, rows);
    std::cout << "dbeta: " << rows.size() << " rows, " << db_mode << " mode\n";
  } else if (*spin_cmd) {
    const auto rows = run_spin_scan(spin_n, spin_range, spin_steps, scan_mode(spin_mode));
    std::ofstream out(spin_out, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + spin_out);
    write_dbeta_csv(out, rows);
    std::cout << "spin-scan: n=" << spin_n << ", endpoint phase "
              << format_double(rows.back().total_deg) << " deg\n";
  } else if (*opt_cmd) {
    const OpticsResult result = run_optics_hwp();
    json j{
        {"phase_shift_deg", result.phase_shift_deg},
        {"c_first", {result.c_first.real(), result.c_first.imag()}},
        {"c_second", {result.c_second.real(), result.c_second.imag()}},
        {"sign_convention", kSignConvention},
    };
    write_file(opt_out, j.dump(2));
    std::cout << "optics: phase shift " << format_double(result.phase_shift_deg)
              << " deg\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  try {
    return run(argc, argv);
  } catch (const SingularPathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConsistency;
  }
}
