#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mfkdv/integrator.hpp"
#include "mfkdv/io.hpp"
#include "mfkdv/shock_certificate.hpp"

namespace mfkdv {

struct CertificateBlock {
  std::optional<double> delta;
  std::optional<double> A, B, C0, C1;
  double margin = 0.0;
  CertificateSearch search;
};

/// A job document. Every block is optional except equation and grid (and
/// time for simulate); unknown keys are rejected at every level.
///
///   {
///     "format_version": 1,
///     "command": "simulate",
///     "equation": {"family": "fkdv", "alpha": -0.5, "sign": "+", "p": 2},
///     "grid": {"L": 5, "N": 65536},
///     "time": {"t_end": 1.7, "n_steps": 10000, "record_every": 10},
///     "initial": {"expr": "exp(-x^2)"}            or {"file": "u0.bin"},
///     "diagnostics": {"tail_window": {"lo_frac": 0.125, "hi_frac": 0.333,
///                                     "noise_floor": 1e-13, "min_modes": 10},
///                     "fit_window": 100, "energy_drift_tol": 1e-3,
///                     "tail_delta_min": 0, "tail_hysteresis": 2,
///                     "tail_mu_range": [-1, 1],
///                     "tail_stop": true, "nan_guard": true, "dealias": false},
///     "output": {"directory": "out", "snapshot_times": [0.5, 1.0]},
///     "certificate": {"delta": 1e-3, "A": 1, "B": 2, "margin": 0,
///                     "search": {"lambda_steps": 4, "lambda_octaves": 48,
///                                "ab_steps": 64, "b_span": 4}}
///   }
struct JobConfig {
  int format_version = kFormatVersion;
  std::string command = "simulate";
  EquationSpec equation;
  double L = 1.0;
  std::size_t N = 256;
  double t_end = 1.0;
  std::size_t n_steps = 1000;
  std::size_t record_every = 1;
  std::optional<std::string> initial_expr;
  std::optional<std::string> initial_file;
  TailWindow tail;
  StopCriteria stop;
  std::size_t fit_window = 100;
  bool dealias = false;
  std::string output_directory = "out";
  std::vector<double> snapshot_times;
  CertificateBlock certificate;
  /// Directory relative file paths are resolved against.
  std::filesystem::path base_dir;
};

JobConfig parse_job_config(const Json& j, const std::filesystem::path& base_dir = {});
JobConfig load_job_config(const std::filesystem::path& path);
/// Complete echo with every default filled in; parses back to the same job.
Json to_json(const JobConfig& c);
bool operator==(const JobConfig& a, const JobConfig& b);

/// Builds the grid and initial field for the job.
SpectralField initial_field(const JobConfig& c);
RunConfig make_run_config(const JobConfig& c);

/// A sweep document is {"format_version": 1, "base": {...job...},
/// "jobs": [{"name": "a", ...overrides...}, ...]}; each job is the base with
/// its overrides merged in (RFC 7386) and writes to <output>/<name>.
struct SweepJob {
  std::string name;
  JobConfig config;
};
std::vector<SweepJob> parse_sweep_config(const Json& j, const std::filesystem::path& base_dir = {});

/// The output directory after applying the MFKDV_OUTPUT_DIR override.
std::filesystem::path output_directory(const JobConfig& c);

}  // namespace mfkdv
