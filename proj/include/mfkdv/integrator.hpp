#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mfkdv/equation.hpp"
#include "mfkdv/singularity.hpp"

namespace mfkdv {

struct StopCriteria {
  /// Relative drift of the monitored quantity that ends a run.
  double energy_drift_tol = 1e-3;
  /// A run stops once the fitted tail delta is <= this on tail_hysteresis
  /// consecutive records.
  double tail_delta_min = 0.0;
  int tail_hysteresis = 2;
  /// Fits with mu outside this range are dominated by roundoff and never
  /// count toward the tail stop.
  double tail_mu_min = -1.0;
  double tail_mu_max = 1.0;
  bool tail_stop = true;
  bool nan_guard = true;
};

struct RunConfig {
  EquationSpec spec;
  Grid grid{1.0, 8};
  SpectralField initial = SpectralField::zeros(Grid{1.0, 8});
  double t_end = 1.0;
  std::size_t n_steps = 1;
  std::size_t record_every = 1;
  StopCriteria stop;
  TailWindow tail;
  /// Apply the 2/3 rule to the nonlinear term.
  bool dealias = false;
  /// Times at which a snapshot is kept (nearest step at or after each time).
  std::vector<double> snapshot_times;
};

/// Throws ConfigError when the configuration is unusable.
void validate(const RunConfig& config);

enum class StopReason { Completed, EnergyDrift, TailDeltaNonpositive, NonFinite };
std::string_view to_string(StopReason r);

/// One entry per recorded time. Absent values (no Hamiltonian, no usable
/// tail fit) are NaN.
struct TrajectoryDiagnostics {
  std::vector<double> times;
  std::vector<double> linf_u;
  std::vector<double> l2_gradient;
  std::vector<double> linf_gradient;
  std::vector<double> mass_l2;
  std::vector<double> hamiltonian;
  std::vector<double> tail_delta;
  std::vector<double> tail_mu;
  StopReason stop_reason = StopReason::Completed;
  double stop_time = 0.0;
  std::size_t steps_taken = 0;
};

struct Snapshot {
  double t = 0.0;
  std::size_t step = 0;
  SpectralField field;
};

struct RunResult {
  TrajectoryDiagnostics diagnostics;
  /// Requested snapshots in time order; the last entry is the final state.
  std::vector<Snapshot> snapshots;
  const Snapshot& final_state() const { return snapshots.back(); }
};

/// Integrating-factor RK4 on the spectral coefficients: with E = exp(L dt/2)
/// the step is classical RK4 for v = exp(-L t) u, so the linear part is
/// propagated exactly.
class IfRk4Stepper {
 public:
  IfRk4Stepper(const EquationSpec& spec, const Grid& grid, double dt, bool dealias = false);
  void step(std::vector<Complex>& uhat);

 private:
  void eval(const std::vector<Complex>& in, std::vector<Complex>& out);

  Grid grid_;
  NonlinearOperator op_;
  std::vector<Complex> half_;  // exp(L dt / 2)
  std::vector<Complex> full_;  // exp(L dt)
  std::vector<double> mask_;
  std::vector<Complex> a_, b_, c_, d_, tmp_;
  double dt_ = 0.0;
};

SpectralField ifrk4_step(const SpectralField& state, double dt, const EquationSpec& spec);

RunResult run(const RunConfig& config);

/// Runs every config, concurrently on up to `threads` workers (0 picks the
/// hardware concurrency). Each entry holds the result or the error message of
/// that run; results match sequential execution bit for bit.
using SweepEntry = std::variant<RunResult, std::string>;
std::vector<SweepEntry> sweep(const std::vector<RunConfig>& configs, unsigned threads = 0);

}  // namespace mfkdv
