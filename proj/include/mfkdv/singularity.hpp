#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "mfkdv/spectral_field.hpp"

namespace mfkdv {

/// Which stored modes enter a Fourier-tail fit: indices k in
/// [ceil(lo_frac N), floor(hi_frac N)] (never the Nyquist mode) with
/// |c_k| > noise_floor. At least min_modes must survive.
struct TailWindow {
  double lo_frac = 1.0 / 8.0;
  double hi_frac = 1.0 / 3.0;
  double noise_floor = 1e-13;
  std::size_t min_modes = 10;
};

/// Least-squares fit of ln|c_k| = ln A - delta xi_k - (1 + mu) ln xi_k.
struct TailFit {
  double delta = 0.0;
  double mu = 0.0;
  double amplitude = 0.0;
  double residual = 0.0;  ///< RMS of the log residuals
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
  std::size_t modes_used = 0;
};

/// spectrum holds the stored coefficients k = 0..N/2 of a field on grid.
std::optional<TailFit> try_fit_tail(std::span<const Complex> spectrum, const Grid& grid,
                                    const TailWindow& window = {});
/// As try_fit_tail but throws NumericalError when too few modes are usable.
TailFit fit_tail(std::span<const Complex> spectrum, const Grid& grid, const TailWindow& window = {});

struct BlowupSearch {
  /// t* is searched in (t_last, t_last + span_frac * (t_last - t_first)].
  double span_frac = 50.0;
  /// Log-spaced offsets t* - t_last; doubling grid_points nests the grid.
  std::size_t grid_points = 512;
  /// Smallest offset relative to the bracket width.
  double min_offset = 1e-10;
};

/// Fit of ln v = a ln(t* - t) + b over the trailing window.
struct BlowupFit {
  double a = 0.0;
  double b = 0.0;
  double t_star = 0.0;
  double residual = 0.0;       ///< RMS after refinement
  double grid_residual = 0.0;  ///< RMS at the best grid point
  std::size_t window_size = 0;
  std::string quantity;
};

/// Uses the last window_size samples. Throws ConfigError on bad input
/// (nonpositive values, non-increasing times, window < 8) and NumericalError
/// when the best t* sits on the edge of the search bracket.
BlowupFit fit_blowup(std::span<const double> times, std::span<const double> values, std::size_t window_size,
                     const std::string& quantity = "", const BlowupSearch& search = {});

enum class Regime { L2CriticalLike, SupercriticalLike, Inconclusive };
std::string_view to_string(Regime r);

struct BlowupClassification {
  Regime regime = Regime::Inconclusive;
  /// (L-infinity exponent, ||u_x||_{L2} exponent)
  std::pair<double, double> predicted_critical;
  std::pair<double, double> predicted_supercritical;
  std::pair<double, double> fitted;
  bool linf_within = false;
  bool grad_within = false;
  std::string note;
};

/// Critical scaling predicts exponents (-1/2, -(1 + 1/alpha)/2), the
/// supercritical one (-alpha/(2(1 + alpha)), -1/2). The nearest pair wins; the
/// label needs the L-infinity exponent within tol, ties are inconclusive.
BlowupClassification classify_blowup(const BlowupFit& fit_linf, const BlowupFit& fit_grad, double alpha,
                                     double tol = 0.1);

}  // namespace mfkdv
