#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfkdv/equation.hpp"
#include "mfkdv/error.hpp"

namespace mfkdv {

struct IdentityResiduals {
  double energy = 0.0;
  double pohozaev = 0.0;
};

struct GroundStateProfile {
  SpectralField field = SpectralField::zeros(Grid{1.0, 8});
  double alpha = 0.0;
  double c = 0.0;
  double residual_linf = 0.0;
  IdentityResiduals identities;
  std::size_t iterations = 0;
  /// ||D^alpha Q + c Q - Q^3/3||_inf after each iteration.
  std::vector<double> residual_history;
};

/// Raised when the Petviashvili iteration does not produce a profile.
class GroundStateError : public NumericalError {
 public:
  enum class Kind { NoConvergence, Collapse };
  GroundStateError(Kind kind, const std::string& what) : NumericalError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct PetviashviliOptions {
  double tol = 1e-11;
  std::size_t max_iterations = 2000;
};

/// Solves D^alpha Q + c Q -+ Q^3/3 = 0 on the grid by Petviashvili iteration
///   Q_{n+1} = M_n^{3/2} (c + |xi|^alpha)^{-1} F[+-Q_n^3/3],
///   M_n = <(c + |xi|^alpha) Q_n, Q_n> / <+-Q_n^3/3, Q_n>,
/// from a unit Gaussian centred at x = 0. Needs alpha in (1/2, 2] and c > 0.
/// The defocusing sign has no nontrivial solution and raises Collapse.
GroundStateProfile solve_ground_state(double alpha, double c, const Grid& grid, const PetviashviliOptions& opts = {},
                                      Sign sign = Sign::Focusing);

/// Energy and Pohozaev identities, each normalized by A + cB with
/// A = int |D^{alpha/2} Q|^2, B = int Q^2, C = int Q^4:
///   energy   = (A + cB -+ C/3) / (A + cB)
///   pohozaev = ((alpha-1)/2 A - cB/2 +- C/12) / (A + cB)
/// Both are 0 for the zero field.
IdentityResiduals identity_residuals(const SpectralField& q, double alpha, double c, Sign sign = Sign::Focusing);

struct RescaledProfile {
  SpectralField field;
  bool support_escaped = false;
};

/// sqrt(c) Q(c^{1/alpha} x), resampled on Q's grid through the trigonometric
/// interpolant and set to zero where c^{1/alpha} x leaves the window.
/// support_escaped flags a profile that is not small at the cut.
RescaledProfile rescale_profile(const SpectralField& q, double alpha, double c);

/// Fractional BBM solitary wave of (1-c) Q - c D^alpha Q +- Q^3/3 = 0, which
/// equals sqrt(|c|) P with P the ground state at speed beta = (c-1)/c; this
/// is sqrt(c-1) Q(beta^{1/alpha} x) for c > 1 and the + sign and
/// sqrt(1-c) Q(beta^{1/alpha} x) for c < -1 and the - sign.
/// residual_linf holds the residual of the BBM profile equation.
GroundStateProfile bbm_solitary(double alpha, double c, Sign sign, const Grid& grid,
                                const PetviashviliOptions& opts = {});

struct SolitaryFit {
  double c = 0.0;
  double x0 = 0.0;
  double amplitude = 0.0;
  /// Relative L2 misfit on |x - x0| <= 5 * decay length.
  double mismatch = 0.0;
  double decay_length = 0.0;
  SpectralField profile = SpectralField::zeros(Grid{1.0, 8});
};

struct SolitaryFitOptions {
  /// Maxima further than 3 decay lengths from x0 above this fraction of the
  /// peak make the maximum non-dominant.
  double dominance_ratio = 0.75;
  PetviashviliOptions solver{1e-10, 4000};
};

/// Matches the peak of u against the solitary wave of the family (fkdv or
/// fbbm; focusing fkdv, either fbbm sign) and reports the misfit. Throws
/// NumericalError when u has no dominant positive maximum.
SolitaryFit fit_solitary(const SpectralField& u, const EquationSpec& spec, const SolitaryFitOptions& opts = {});

/// (int u^4)^{-1} (int |D^{alpha/2} u|^2)^{1/alpha} (int u^2)^{2 - 1/alpha}.
/// Throws ConfigError for a zero field.
double weinstein(const SpectralField& u, double alpha);

/// Exponent s of a power-law tail Q ~ C |x|^s fitted on [x_lo, x_hi]. With
/// periodized set, the model sums the images |x + 2 pi L n|^s so that the
/// periodic copies of a slowly decaying profile do not bias the slope.
double decay_slope(const SpectralField& q, double x_lo, double x_hi, bool periodized = true);

}  // namespace mfkdv
