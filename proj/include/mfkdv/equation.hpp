#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfkdv/spectral_field.hpp"

namespace mfkdv {

/// Supported equations, all written as u_t = L u + N(u):
///   FkdvGen   u_t +- u^p u_x - |D|^alpha u_x = 0
///   Mbh       u_t +  u^2 u_x - H u = 0,  H the Hilbert transform (symbol -i sgn xi)
///   Mwhitham  u_t + u^2 u_x + K * u_x = 0, K with symbol sqrt(tanh xi / xi)
///   Fbbm      u_t + u_x + |D|^alpha u_t +- u^2 u_x = 0
enum class Family { FkdvGen, Mbh, Mwhitham, Fbbm };
enum class Sign { Focusing, Defocusing };

std::string_view to_string(Family f);
std::string_view to_string(Sign s);
/// Accepts "fkdv", "mbh", "mwhitham", "fbbm" (and the enum spellings).
Family parse_family(std::string_view name);
/// Accepts "+", "focusing", "-", "defocusing".
Sign parse_sign(std::string_view name);

struct EquationSpec {
  Family family = Family::FkdvGen;
  double alpha = 0.0;
  Sign sign = Sign::Focusing;
  int p = 2;
  /// When false the nonlinear term is dropped (linear propagation tests).
  bool nonlinear = true;
};

/// Throws ConfigError when parameters are out of range: FkdvGen needs
/// alpha in [-1, 2), Fbbm alpha in (0, 1], and p >= 1.
void validate(const EquationSpec& spec);

/// +1 for focusing, -1 for defocusing.
inline double sign_factor(Sign s) { return s == Sign::Focusing ? 1.0 : -1.0; }

/// sqrt(tanh(xi)/xi), with w(0) = 1.
double whitham_w(double xi);

Complex linear_symbol(const EquationSpec& spec, double xi);

/// Precomputed pieces of N(u) for one grid: N(u) = m(xi) * F[u^{p+1}/(p+1)],
/// with m = -+ i xi, or -+ i xi / (1 + |xi|^alpha) for Fbbm. Holds scratch
/// buffers, so an instance must not be shared between threads.
class NonlinearOperator {
 public:
  NonlinearOperator(const EquationSpec& spec, const Grid& grid);

  /// Writes N(u) in spectral form given the spectral coefficients of u.
  void apply(std::span<const Complex> uhat, std::span<Complex> out) const;
  /// Same, for samples already in physical space.
  void apply_physical(std::span<const double> u, std::span<Complex> out) const;

 private:
  Grid grid_;
  int p_;
  bool active_;
  std::vector<Complex> multiplier_;
  mutable std::vector<double> u_, flux_;
};

SpectralField nonlinear_term(const EquationSpec& spec, const SpectralField& field);

struct Conserved {
  double mass_linear = 0.0;  ///< integral of u
  double mass_l2 = 0.0;      ///< integral of u^2
  /// FkdvGen with alpha > 0: 1/2 int |D^{alpha/2} u|^2 -+ int u^{p+2}/((p+1)(p+2)).
  /// Fbbm: 1/2 int (u^2 + |D^{alpha/2} u|^2). Absent otherwise.
  std::optional<double> hamiltonian;
};

Conserved conserved(const EquationSpec& spec, const SpectralField& field);

/// The value a run monitors for drift: the Hamiltonian if defined, else mass_l2.
double monitored_quantity(const Conserved& c);

struct ScaledField {
  SpectralField field;
  /// Set when the rescaled profile is not small at the window edge, i.e. part
  /// of the support was cut off by the periodic window.
  bool support_escaped = false;
};

/// lambda^{alpha/2} u(lambda x) resampled on the same grid by evaluating the
/// trigonometric interpolant. Points with |lambda x| beyond the window are
/// set to zero (the datum is treated as a localized function).
ScaledField scaling_map(const SpectralField& field, double alpha, double lambda);

}  // namespace mfkdv
