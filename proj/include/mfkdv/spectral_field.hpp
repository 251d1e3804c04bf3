#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "mfkdv/grid.hpp"

namespace mfkdv {

using Complex = std::complex<double>;

/// A real periodic field held both as samples u(x_j) and as its Fourier
/// coefficients c_k, k = 0..N/2 (see Fft for the normalization).
class SpectralField {
 public:
  /// Builds the field from samples; throws ConfigError on a length mismatch.
  SpectralField(Grid grid, std::vector<double> samples);
  /// Builds the field from stored coefficients (length N/2 + 1).
  static SpectralField from_spectral(Grid grid, std::vector<Complex> coeffs);
  static SpectralField zeros(Grid grid);

  const Grid& grid() const { return grid_; }
  std::span<const double> physical() const { return physical_; }
  std::span<const Complex> spectral() const { return spectral_; }
  /// Coefficient of signed mode k in [-N/2, N/2 - 1].
  Complex coefficient(long k) const;

 private:
  SpectralField(Grid grid, std::vector<double> samples, std::vector<Complex> coeffs);

  Grid grid_;
  std::vector<double> physical_;
  std::vector<Complex> spectral_;
};

std::vector<Complex> to_spectral(std::span<const double> samples, const Grid& grid);
std::vector<double> to_physical(std::span<const Complex> coeffs, const Grid& grid);

/// Multiplier sampled on the stored wavenumbers. Positive modes get m(xi_k)
/// and negative modes the conjugate, so the result is always real; the Nyquist
/// entry keeps only Re m(xi_{-N/2}). Throws NumericalError on non-finite values.
std::vector<Complex> symbol_table(const Grid& grid, const std::function<Complex(double)>& m);

SpectralField apply_multiplier(const SpectralField& field, const std::function<Complex(double)>& m);
SpectralField apply_table(const SpectralField& field, std::span<const Complex> table);

/// Spectral derivative, multiplier (i xi)^order. Throws ConfigError for order < 1.
SpectralField derivative(const SpectralField& field, int order);

/// Zeroes |k| > N/3 (2/3 rule).
SpectralField dealias(const SpectralField& field);

/// Weight of stored coefficient k in a full-spectrum sum (1 for k = 0 and the
/// Nyquist mode, 2 otherwise).
inline double spectral_weight(std::size_t k, std::size_t n) {
  return (k == 0 || k == n / 2) ? 1.0 : 2.0;
}

/// Rectangle rule on the periodic grid.
double integrate(std::span<const double> samples, const Grid& grid);

double linf_norm(const SpectralField& field);
/// Rectangle-rule L2 norm of the samples.
double l2_norm(const SpectralField& field);
/// sqrt(2 pi L sum_k (1 + xi_k^2)^s |c_k|^2); equals l2_norm for s = 0.
double hs_norm(const SpectralField& field, double s);
/// || |D|^beta u ||_{L2} = sqrt(2 pi L sum_k |xi_k|^{2 beta} |c_k|^2).
/// The mean mode is excluded for beta <= 0.
double frac_seminorm(const SpectralField& field, double beta);

struct Norms {
  double linf = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};
Norms norms(const SpectralField& field);

/// Trigonometric interpolant evaluated at arbitrary points (periodic in x).
std::vector<double> evaluate(const SpectralField& field, std::span<const double> xs);
double evaluate(const SpectralField& field, double x);

/// u(x - shift) via the phase factor exp(-i xi shift).
SpectralField translate(const SpectralField& field, double shift);

}  // namespace mfkdv
