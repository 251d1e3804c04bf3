#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace mfkdv {

/// Periodic grid on L*[-pi, pi) with N equally spaced points.
///
/// Points are x_j = -L*pi + j*dx with dx = 2*pi*L/N, and the wavenumbers of the
/// discrete Fourier modes are xi_k = k/L for k in [-N/2, N/2 - 1].
class Grid {
 public:
  /// Throws ConfigError unless L > 0 and N is a power of two with N >= 8.
  Grid(double half_width_multiplier, std::size_t n_modes);

  double half_width_multiplier() const { return L_; }
  std::size_t size() const { return n_; }
  /// Number of stored Fourier coefficients of a real field (k = 0..N/2).
  std::size_t spectral_size() const { return n_ / 2 + 1; }

  double length() const { return 2.0 * std::numbers::pi * L_; }
  double spacing() const { return length() / static_cast<double>(n_); }
  double left() const { return -std::numbers::pi * L_; }
  double point(std::size_t j) const { return left() + static_cast<double>(j) * spacing(); }
  std::vector<double> points() const;

  /// xi_k = k/L for a signed mode index k.
  double wavenumber(long k) const { return static_cast<double>(k) / L_; }
  /// Wavenumber of stored coefficient k in 0..N/2. The last entry is the
  /// Nyquist mode and is reported as xi_{-N/2} = -N/(2L).
  double stored_wavenumber(std::size_t k) const;
  /// |xi| of the largest resolved mode, N/(2L).
  double nyquist() const { return static_cast<double>(n_) / (2.0 * L_); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double L_;
  std::size_t n_;
};

Grid make_grid(double half_width_multiplier, std::size_t n_modes);

bool is_power_of_two(std::size_t n);

}  // namespace mfkdv
