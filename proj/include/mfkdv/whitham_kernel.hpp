#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace mfkdv {

/// Whitham kernel K(x) = (1/sqrt(2 pi)) int e^{i x xi} sqrt(tanh xi / xi) dxi
/// for x > 0 (K is even), to absolute tolerance tol. Throws ConfigError for
/// x <= 0 and NumericalError if the quadrature misses tol.
double kernel_eval(double x, double tol = 1e-10);
/// K'(x), differentiated under the integral with the same splitting.
double kernel_derivative(double x, double tol = 1e-10);

struct KernelConstants {
  /// max over sampled x in (0,1] of max(K(x) sqrt(x), |K'(x)| x^{3/2})
  double L0_est = 0.0;
  /// int_1^X |K'| dx
  double Linf_est = 0.0;
  /// |K(X)|, bounds the neglected part when K is monotone beyond X
  double Linf_tail_bound = 0.0;
  std::size_t samples = 0;
  double x_min = 0.0;
  double cutoff = 0.0;
};

/// samples log-spaced points on [x_min, 1]; Linf integrates |K'| up to cutoff.
KernelConstants estimate_kernel_constants(double tol = 1e-9, std::size_t samples = 200,
                                          double cutoff = 30.0, double x_min = 1e-6);

struct KernelTable {
  double tol = 0.0;
  std::vector<double> abscissae;
  std::vector<double> values;
  std::vector<double> derivative_values;
  KernelConstants constants;

  /// Linear interpolation of K in log x; x outside the table throws ConfigError.
  double lookup(double x) const;
};

KernelTable build_kernel_table(double tol, std::size_t points = 256, double x_min = 1e-3, double x_max = 20.0);

/// Binary cache: magic "WKT1", then tol, counts and the arrays (little endian).
void save_kernel_table(const std::filesystem::path& path, const KernelTable& table);
KernelTable load_kernel_table(const std::filesystem::path& path);
/// Loads the cache if it exists and matches tol, otherwise builds and writes it.
KernelTable cached_kernel_table(const std::filesystem::path& path, double tol);

}  // namespace mfkdv
