#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace mfkdv {

/// Real-to-complex transform pair for one size N, backed by FFTW.
///
/// Coefficients follow the Fourier-series convention of Grid:
///   c_k = (1/N) sum_j u_j exp(-i xi_k x_j),   u_j = sum_k c_k exp(i xi_k x_j),
/// so c_0 is the sample mean. Only k = 0..N/2 are stored; negative modes are
/// conj(c_k). A plan owns its work buffers and is not safe to share between
/// threads; use thread_fft() for a per-thread cached instance.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }

  void forward(std::span<const double> samples, std::span<std::complex<double>> coeffs);
  /// Imaginary parts of the mean and Nyquist coefficients are discarded.
  void inverse(std::span<const std::complex<double>> coeffs, std::span<double> samples);

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

/// Per-thread cached plan for size n.
Fft& thread_fft(std::size_t n);

}  // namespace mfkdv
