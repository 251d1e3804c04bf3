#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfkdv/spectral_field.hpp"
#include "mfkdv/whitham_kernel.hpp"

namespace mfkdv {

/// Shock-formation theorems: modified fKdV with alpha in (-1, 0), modified
/// Burgers-Hilbert, modified Whitham, and fKdV with u^p u_x (p > 1).
enum class Theorem { Mkdv, Mbh, Mwhitham, Gkdv };
std::string_view to_string(Theorem t);
Theorem parse_theorem(std::string_view name);

struct TheoremSpec {
  Theorem kind = Theorem::Mkdv;
  double alpha = -0.5;  ///< used by Mkdv and Gkdv
  int p = 2;            ///< used by Gkdv; 2 otherwise
};

struct PhiNorms {
  double linf_phi = 0.0;
  double linf_dphi = 0.0;
  double l2_phi = 0.0;
  double l2_dphi = 0.0;
  double l2_d2phi = 0.0;
  double l2_d3phi = 0.0;
  double h2_phi = 0.0;
  double inf_slope = 0.0;  ///< min phi', negative
  double xbar1 = 0.0;      ///< hull of {phi' < 0}
  double xbar2 = 0.0;
  double phi_min_on_hull = 0.0;
  double phi_max_on_hull = 0.0;

  /// Norms of lambda * phi.
  PhiNorms scaled(double lambda) const;
};

/// Spectral norms and the negative-slope hull of phi. phi' counts as negative
/// below -1e-13 ||phi'||_inf; endpoints are refined by linear interpolation.
/// Throws NumericalError when phi' has no negative values.
PhiNorms phi_norms(const SpectralField& phi);

struct CertificateConstants {
  double Cs = 0.70710678118654752;  ///< 2^{-1/2}
  double Cm = 1.0;
  double L0 = 0.0;  ///< Whitham only
  double Linf = 0.0;
};

struct FValues {
  double f1 = 0.0, f2 = 0.0, f3 = 0.0, f4 = 0.0;
};

/// The four functions of the selected theorem, verbatim. Throws ConfigError
/// unless A > 0, B > 0, C0 > 0, C1 > 0 and inf_slope < 0.
FValues f_functions(const TheoremSpec& thm, const PhiNorms& n, double C0, double C1, double A, double B,
                    const CertificateConstants& k = {});

struct Condition {
  std::string label;  ///< "c1" ... "c7"
  std::string text;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct ShockCertificate {
  TheoremSpec theorem;
  double delta = 0.0, A = 0.0, B = 0.0, C0 = 0.0, C1 = 0.0;
  CertificateConstants constants;
  std::string provenance;  ///< notes on estimated or extrapolated inputs
  PhiNorms norms;
  FValues f;
  std::vector<Condition> conditions;
  bool certified = false;
  std::vector<std::string> violated;  ///< labels, in order, without repeats
  /// Filled only when certified.
  std::optional<double> t_lo, t_hi, x_lo, x_hi;
  /// (2B + delta)^{-1} and (A/B - delta)^{-1} (2A - delta)^{-1}, or p-versions.
  double rate_lower = 0.0, rate_upper = 0.0;
};

struct CertifyOptions {
  /// Defaults 2 ||phi||_inf and 2 ||phi'||_inf.
  std::optional<double> C0, C1;
  /// Strict inequalities must hold with this much room (default: as written).
  double margin = 0.0;
  CertificateConstants constants;
  /// Whitham: kernel constants; estimated on first use when absent.
  std::optional<KernelConstants> kernel;
};

/// Evaluates (c1)-(c7). Throws ConfigError unless delta in (0, 0.1] and A, B > 0.
ShockCertificate certify(const TheoremSpec& thm, const SpectralField& phi, double delta, double A, double B,
                         const CertifyOptions& opts = {});
ShockCertificate certify(const TheoremSpec& thm, const PhiNorms& norms, double delta, double A, double B,
                         const CertifyOptions& opts = {});

struct CertificateSearch {
  /// lambda = 2^{k / lambda_steps} for k = 0 .. lambda_octaves * lambda_steps.
  int lambda_steps = 4;
  int lambda_octaves = 48;
  /// A = lambda ||phi||_inf i / ab_steps, i = 1 .. ab_steps - 1;
  /// B = lambda ||phi||_inf (1 + b_span j / ab_steps), j = 1 .. ab_steps.
  int ab_steps = 64;
  double b_span = 4.0;
  unsigned threads = 1;
};

struct CertificateFound {
  double lambda = 0.0;
  double A = 0.0;
  double B = 0.0;
  ShockCertificate certificate;
};

/// Smallest lambda on the search grid for which lambda * phi is certified,
/// with the tightest T_hi / T_lo, then the smallest T_hi. Doubling any step
/// count nests the grid, so the returned lambda never increases.
std::optional<CertificateFound> find_certificate(const TheoremSpec& thm, const SpectralField& phi, double delta,
                                                 const CertificateSearch& search = {},
                                                 const CertifyOptions& opts = {});

}  // namespace mfkdv
