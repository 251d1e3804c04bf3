#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mfkdv/ground_state.hpp"
#include "mfkdv/integrator.hpp"
#include "mfkdv/shock_certificate.hpp"
#include "mfkdv/singularity.hpp"
#include "mfkdv/whitham_kernel.hpp"

namespace mfkdv {

using Json = nlohmann::ordered_json;

/// Version stamped into every report and checked when reading configs.
inline constexpr int kFormatVersion = 1;

/// Diagnostics CSV, one row per recorded time:
///   t,linf_u,l2_grad,mass_l2,hamiltonian,tail_delta,tail_mu,linf_grad
/// Values use shortest round-trip formatting; absent values are "nan".
inline constexpr std::string_view kDiagnosticsHeader = "t,linf_u,l2_grad,mass_l2,hamiltonian,tail_delta,tail_mu,linf_grad";

void write_diagnostics_csv(const std::filesystem::path& path, const TrajectoryDiagnostics& d);
/// Reads the columns back; stop_reason is left at its default.
TrajectoryDiagnostics read_diagnostics_csv(const std::filesystem::path& path);

std::string format_double(double v);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

/// manifest.json in dir: the config echo and, for each listed file (relative
/// to dir, sorted), its byte size and SHA-256. No timestamps, so identical
/// runs give identical manifests.
void write_manifest(const std::filesystem::path& dir, const std::vector<std::string>& files, const Json& config);

/// Writes <stem>.bin (binary sample file) and <stem>.json (t, step, grid,
/// config hash); returns the two file names.
std::vector<std::string> write_snapshot(const std::filesystem::path& dir, const std::string& stem, const Snapshot& s,
                                        const std::string& config_hash);

Json to_json(const TailFit& f);
Json to_json(const BlowupFit& f);
/// {quantity, a, b, t_star, residual, window, predicted_exponents, regime}
Json fit_report(const BlowupFit& f, const BlowupClassification* c);
Json to_json(const BlowupClassification& c);
Json to_json(const ShockCertificate& c);
Json to_json(const KernelConstants& k);
/// Profile sidecar: alpha, c, residual, identity residuals, iterations.
Json profile_sidecar(const GroundStateProfile& p);

}  // namespace mfkdv
