#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "mfkdv/expr.hpp"
#include "mfkdv/spectral_field.hpp"

namespace mfkdv {

/// Pointwise evaluation of expr on the grid. Throws NumericalError if any
/// value is not finite.
SpectralField sample(const InitExpr& expr, const Grid& grid);

/// Sample files come in two layouts:
///   ascii   one decimal real per line (blank lines and '#' comments skipped)
///   binary  uint64 little-endian count n, followed by n little-endian float64
/// The binary layout is recognised when the header count matches the file size.
enum class SampleFormat { Ascii, Binary };

std::vector<double> read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, std::span<const double> values,
                   SampleFormat format = SampleFormat::Binary);

/// Reads a sample file for the given grid. Throws ConfigError if the file is
/// unreadable, holds the wrong number of values, or contains non-finite values.
SpectralField load_samples(const std::filesystem::path& path, const Grid& grid);

}  // namespace mfkdv
