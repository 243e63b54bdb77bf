#pragma once

#include <string>
#include <vector>

#include "mfglab/field.hpp"

namespace mfglab {

/// Fixed-width shortest round-trip formatting so that reruns produce
/// byte-identical files.
std::string format_double(double x);

/// Flat CSV: node index, coordinates, value. Space-time fields prepend the
/// time level and time. LF line endings, '.' decimal, header row.
void write_field_csv(const std::string& path, const ScalarField& f);
void write_field_csv(const std::string& path, const SpaceTimeField& f);

/// Generic CSV table writer (used by the ratio / sweep reports).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Binary row-major dump: 32-byte little-endian header
/// (magic, d, n, nt as u32; T as f64; 8 reserved bytes), then f64 values.
/// Scalar fields store nt = 0 and a single slice.
void write_field_binary(const std::string& path, const ScalarField& f);
void write_field_binary(const std::string& path, const SpaceTimeField& f);

ScalarField read_scalar_binary(const std::string& path, const GridPtr& grid);
SpaceTimeField read_space_time_binary(const std::string& path, const GridPtr& grid);

}  // namespace mfglab
