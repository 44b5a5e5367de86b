#pragma once

#include <string>
#include <vector>

#include "epdiff/integrate.hpp"

namespace epdiff {

/// Writes the diagnostics table with header
/// step,t,hamiltonian,mass,momentum_x,momentum_y,max_speed,l2_m.
/// Quantities undefined for the model are left blank. Formatting is fixed
/// (%.17g) so identical runs produce byte-identical files.
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records);

/// 1-D snapshot: CSV with an x column followed by one column per field.
void write_snapshot_csv(const std::string& path, const GridPtr& grid,
                        const std::vector<std::string>& names, const FieldsState& fields);

/// 2-D snapshot: magic "EPDF", then a 32-byte little-endian header of four
/// uint64 values (dim, nx, ny, field count), then each field's samples as
/// row-major little-endian doubles.
void write_snapshot_binary(const std::string& path, const GridPtr& grid,
                           const FieldsState& fields);

struct BinarySnapshot {
    std::uint64_t dim, nx, ny, field_count;
    std::vector<std::vector<double>> fields;
};

BinarySnapshot read_snapshot_binary(const std::string& path);

/// snapshot_000042.csv / .bin
std::string snapshot_filename(std::size_t step, int dim);

} // namespace epdiff
