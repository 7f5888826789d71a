#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "quasilight/transverse.hpp"

namespace quasilight {

/// CSV with '.' decimal separator, '\n' line ends, one header row, and 17
/// significant digits (round-trippable float64). Bodies are byte-stable for
/// identical inputs.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  void write_row(std::span<const double> values);

private:
  std::ofstream out_;
  std::size_t columns_;
};

std::string format_float(double value);  // %.17g

/// Raw little-endian float64 field snapshot. 32-byte header: magic "QLF1",
/// uint32 Nx, uint32 Ny, float64 z, 12 zero pad bytes; then row-major
/// interleaved (Re, Im) samples.
void write_field_qlf1(const std::filesystem::path& path, const TransverseField& field);
TransverseField read_field_qlf1(const std::filesystem::path& path,
                                const TransverseGrid& grid_hint);

}  // namespace quasilight
