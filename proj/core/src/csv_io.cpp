#include "quasilight/csv_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace quasilight {

std::string format_float(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) {
    throw std::runtime_error("CsvWriter: cannot open " + path.string());
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::write_row(std::span<const double> values) {
  if (values.size() != columns_) {
    throw std::invalid_argument("CsvWriter: row width does not match header");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << format_float(values[i]);
  }
  out_ << '\n';
}

void write_field_qlf1(const std::filesystem::path& path, const TransverseField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_field_qlf1: cannot open " + path.string());
  }
  char header[32] = {0};
  std::memcpy(header, "QLF1", 4);
  const std::uint32_t nx = static_cast<std::uint32_t>(field.grid.nx);
  const std::uint32_t ny = static_cast<std::uint32_t>(field.grid.ny);
  std::memcpy(header + 4, &nx, 4);
  std::memcpy(header + 8, &ny, 4);
  std::memcpy(header + 12, &field.z, 8);
  out.write(header, sizeof(header));
  for (Eigen::Index i = 0; i < field.amps.size(); ++i) {
    const double re = field.amps[i].real();
    const double im = field.amps[i].imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
}

TransverseField read_field_qlf1(const std::filesystem::path& path,
                                const TransverseGrid& grid_hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_field_qlf1: cannot open " + path.string());
  }
  char header[32];
  in.read(header, sizeof(header));
  if (!in || std::memcmp(header, "QLF1", 4) != 0) {
    throw std::runtime_error("read_field_qlf1: bad magic in " + path.string());
  }
  std::uint32_t nx = 0, ny = 0;
  double z = 0.0;
  std::memcpy(&nx, header + 4, 4);
  std::memcpy(&ny, header + 8, 4);
  std::memcpy(&z, header + 12, 8);
  if (static_cast<int>(nx) != grid_hint.nx || static_cast<int>(ny) != grid_hint.ny) {
    throw std::runtime_error("read_field_qlf1: grid size mismatch");
  }
  TransverseField field{grid_hint, Eigen::VectorXcd(grid_hint.samples()), z};
  for (Eigen::Index i = 0; i < field.amps.size(); ++i) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    field.amps[i] = {re, im};
  }
  if (!in) {
    throw std::runtime_error("read_field_qlf1: truncated file " + path.string());
  }
  return field;
}

}  // namespace quasilight
