#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

// Writes comma-separated tables: one '#' metadata line, a header row, then
// rows of cells. Reals are printed as %.12e so every value keeps 13
// significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& metadata,
            const std::vector<std::string>& header);

  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(const std::string& v);
  void end_row();

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::string path_;

  void sep();
};

std::string format_real(double v);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& text);
