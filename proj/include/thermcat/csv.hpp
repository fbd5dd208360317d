#pragma once

// Locale-independent numeric formatting (12 significant digits, lowercase
// scientific) and a small CSV writer.  Outputs are byte-stable across runs.

#include <string>
#include <vector>

namespace thermcat {

std::string format_number(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);

}  // namespace thermcat
