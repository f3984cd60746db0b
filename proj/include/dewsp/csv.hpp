#pragma once

#include <string>
#include <vector>

namespace dewsp {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column, or -1.
  int column(const std::string& name) const;
};

CsvTable read_csv_file(const std::string& path);
CsvTable read_csv_text(const std::string& text);

std::vector<std::string> split_csv_line(const std::string& line);

// Round-trip-exact decimal rendering ("%.17g"); used everywhere a double is
// written to a replayable file.
std::string format_double(double v);

double parse_double(const std::string& s, const std::string& context);

}  // namespace dewsp
