// RFC-4180 style CSV: quoted fields, "" escapes, CR/LF tolerated.
#pragma once

#include <string>
#include <vector>

namespace seqmed {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

std::string format_csv_field(const std::string& field);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Shortest representation that round-trips a double exactly.
std::string format_double(double v);

}  // namespace seqmed
