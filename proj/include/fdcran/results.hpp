#pragma once

#include <string>
#include <vector>

namespace fdcran {

// rectangular text table; every row has exactly header.size() cells
struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// full-precision text for a double (17 significant digits): parsing the
// string back reproduces the bits
std::string format_full(double v);

// comma-separated, UTF-8, LF line endings, header row always present
std::string render_table(const ResultTable& table);
void write_table(const ResultTable& table, const std::string& path);

// inverse of render_table, used by tests and downstream tooling
ResultTable parse_table(const std::string& text);

// sidecar written next to a table (path + ".manifest"): everything needed
// to re-run the experiment
void write_manifest(const std::string& body, const std::string& table_path);

// version string baked in at build time
std::string build_identifier();

}  // namespace fdcran
