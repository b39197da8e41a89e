#include "fdcran/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdcran {

std::string format_full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void check_rect(const ResultTable& table) {
  for (const auto& row : table.rows)
    if (row.size() != table.header.size())
      throw std::invalid_argument("render_table: row width does not match the header");
}

void check_cell(const std::string& cell) {
  if (cell.find_first_of(",\n\r") != std::string::npos)
    throw std::invalid_argument("render_table: cell contains a delimiter or line break: '" +
                                cell + "'");
}

}  // namespace

std::string render_table(const ResultTable& table) {
  check_rect(table);
  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      check_cell(cells[i]);
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit_row(table.header);
  for (const auto& row : table.rows) emit_row(row);
  return out.str();
}

ResultTable parse_table(const std::string& text) {
  ResultTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size())
        throw std::invalid_argument("parse_table: ragged row: '" + line + "'");
      table.rows.push_back(std::move(cells));
    }
  }
  if (first) throw std::invalid_argument("parse_table: missing header row");
  return table;
}

namespace {

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void write_table(const ResultTable& table, const std::string& path) {
  write_text(render_table(table), path);
}

void write_manifest(const std::string& body, const std::string& table_path) {
  write_text(body, table_path + ".manifest");
}

std::string build_identifier() {
#ifdef FDCRAN_BUILD_ID
  return FDCRAN_BUILD_ID;
#else
  return "dev";
#endif
}

}  // namespace fdcran
