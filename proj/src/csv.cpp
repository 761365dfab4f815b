#include "eedag/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace eedag {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view cell, std::size_t row, std::size_t col) {
  cell = trim(cell);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "non-numeric or missing cell at row " << row << ", column " << col;
    throw InputError(msg.str());
  }
  return value;
}

void append_number(std::string& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw InternalError("number formatting failed");
  out.append(buf, ptr);
}

}  // namespace

Dataset parse_dataset(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find('\n', start);
    std::string_view line =
        pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
    if (!trim(line).empty()) lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (lines.empty()) throw InputError("empty document");

  auto header = split(lines[0], ',');
  if (header.empty() || trim(header[0]) != "time") {
    throw InputError("first column header must be 'time'");
  }
  if (header.size() < 2) throw InputError("no series columns");

  Dataset ds;
  ds.series.resize(header.size() - 1);
  for (std::size_t c = 1; c < header.size(); ++c) {
    auto name = trim(header[c]);
    if (name.empty()) throw InputError("empty series name in header");
    ds.series[c - 1].name = std::string(name);
  }

  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto cells = split(lines[r], ',');
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << r << " has " << cells.size() << " cells, expected " << header.size();
      throw InputError(msg.str());
    }
    double t = parse_number(cells[0], r, 0);
    if (!ds.grid.empty() && !(ds.grid.back() < t)) {
      throw InputError("non-monotone time column");
    }
    ds.grid.push_back(t);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      ds.series[c - 1].times.push_back(t);
      ds.series[c - 1].heights.push_back(parse_number(cells[c], r, c));
    }
  }
  if (ds.grid.size() < 2) throw InputError("fewer than 2 rows");
  validate_dataset(ds);
  return ds;
}

std::string serialize_dataset(const Dataset& ds) {
  validate_dataset(ds);
  for (const auto& ts : ds.series) {
    if (ts.times != ds.grid) {
      throw InputError("series '" + ts.name + "' does not sample the full grid");
    }
    if (ts.name.find(',') != std::string::npos || ts.name.find('\n') != std::string::npos) {
      throw InputError("series name '" + ts.name + "' contains a CSV delimiter");
    }
  }
  std::string out = "time";
  for (const auto& ts : ds.series) {
    out += ',';
    out += ts.name;
  }
  out += '\n';
  for (std::size_t r = 0; r < ds.grid.size(); ++r) {
    append_number(out, ds.grid[r]);
    for (const auto& ts : ds.series) {
      out += ',';
      append_number(out, ts.heights[r]);
    }
    out += '\n';
  }
  return out;
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace eedag
