// Copyright 2026 dephasim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dephasim/operators.hpp"

namespace dephasim::cli {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for reading");
  }
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorKind::IoError, "read failure on " + path);
  }
  return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorKind::IoError, "write failure on " + path);
  }
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream out;
  for (const std::string& comment : table.comments) {
    out << "# " << comment << "\n";
  }
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream stream(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      table.comments.push_back(line.substr(2));
      continue;
    }
    if (!header_seen) {
      table.header = split_csv_line(line);
      header_seen = true;
    } else {
      table.rows.push_back(split_csv_line(line));
    }
  }
  if (!header_seen) {
    throw Error(ErrorKind::IoError, "csv text has no header row");
  }
  return table;
}

std::string matrix_file_string(const Mat6& m, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& comment : comments) {
    out << "# " << comment << "\n";
  }
  out << "dim " << kDim << "\n";
  out << "basis";
  for (const std::string& label : basis_labels()) {
    out << " " << label;
  }
  out << "\n";
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      out << (j ? " " : "") << "(" << format_double(m(i, j).real()) << ","
          << format_double(m(i, j).imag()) << ")";
    }
    out << "\n";
  }
  return out.str();
}

Mat6 parse_matrix_file(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind("#", 0) == 0) continue;
    lines.push_back(line);
  }
  if (lines.size() != static_cast<std::size_t>(2 + kDim)) {
    throw Error(ErrorKind::IoError, "matrix file must have a dim line, a basis line and 6 rows");
  }

  {
    std::istringstream dim_line(lines[0]);
    std::string tag;
    int dim = 0;
    dim_line >> tag >> dim;
    if (dim_line.fail() || tag != "dim" || dim != kDim) {
      throw Error(ErrorKind::IoError, "matrix file dimension line must read \"dim 6\"");
    }
  }
  {
    std::istringstream basis_line(lines[1]);
    std::string tag;
    basis_line >> tag;
    if (tag != "basis") {
      throw Error(ErrorKind::IoError, "matrix file is missing the basis declaration");
    }
    for (const std::string& expected : basis_labels()) {
      std::string label;
      basis_line >> label;
      if (basis_line.fail() || label != expected) {
        throw Error(ErrorKind::IoError,
                    "matrix file basis ordering must be the canonical \"00 01 02 10 11 12\"");
      }
    }
    std::string extra;
    if (basis_line >> extra) {
      throw Error(ErrorKind::IoError, "matrix file basis line has trailing tokens");
    }
  }

  Mat6 m;
  for (int i = 0; i < kDim; ++i) {
    std::istringstream row(lines[2 + i]);
    for (int j = 0; j < kDim; ++j) {
      char open = 0, comma = 0, close = 0;
      double re = 0.0, im = 0.0;
      row >> open >> re >> comma >> im >> close;
      if (row.fail() || open != '(' || comma != ',' || close != ')') {
        std::ostringstream oss;
        oss << "matrix file entry (" << i << ", " << j << ") is not a (re,im) pair";
        throw Error(ErrorKind::IoError, oss.str());
      }
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

DensityMatrix read_density_matrix_file(const std::string& path) {
  return validate(parse_matrix_file(read_text_file(path)));
}

}  // namespace dephasim::cli
