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

#ifndef DEPHASIM_CLI_IO_HPP
#define DEPHASIM_CLI_IO_HPP

#include <string>
#include <vector>

#include "dephasim/states.hpp"
#include "dephasim/types.hpp"

namespace dephasim::cli {

/// Shortest exact decimal form (17 significant digits): reading the text back
/// reproduces the double bit for bit.
std::string format_double(double value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Comment lines ("# ..."), one header row, and string cells. Numeric cells
/// are produced by format_double, so a write/read cycle is bit-exact.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Plain-text matrix format:
///
///   # optional comments
///   dim 6
///   basis 00 01 02 10 11 12
///   (re,im) x6 entries per row, 6 rows, row-major
///
/// The basis line must match the canonical ordering exactly; the parser
/// rejects anything else.
std::string matrix_file_string(const Mat6& m, const std::vector<std::string>& comments);
Mat6 parse_matrix_file(const std::string& text);

/// Parse and validate as a density matrix.
DensityMatrix read_density_matrix_file(const std::string& path);

}  // namespace dephasim::cli

#endif  // DEPHASIM_CLI_IO_HPP
