// Copyright 2026 The ESL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Matrix files.
//
// JSON: {"rows": n, "cols": m, "data": [[...], ...], "labels": [...]} with
// "labels" optional. Complex entries are [re, im] pairs.
// CSV: one matrix row per line, ',' separated, '.' decimal point, optional
// single header line.
// Numbers are written with 17 significant digits, which round-trips every
// double exactly, and independently of the C locale.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/tensor/complex_matrix.hpp"
#include "json.hpp"

namespace esl {

enum class MatrixFormat { json, csv };

/// "json" or "csv"; throws FormatError otherwise.
MatrixFormat parse_matrix_format(std::string_view s);

/// Shortest of general/17-significant-digit form, e.g. "1", "0.33333333333333331".
std::string format_number(double x);

std::string matrix_to_json(const ChannelMatrix& m,
                           const std::vector<std::string>& labels = {});
std::string matrix_to_csv(const ChannelMatrix& m, bool header = false);

/// Throws FormatError on malformed input (wrong counts, non-numeric cells,
/// missing fields).
ChannelMatrix matrix_from_json(std::string_view text);
/// A first line that does not parse as numbers is taken as a header.
ChannelMatrix matrix_from_csv(std::string_view text);

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const nlohmann::json& j);
nlohmann::json channel_matrix_to_json_value(const ChannelMatrix& m);

/// Throw IoError on failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Format chosen from the extension (.csv, otherwise JSON).
ChannelMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ChannelMatrix& m,
                 MatrixFormat format, bool header = false);

}  // namespace esl
