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

#include "esl/report/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "esl/error.hpp"

namespace esl {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

std::size_t count_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
    throw FormatError(std::string("matrix JSON: missing or invalid \"") + key + "\"");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

MatrixFormat parse_matrix_format(std::string_view s) {
  if (s == "json") return MatrixFormat::json;
  if (s == "csv") return MatrixFormat::csv;
  throw FormatError("unknown matrix format '" + std::string(s) + "'");
}

std::string format_number(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  std::string s(buf, res.ptr);
  // Prefer the shortest string that still round-trips.
  char shortest[64];
  const auto res2 = std::to_chars(shortest, shortest + sizeof shortest, x);
  std::string t(shortest, res2.ptr);
  return t.size() < s.size() ? t : s;
}

std::string matrix_to_json(const ChannelMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols()
      << ",\n  \"data\": [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j == 0 ? "" : ", ") << format_number(m(i, j));
    }
    out << "]";
  }
  out << (m.rows() == 0 ? "]" : "\n  ]");
  if (!labels.empty()) out << ",\n  \"labels\": " << nlohmann::json(labels).dump();
  out << "\n}\n";
  return out.str();
}

std::string matrix_to_csv(const ChannelMatrix& m, bool header) {
  std::ostringstream out;
  if (header) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j == 0 ? "" : ",") << "y" << j + 1;
    out << "\n";
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j == 0 ? "" : ",") << format_number(m(i, j));
    }
    out << "\n";
  }
  return out.str();
}

ChannelMatrix matrix_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("matrix JSON: top level must be an object");
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows) {
    throw FormatError("matrix JSON: \"data\" must hold " + std::to_string(rows) + " rows");
  }
  std::vector<double> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j["data"]) {
    if (!row.is_array() || row.size() != cols) {
      throw FormatError("matrix JSON: every row must hold " + std::to_string(cols) +
                        " numbers");
    }
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError("matrix JSON: non-numeric entry");
      entries.push_back(x.get<double>());
    }
  }
  try {
    return ChannelMatrix(rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("matrix JSON: ") + e.what());
  }
}

ChannelMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  bool first = true;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    bool numeric = true;
    for (std::string_view cell : split(line, ',')) {
      double x = 0.0;
      if (!parse_number(cell, x)) {
        numeric = false;
        break;
      }
      row.push_back(x);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw FormatError("matrix CSV: non-numeric cell in line " +
                        std::to_string(rows.size() + 1));
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw FormatError("matrix CSV: ragged rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("matrix CSV: no data");
  std::vector<double> entries;
  for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  try {
    return ChannelMatrix(rows.size(), rows.front().size(), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("matrix CSV: ") + e.what());
  }
}

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix complex_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("complex matrix JSON: expected an object");
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows) {
    throw FormatError("complex matrix JSON: bad \"data\"");
  }
  std::vector<cplx> entries;
  for (const auto& row : j["data"]) {
    if (!row.is_array() || row.size() != cols) {
      throw FormatError("complex matrix JSON: bad row length");
    }
    for (const auto& z : row) {
      if (z.is_number()) {
        entries.emplace_back(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
      } else {
        throw FormatError("complex matrix JSON: entries must be [re, im]");
      }
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

nlohmann::json channel_matrix_to_json_value(const ChannelMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    data.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

ChannelMatrix load_matrix(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".csv") return matrix_from_csv(text);
  return matrix_from_json(text);
}

void save_matrix(const std::filesystem::path& path, const ChannelMatrix& m,
                 MatrixFormat format, bool header) {
  write_text_file(path, format == MatrixFormat::json ? matrix_to_json(m)
                                                     : matrix_to_csv(m, header));
}

}  // namespace esl
