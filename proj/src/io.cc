// Copyright 2026 The OMD Authors
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

#include "omd/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace omd {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(sep, start);
    out.push_back(Trim(s.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double ParseDouble(std::string_view s, int line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("invalid number '" + std::string(s) + "'", line);
  }
  return v;
}

long long ParseInteger(std::string_view s, int line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("invalid integer '" + std::string(s) + "'", line);
  }
  return v;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line)
    : std::runtime_error(line > 0
                             ? "line " + std::to_string(line) + ": " + message
                             : message),
      line_(line) {}

PayoffMatrix ParseMatrix(std::string_view text) {
  std::vector<double> data;
  std::size_t cols = 0;
  std::size_t rows = 0;
  int number = 0;
  for (std::string_view raw : Lines(text)) {
    ++number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = Split(line, ',');
    if (rows == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(fields.size()),
                       number);
    }
    for (std::string_view f : fields) {
      const double v = ParseDouble(f, number);
      if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
        throw ParseError("entry " + std::string(f) + " outside [-1, 1]",
                         number);
      }
      data.push_back(v);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("empty matrix", 0);
  return PayoffMatrix(Matrix(rows, cols, std::move(data)));
}

FlowNetwork ParseGraph(std::string_view text) {
  FlowNetwork net;
  bool header = false;
  long long expected = 0;
  int number = 0;
  for (std::string_view raw : Lines(text)) {
    ++number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == 'c' || line.front() == '#') continue;
    const auto w = Words(line);
    if (w[0] == "p") {
      if (header) throw ParseError("duplicate header", number);
      if (w.size() != 5) throw ParseError("header needs 4 fields", number);
      const long long n = ParseInteger(w[1], number);
      expected = ParseInteger(w[2], number);
      const long long s = ParseInteger(w[3], number);
      const long long t = ParseInteger(w[4], number);
      if (n < 2) throw ParseError("need at least two nodes", number);
      if (expected < 0) throw ParseError("negative edge count", number);
      if (s < 1 || s > n || t < 1 || t > n) {
        throw ParseError("terminal out of range", number);
      }
      if (s == t) throw ParseError("source equals sink", number);
      net.nodes = static_cast<std::size_t>(n);
      net.source = static_cast<std::size_t>(s - 1);
      net.sink = static_cast<std::size_t>(t - 1);
      header = true;
    } else if (w[0] == "e") {
      if (!header) throw ParseError("edge before header", number);
      if (w.size() != 3) throw ParseError("edge needs 2 endpoints", number);
      const long long u = ParseInteger(w[1], number);
      const long long v = ParseInteger(w[2], number);
      const auto n = static_cast<long long>(net.nodes);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("endpoint out of range", number);
      }
      if (u == v) throw ParseError("self-loop", number);
      net.edges.emplace_back(static_cast<std::size_t>(u - 1),
                             static_cast<std::size_t>(v - 1));
    } else {
      throw ParseError("unknown line type '" + std::string(w[0]) + "'",
                       number);
    }
  }
  if (!header) throw ParseError("missing header", 0);
  if (static_cast<long long>(net.edges.size()) != expected) {
    throw ParseError("header declares " + std::to_string(expected) +
                         " edges, found " + std::to_string(net.edges.size()),
                     0);
  }
  return net;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string FormatReal(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace omd
