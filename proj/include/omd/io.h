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

#ifndef OMD_IO_H_
#define OMD_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "omd/game.h"
#include "omd/max_flow.h"

namespace omd {

// Malformed input. line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

// Comma-separated rows of reals in [-1, 1]. Blank lines and lines starting
// with '#' are skipped.
PayoffMatrix ParseMatrix(std::string_view text);

// "p <nodes> <edges> <source> <sink>" followed by one "e <u> <v>" line per
// undirected edge, 1-indexed. Lines starting with 'c' or '#' are comments.
FlowNetwork ParseGraph(std::string_view text);

std::string ReadFile(const std::string& path);

// Shortest decimal string that parses back to the same double.
std::string FormatReal(double value);

}  // namespace omd

#endif  // OMD_IO_H_
