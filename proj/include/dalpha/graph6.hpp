// Copyright 2026 The dalpha Authors
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

#ifndef DALPHA_GRAPH6_HPP_
#define DALPHA_GRAPH6_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "dalpha/graph.hpp"

namespace dalpha {

// graph6 codec restricted to the one-byte size field (n <= 62).
//
// Layout: byte 0 is n + 63, followed by the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
// byte, most significant bit first, each byte offset by 63. The final byte is
// zero-padded. A leading ">>graph6<<" header and trailing CR/LF are accepted.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

// One non-empty line of a graph6 stream; `number` is 1-based.
struct Graph6Line {
  std::size_t number;
  std::string text;
};

// Splits a stream into graph6 lines, dropping blank lines and stripping
// header/CR. Lines are not decoded.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

// Decodes every line of a stream; ParseError carries the line number.
std::vector<Graph> read_graph6(std::istream& in);

}  // namespace dalpha

#endif  // DALPHA_GRAPH6_HPP_
