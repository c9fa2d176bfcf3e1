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

#include "dalpha/graph6.hpp"

#include "dalpha/error.hpp"

namespace dalpha {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::string_view strip(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  return line;
}

std::size_t pair_bits(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  const std::size_t skipped = raw.starts_with(kHeader) ? kHeader.size() : 0;
  const std::string_view line = strip(raw);
  if (line.empty()) throw ParseError("empty graph6 string", skipped);

  const int size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte == 126) {
    throw ParseError("extended graph6 size field (n > 62) is not supported",
                     skipped);
  }
  if (size_byte < kBias + 1 || size_byte > kBias + Graph::kMaxOrder) {
    throw ParseError("bad size byte " + std::to_string(size_byte), skipped);
  }
  const int n = size_byte - kBias;

  const std::size_t bits = pair_bits(n);
  const std::size_t expected = 1 + (bits + 5) / 6;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > kBias + 63) {
      throw ParseError("character " + std::to_string(c) + " outside [63,126]",
                       skipped + i);
    }
  }
  if (line.size() < expected) {
    throw ParseError("truncated bit stream: expected " +
                         std::to_string(expected) + " bytes, got " +
                         std::to_string(line.size()),
                     skipped + line.size());
  }
  if (line.size() > expected) {
    throw ParseError("trailing bytes after bit stream", skipped + expected);
  }

  std::vector<Graph::Row> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = line[1 + k / 6] - kBias;
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= Graph::Row{1} << j;
        rows[j] |= Graph::Row{1} << i;
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = line[expected - 1] - kBias;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) {
      throw ParseError("nonzero padding bits", skipped + expected - 1);
    }
  }
  return Graph(n, std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  const std::size_t bits = pair_bits(n);
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n + kBias);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] |= static_cast<char>(1 << (5 - k % 6));
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i] += kBias;
  return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view body = strip(line);
    if (body.empty()) continue;
    out.push_back({number, std::string(body)});
  }
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  for (const auto& l : read_graph6_lines(in)) {
    try {
      out.push_back(parse_graph6(l.text));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.offset(), l.number);
    }
  }
  return out;
}

}  // namespace dalpha
