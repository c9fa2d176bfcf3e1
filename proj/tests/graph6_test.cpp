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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "dalpha/error.hpp"
#include "dalpha/families.hpp"
#include "test_support.hpp"

namespace dalpha {
namespace {

TEST(ParseGraph6Test, DecodesHandPackedExamples) {
  // Bits for (0,1),(0,2),(1,2) = 111 -> 111000 -> 56 + 63 = 'w'.
  EXPECT_EQ(parse_graph6("Bw"), make_complete(3));
  // Six pairs all present: 111111 -> 63 + 63 = '~'.
  EXPECT_EQ(parse_graph6("C~"), make_complete(4));
  // 101000 -> 40 + 63 = 'g': path 0-1-2.
  EXPECT_EQ(parse_graph6("Bg"), make_path(3));
}

TEST(ParseGraph6Test, ToleratesHeaderAndLineEndings) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\r\n"), make_complete(3));
  EXPECT_EQ(parse_graph6("Bw\n"), make_complete(3));
}

TEST(ToGraph6Test, EncodesExamples) {
  EXPECT_EQ(to_graph6(make_complete(3)), "Bw");
  EXPECT_EQ(to_graph6(make_complete(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(make_path(3)), "Bg");
}

TEST(ParseGraph6Test, ErrorsCarryOffsets) {
  auto offset_of = [](std::string_view s) -> long {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("?"), 0);        // n = 0
  EXPECT_EQ(offset_of("~??F"), 0);     // extended size field
  EXPECT_EQ(offset_of(" "), 0);        // below the size range
  EXPECT_EQ(offset_of("C"), 1);        // truncated: K4 needs one data byte
  EXPECT_EQ(offset_of("C~~"), 2);      // trailing byte
  EXPECT_EQ(offset_of("C~\x7f"), 2);   // character outside [63,126]
  EXPECT_EQ(offset_of("Bx"), 1);       // 111001: padding bit set
  EXPECT_EQ(offset_of(">>graph6<<Bx"), 11);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);
}

TEST(ReadGraph6Test, StreamSkipsBlankLinesAndReportsLineNumbers) {
  std::istringstream in(">>graph6<<Bw\n\nC~\r\nBg\n");
  const auto graphs = read_graph6(in);
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_EQ(graphs[1], make_complete(4));

  std::istringstream bad("Bw\nC~\nBx\n");
  try {
    read_graph6(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Graph6RoundTripTest, RandomGraphsUpToMaxOrder) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % Graph::kMaxOrder);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = testing::random_graph(rng, n, p);
    const std::string code = to_graph6(g);
    ASSERT_EQ(code.size(), 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    ASSERT_EQ(parse_graph6(code), g) << code;
  }
}

TEST(Graph6RoundTripTest, EnumeratedInputsReencodeByteExactly) {
  for (int n = 4; n <= 7; ++n) {
    std::ifstream in(testing::data_path("connected" + std::to_string(n) + ".g6"));
    for (const auto& line : read_graph6_lines(in)) {
      ASSERT_EQ(to_graph6(parse_graph6(line.text)), line.text);
    }
  }
}

}  // namespace
}  // namespace dalpha
