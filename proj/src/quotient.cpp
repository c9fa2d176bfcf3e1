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

#include "dalpha/quotient.hpp"

#include <algorithm>
#include <cmath>

#include "dalpha/error.hpp"

namespace dalpha {

QuotientMatrix equitable_quotient(const SymmetricMatrix& m, const VertexPartition& partition) {
  const int n = m.order();
  std::vector<int> seen(n, 0);
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidArgument("partition has an empty block");
    for (int v : block) {
      if (v < 0 || v >= n) throw InvalidArgument("partition vertex out of range");
      if (seen[v]++) throw InvalidArgument("partition blocks overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InvalidArgument("partition does not cover every vertex");
  }

  QuotientMatrix q;
  q.blocks = static_cast<int>(partition.size());
  q.b.assign(static_cast<std::size_t>(q.blocks) * q.blocks, 0.0);
  q.equitable = true;
  for (int i = 0; i < q.blocks; ++i) {
    for (int j = 0; j < q.blocks; ++j) {
      double total = 0.0;
      double lo = 0.0;
      double hi = 0.0;
      for (std::size_t r = 0; r < partition[i].size(); ++r) {
        double s = 0.0;
        for (int c : partition[j]) s += m.at(partition[i][r], c);
        total += s;
        lo = r == 0 ? s : std::min(lo, s);
        hi = r == 0 ? s : std::max(hi, s);
      }
      if (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) q.equitable = false;
      q.b[static_cast<std::size_t>(i) * q.blocks + j] =
          total / static_cast<double>(partition[i].size());
    }
  }
  return q;
}

}  // namespace dalpha
