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

#include "dalpha/transmission.hpp"

#include <algorithm>
#include <numeric>

namespace dalpha {

TransmissionVector transmissions(const DistanceMatrix& d) {
  TransmissionVector t;
  t.tr.resize(d.order());
  std::int64_t total = 0;
  for (int i = 0; i < d.order(); ++i) {
    const auto row = d.row(i);
    t.tr[i] = std::accumulate(row.begin(), row.end(), 0);
    total += t.tr[i];
  }
  const auto [lo, hi] = std::minmax_element(t.tr.begin(), t.tr.end());
  t.tr_min = *lo;
  t.tr_max = *hi;
  // Each unordered pair is counted twice, so total is even.
  t.wiener = total / 2;
  return t;
}

}  // namespace dalpha
