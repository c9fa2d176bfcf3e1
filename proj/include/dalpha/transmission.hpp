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

#ifndef DALPHA_TRANSMISSION_HPP_
#define DALPHA_TRANSMISSION_HPP_

#include <cstdint>
#include <vector>

#include "dalpha/distance.hpp"

namespace dalpha {

// Row sums of the distance matrix and the Wiener index W = sum(tr) / 2.
struct TransmissionVector {
  std::vector<int> tr;
  int tr_max = 0;
  int tr_min = 0;
  std::int64_t wiener = 0;

  bool regular() const { return tr_max == tr_min; }
};

TransmissionVector transmissions(const DistanceMatrix& d);

}  // namespace dalpha

#endif  // DALPHA_TRANSMISSION_HPP_
