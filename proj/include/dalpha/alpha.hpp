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

#ifndef DALPHA_ALPHA_HPP_
#define DALPHA_ALPHA_HPP_

#include <string>

#include "dalpha/error.hpp"

namespace dalpha {

// Weight of the transmission diagonal in D_alpha = alpha*Tr + (1-alpha)*D.
// Always in [0,1]; operations tied to the lower bound additionally need
// alpha < 1 and call require_below_one().
class Alpha {
 public:
  explicit Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw InvalidArgument("alpha = " + std::to_string(value) +
                            " outside [0,1]");
    }
  }

  double value() const { return value_; }
  double complement() const { return 1.0 - value_; }

  void require_below_one() const {
    if (value_ >= 1.0) {
      throw InvalidArgument("alpha must lie in [0,1) for the lower bound");
    }
  }

  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

}  // namespace dalpha

#endif  // DALPHA_ALPHA_HPP_
