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

#ifndef DALPHA_ERROR_HPP_
#define DALPHA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dalpha {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (range, parity, regularity...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed graph6 input. `offset` is the byte offset inside the line and
// `line` the 1-based line number when the error came from a stream (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(line == 0 ? what + " (byte " + std::to_string(offset) + ")"
                        : "line " + std::to_string(line) + ": " + what +
                              " (byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset),
        line_(line) {}

  // Message without the location suffix.
  const std::string& message() const { return message_; }

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::size_t line_;
};

// Distances are infinite; nothing spectral is defined.
class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is disconnected") {}
};

// The bound only applies to graphs whose transmissions are not all equal.
class TransmissionRegularGraph : public Error {
 public:
  TransmissionRegularGraph()
      : Error("graph is transmission regular; the bound requires a "
              "non-transmission-regular graph") {}
};

}  // namespace dalpha

#endif  // DALPHA_ERROR_HPP_
