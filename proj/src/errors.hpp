// Copyright 2026 The breakqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace breakqubo {

/// Malformed input text (JSON, QUBO text, rudy graphs).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failures (open/read/write).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance exceeds a hard solver guard (e.g. brute-force enumeration width).
struct TooLargeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace breakqubo
