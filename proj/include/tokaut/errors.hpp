// Copyright 2026 The tokaut Authors
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

#ifndef TOKAUT_ERRORS_HPP_
#define TOKAUT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tokaut {

// Bad arguments or malformed input. Maps to exit code 2 in the CLI.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured scale guard refused the request. Maps to exit code 3.
class ScaleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tokaut

#endif  // TOKAUT_ERRORS_HPP_
