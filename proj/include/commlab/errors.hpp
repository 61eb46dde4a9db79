// Copyright 2026 The commlab Authors
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

#ifndef COMMLAB_ERRORS_HPP_
#define COMMLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace commlab {

// Caller supplied a value outside an operation's precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search ran out of its declared step budget before its guarantee applied.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, long bound)
      : std::runtime_error(what), bound_(bound) {}
  long bound() const { return bound_; }

 private:
  long bound_;
};

}  // namespace commlab

#endif  // COMMLAB_ERRORS_HPP_
