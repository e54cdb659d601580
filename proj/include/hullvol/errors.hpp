// Copyright 2026 The hullvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HULLVOL_ERRORS_HPP_
#define HULLVOL_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hullvol {

// Precondition violations on caller-supplied arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A linear system that is singular or too ill-conditioned to trust.
class SingularSystem : public std::runtime_error {
 public:
  SingularSystem(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

// Rejection sampling gave up before producing an accepted draw.
class AttemptsExhausted : public std::runtime_error {
 public:
  AttemptsExhausted(const std::string& what, std::uint64_t attempts)
      : std::runtime_error(what), attempts_(attempts) {}
  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

// Numerical routine failed to reach its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hullvol

#endif  // HULLVOL_ERRORS_HPP_
