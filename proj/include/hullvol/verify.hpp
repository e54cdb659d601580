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

#ifndef HULLVOL_VERIFY_HPP_
#define HULLVOL_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hullvol::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// A fast run of the library invariants at small sizes: sampler support,
// reproducibility across worker counts, nested-hull monotonicity, LP and
// certificate soundness, rank maps, bound sanity, polytope volumes and
// affine invariance. Each check catches its own exceptions and reports them
// as failures.
std::vector<CheckResult> run_property_suite(std::uint64_t seed,
                                            std::size_t workers);

}  // namespace hullvol::verify

#endif  // HULLVOL_VERIFY_HPP_
