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

#ifndef HULLVOL_POLYTOPE_IO_HPP_
#define HULLVOL_POLYTOPE_IO_HPP_

#include <filesystem>
#include <string>

#include "hullvol/geometry.hpp"
#include "json.hpp"

namespace hullvol::geometry {

// JSON layout:
//   {"dimension": d, "vertices": [[...], ...], "facets": [[i_1, ..., i_d], ...],
//    "interior_point": [...]}
// with 0-based vertex indices; interior_point is optional. Parsing validates
// the polytope and reports the offending facet on failure.
SimplicialPolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const SimplicialPolytope& polytope);

SimplicialPolytope load_polytope(const std::filesystem::path& path);

}  // namespace hullvol::geometry

#endif  // HULLVOL_POLYTOPE_IO_HPP_
