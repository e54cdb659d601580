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

#include "hullvol/polytope_io.hpp"

#include <fstream>

#include "hullvol/errors.hpp"

namespace hullvol::geometry {

SimplicialPolytope polytope_from_json(const nlohmann::json& j) {
  SimplicialPolytope poly;
  try {
    poly.dimension = j.at("dimension").get<std::size_t>();
    poly.vertices = j.at("vertices").get<std::vector<Point>>();
    poly.facets = j.at("facets").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("interior_point") && !j.at("interior_point").is_null()) {
      poly.interior_point = j.at("interior_point").get<Point>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed polytope JSON: ") + e.what());
  }
  validate(poly);
  return poly;
}

nlohmann::json polytope_to_json(const SimplicialPolytope& polytope) {
  nlohmann::json j;
  j["dimension"] = polytope.dimension;
  j["vertices"] = polytope.vertices;
  j["facets"] = polytope.facets;
  if (polytope.interior_point) j["interior_point"] = *polytope.interior_point;
  return j;
}

SimplicialPolytope load_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open polytope file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
  }
  return polytope_from_json(j);
}

}  // namespace hullvol::geometry
