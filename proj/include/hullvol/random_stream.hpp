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

#ifndef HULLVOL_RANDOM_STREAM_HPP_
#define HULLVOL_RANDOM_STREAM_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace hullvol {

// Counter-based random stream. The pair (seed, substream) fully determines
// the sequence of draws, so trials scheduled on any worker reproduce
// bit-for-bit. The generator is xoshiro256** keyed through splitmix64.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t substream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t substream() const { return substream_; }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open();
  // Uniform on [0, 1).
  double uniform();
  // Mean-1 exponential, -log(u) with u in (0, 1).
  double exponential();
  // Standard normal via Box-Muller (one cached spare).
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::array<std::uint64_t, 4> state_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

// Independent streams for distinct roles inside one experiment share a seed
// but use disjoint substream ranges.
enum class StreamDomain : std::uint64_t {
  kGeneral = 0,
  kHullPoints = 1,
  kTestPoints = 2,
  kDirections = 3,
  kTrials = 4,
};

std::uint64_t substream_id(StreamDomain domain, std::uint64_t index);

inline RandomStream make_stream(std::uint64_t seed, StreamDomain domain,
                                std::uint64_t index) {
  return RandomStream(seed, substream_id(domain, index));
}

}  // namespace hullvol

#endif  // HULLVOL_RANDOM_STREAM_HPP_
