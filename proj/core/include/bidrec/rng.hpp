// Copyright 2026 The bidrec Authors
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

#ifndef BIDREC_RNG_HPP
#define BIDREC_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace bidrec::rng {

// Counter-based randomness: every draw is a pure hash of
// (root seed, stream tag, batch, round, slot). Results do not depend on
// evaluation order, so batches can be replayed or parallelized freely.

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t combine(std::uint64_t h, std::uint64_t word) {
  return mix64(h ^ mix64(word + kGolden));
}

constexpr std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (std::uint64_t w : words) h = combine(h, w);
  return h;
}

// 53-bit uniform in [0, 1).
constexpr double to_unit(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Stream tags keep unrelated draws on disjoint counter subtrees.
enum class Stream : std::uint64_t {
  bids = 1,
  participation = 2,
  items = 3,
  probe_bids = 4,
  worlds = 5,
};

constexpr double uniform(std::uint64_t root, Stream stream, std::uint64_t batch,
                         std::uint64_t round, std::uint64_t slot) {
  return to_unit(hash_words({root, static_cast<std::uint64_t>(stream), batch, round, slot}));
}

}  // namespace bidrec::rng

#endif  // BIDREC_RNG_HPP
