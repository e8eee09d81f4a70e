// Copyright 2026 The RIDM Authors
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

#ifndef RIDM_RANDOM_H_
#define RIDM_RANDOM_H_

#include <cstdint>

namespace ridm {

// splitmix64 finalizer
inline uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based uniform draw in [0, 1): the same (seed, a, b) always maps to
// the same value, with no generator state to carry around.
inline double CounterUniform(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t h = MixBits(seed);
  h = MixBits(h ^ a);
  h = MixBits(h ^ (b + 0x632be59bd9b4e019ULL));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace ridm

#endif  // RIDM_RANDOM_H_
