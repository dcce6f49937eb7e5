// Copyright 2026 The qcut Authors
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

#ifndef QCUT_RNG_H
#define QCUT_RNG_H

#include <cstdint>

namespace qcut {

/// SplitMix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based generator: the k-th draw of stream `stream` under master
/// seed `seed` is a pure function of (seed, stream, k), so any work schedule
/// that gives each sample its own stream reproduces the same numbers.
///
/// Stream key = splitmix64(seed ^ splitmix64(stream)).
class CounterRng {
   public:
    CounterRng(uint64_t seed, uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream))) {
    }

    uint64_t next() {
        return splitmix64(key_ + 0x632BE59BD9B4E019ULL * ++counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace qcut

#endif
