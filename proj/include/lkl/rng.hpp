// Copyright 2026 The lkl Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lkl {

/// Seedable generator with a fixed output sequence on every platform.
///
/// The engine is std::mt19937_64, whose output is fixed by the C++
/// standard. The standard distributions are implementation-defined, so
/// the mappings to doubles and bounded integers are done here:
///   uniform01:     top 53 bits scaled by 2^-53, in [0, 1)
///   uniform_index: rejection of the low 2^64 mod bound values, then modulo
///   shuffle:       Fisher-Yates from the back using uniform_index
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound) {
    // Reject the low (2^64 mod bound) values so the modulo is unbiased.
    const std::uint64_t floor = (0 - bound) % bound;
    std::uint64_t x = engine_();
    while (x < floor) x = engine_();
    return x % bound;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lkl
