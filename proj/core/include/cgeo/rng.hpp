// Copyright 2026 The Authors.
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

#ifndef CGEO_RNG_HPP_
#define CGEO_RNG_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cgeo {

// Seeded random source. All randomized helpers in this library draw from
// this wrapper instead of std::uniform_int_distribution so that a seed
// pins the exact output stream on every platform (the mt19937_64 engine
// is fully specified by the standard, the distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, bound). bound must be positive. The modulo bias
  // is irrelevant at the bounds used here (all far below 2^32).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  bool coin() { return (engine_() & 1u) != 0; }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cgeo

#endif  // CGEO_RNG_HPP_
