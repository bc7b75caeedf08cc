/*
   Copyright 2026 The skewlcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWLCP_RNG_HPP
#define SKEWLCP_RNG_HPP

#include <cstdint>
#include <random>

namespace skewlcp {

/// Seeded generator used by every randomized search in the library.
///
/// Draws go through `below()` instead of the standard distributions, whose
/// output is implementation-defined; this keeps results identical across
/// standard libraries for a given seed.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

   private:
    std::mt19937_64 engine_;
};

/// Seed taken from SKEWLCP_SEED when set, 0 otherwise.
std::uint64_t default_seed();

}  // namespace skewlcp

#endif
