/*
   Copyright 2026 The rootpath Authors

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

#pragma once

#include <cstdint>
#include <numbers>

#include "rootpath/poly.hpp"

namespace rootpath {
namespace detail {

// splitmix64. Self-contained so sampled sequences do not depend on the
// standard library's distribution implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
    return g.next();
}

// Uniform sample from the closed disk of the given radius.
inline Complex sample_disk(SplitMix64& g, double radius) noexcept {
    const double r = radius * std::sqrt(g.next_double());
    const double theta = 2.0 * std::numbers::pi * g.next_double();
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace detail

/// Seeded monic polynomial with the lower coefficients drawn uniformly from
/// the disk of the given radius. Shared by `check`, the test suites, and the
/// acceptance harness so instance corpora line up exactly.
inline Polynomial random_monic_polynomial(std::uint64_t seed, int degree, double radius = 2.0) {
    if (degree < 1) throw std::invalid_argument("random_monic_polynomial: degree must be >= 1");
    detail::SplitMix64 g(seed);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = detail::sample_disk(g, radius);
    c.back() = Complex{1.0, 0.0};
    return Polynomial(std::move(c));
}

}  // namespace rootpath
