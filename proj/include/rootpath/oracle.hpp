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

#include <bit>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "rootpath/poly.hpp"

// Independent cross-check machinery: Durand-Kerner simultaneous iteration
// plus multiset matching. Deliberately depends on nothing but the polynomial
// type, so it stays a genuinely separate route from the continuation solver.

namespace rootpath {

struct OracleConfig {
    double tol = 1e-12;  // relative to coefficient scale
    int max_iters = 1000;
    double init_radius_factor = 1.0;
};

/// All roots of a monic polynomial by Durand-Kerner iteration. Start points
/// sit on the root-bound circle at equal angles with a fixed 0.4 offset so
/// real-axis symmetry cannot lock the iteration.
inline std::vector<Complex> weierstrass_roots(const Polynomial& p, const OracleConfig& cfg = {}) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "weierstrass_roots expects a monic polynomial");
    if (p.degree() < 1) throw std::invalid_argument("weierstrass_roots: degree must be >= 1");
    if (!(cfg.tol > 0.0) || cfg.max_iters < 1)
        throw std::invalid_argument("weierstrass_roots: bad config");

    const int n = p.degree();
    const double scale = p.scale();
    const double radius = p.root_bound(0.0) * cfg.init_radius_factor;
    std::vector<Complex> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        w[static_cast<std::size_t>(k)] = radius * Complex{std::cos(angle), std::sin(angle)};
    }

    std::vector<Complex> next(w.size());
    double last_update = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        double max_update = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            Complex denom{1.0, 0.0};
            for (std::size_t j = 0; j < w.size(); ++j)
                if (j != i) denom *= w[i] - w[j];
            const Complex delta = p.evaluate(w[i]) / denom;
            next[i] = w[i] - delta;
            max_update = std::max(max_update, std::abs(delta));
        }
        if (!std::isfinite(max_update))
            throw Error(Errc::oracle_diverged, "iteration left the finite domain");
        w.swap(next);
        last_update = max_update;
        if (max_update <= cfg.tol * scale) return w;
    }
    if (last_update > 1e-6 * scale)
        throw Error(Errc::oracle_diverged, "update still " + std::to_string(last_update) +
                                               " after max_iters");
    return w;  // slow but close enough; multiple roots end here
}

struct MatchResult {
    bool matched;
    double max_distance;
};

namespace detail {

// Bottleneck assignment by bitmask sweep: exact minimum over all pairings of
// the largest pair distance. Fine up to n = 12.
inline double bottleneck_match(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t n = a.size();
    if (n == 0) return 0.0;
    std::vector<double> dist(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(a[i] - b[j]);

    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<double> dp(full + 1, std::numeric_limits<double>::infinity());
    dp[0] = 0.0;
    for (std::size_t mask = 0; mask < full; ++mask) {
        if (dp[mask] == std::numeric_limits<double>::infinity()) continue;
        const std::size_t i = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            const std::size_t nxt = mask | (std::size_t{1} << j);
            dp[nxt] = std::min(dp[nxt], std::max(dp[mask], dist[i * n + j]));
        }
    }
    return dp[full];
}

inline double greedy_match(std::span<const Complex> a, std::span<const Complex> b) {
    const std::size_t n = a.size();
    std::vector<bool> used(n, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pick = n;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double d = std::abs(a[i] - b[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace detail

/// Pair up two root multisets and report the largest pair distance under the
/// best pairing. Exact matching up to n = 8; greedy with an exact fallback
/// (n <= 12) beyond that; pure greedy for larger sets, where a miss is
/// reported rather than resolved.
inline MatchResult match_multisets(std::span<const Complex> a, std::span<const Complex> b, double tol) {
    if (a.size() != b.size())
        throw Error(Errc::size_mismatch, "multisets have sizes " + std::to_string(a.size()) + " and " +
                                             std::to_string(b.size()));
    if (a.size() > 32) throw Error(Errc::size_mismatch, "multisets larger than 32 are unsupported");
    const std::size_t n = a.size();
    if (n == 0) return {true, 0.0};

    if (n <= 8) {
        const double d = detail::bottleneck_match(a, b);
        return {d <= tol, d};
    }
    const double g = detail::greedy_match(a, b);
    if (g <= tol) return {true, g};
    if (n <= 12) {
        const double d = detail::bottleneck_match(a, b);
        return {d <= tol, d};
    }
    return {false, g};
}

}  // namespace rootpath
