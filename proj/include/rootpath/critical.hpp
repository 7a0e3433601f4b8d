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

#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "rootpath/poly.hpp"

namespace rootpath {

/// Callback that returns degree-many roots of its (monic) argument. The
/// solver passes itself here; tests may pass closed forms or the oracle.
using RootFinder = std::function<std::vector<Complex>(const Polynomial&)>;

/// Critical points of P (roots of P', with repetition by multiplicity) and
/// critical values P(critical points), deduplicated within the merge
/// tolerance. min_value_gap is the smallest pairwise distance among the
/// deduplicated values (+inf when there are fewer than two).
struct CriticalStructure {
    std::vector<Complex> points;
    std::vector<Complex> values;
    double min_value_gap = std::numeric_limits<double>::infinity();
};

/// Dedup tolerance for critical values: 1e-8 * (1 + max |d|). Values from
/// clustered critical points must be merged or downstream clearance radii
/// collapse to zero.
inline double merge_tolerance(std::span<const Complex> values) noexcept {
    double m = 0.0;
    for (const Complex& d : values) m = std::max(m, std::abs(d));
    return 1e-8 * (1.0 + m);
}

namespace detail {

// Single-linkage clustering at the given tolerance; each cluster is reduced
// to its medoid so all representatives are actual members. Output sorted
// lexicographically by (re, im).
inline std::vector<Complex> merge_values(const std::vector<Complex>& raw, double tol) {
    const std::size_t n = raw.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(raw[i] - raw[j]) <= tol) parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(i);

    std::vector<Complex> out;
    for (const auto& members : clusters) {
        if (members.empty()) continue;
        std::size_t best = members.front();
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::size_t i : members) {
            double cost = 0.0;
            for (std::size_t j : members) cost += std::abs(raw[i] - raw[j]);
            if (cost < best_cost || (cost == best_cost && lex_less(raw[i], raw[best]))) {
                best_cost = cost;
                best = i;
            }
        }
        out.push_back(raw[best]);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace detail

/// Compute the critical structure of a monic polynomial. The root_finder is
/// applied to monicize(P'); this is the recursion of the whole solver, and it
/// terminates because the derivative drops the degree by one.
inline CriticalStructure critical_structure(const Polynomial& p, const RootFinder& root_finder) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "critical_structure expects a monic polynomial");
    if (p.degree() < 1) throw std::invalid_argument("critical_structure: degree must be >= 1");

    CriticalStructure cs;
    if (p.degree() == 1) return cs;  // no critical points

    cs.points = root_finder(p.derivative().monicize());

    std::vector<Complex> raw;
    raw.reserve(cs.points.size());
    for (const Complex& z0 : cs.points) raw.push_back(p.evaluate(z0));

    cs.values = detail::merge_values(raw, merge_tolerance(raw));
    for (std::size_t i = 0; i < cs.values.size(); ++i)
        for (std::size_t j = i + 1; j < cs.values.size(); ++j)
            cs.min_value_gap = std::min(cs.min_value_gap, std::abs(cs.values[i] - cs.values[j]));
    return cs;
}

/// c is treated as regular when it keeps at least `margin` distance from
/// every critical value. Empty value set: always regular.
inline bool is_regular_value(const CriticalStructure& cs, Complex c, double margin) {
    if (!(margin > 0.0)) throw std::invalid_argument("is_regular_value: margin must be positive");
    for (const Complex& d : cs.values)
        if (std::abs(c - d) < margin) return false;
    return true;
}

/// Smallest m >= 1 with |P^(m)(z0)| / m! > tol * scale(P), i.e. the order of
/// the first Taylor coefficient at z0 that the tolerance can resolve. For z0
/// at a root this is its multiplicity. Never exceeds degree(P).
inline int multiplicity(const Polynomial& p, Complex z0, double tol) {
    if (p.degree() < 1) throw std::invalid_argument("multiplicity: degree must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("multiplicity: tol must be positive");
    const double threshold = tol * p.scale();
    Polynomial d = p;
    double factorial = 1.0;
    for (int m = 1; m <= p.degree(); ++m) {
        d = d.derivative();
        factorial *= static_cast<double>(m);
        if (std::abs(d.evaluate(z0)) / factorial > threshold) return m;
    }
    throw Error(Errc::no_significant_derivative,
                "no scaled derivative magnitude exceeds the tolerance at the given point");
}

}  // namespace rootpath
