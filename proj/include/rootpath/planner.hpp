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
#include <vector>

#include "rootpath/critical.hpp"
#include "rootpath/rng.hpp"

namespace rootpath {

/// Polyline in the value plane from c0 to 0, together with the certified
/// clearance every segment keeps from every critical value.
struct PathPlan {
    std::vector<Complex> waypoints;
    double clearance = 0.0;
};

/// Exact distance from p to the closed segment [a, b].
inline double point_segment_distance(Complex p, Complex a, Complex b) noexcept {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

inline double path_length(const PathPlan& plan) noexcept {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < plan.waypoints.size(); ++i)
        len += std::abs(plan.waypoints[i + 1] - plan.waypoints[i]);
    return len;
}

/// Radius of the tube the path may occupy: a quarter of the tightest of the
/// pairwise value gap, the start gap, and the target gap. The quarter leaves
/// room for detour arcs between obstacles. With no critical values the plane
/// is free and the radius only reflects the travel distance.
inline double clearance_radius(const CriticalStructure& cs, Complex c0) {
    if (cs.values.empty()) return std::max(std::abs(c0) / 4.0, 1.0);
    const double tau = merge_tolerance(cs.values);
    double g_start = std::numeric_limits<double>::infinity();
    double g_target = std::numeric_limits<double>::infinity();
    for (const Complex& d : cs.values) {
        g_start = std::min(g_start, std::abs(c0 - d));
        g_target = std::min(g_target, std::abs(d));
    }
    if (g_target <= tau)
        throw Error(Errc::target_critical,
                    "0 is a critical value; the polynomial has a multiple root");
    return std::min({cs.min_value_gap, g_start, g_target}) / 4.0;
}

/// The three admission predicates for a start point a: P(a) regular with the
/// clearance radius at P(a) as margin, a inside the root bound disk, and
/// |P'(a)| safely nonzero.
inline bool is_admissible_start(const Polynomial& p, const CriticalStructure& cs, Complex a) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "is_admissible_start expects a monic polynomial");
    const auto [val, dval] = p.evaluate_with_derivative(a);
    if (!is_finite(val) || !is_finite(dval)) return false;
    if (!(std::abs(dval) > 1e-8 * p.scale())) return false;
    if (std::abs(a) > p.root_bound(0.0) + 1.0) return false;
    if (cs.values.empty()) return true;
    const double rho0 = clearance_radius(cs, val);  // TargetCritical propagates
    if (!(rho0 > 0.0)) return false;
    return is_regular_value(cs, val, rho0);
}

/// Rejection-sample a start point from the disk of radius root_bound + 1.
/// Deterministic for a given seed.
inline Complex choose_start(const Polynomial& p, const CriticalStructure& cs, std::uint64_t rng_seed) {
    if (!p.is_monic()) throw Error(Errc::not_monic, "choose_start expects a monic polynomial");
    const double radius = p.root_bound(0.0) + 1.0;
    detail::SplitMix64 g(rng_seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Complex a = detail::sample_disk(g, radius);
        if (is_admissible_start(p, cs, a)) return a;
    }
    throw Error(Errc::start_exhausted, "no admissible start point after 10000 samples");
}

/// Build a polyline from c0 to 0 that keeps distance >= rho from every
/// critical value.
///
/// Construction: start with the straight segment [c0, 0]. While some value d
/// comes closer than rho to a segment, insert a detour waypoint
/// w = proj + k * rho * u, where proj is the projection of d onto the
/// offending segment, u is the counterclockwise unit perpendicular of the
/// travel direction, and k doubles from 2 until both replacement segments
/// clear all values. At most 64 insertions; beyond that the instance is
/// reported as PlanExhausted and the caller retries with a smaller rho.
inline PathPlan plan_path(Complex c0, const CriticalStructure& cs, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("plan_path: rho must be positive");
    for (const Complex& d : cs.values)
        if (std::abs(c0 - d) < rho || std::abs(d) < rho)
            throw std::invalid_argument("plan_path: an endpoint is closer than rho to a critical value");

    PathPlan plan;
    plan.clearance = rho;
    if (c0 == Complex{0.0, 0.0}) {
        plan.waypoints = {c0};  // zero-length path; c0 already is the target
        return plan;
    }
    plan.waypoints = {c0, Complex{0.0, 0.0}};
    auto& w = plan.waypoints;

    auto segment_clear = [&](Complex a, Complex b) {
        for (const Complex& d : cs.values)
            if (point_segment_distance(d, a, b) < rho) return false;
        return true;
    };

    int insertions = 0;
    while (true) {
        // first offending segment, nearest value on it
        std::size_t seg = w.size();
        std::size_t obstacle = 0;
        double nearest = rho;
        for (std::size_t i = 0; i + 1 < w.size() && seg == w.size(); ++i) {
            for (std::size_t j = 0; j < cs.values.size(); ++j) {
                const double dist = point_segment_distance(cs.values[j], w[i], w[i + 1]);
                if (dist < nearest) {
                    seg = i;
                    obstacle = j;
                    nearest = dist;
                }
            }
        }
        if (seg == w.size()) break;

        if (++insertions > 64)
            throw Error(Errc::plan_exhausted, "64 detour insertions were not enough at this clearance");

        const Complex a = w[seg];
        const Complex b = w[seg + 1];
        const Complex d = cs.values[obstacle];
        const Complex ab = b - a;
        const Complex unit_perp = (ab / std::abs(ab)) * Complex{0.0, 1.0};
        double t = ((d.real() - a.real()) * ab.real() + (d.imag() - a.imag()) * ab.imag()) / std::norm(ab);
        t = std::clamp(t, 0.0, 1.0);
        const Complex proj = a + t * ab;

        double k = 2.0;
        Complex detour = proj + k * rho * unit_perp;
        while (!(segment_clear(a, detour) && segment_clear(detour, b))) {
            k *= 2.0;
            if (k > 1048576.0)  // 2^20; both sides blocked out to absurd offsets
                throw Error(Errc::plan_exhausted, "detour offset doubled past its cap without clearing");
            detour = proj + k * rho * unit_perp;
        }
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(seg) + 1, detour);
    }
    return plan;
}

}  // namespace rootpath
