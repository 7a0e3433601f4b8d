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

#include <string>
#include <utility>
#include <vector>

#include "rootpath/planner.hpp"

namespace rootpath {

/// Step control knobs for predictor-corrector continuation. newton_tol and
/// dp_min are relative to the polynomial's coefficient scale.
struct TrackerConfig {
    double h_init = 0.05;
    double h_min = 1e-9;
    double h_max = 0.25;
    double newton_tol = 1e-12;
    int newton_max = 8;
    int accept_iters = 4;  // more corrector iterations than this reject the step
    double grow = 1.5;
    double dp_min = 1e-10;  // floor on |P'(z)| along the track

    void validate() const {
        if (!(0.0 < h_min && h_min <= h_init && h_init <= h_max && h_max <= 1.0))
            throw std::invalid_argument("TrackerConfig: need 0 < h_min <= h_init <= h_max <= 1");
        if (!(newton_max >= accept_iters && accept_iters >= 1))
            throw std::invalid_argument("TrackerConfig: need newton_max >= accept_iters >= 1");
        if (!(grow > 1.0)) throw std::invalid_argument("TrackerConfig: need grow > 1");
    }
};

/// One accepted continuation step. t is the global path parameter in [0, 1]
/// (arc-length weighted across segments); h is the accepted local step.
struct TraceRecord {
    double t;
    Complex c;
    Complex z;
    double h;
    int newton_iters;
};

struct Trace {
    std::vector<TraceRecord> records;
};

/// Residual target for P(z) - c = 0 near the point z. Relative to the local
/// evaluation magnitude of P - c, since that is what a double-precision
/// Horner pass can actually resolve: far out on a path |c| dwarfs the
/// coefficients, and near a large-modulus root the power terms do.
inline double residual_tolerance(const Polynomial& p, Complex z, Complex c,
                                 const TrackerConfig& cfg) noexcept {
    return cfg.newton_tol * std::max(p.magnitude_bound(std::abs(z)), std::abs(c));
}

/// Newton iteration on P(z) - c = 0 in z. Returns the refined point and the
/// number of updates applied. Every visited point, the converged one
/// included, must keep |P'(z)| above the floor; dropping below it means the
/// iterate is no longer tracking a simple root.
inline std::pair<Complex, int> newton_refine(const Polynomial& p, Complex c, Complex z,
                                             const TrackerConfig& cfg) {
    const double dp_floor = cfg.dp_min * p.scale();
    for (int iter = 0;; ++iter) {
        const auto [val, dval] = p.evaluate_with_derivative(z);
        if (!is_finite(val) || !is_finite(dval))
            throw Error(Errc::newton_stalled, "iterate left the finite domain");
        if (std::abs(dval) < dp_floor)
            throw Error(Errc::derivative_vanished, "|P'(z)| fell below the simplicity floor");
        if (std::abs(val - c) <= residual_tolerance(p, z, c, cfg)) return {z, iter};
        if (iter == cfg.newton_max)
            throw Error(Errc::newton_stalled, "no convergence within newton_max iterations");
        z -= (val - c) / dval;
    }
}

/// Track the root of P(z) - c(s) = 0 along the straight segment
/// c(s) = (1-s) c_from + s c_to, starting from a root at c_from.
///
/// Each step: Euler predictor along the Davidenko direction
/// dz/ds = (c_to - c_from) / P'(z), then Newton correction at the new s.
/// Steps are rejected (and the step size halved) when the corrector stalls
/// or needs more than accept_iters iterations; quick corrections let the
/// step grow again. Returned fragment records use the local s as t.
inline std::pair<Complex, std::vector<TraceRecord>> track_segment(const Polynomial& p, Complex c_from,
                                                                  Complex c_to, Complex z_from,
                                                                  const TrackerConfig& cfg) {
    cfg.validate();
    std::vector<TraceRecord> fragment;
    if (c_from == c_to) return {z_from, std::move(fragment)};

    const double scale = p.scale();
    const double dp_floor = cfg.dp_min * scale;
    const Complex dc = c_to - c_from;
    double s = 0.0;
    double h = cfg.h_init;
    Complex z = z_from;

    while (s < 1.0) {
        const double ds = std::min(h, 1.0 - s);
        const auto [val, dval] = p.evaluate_with_derivative(z);
        (void)val;
        if (std::abs(dval) < dp_floor)
            throw Error(Errc::derivative_vanished, "|P'(z)| fell below the simplicity floor");
        const Complex z_pred = z + ds * dc / dval;

        const bool final_step = ds >= 1.0 - s;
        const double s_next = final_step ? 1.0 : s + ds;
        const Complex c_next = final_step ? c_to : c_from + s_next * dc;

        bool accepted = false;
        Complex z_ref{};
        int iters = 0;
        try {
            std::tie(z_ref, iters) = newton_refine(p, c_next, z_pred, cfg);
            accepted = iters <= cfg.accept_iters;
        } catch (const Error& e) {
            if (e.code() != Errc::newton_stalled) throw;  // the simplicity guard propagates
            accepted = false;
        }
        if (!accepted) {
            h *= 0.5;
            if (h < cfg.h_min)
                throw Error(Errc::step_underflow,
                            "step size underflowed; the path runs too close to a critical shadow");
            continue;
        }

        s = s_next;
        z = z_ref;
        fragment.push_back({s, c_next, z, ds, iters});
        if (iters <= 2) h = std::min(h * cfg.grow, cfg.h_max);
    }
    return {z, std::move(fragment)};
}

/// Fold track_segment over consecutive waypoint pairs. The trace's first
/// record is the start state at t = 0; the global t of every accepted step is
/// rescaled by cumulative arc length and the final record lands at t = 1.
inline std::pair<Complex, Trace> track_path(const Polynomial& p, const PathPlan& plan, Complex z0,
                                            const TrackerConfig& cfg) {
    cfg.validate();
    if (plan.waypoints.empty()) throw std::invalid_argument("track_path: plan has no waypoints");
    {
        const auto [v0, d0] = p.evaluate_with_derivative(z0);
        if (std::abs(v0 - plan.waypoints.front()) >
            residual_tolerance(p, z0, plan.waypoints.front(), cfg))
            throw std::invalid_argument("track_path: z0 is not a root of P - c at the first waypoint");
        if (std::abs(d0) < cfg.dp_min * p.scale())
            throw Error(Errc::derivative_vanished, "start point violates the simplicity floor");
    }

    const std::size_t nseg = plan.waypoints.size() - 1;
    std::vector<double> lens(nseg);
    double total = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        lens[i] = std::abs(plan.waypoints[i + 1] - plan.waypoints[i]);
        total += lens[i];
    }

    Trace trace;
    trace.records.push_back({0.0, plan.waypoints.front(), z0, 0.0, 0});
    if (total == 0.0) {
        trace.records.push_back({1.0, plan.waypoints.front(), z0, 0.0, 0});
        return {z0, trace};
    }

    Complex z = z0;
    double done = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        std::vector<TraceRecord> fragment;
        try {
            auto [z_end, frag] = track_segment(p, plan.waypoints[i], plan.waypoints[i + 1], z, cfg);
            z = z_end;
            fragment = std::move(frag);
        } catch (const Error& e) {
            throw Error(e.code(), "segment " + std::to_string(i) + " of " + std::to_string(nseg) +
                                      ": " + e.message());
        }
        for (const TraceRecord& rec : fragment) {
            double t = (done + rec.t * lens[i]) / total;
            if (t <= trace.records.back().t)  // cumulative rounding guard
                t = std::nextafter(trace.records.back().t, 2.0);
            trace.records.push_back({t, rec.c, rec.z, rec.h, rec.newton_iters});
        }
        done += lens[i];
    }
    trace.records.back().t = 1.0;
    return {z, trace};
}

}  // namespace rootpath
