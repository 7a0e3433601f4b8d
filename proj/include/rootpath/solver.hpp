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

#include <optional>
#include <string>
#include <vector>

#include "rootpath/tracker.hpp"

namespace rootpath {

enum class Provenance {
    RegularTrack,     // tracked from a regular start value down to 0
    CriticalBranch,   // a critical point of P turned out to be a root
    LinearClosedForm  // degree 1, root read off the coefficients
};

constexpr const char* provenance_name(Provenance p) noexcept {
    switch (p) {
        case Provenance::RegularTrack: return "RegularTrack";
        case Provenance::CriticalBranch: return "CriticalBranch";
        case Provenance::LinearClosedForm: return "LinearClosedForm";
    }
    return "Unknown";
}

struct RootRecord {
    Complex value;
    int multiplicity = 1;
    double residual = 0.0;  // |P(value)| on the polynomial handed to the solver
    Provenance provenance = Provenance::RegularTrack;
};

struct RootResult {
    std::vector<RootRecord> roots;  // discovery order; multiplicities sum to degree
    int degree = 0;
    std::uint64_t seed = 0;
    int retries = 0;               // failed attempts across the whole recursion
    long total_tracker_steps = 0;  // accepted continuation steps, all paths
    std::vector<Complex> critical_values;  // deduplicated values of the input polynomial
};

/// Optional instrumentation: counters plus a hook that observes every
/// successfully tracked path (including the recursive solves for critical
/// structures).
struct SolveMonitor {
    std::function<void(const Polynomial&, const Trace&)> on_trace;
    long tracker_steps = 0;
    int retries = 0;
};

/// Plan and trace of one regular-branch track, kept for diagnostics output.
struct TraceRun {
    Polynomial monic;
    PathPlan plan;
    Trace trace;
    Complex root;
    std::vector<Complex> critical_values;
};

namespace detail {

constexpr int kMaxAttempts = 5;
constexpr double kRootTolRel = 1e-8;       // critical-branch trigger, relative to scale
constexpr double kMultiplicityTol = 1e-8;  // tolerance handed to multiplicity()

RootResult solve_all_impl(const Polynomial& p, std::uint64_t seed, const TrackerConfig& cfg,
                          SolveMonitor& mon);

inline RootFinder recursion_adapter(std::uint64_t seed, const TrackerConfig& cfg, SolveMonitor& mon) {
    return [seed, cfg, &mon](const Polynomial& q) {
        const RootResult res = solve_all_impl(q, seed, cfg, mon);
        std::vector<Complex> flat;
        flat.reserve(static_cast<std::size_t>(q.degree()));
        for (const RootRecord& rec : res.roots)
            for (int k = 0; k < rec.multiplicity; ++k) flat.push_back(rec.value);
        return flat;
    };
}

// Among critical points that are roots of P within tol_abs, pick the one of
// smallest modulus (deflation-friendly order), estimate its multiplicity m,
// and refine it as a simple root of P^(m-1).
inline std::optional<RootRecord> critical_branch_root(const Polynomial& pm, const CriticalStructure& cs,
                                                      double tol_abs, const TrackerConfig& cfg) {
    std::optional<Complex> best;
    for (const Complex& z0 : cs.points) {
        if (std::abs(pm.evaluate(z0)) > tol_abs) continue;
        if (!best || std::abs(z0) < std::abs(*best) ||
            (std::abs(z0) == std::abs(*best) && lex_less(z0, *best)))
            best = z0;
    }
    if (!best) return std::nullopt;

    const int m = multiplicity(pm, *best, kMultiplicityTol);
    Polynomial d = pm;
    for (int k = 1; k < m; ++k) d = d.derivative();
    Complex refined = *best;
    try {
        refined = newton_refine(d, Complex{0.0, 0.0}, *best, cfg).first;
    } catch (const Error&) {
        // keep the unrefined candidate; the recursive solve already placed it well
    }
    return RootRecord{refined, m, std::abs(pm.evaluate(refined)), Provenance::CriticalBranch};
}

// One regular-branch attempt: start point, clearance, plan, track. The
// clearance is scaled by rho_factor; PlanExhausted halves rho in place down
// to a floor tied to |c0| before giving up on the attempt.
inline TraceRun attempt_regular(const Polynomial& pm, const CriticalStructure& cs,
                                std::uint64_t attempt_seed, double rho_factor,
                                const TrackerConfig& cfg, SolveMonitor& mon) {
    const Complex a = choose_start(pm, cs, attempt_seed);
    const Complex c0 = pm.evaluate(a);
    double rho = clearance_radius(cs, c0) * rho_factor;
    const double rho_floor = 1e-6 * (1.0 + std::abs(c0));

    PathPlan plan;
    while (true) {
        try {
            plan = plan_path(c0, cs, rho);
            break;
        } catch (const Error& e) {
            if (e.code() != Errc::plan_exhausted) throw;
            rho *= 0.5;
            if (rho < rho_floor) throw;
        }
    }

    auto [z, trace] = track_path(pm, plan, a, cfg);
    mon.tracker_steps += static_cast<long>(trace.records.size()) - 1;
    if (mon.on_trace) mon.on_trace(pm, trace);
    return TraceRun{pm, std::move(plan), std::move(trace), z, cs.values};
}

struct OneOutcome {
    RootRecord record;
    std::vector<Complex> critical_values;
};

inline OneOutcome solve_one_impl(const Polynomial& p, std::uint64_t seed, const TrackerConfig& cfg,
                                 SolveMonitor& mon) {
    const Polynomial pm = p.monicize();
    if (pm.degree() == 1) {
        const Complex root = -pm.coeffs()[0];
        return {RootRecord{root, 1, std::abs(pm.evaluate(root)), Provenance::LinearClosedForm}, {}};
    }

    const CriticalStructure cs = critical_structure(pm, recursion_adapter(seed, cfg, mon));
    const double root_tol = kRootTolRel * pm.scale();

    if (auto rec = critical_branch_root(pm, cs, root_tol, cfg)) return {*rec, cs.values};

    std::string failures;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const double rho_factor = attempt >= 2 ? std::ldexp(1.0, -(attempt - 1)) : 1.0;
        try {
            TraceRun run =
                attempt_regular(pm, cs, seed + static_cast<std::uint64_t>(attempt), rho_factor, cfg, mon);
            return {RootRecord{run.root, 1, std::abs(pm.evaluate(run.root)), Provenance::RegularTrack},
                    cs.values};
        } catch (const Error& e) {
            ++mon.retries;
            failures += " [attempt " + std::to_string(attempt + 1) + "] " + std::string(e.what());
            if (e.code() == Errc::step_underflow || e.code() == Errc::target_critical) {
                // the usual symptom of 0 sitting just outside the strict
                // critical trigger; recheck with 100x slack instead of
                // perturbing the problem
                if (auto rec = critical_branch_root(pm, cs, root_tol * 100.0, cfg))
                    return {*rec, cs.values};
            }
        }
    }
    if (auto rec = critical_branch_root(pm, cs, root_tol * 100.0, cfg)) return {*rec, cs.values};
    throw Error(Errc::solve_failed, "no root found for degree " + std::to_string(pm.degree()) +
                                        " polynomial:" + failures);
}

inline RootResult solve_all_impl(const Polynomial& p, std::uint64_t seed, const TrackerConfig& cfg,
                                 SolveMonitor& mon) {
    if (p.degree() < 1) throw std::invalid_argument("solve_all: degree must be >= 1");
    RootResult result;
    result.degree = p.degree();
    result.seed = seed;

    Polynomial current = p.monicize();
    bool first_round = true;
    while (true) {
        OneOutcome out = solve_one_impl(current, seed, cfg, mon);
        if (first_round) {
            result.critical_values = std::move(out.critical_values);
            first_round = false;
        }
        for (int k = 0; k < out.record.multiplicity; ++k)
            current = current.deflate(out.record.value).first;
        result.roots.push_back(out.record);
        if (current.degree() == 0) break;
    }

    // deflation accumulates error; polish simple roots against the original
    // polynomial, then report every residual against it as well
    for (RootRecord& rec : result.roots) {
        if (rec.multiplicity == 1) {
            try {
                rec.value = newton_refine(p, Complex{0.0, 0.0}, rec.value, cfg).first;
            } catch (const Error&) {
            }
        }
        rec.residual = std::abs(p.evaluate(rec.value));
    }

    result.retries = mon.retries;
    result.total_tracker_steps = mon.tracker_steps;
    return result;
}

}  // namespace detail

/// Find one root of P. Branches in order: linear closed form; a critical
/// point that is itself a root (multiple root, with multiplicity); otherwise
/// 0 is a regular value and a tracked path from a regular start reaches it.
inline RootRecord solve_one(const Polynomial& p, std::uint64_t seed, const TrackerConfig& cfg = {}) {
    if (p.degree() < 1) throw std::invalid_argument("solve_one: degree must be >= 1");
    cfg.validate();
    SolveMonitor mon;
    RootRecord rec = detail::solve_one_impl(p, seed, cfg, mon).record;
    rec.residual = std::abs(p.evaluate(rec.value));
    return rec;
}

/// All roots with multiplicity: repeatedly solve_one, deflate, and finally
/// polish every simple root against the original polynomial. Multiplicities
/// always sum to the input degree.
inline RootResult solve_all(const Polynomial& p, std::uint64_t seed, const TrackerConfig& cfg = {},
                            SolveMonitor* monitor = nullptr) {
    cfg.validate();
    SolveMonitor run;
    if (monitor) run.on_trace = monitor->on_trace;
    RootResult result = detail::solve_all_impl(p, seed, cfg, run);
    if (monitor) {
        monitor->tracker_steps += run.tracker_steps;
        monitor->retries += run.retries;
    }
    return result;
}

/// The recursion closer: a RootFinder that runs solve_all and flattens
/// multiplicities into a repeated list, suitable for critical_structure.
inline RootFinder solve_callback_adapter(std::uint64_t seed, const TrackerConfig& cfg = {}) {
    return [seed, cfg](const Polynomial& q) {
        const RootResult res = solve_all(q, seed, cfg);
        std::vector<Complex> flat;
        flat.reserve(static_cast<std::size_t>(q.degree()));
        for (const RootRecord& rec : res.roots)
            for (int k = 0; k < rec.multiplicity; ++k) flat.push_back(rec.value);
        return flat;
    };
}

/// Run the regular branch only, keeping the plan and trace for diagnostics.
/// Fails with TargetCritical when the polynomial takes the multiple-root
/// branch instead (there is no tracked path in that case).
inline TraceRun trace_regular_track(const Polynomial& p, std::uint64_t seed,
                                    const TrackerConfig& cfg = {}) {
    if (p.degree() < 1) throw std::invalid_argument("trace_regular_track: degree must be >= 1");
    cfg.validate();
    const Polynomial pm = p.monicize();
    SolveMonitor mon;
    CriticalStructure cs;
    if (pm.degree() >= 2) {
        cs = critical_structure(pm, detail::recursion_adapter(seed, cfg, mon));
        if (detail::critical_branch_root(pm, cs, detail::kRootTolRel * pm.scale(), cfg))
            throw Error(Errc::target_critical,
                        "a critical point is a root; the solve takes the multiple-root branch");
    }
    std::string failures;
    for (int attempt = 0; attempt < detail::kMaxAttempts; ++attempt) {
        const double rho_factor = attempt >= 2 ? std::ldexp(1.0, -(attempt - 1)) : 1.0;
        try {
            return detail::attempt_regular(pm, cs, seed + static_cast<std::uint64_t>(attempt),
                                           rho_factor, cfg, mon);
        } catch (const Error& e) {
            failures += " [attempt " + std::to_string(attempt + 1) + "] " + std::string(e.what());
        }
    }
    throw Error(Errc::solve_failed, "no tracked path found:" + failures);
}

}  // namespace rootpath
