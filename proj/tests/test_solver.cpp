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

#include <doctest.h>

#include <bit>

#include "rootpath/rootpath.hpp"
#include "support.hpp"

using namespace rootpath;
using testsupport::flatten;
using testsupport::poly_re;

namespace {
bool bit_identical(Complex a, Complex b) {
    return std::bit_cast<std::uint64_t>(a.real()) == std::bit_cast<std::uint64_t>(b.real()) &&
           std::bit_cast<std::uint64_t>(a.imag()) == std::bit_cast<std::uint64_t>(b.imag());
}
}  // namespace

TEST_CASE("solve_one: linear closed form") {
    const RootRecord rec = solve_one(poly_re({5, 1}), 0);
    CHECK(rec.value == Complex{-5, 0});
    CHECK(rec.multiplicity == 1);
    CHECK(rec.provenance == Provenance::LinearClosedForm);
    CHECK(rec.residual == 0.0);
}

TEST_CASE("solve_one: critical branch on (z-1)^2") {
    const RootRecord rec = solve_one(poly_re({1, -2, 1}), 0);
    CHECK(std::abs(rec.value - Complex{1, 0}) <= 1e-10);
    CHECK(rec.multiplicity == 2);
    CHECK(rec.provenance == Provenance::CriticalBranch);
}

TEST_CASE("solve_one: regular track on z^2 + 1") {
    const RootRecord rec = solve_one(poly_re({1, 0, 1}), 0);
    const double dist =
        std::min(std::abs(rec.value - Complex{0, 1}), std::abs(rec.value - Complex{0, -1}));
    CHECK(dist <= 1e-9);
    CHECK(rec.multiplicity == 1);
    CHECK(rec.provenance == Provenance::RegularTrack);
    CHECK(rec.residual <= 1e-10);
}

TEST_CASE("solve_all: z^3 - 1 hits the cube roots of unity") {
    const RootResult res = solve_all(poly_re({-1, 0, 0, 1}), 0);
    const double c = std::cos(2.0 * std::numbers::pi / 3.0);
    const double s = std::sin(2.0 * std::numbers::pi / 3.0);
    const std::vector<Complex> exact{{1, 0}, {c, s}, {c, -s}};
    const auto match = match_multisets(flatten(res), exact, 1e-9);
    CHECK(match.matched);
    CHECK(match.max_distance <= 1e-9);
}

TEST_CASE("solve_all: (z-1)^3 (z+2)") {
    const Polynomial p =
        Polynomial::from_roots({Complex{1, 0}, Complex{1, 0}, Complex{1, 0}, Complex{-2, 0}});
    const RootResult res = solve_all(p, 0);
    REQUIRE(res.roots.size() == 2);
    bool saw_triple = false, saw_simple = false;
    for (const RootRecord& rec : res.roots) {
        if (rec.multiplicity == 3) {
            saw_triple = true;
            CHECK(std::abs(rec.value - Complex{1, 0}) <= 1e-4);
            CHECK(rec.provenance == Provenance::CriticalBranch);
        }
        if (rec.multiplicity == 1) {
            saw_simple = true;
            CHECK(std::abs(rec.value - Complex{-2, 0}) <= 1e-9);
        }
    }
    CHECK(saw_triple);
    CHECK(saw_simple);
}

TEST_CASE("solve_all: seeded degree-6 instance matches the oracle") {
    const Polynomial p = random_monic_polynomial(314159, 6);
    const RootResult res = solve_all(p, 314159);
    const auto match = match_multisets(flatten(res), weierstrass_roots(p), 1e-6);
    CHECK(match.matched);
}

TEST_CASE("solve_all: non-monic input, residuals against the original") {
    const Polynomial p = poly_re({3, 0, 3});  // 3(z^2 + 1)
    const RootResult res = solve_all(p, 0);
    REQUIRE(res.roots.size() == 2);
    for (const RootRecord& rec : res.roots) {
        CHECK(std::abs(p.evaluate(rec.value)) == rec.residual);
        CHECK(rec.residual <= 1e-9);
    }
}

TEST_CASE("solve_callback_adapter: recursion building blocks") {
    const TrackerConfig cfg;
    const RootFinder finder = solve_callback_adapter(0, cfg);

    const auto r1 = finder(poly_re({1, 0, 1}).derivative().monicize());  // z
    REQUIRE(r1.size() == 1);
    CHECK(std::abs(r1[0]) <= 1e-12);

    const auto r2 = finder(poly_re({0, -3, 0, 1}).derivative().monicize());  // z^2 - 1
    const auto match = match_multisets(r2, std::vector<Complex>{{1, 0}, {-1, 0}}, 1e-9);
    CHECK(match.matched);

    const auto r3 = finder(poly_re({7, -4, 1}).derivative().monicize());  // z - 2
    REQUIRE(r3.size() == 1);
    CHECK(std::abs(r3[0] - Complex{2, 0}) <= 1e-12);
}

TEST_CASE("solve_all: mini existence suite with residual, containment, Vieta checks") {
    for (int i = 0; i < 50; ++i) {
        const int degree = 1 + (i % 10);
        const std::uint64_t seed = detail::mix_seed(99, static_cast<std::uint64_t>(i));
        const Polynomial p = random_monic_polynomial(seed, degree);
        const RootResult res = solve_all(p, seed);

        int total = 0;
        for (const RootRecord& rec : res.roots) total += rec.multiplicity;
        CHECK(total == degree);
        CHECK(res.degree == degree);

        const double bound = p.root_bound(0.0);
        bool all_simple = true;
        for (const RootRecord& rec : res.roots) {
            CHECK(std::abs(rec.value) <= bound);
            if (rec.multiplicity == 1)
                CHECK(rec.residual <= 1e-8 * p.magnitude_bound(std::max(1.0, std::abs(rec.value))));
            else
                all_simple = false;
        }

        if (all_simple) {
            const Polynomial rebuilt = Polynomial::from_roots(flatten(res));
            const auto& a = rebuilt.coeffs();
            const auto& b = p.coeffs();
            REQUIRE(a.size() == b.size());
            for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-6);
        }
    }
}

TEST_CASE("solve_all: conjugate symmetry for real coefficients") {
    detail::SplitMix64 g(1717);
    for (int i = 0; i < 20; ++i) {
        const int degree = 2 + static_cast<int>(g.next() % 7);
        std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
        for (auto& a : c) a = Complex{4.0 * g.next_double() - 2.0, 0.0};
        c.back() = Complex{1, 0};
        const Polynomial p{c};
        const RootResult res = solve_all(p, g.next());
        const std::vector<Complex> roots = flatten(res);
        std::vector<Complex> conj;
        conj.reserve(roots.size());
        for (const Complex& r : roots) conj.push_back(std::conj(r));
        const auto match = match_multisets(roots, conj, 1e-8);
        CHECK(match.matched);
    }
}

TEST_CASE("solve_all: determinism is bit-exact") {
    const Polynomial p = random_monic_polynomial(2026, 7);
    const RootResult a = solve_all(p, 5);
    const RootResult b = solve_all(p, 5);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        CHECK(bit_identical(a.roots[i].value, b.roots[i].value));
        CHECK(a.roots[i].multiplicity == b.roots[i].multiplicity);
        CHECK(std::bit_cast<std::uint64_t>(a.roots[i].residual) ==
              std::bit_cast<std::uint64_t>(b.roots[i].residual));
        CHECK(a.roots[i].provenance == b.roots[i].provenance);
    }
    CHECK(a.retries == b.retries);
    CHECK(a.total_tracker_steps == b.total_tracker_steps);

    // a different seed may pick different branches but stays valid
    const RootResult c = solve_all(p, 6);
    const auto match = match_multisets(flatten(a), flatten(c), 1e-6);
    CHECK(match.matched);
}

TEST_CASE("solve_all: SolveFailed carries the retry chain when tracking is impossible") {
    TrackerConfig cfg;
    cfg.newton_max = 1;
    cfg.accept_iters = 1;
    cfg.h_init = 0.25;
    cfg.h_min = 0.25;  // the very first halving underflows
    cfg.h_max = 0.25;
    try {
        solve_all(poly_re({1, 0, 1}), 0, cfg);
        FAIL("expected SolveFailed");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::solve_failed);
        CHECK(std::string(e.what()).find("attempt 5") != std::string::npos);
    }
}

TEST_CASE("solve monitors count steps and see traces") {
    SolveMonitor mon;
    long seen_records = 0;
    mon.on_trace = [&](const Polynomial&, const Trace& t) {
        seen_records += static_cast<long>(t.records.size()) - 1;
    };
    const RootResult res = solve_all(poly_re({1, 0, 1}), 0, TrackerConfig{}, &mon);
    CHECK(res.total_tracker_steps > 0);
    CHECK(mon.tracker_steps == res.total_tracker_steps);
    CHECK(seen_records == res.total_tracker_steps);
}

TEST_CASE("trace_regular_track: regular case and critical refusal") {
    const TraceRun run = trace_regular_track(poly_re({1, 0, 1}), 0);
    CHECK(run.plan.waypoints.back() == Complex{0, 0});
    CHECK(std::abs(run.monic.evaluate(run.root)) <= 1e-10);
    CHECK(run.trace.records.size() >= 2);

    try {
        trace_regular_track(poly_re({1, -2, 1}), 0);
        FAIL("expected TargetCritical");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::target_critical);
    }
}
