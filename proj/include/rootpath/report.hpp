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

#include <json.hpp>

#include "rootpath/solver.hpp"

// JSON document shapes for the CLI. Keys serialize alphabetically, doubles
// shortest-round-trip, so identical runs produce byte-identical documents.

namespace rootpath {

using Json = nlohmann::json;

inline Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json complex_array_json(std::span<const Complex> zs) {
    Json arr = Json::array();
    for (const Complex& z : zs) arr.push_back(complex_json(z));
    return arr;
}

/// schema_version "1". Roots sorted by (re, im) so diffs are stable; the
/// solver's discovery order lives only in RootResult. The input coefficients
/// are echoed so a document can be re-run as-is.
inline Json result_document(const Polynomial& input, const RootResult& result) {
    std::vector<RootRecord> sorted = result.roots;
    std::sort(sorted.begin(), sorted.end(),
              [](const RootRecord& a, const RootRecord& b) { return lex_less(a.value, b.value); });

    Json roots = Json::array();
    for (const RootRecord& rec : sorted) {
        roots.push_back(Json{{"re", rec.value.real()},
                             {"im", rec.value.imag()},
                             {"multiplicity", rec.multiplicity},
                             {"residual", rec.residual},
                             {"provenance", provenance_name(rec.provenance)}});
    }

    return Json{{"schema_version", "1"},
                {"degree", result.degree},
                {"seed", result.seed},
                {"coeffs", complex_array_json(input.coeffs())},
                {"roots", roots},
                {"diagnostics",
                 Json{{"retries", result.retries},
                      {"total_tracker_steps", result.total_tracker_steps},
                      {"critical_values", complex_array_json(result.critical_values)}}}};
}

/// Critical points (with repetition) and deduplicated critical values, both
/// sorted by (re, im).
inline Json critical_document(const CriticalStructure& cs) {
    std::vector<Complex> points = cs.points;
    std::sort(points.begin(), points.end(), lex_less);
    return Json{{"points", complex_array_json(points)}, {"values", complex_array_json(cs.values)}};
}

/// Full trace of one regular-branch run: plan, critical values, every
/// accepted step, and the root it landed on. Coefficients are those of the
/// monic polynomial that was actually tracked.
inline Json trace_document(const TraceRun& run, std::uint64_t seed) {
    Json records = Json::array();
    for (const TraceRecord& rec : run.trace.records) {
        records.push_back(Json{{"t", rec.t},
                               {"c", complex_json(rec.c)},
                               {"z", complex_json(rec.z)},
                               {"h", rec.h},
                               {"newton_iters", rec.newton_iters}});
    }
    return Json{{"schema_version", "1"},
                {"seed", seed},
                {"coeffs", complex_array_json(run.monic.coeffs())},
                {"plan",
                 Json{{"waypoints", complex_array_json(run.plan.waypoints)},
                      {"clearance", run.plan.clearance}}},
                {"critical_values", complex_array_json(run.critical_values)},
                {"records", records},
                {"root", complex_json(run.root)}};
}

}  // namespace rootpath
