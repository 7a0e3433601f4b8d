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

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "rootpath/report.hpp"
#include "rootpath/rootpath.hpp"
#include "rootpath/svg.hpp"

// Exit codes: 0 success, 1 parse/validation error, 2 solve or check failure,
// 3 unwritable output path.

namespace {

using namespace rootpath;

Polynomial polynomial_from_flag(const std::string& csv) {
    std::vector<Complex> coeffs = parse_coefficient_list(csv);
    if (coeffs.size() < 2) throw Error(Errc::parse_error, "degree must be >= 1");
    if (std::abs(coeffs.back()) == 0.0)
        throw Error(Errc::parse_error, "leading coefficient must be nonzero");
    return Polynomial(std::move(coeffs));
}

int cmd_roots(const std::string& coeffs, std::uint64_t seed, bool pretty) {
    const Polynomial p = polynomial_from_flag(coeffs);
    const RootResult result = solve_all(p, seed);
    std::cout << result_document(p, result).dump(pretty ? 2 : -1) << "\n";
    return 0;
}

int cmd_critical(const std::string& coeffs, std::uint64_t seed, bool pretty) {
    const Polynomial p = polynomial_from_flag(coeffs).monicize();
    const CriticalStructure cs = critical_structure(p, solve_callback_adapter(seed));
    std::cout << critical_document(cs).dump(pretty ? 2 : -1) << "\n";
    return 0;
}

int cmd_trace(const std::string& coeffs, std::uint64_t seed, const std::string& out_json,
              const std::string& out_svg) {
    const Polynomial p = polynomial_from_flag(coeffs);
    const TraceRun run = trace_regular_track(p, seed);

    {
        std::ofstream out(out_json);
        if (!out) {
            std::cerr << "cannot write '" << out_json << "'\n";
            return 3;
        }
        out << trace_document(run, seed).dump(2) << "\n";
        if (!out.flush()) {
            std::cerr << "cannot write '" << out_json << "'\n";
            return 3;
        }
    }
    if (!out_svg.empty()) {
        std::ofstream out(out_svg);
        if (!out) {
            std::cerr << "cannot write '" << out_svg << "'\n";
            return 3;
        }
        out << trace_svg(run);
        if (!out.flush()) {
            std::cerr << "cannot write '" << out_svg << "'\n";
            return 3;
        }
    }
    return 0;
}

int cmd_check(int degree, int count, std::uint64_t seed, double tol) {
    int matched = 0;
    int skipped = 0;
    double max_distance = 0.0;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t inst_seed = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        const Polynomial p = random_monic_polynomial(inst_seed, degree);
        const RootResult result = solve_all(p, inst_seed);

        std::vector<Complex> mine;
        for (const RootRecord& rec : result.roots)
            for (int k = 0; k < rec.multiplicity; ++k) mine.push_back(rec.value);

        std::vector<Complex> reference;
        try {
            reference = weierstrass_roots(p);
        } catch (const Error& e) {
            if (e.code() != Errc::oracle_diverged) throw;
            ++skipped;
            std::cout << "instance " << i << ": skipped (oracle diverged)\n";
            continue;
        }

        const MatchResult match = match_multisets(mine, reference, tol);
        max_distance = std::max(max_distance, match.max_distance);
        std::cout << "instance " << i << ": distance " << match.max_distance
                  << (match.matched ? "" : "  MISMATCH") << "\n";
        if (match.matched) ++matched;
    }
    const int considered = count - skipped;
    std::cout << "matched " << matched << "/" << considered << ", max_distance " << max_distance
              << "\n";
    if (skipped > 0) std::cout << "skipped " << skipped << " (oracle diverged)\n";
    return matched == considered ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial roots by continuation along critical-value-avoiding paths"};
    app.require_subcommand(1);

    std::string coeffs;
    std::uint64_t seed = 0;
    bool pretty = false;
    bool json = false;
    std::string out_json;
    std::string out_svg;
    int degree = 0;
    int count = 0;
    double tol = 1e-6;

    CLI::App* roots = app.add_subcommand("roots", "solve for all roots, with multiplicity");
    roots->add_option("--coeffs", coeffs, "coefficients a0,a1,...,an (ascending)")->required();
    roots->add_option("--seed", seed, "random seed (default 0)");
    roots->add_flag("--json", json, "compact JSON output (default)");
    roots->add_flag("--pretty", pretty, "indented JSON output")->excludes("--json");

    CLI::App* critical = app.add_subcommand("critical", "critical points and critical values");
    critical->add_option("--coeffs", coeffs, "coefficients a0,a1,...,an (ascending)")->required();
    critical->add_option("--seed", seed, "random seed (default 0)");
    critical->add_flag("--pretty", pretty, "indented JSON output");

    CLI::App* trace = app.add_subcommand("trace", "record one tracked path as JSON and SVG");
    trace->add_option("--coeffs", coeffs, "coefficients a0,a1,...,an (ascending)")->required();
    trace->add_option("--seed", seed, "random seed (default 0)");
    trace->add_option("--out-json", out_json, "trace document path")->required();
    trace->add_option("--out-svg", out_svg, "two-panel SVG path");

    CLI::App* check = app.add_subcommand("check", "cross-validate against the simultaneous-iteration oracle");
    check->add_option("--degree", degree, "instance degree")->required()->check(CLI::PositiveNumber);
    check->add_option("--count", count, "number of instances")->required()->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "random seed (default 0)");
    check->add_option("--tol", tol, "match tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (roots->parsed()) return cmd_roots(coeffs, seed, pretty);
        if (critical->parsed()) return cmd_critical(coeffs, seed, pretty);
        if (trace->parsed()) return cmd_trace(coeffs, seed, out_json, out_svg);
        return cmd_check(degree, count, seed, tol);
    } catch (const rootpath::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == rootpath::Errc::parse_error ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
