/*
   Copyright 2026 the abelzeta authors

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

/*
   Command-line front end. Subcommands: analyze (full JSON report for one
   cover), sweep (CSV + JSON summary + optional SVG from a plan file),
   oracle (randomized splitting vs brute-force cross-check), and irr-count
   (irreducible-count table). Exit codes: 0 success, 1 unexpected error,
   2 parse error, 3 validation error, 4 budget exceeded, 5 invariant breach.
*/

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "oracle.hpp"
#include "sweep.hpp"

namespace abelzeta {

namespace detail {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw ValidationError("cannot write file '" + path + "'");
    outf << text;
    if (!outf.good()) throw ValidationError("short write to '" + path + "'");
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"exact zeta and class-number laboratory for abelian covers of F_q(x)"};
    app.require_subcommand(1);
    unsigned threads = 1;
    std::uint64_t budget = default_budget;
    unsigned digits = 30;
    bool want_json = false, want_csv = false;
    app.add_option("--threads", threads, "worker threads")->capture_default_str();
    app.add_option("--budget", budget, "enumeration budget in field elements")
        ->capture_default_str();
    app.add_option("--precision-digits", digits, "significant digits for reported reals")
        ->capture_default_str();
    app.add_flag("--json", want_json, "prefer JSON output where a choice exists");
    app.add_flag("--csv", want_csv, "prefer CSV output where a choice exists");

    auto* cmd_analyze = app.add_subcommand("analyze", "full report for one cover spec");
    std::string spec_text;
    cmd_analyze->add_option("spec", spec_text, "cover spec, e.g. kummer:q=3,m=2,f=x^3+2*x")
        ->required();

    auto* cmd_sweep = app.add_subcommand("sweep", "run a family sweep from a plan file");
    std::string plan_path, svg_override;
    bool timings = false, no_svg_timestamp = false;
    cmd_sweep->add_option("--plan", plan_path, "sweep plan JSON file")->required();
    cmd_sweep->add_option("--svg", svg_override, "write the ratio chart to this path");
    cmd_sweep->add_flag("--timings", timings, "append a wall_ms column to the CSV");
    cmd_sweep->add_flag("--no-svg-timestamp", no_svg_timestamp,
                        "omit the generation timestamp comment from the SVG");

    auto* cmd_oracle = app.add_subcommand("oracle", "randomized splitting cross-check");
    std::uint64_t seed = 1;
    unsigned count = 25, max_genus = 6;
    std::uint64_t draw_cap = 1ull << 20;
    cmd_oracle->add_option("--seed", seed, "draw seed")->capture_default_str();
    cmd_oracle->add_option("--count", count, "number of random specs")->capture_default_str();
    cmd_oracle->add_option("--max-genus", max_genus, "genus cap for drawn specs")
        ->capture_default_str();
    cmd_oracle->add_option("--draw-cap", draw_cap, "enumeration cap per drawn spec")
        ->capture_default_str();

    auto* cmd_irr = app.add_subcommand("irr-count", "monic irreducible counts over F_q");
    std::uint64_t irr_q = 2;
    unsigned irr_m = 1;
    cmd_irr->add_option("--q", irr_q, "field order")->required();
    cmd_irr->add_option("--m", irr_m, "maximum degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_code::parse;
    }

    AnalysisOptions opt;
    opt.budget = budget;
    opt.threads = std::max(1u, threads);
    opt.precision_digits = std::max(30u, digits);

    try {
        if (*cmd_analyze) {
            const CoverSpec spec = parse_cover_spec(spec_text, opt.budget);
            const AnalysisReport rep = analyze_cover(spec, opt);
            out << report_json(rep).dump(2) << "\n";
            return has_hard_failure(rep.checks) ? exit_code::invariant
                                                : exit_code::ok;
        }
        if (*cmd_sweep) {
            SweepPlan plan = parse_sweep_plan(detail::read_text_file(plan_path));
            if (!svg_override.empty()) plan.svg_path = svg_override;
            const SweepResult res = run_sweep(plan, opt, timings, !no_svg_timestamp);
            detail::write_text_file(plan.csv_path, res.csv);
            const std::string summary = res.summary.dump(2) + "\n";
            if (plan.summary_path.empty())
                out << summary;
            else
                detail::write_text_file(plan.summary_path, summary);
            if (!plan.svg_path.empty()) detail::write_text_file(plan.svg_path, res.svg);
            return exit_code::ok;
        }
        if (*cmd_oracle) {
            const OracleOutcome o = run_oracle(seed, count, max_genus, opt, draw_cap);
            if (want_json)
                out << oracle_json(o).dump(2) << "\n";
            else
                out << oracle_text(o);
            return o.ok() ? exit_code::ok
                          : exit_code::invariant;
        }
        if (*cmd_irr) {
            if (irr_m < 1) throw ValidationError("maximum degree must be at least 1");
            const FieldCtxPtr ctx = field_from_order(irr_q, opt.budget);
            unsigned dmax_enum = 0;
            {
                Int pw = 1;
                for (unsigned d = 1; d <= irr_m; ++d) {
                    pw *= Int(static_cast<unsigned long>(irr_q));
                    if (pw > Int(static_cast<unsigned long>(opt.budget))) break;
                    dmax_enum = d;
                }
            }
            std::shared_ptr<const IrreducibleTable> tab;
            if (dmax_enum >= 2) tab = irreducibles_up_to(ctx, dmax_enum, opt.budget);
            if (want_csv) out << "d,psi,enumerated\n";
            for (unsigned d = 1; d <= irr_m; ++d) {
                const Int psi = count_monic_irreducibles(Int(static_cast<unsigned long>(irr_q)), d);
                std::string enumerated;
                if (d == 1 && dmax_enum >= 1)
                    enumerated = std::to_string(irr_q);
                else if (d >= 2 && d <= dmax_enum)
                    enumerated = std::to_string(tab->codes(d).size());
                if (want_csv) {
                    out << d << ',' << dec(psi) << ',' << enumerated << "\n";
                } else {
                    out << "psi(" << d << ") = " << dec(psi);
                    if (!enumerated.empty()) out << "  [enumerated: " << enumerated << "]";
                    out << "\n";
                }
            }
            return exit_code::ok;
        }
        throw ValidationError("no subcommand selected");
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return exit_code::validation;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << "\n";
        return exit_code::budget;
    } catch (const InvariantError& e) {
        err << "invariant breach: " << e.what() << "\n";
        return exit_code::invariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
}

}  // namespace abelzeta
