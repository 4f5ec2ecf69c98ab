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
   Family sweeps: a plan fixes the family, base field, and a finite degree
   schedule; each row draws a seeded random polynomial of the scheduled
   degree, runs the full analysis pipeline, and lands in a CSV table plus a
   JSON summary. Rows are computed in parallel but merged by row index, and
   every random draw comes from a per-row child stream, so the output is
   byte-identical for any worker count. A hard-invariant breach in any row
   aborts the sweep, pointing at the offending spec. Rows whose genus
   reaches the plan's segment threshold additionally assert the two
   asymptotic hypotheses.
*/

#pragma once

#include <chrono>
#include <optional>

#include "draw.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace abelzeta {

struct SweepPlan {
    Family family = Family::artin_schreier;
    std::uint64_t q = 2;
    unsigned m = 0;  // kummer only
    unsigned deg_min = 0;
    unsigned deg_max = 0;
    unsigned deg_step = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;  // 0: inherit the command-line budget
    std::optional<unsigned> segment_min_genus;
    std::string csv_path;
    std::string summary_path;  // empty: summary to standard output
    std::string svg_path;      // empty: no chart
};

inline SweepPlan parse_sweep_plan(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("plan is not valid JSON: ") + e.what());
    }
    static const char* known[] = {"family",  "q",    "m",       "deg_min", "deg_max", "deg_step",
                                  "seed",    "budget", "segment_min_genus", "csv",   "summary",
                                  "svg"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ValidationError("unknown plan key '" + key + "'");
    }
    SweepPlan plan;
    try {
        const std::string fam = j.at("family").get<std::string>();
        if (fam == "kummer")
            plan.family = Family::kummer;
        else if (fam == "as" || fam == "artin-schreier")
            plan.family = Family::artin_schreier;
        else
            throw ValidationError("unknown family '" + fam + "'");
        plan.q = j.at("q").get<std::uint64_t>();
        if (j.contains("m")) plan.m = j["m"].get<unsigned>();
        plan.deg_min = j.at("deg_min").get<unsigned>();
        plan.deg_max = j.at("deg_max").get<unsigned>();
        if (j.contains("deg_step")) plan.deg_step = j["deg_step"].get<unsigned>();
        if (j.contains("seed")) plan.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("budget")) plan.budget = j["budget"].get<std::uint64_t>();
        if (j.contains("segment_min_genus"))
            plan.segment_min_genus = j["segment_min_genus"].get<unsigned>();
        plan.csv_path = j.at("csv").get<std::string>();
        if (j.contains("summary")) plan.summary_path = j["summary"].get<std::string>();
        if (j.contains("svg")) plan.svg_path = j["svg"].get<std::string>();
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("bad plan field: ") + e.what());
    }
    if (plan.deg_step < 1) throw ValidationError("deg_step must be at least 1");
    if (plan.family == Family::kummer && plan.m < 2)
        throw ValidationError("kummer plan needs m >= 2");
    if (plan.family == Family::artin_schreier && plan.m != 0)
        throw ValidationError("artin-schreier plan takes no m");
    return plan;
}

inline std::vector<unsigned> sweep_degrees(const SweepPlan& plan) {
    std::vector<unsigned> d;
    for (unsigned v = plan.deg_min; plan.deg_min > 0 && v <= plan.deg_max; v += plan.deg_step)
        d.push_back(v);
    return d;
}

struct SweepResult {
    std::vector<AnalysisReport> rows;
    std::vector<std::uint64_t> wall_ms;
    std::string csv;
    Json summary;
    std::string svg;  // empty unless the plan names a chart
};

/// Upper bound on max |ratio - 1| over the given rows, as a decimal string.
inline std::string max_abs_ratio_deviation(const std::vector<const AnalysisReport*>& rows,
                                           unsigned digits) {
    const mpfr_prec_t prec = bits_for_digits(digits + 20);
    mpfr_t best, t;
    mpfr_init2(best, prec);
    mpfr_init2(t, prec);
    mpfr_set_zero(best, 1);
    for (const AnalysisReport* r : rows) {
        const Interval iv = detail::ratio_interval(r->q, r->g, r->h, prec);
        mpfr_ui_sub(t, 1, iv.lo(), MPFR_RNDU);
        if (mpfr_cmp(t, best) > 0) mpfr_set(best, t, MPFR_RNDU);
        mpfr_sub_ui(t, iv.hi(), 1, MPFR_RNDU);
        if (mpfr_cmp(t, best) > 0) mpfr_set(best, t, MPFR_RNDU);
    }
    const std::string out = decimal_string(best, digits);
    mpfr_clear(best);
    mpfr_clear(t);
    return out;
}

inline SweepResult run_sweep(const SweepPlan& plan, const AnalysisOptions& cli_opt,
                             bool timings = false, bool svg_timestamp = true) {
    AnalysisOptions opt = cli_opt;
    if (plan.budget != 0) opt.budget = plan.budget;
    const FieldCtxPtr base = field_from_order(plan.q, opt.budget);
    if (plan.family == Family::kummer && (base->q() - 1) % plan.m != 0)
        throw ValidationError("kummer degree " + std::to_string(plan.m) +
                              " does not divide q - 1");
    const auto degrees = sweep_degrees(plan);
    // artin-schreier degree constraint is a schedule property, checked up front
    if (plan.family == Family::artin_schreier)
        for (unsigned D : degrees)
            if (D % base->p() == 0)
                throw ValidationError("scheduled degree " + std::to_string(D) +
                                      " is divisible by the characteristic");
    SweepResult out;
    out.rows.resize(degrees.size());
    out.wall_ms.assign(degrees.size(), 0);
    parallel_tasks(degrees.size(), opt.threads, [&](std::size_t i) {
        Rng rng = Rng::child(plan.seed, i);
        const CoverSpec spec = random_cover(plan.family, base, plan.m, degrees[i], rng);
        AnalysisOptions row_opt = opt;
        if (plan.segment_min_genus) {
            const Int g = ramification_report(spec, opt.budget).genus;
            row_opt.assert_asymptotic = g >= *plan.segment_min_genus;
        }
        const auto t0 = std::chrono::steady_clock::now();
        out.rows[i] = analyze_cover(spec, row_opt);
        const auto t1 = std::chrono::steady_clock::now();
        out.wall_ms[i] =
            std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    });
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        if (has_hard_failure(out.rows[i].checks))
            throw InvariantError("sweep aborted: hard invariant breach at row " +
                                 std::to_string(i) + " (" + out.rows[i].spec_text + ")");
    out.csv = csv_header(timings);
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        out.csv += csv_row(out.rows[i],
                           timings ? std::optional<std::uint64_t>(out.wall_ms[i]) : std::nullopt);
    // summary
    std::vector<const AnalysisReport*> segment;
    for (const auto& r : out.rows)
        if (plan.segment_min_genus && r.g >= *plan.segment_min_genus) segment.push_back(&r);
    Json s;
    s["family"] = family_name(plan.family);
    s["q"] = plan.q;
    if (plan.family == Family::kummer) s["m"] = plan.m;
    s["deg_min"] = plan.deg_min;
    s["deg_max"] = plan.deg_max;
    s["deg_step"] = plan.deg_step;
    s["seed"] = plan.seed;
    s["rows"] = out.rows.size();
    s["segment_min_genus"] =
        plan.segment_min_genus ? Json(*plan.segment_min_genus) : Json(nullptr);
    s["segment_rows"] = segment.size();
    s["max_abs_ratio_minus_one"] =
        segment.empty()
            ? Json(nullptr)
            : Json(max_abs_ratio_deviation(segment, std::max(30u, opt.precision_digits)));
    s["all_hard_checks_pass"] = true;
    out.summary = s;
    if (!plan.svg_path.empty()) {
        std::vector<SvgPoint> pts;
        for (const auto& r : out.rows)
            if (r.g >= 1 && r.ratio) {
                const Interval iv =
                    detail::ratio_interval(r.q, r.g, r.h, bits_for_digits(40));
                pts.push_back({r.g, mpfr_get_d(iv.lo(), MPFR_RNDN)});
            }
        out.svg = render_ratio_svg(pts, double(plan.q), svg_timestamp);
    }
    return out;
}

}  // namespace abelzeta
