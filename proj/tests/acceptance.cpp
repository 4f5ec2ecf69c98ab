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
   Release gate. Ten independent criteria, one verdict line each; a failing
   criterion never stops the later ones. Exit status is nonzero if any
   criterion fails. Expected wall time is well under a minute for the fast
   criteria plus a few seconds per sweep rerun.
*/

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <abelzeta/oracle.hpp>
#include <abelzeta/sweep.hpp>

using namespace abelzeta;

namespace {

int failures = 0;

void verdict(int num, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << num << ": " << (ok ? "pass" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void wreck(int num, const std::string& what, const std::exception& e) {
    verdict(num, false, what, std::string("unexpected error: ") + e.what());
}

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

bool all_pass(const std::vector<const AnalysisReport*>& rows, CheckStatus CheckSet::*member,
              std::string& detail) {
    for (const AnalysisReport* r : rows)
        if (r->checks.*member != CheckStatus::pass) {
            detail = r->spec_text + " is " + to_string(r->checks.*member);
            return false;
        }
    detail = std::to_string(rows.size()) + " instances";
    return true;
}

}  // namespace

int main() {
    AnalysisOptions opt;
    opt.threads = 8;

    OracleOutcome oracle;
    std::vector<AnalysisReport> reports;  // worked + oracle + sweep rows
    std::vector<std::size_t> oracle_idx, sweep_idx;
    SweepPlan as_plan;
    SweepResult as_sweep;
    bool as_sweep_ok = false;
    double as_sweep_seconds = 0;
    SweepResult kummer_sweep;

    // 1: randomized splitting-vs-brute-force agreement inside the time box
    const std::string what1 =
        "25 seeded specs over q in {2,3,4,5,7,8,9}, genus <= 6: splitting S_k equals "
        "brute force for k = 1..2g+1 in under 60s";
    try {
        const auto t0 = Clock::now();
        oracle = run_oracle(1, 25, 6, opt);
        const double s = seconds_since(t0);
        std::string detail = fmt_seconds(s);
        if (!oracle.ok()) detail = oracle.failures.front().spec + ": " +
                                   oracle.failures.front().message;
        verdict(1, oracle.ok() && oracle.specs.size() == 25 && s < 60.0, what1, detail);
    } catch (const std::exception& e) {
        wreck(1, what1, e);
    }

    // 2: functional equation, and N_1..N_g alone predict the degree-(g+1) data
    const std::string what2 =
        "functional equation holds coefficientwise and the L-polynomial built from "
        "N_1..N_g predicts S_{g+1} for every oracle spec";
    try {
        bool ok = !oracle.specs.empty();
        std::string detail = std::to_string(oracle.specs.size()) + " specs";
        for (const std::string& text : oracle.specs) {
            const CoverSpec spec = parse_cover_spec(text, opt.budget);
            const Int q = spec.base->q_int();
            const auto ram = ramification_report(spec, opt.budget);
            const unsigned g = static_cast<unsigned>(ram.genus.get_ui());
            const auto N = count_places(spec, g + 1, opt.budget, opt.threads);
            const LPolynomial L =
                lpoly_from_counts(q, g, std::vector<Int>(N.begin(), N.begin() + g));
            for (unsigned i = 0; i <= g; ++i)
                if (L.coeffs[2 * g - i] != int_pow(q, g - i) * L.coeffs[i]) {
                    ok = false;
                    detail = text + ": functional equation breaks at i=" + std::to_string(i);
                }
            const auto s_pred = predicted_power_sum_counts(L, g + 1);
            const auto s_seen = power_sums_of_counts(N);
            if (s_pred[g] != s_seen[g]) {
                ok = false;
                detail = text + ": predicted S_" + std::to_string(g + 1) + " = " +
                         dec(s_pred[g]) + ", counted " + dec(s_seen[g]);
            }
            oracle_idx.push_back(reports.size());
            reports.push_back(analyze_cover(spec, opt));
        }
        verdict(2, ok, what2, detail);
    } catch (const std::exception& e) {
        wreck(2, what2, e);
    }

    // 3: the two worked instances, every derived quantity pinned
    const std::string what3 =
        "worked instances: y^2 - y = x^3 over F_2 gives P = 1 + 2u^2, h = 3, g = 1, "
        "deg different 4; y^2 = x^3 + 2x over F_3 gives P = 1 + 3u^2, h = 4, g = 1, "
        "deg different 4";
    try {
        const auto wild = analyze_cover(parse_cover_spec("as:q=2,f=x^3"), opt);
        const auto tame = analyze_cover(parse_cover_spec("kummer:q=3,m=2,f=x^3+2*x"), opt);
        const bool ok = wild.L.coeffs == std::vector<Int>{1, 0, 2} && wild.h == 3 &&
                        wild.g == 1 && wild.deg_different == 4 &&
                        tame.L.coeffs == std::vector<Int>{1, 0, 3} && tame.h == 4 &&
                        tame.g == 1 && tame.deg_different == 4;
        reports.push_back(wild);
        reports.push_back(tame);
        reports.push_back(analyze_cover(parse_cover_spec("kummer:q=3,m=2,f=x"), opt));
        verdict(3, ok, what3);
    } catch (const std::exception& e) {
        wreck(3, what3, e);
    }

    // both sweep fixtures run here so criteria 4..7 can quantify over their rows;
    // criterion 9 reports the stored result and timing
    try {
        as_plan.family = Family::artin_schreier;
        as_plan.q = 2;
        as_plan.deg_min = 3;
        as_plan.deg_max = 41;
        as_plan.deg_step = 2;
        as_plan.seed = 1;
        as_plan.segment_min_genus = 10;
        const auto t0 = Clock::now();
        as_sweep = run_sweep(as_plan, opt);
        as_sweep_seconds = seconds_since(t0);
        as_sweep_ok = true;

        SweepPlan kp;
        kp.family = Family::kummer;
        kp.q = 5;
        kp.m = 2;
        kp.deg_min = 5;
        kp.deg_max = 9;
        kp.deg_step = 2;
        kp.seed = 7;
        kummer_sweep = run_sweep(kp, opt);
        for (const auto& r : as_sweep.rows) {
            sweep_idx.push_back(reports.size());
            reports.push_back(r);
        }
        for (const auto& r : kummer_sweep.rows) {
            sweep_idx.push_back(reports.size());
            reports.push_back(r);
        }
    } catch (const std::exception& e) {
        std::cout << "sweep fixtures failed to run: " << e.what() << std::endl;
    }

    // pointer views are built only now, after the report store stops growing
    std::vector<const AnalysisReport*> every_instance;
    for (const auto& r : reports) every_instance.push_back(&r);
    std::vector<const AnalysisReport*> hard_set;
    for (std::size_t i : oracle_idx) hard_set.push_back(&reports[i]);
    for (std::size_t i : sweep_idx) hard_set.push_back(&reports[i]);

    // 4: divisor counts in the window of the duality argument
    {
        std::string detail;
        const bool ok =
            !every_instance.empty() &&
            all_pass(every_instance, &CheckSet::riemann_roch, detail);
        verdict(4, ok,
                "A_n (q - 1) = h (q^{n-g+1} - 1) on max(0, 2g-1) <= n <= 2g+1 for every "
                "analyzed instance",
                detail);
    }

    // 5: rational-count deviation bound through degree 2g
    {
        std::string detail;
        const bool ok =
            !every_instance.empty() && all_pass(every_instance, &CheckSet::lemma2, detail);
        verdict(5, ok,
                "|N_m - n_m| <= 4g q^{m/2} for m <= 2g on every analyzed instance", detail);
    }

    // 6: hard invariants on the oracle suite and both sweeps
    {
        std::string detail;
        bool ok = !hard_set.empty();
        ok = ok && all_pass(hard_set, &CheckSet::upper_h, detail);
        ok = ok && all_pass(hard_set, &CheckSet::lemma5, detail);
        ok = ok && all_pass(hard_set, &CheckSet::hasse_arf_first, detail);
        ok = ok && all_pass(hard_set, &CheckSet::hasse_arf_second, detail);
        verdict(6, ok,
                "h <= (1 + sqrt q)^{2g} exactly in Z[sqrt q], 2 alpha >= ke with "
                "e <= q^{dk}, and q^{2 deg D} >= n^n on the oracle suite and both sweeps",
                detail);
    }

    // 7: zeta sandwich at s = 2
    {
        std::string detail;
        const bool ok =
            !every_instance.empty() && all_pass(every_instance, &CheckSet::zeta_chain, detail);
        verdict(7, ok,
                "the class-number chain around zeta_K(2) holds at s = 2 on every analyzed "
                "instance",
                detail);
    }

    // 8: irreducible counts, formula against sieve, and the degree identity
    const std::string what8 =
        "psi(d) formula equals exhaustive enumeration for q <= 5, d <= 8, and "
        "sum_{d | m} d psi(d) = q^m for m <= 12, all in under 10s";
    try {
        const auto t0 = Clock::now();
        bool ok = true;
        std::string detail;
        const std::pair<std::uint64_t, unsigned> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
        for (const auto& [p, n] : fields) {
            const FieldCtxPtr ctx = field_ctx(p, n);
            for (unsigned d = 1; d <= 8; ++d) {
                std::uint64_t seen = 0;
                for_each_monic_irreducible(ctx, d, [&](const Poly&) { ++seen; });
                if (count_monic_irreducibles(ctx->q_int(), d) != Int(seen)) {
                    ok = false;
                    detail = "q = " + dec(ctx->q_int()) + ", d = " + std::to_string(d);
                }
            }
        }
        for (unsigned long qv : {2ul, 3ul, 4ul, 5ul}) {
            const Int q(qv);
            for (unsigned m = 1; m <= 12; ++m) {
                Int s = 0;
                for (unsigned d : divisors_of(m)) s += Int(d) * count_monic_irreducibles(q, d);
                if (s != int_pow(q, m)) {
                    ok = false;
                    detail = "identity fails at q = " + dec(q) + ", m = " + std::to_string(m);
                }
            }
        }
        const double s = seconds_since(t0);
        ok = ok && s < 10.0;
        if (detail.empty()) detail = fmt_seconds(s);
        verdict(8, ok, what8, detail);
    } catch (const std::exception& e) {
        wreck(8, what8, e);
    }

    // 9: the long family sweep with its certified segment
    const std::string what9 =
        "artin-schreier sweep over F_2, degrees 3, 5, .., 41 (genus 1..20): every row "
        "certifies effective_lower <= ratio <= ratio_upper, the g >= 10 segment asserts "
        "the asymptotic floor, under 600s";
    try {
        bool ok = as_sweep_ok && as_sweep.rows.size() == 20 && as_sweep_seconds < 600.0;
        std::string detail;
        if (ok) {
            ok = as_sweep.rows.front().g == 1 && as_sweep.rows.back().g == 20;
            for (const auto& r : as_sweep.rows) {
                if (r.checks.effective_lower != CheckStatus::pass ||
                    r.checks.ratio_upper != CheckStatus::pass) {
                    ok = false;
                    detail = r.spec_text + " not certified";
                }
                if (r.g >= 10 && r.checks.thm1_lower != CheckStatus::pass) {
                    ok = false;
                    detail = r.spec_text + " misses the asserted floor";
                }
            }
            const std::string dev =
                as_sweep.summary["max_abs_ratio_minus_one"].get<std::string>();
            if (dev != "0.234290803379157412037352895824") {
                ok = false;
                detail = "segment deviation drifted to " + dev;
            }
            if (detail.empty())
                detail = "max |ratio - 1| on the segment = " + dev.substr(0, 8) + ".., " +
                         fmt_seconds(as_sweep_seconds);
        }
        verdict(9, ok, what9, detail);
    } catch (const std::exception& e) {
        wreck(9, what9, e);
    }

    // 10: byte-identical artifacts for 1, 2, and 8 worker threads
    const std::string what10 =
        "oracle JSON and sweep CSV + summary are byte-identical across 1, 2, and 8 threads";
    try {
        bool ok = as_sweep_ok;
        std::string detail;
        const std::string oracle8 = oracle_json(oracle).dump(2);
        for (unsigned threads : {1u, 2u}) {
            AnalysisOptions t = opt;
            t.threads = threads;
            if (oracle_json(run_oracle(1, 25, 6, t)).dump(2) != oracle8) {
                ok = false;
                detail = "oracle diverges at " + std::to_string(threads) + " threads";
            }
            const SweepResult s = run_sweep(as_plan, t);
            if (s.csv != as_sweep.csv || s.summary.dump(2) != as_sweep.summary.dump(2)) {
                ok = false;
                detail = "sweep diverges at " + std::to_string(threads) + " threads";
            }
        }
        verdict(10, ok, what10, detail);
    } catch (const std::exception& e) {
        wreck(10, what10, e);
    }

    std::cout << "acceptance: " << (10 - failures) << " of 10 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
