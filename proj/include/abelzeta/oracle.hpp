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
   Randomized cross-validation of the splitting engine against exhaustive
   point counting. Each draw picks a base field from {2,3,4,5,7,8,9}, then a
   family and degree whose genus fits both the requested cap and the
   enumeration allowance q^{2g+1} <= draw_cap, and checks

     - S_k from splitting equals S_k from brute force for k = 1..2g+1,
     - the L-polynomial built from N_1..N_g predicts those same S_k.

   Mismatches carry the spec text for replay. The mutate hook exists for the
   test harness to inject corrupted counts and watch the detection fire.
*/

#pragma once

#include <functional>

#include "draw.hpp"
#include "parallel.hpp"
#include "pointcount.hpp"
#include "report.hpp"

namespace abelzeta {

struct OracleCandidate {
    Family family;
    unsigned m;  // 0 for artin-schreier
    unsigned D;
    unsigned g;
};

/// Closed-form genus of a family member, matching the ramification report.
inline unsigned family_genus(Family family, std::uint64_t p, unsigned m, unsigned D) {
    if (family == Family::artin_schreier)
        return static_cast<unsigned>((p - 1) * (D - 1) / 2);
    const long r = long(std::gcd(m, D));
    const long twog2 = -2L * m + long(m - 1) * D + long(m) - r;
    return static_cast<unsigned>((twog2 + 2) / 2);
}

/// All (family, m, D) whose genus is <= max_genus and whose extension tower
/// fits q^{2g+1} <= cap; deterministic construction order.
inline std::vector<OracleCandidate> oracle_candidates(const FieldCtxPtr& base, unsigned max_genus,
                                                      std::uint64_t cap) {
    std::vector<OracleCandidate> out;
    const std::uint64_t p = base->p();
    const std::uint64_t q = base->q();
    const auto usable = [&](unsigned g) {
        return int_pow(Int(static_cast<unsigned long>(q)), 2 * g + 1) <=
               Int(static_cast<unsigned long>(cap));
    };
    for (unsigned D = 1; (p - 1) * (D - 1) / 2 <= max_genus; ++D) {
        if (D % p == 0) continue;
        const unsigned g = family_genus(Family::artin_schreier, p, 0, D);
        if (usable(g)) out.push_back({Family::artin_schreier, 0, D, g});
    }
    for (unsigned m = 2; m <= q - 1; ++m) {
        if ((q - 1) % m != 0) continue;
        for (unsigned D = 1; D <= (2 * max_genus + 2 * m) / std::max(1u, m - 1) + 1; ++D) {
            const unsigned g = family_genus(Family::kummer, p, m, D);
            if (g <= max_genus && usable(g)) out.push_back({Family::kummer, m, D, g});
        }
    }
    return out;
}

struct OracleFailure {
    std::string spec;
    std::string message;
};

struct OracleOutcome {
    std::uint64_t seed = 0;
    unsigned count = 0;
    unsigned max_genus = 0;
    std::uint64_t draw_cap = 0;
    std::vector<std::string> specs;  // in draw order
    std::vector<OracleFailure> failures;
    WorkCounters work;
    bool ok() const { return failures.empty(); }
};

/// Test-harness hook: mutates the splitting-side counts before comparison.
using CountMutator = std::function<void(const CoverSpec&, std::vector<Int>&)>;

inline OracleOutcome run_oracle(std::uint64_t seed, unsigned count, unsigned max_genus,
                                const AnalysisOptions& opt = {},
                                std::uint64_t draw_cap = 1ull << 20,
                                const CountMutator& mutate = {}) {
    static constexpr std::uint64_t orders[] = {2, 3, 4, 5, 7, 8, 9};
    OracleOutcome out;
    out.seed = seed;
    out.count = count;
    out.max_genus = max_genus;
    out.draw_cap = std::min(draw_cap, opt.budget);
    out.specs.assign(count, {});
    std::vector<std::string> errors(count);
    std::vector<WorkCounters> work(count);
    parallel_tasks(count, opt.threads, [&](std::size_t i) {
        Rng rng = Rng::child(seed, i);
        const FieldCtxPtr base = field_from_order(orders[rng.below(7)], opt.budget);
        const auto cands = oracle_candidates(base, max_genus, out.draw_cap);
        if (cands.empty()) {
            errors[i] = "no candidate fits the draw cap";
            return;
        }
        const OracleCandidate c = cands[rng.below(cands.size())];
        const CoverSpec spec = random_cover(c.family, base, c.m, c.D, rng);
        out.specs[i] = format_cover_spec(spec);
        try {
            const auto ram = ramification_report(spec, opt.budget);
            const unsigned g = static_cast<unsigned>(ram.genus.get_ui());
            if (g != c.g) {
                errors[i] = "closed-form genus " + std::to_string(c.g) +
                            " disagrees with ramification genus " + std::to_string(g);
                return;
            }
            const unsigned kmax = 2 * g + 1;
            std::vector<Int> N = count_places(spec, kmax, opt.budget, 1, &work[i]);
            if (mutate) mutate(spec, N);
            const auto s_split = power_sums_of_counts(N);
            const auto s_brute = power_sums_bruteforce(spec, kmax, out.draw_cap, &work[i]);
            for (unsigned k = 1; k <= kmax; ++k)
                if (s_split[k - 1] != s_brute[k - 1]) {
                    errors[i] = "S_" + std::to_string(k) + " mismatch at k=" + std::to_string(k) +
                                ": splitting gives " + dec(s_split[k - 1]) +
                                ", brute force gives " + dec(s_brute[k - 1]);
                    return;
                }
            const LPolynomial L =
                lpoly_from_counts(base->q_int(), g, std::vector<Int>(N.begin(), N.begin() + g));
            const auto s_pred = predicted_power_sum_counts(L, kmax);
            for (unsigned k = 1; k <= kmax; ++k)
                if (s_pred[k - 1] != s_brute[k - 1]) {
                    errors[i] = "predicted S_" + std::to_string(k) + " = " + dec(s_pred[k - 1]) +
                                " differs from brute-force " + dec(s_brute[k - 1]);
                    return;
                }
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (unsigned i = 0; i < count; ++i) {
        out.work.places_enumerated += work[i].places_enumerated;
        out.work.ext_elements += work[i].ext_elements;
        if (!errors[i].empty()) out.failures.push_back({out.specs[i], errors[i]});
    }
    return out;
}

inline Json oracle_json(const OracleOutcome& o) {
    Json j;
    j["seed"] = o.seed;
    j["count"] = o.count;
    j["max_genus"] = o.max_genus;
    j["draw_cap"] = o.draw_cap;
    j["specs"] = o.specs;
    Json fails = Json::array();
    for (const auto& f : o.failures) {
        Json e;
        e["spec"] = f.spec;
        e["message"] = f.message;
        fails.push_back(e);
    }
    j["failures"] = fails;
    j["ok"] = o.ok();
    Json work;
    work["places_enumerated"] = o.work.places_enumerated;
    work["ext_elements"] = o.work.ext_elements;
    j["work"] = work;
    return j;
}

inline std::string oracle_text(const OracleOutcome& o) {
    std::string s;
    for (unsigned i = 0; i < o.specs.size(); ++i) s += "  " + o.specs[i] + "\n";
    if (o.ok()) {
        s += "oracle: " + std::to_string(o.count) + " specs checked, all consistent (seed " +
             std::to_string(o.seed) + ")\n";
    } else {
        for (const auto& f : o.failures) s += "FAIL " + f.spec + ": " + f.message + "\n";
        s += "oracle: " + std::to_string(o.failures.size()) + " of " + std::to_string(o.count) +
             " specs failed\n";
    }
    return s;
}

}  // namespace abelzeta
