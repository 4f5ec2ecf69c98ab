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
   The full per-cover pipeline: ramification and genus, place counts, the
   L-polynomial, the class number, and every inequality check, assembled
   into one report with JSON and CSV renderings. All big integers serialize
   as decimal strings. Output is a pure function of (spec, options), so
   re-running a report reproduces it byte for byte.
*/

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "bounds.hpp"
#include "pointcount.hpp"

namespace abelzeta {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
    std::uint64_t budget = default_budget;
    unsigned threads = 1;
    unsigned precision_digits = 30;  // ratio rendering; floor 30
    unsigned max_digits = 120;       // interval escalation cap
    bool assert_asymptotic = false;  // sweep segment membership
};

struct AnalysisReport {
    std::string spec_text;
    Family family = Family::kummer;
    Int q;
    unsigned m = 0;  // 0 for artin-schreier
    std::string f_text;
    unsigned n = 0;
    unsigned g = 0;
    Int h;
    Int deg_different;
    LPolynomial L;
    std::vector<Int> counts;  // N_1..N_{2g+1}
    Rat zeta_at_2;
    RamificationReport ram;
    CheckSet checks;
    CheckStatus lemma3 = CheckStatus::report_only;
    std::optional<std::string> ratio;  // absent at genus 0
    std::string effective_lower;       // empty at genus 0
    std::string ratio_upper_q;
    WorkCounters work;
};

inline AnalysisReport analyze_cover(const CoverSpec& spec, const AnalysisOptions& opt = {}) {
    AnalysisReport r;
    r.spec_text = format_cover_spec(spec);
    r.family = spec.family;
    r.q = spec.base->q_int();
    r.m = spec.family == Family::kummer ? spec.m : 0;
    r.f_text = format_poly(spec.f);
    r.n = spec.degree();
    r.ram = ramification_report(spec, opt.budget);
    if (!r.ram.genus.fits_ulong_p() || r.ram.genus.get_ui() > (1u << 28))
        throw BudgetError("genus " + dec(r.ram.genus) + " exceeds any workable budget");
    r.g = static_cast<unsigned>(r.ram.genus.get_ui());
    r.deg_different = r.ram.different_degree;
    const auto N = count_places(spec, r.g, opt.budget, opt.threads, &r.work);
    r.L = lpoly_from_counts(r.q, r.g, N);
    r.h = class_number(r.L);
    r.counts = predicted_place_counts(r.L, 2 * r.g + 1);
    for (unsigned i = 0; i < r.g; ++i)
        if (r.counts[i] != N[i])
            throw InvariantError("predicted counts disagree with enumeration at degree " +
                                 std::to_string(i + 1));
    r.zeta_at_2 = zeta_eval(r.L, Rat(1) / (r.q * r.q));
    CheckInputs ci;
    ci.L = &r.L;
    ci.h = r.h;
    ci.n = r.n;
    ci.deg_different = r.deg_different;
    ci.ram = &r.ram;
    ci.assert_asymptotic = opt.assert_asymptotic;
    ci.max_digits = opt.max_digits;
    r.checks = evaluate_checks(ci);
    const unsigned digits = std::max(30u, opt.precision_digits);
    r.ratio_upper_q = ratio_upper_decimal(r.q, digits);
    if (r.g >= 1) {
        r.ratio = ratio_decimal(r.q, r.g, r.h, digits);
        r.effective_lower = effective_lower_decimal(r.g, digits);
        switch (lemma3_ratio_bound(r.q, r.g, r.h, r.n, opt.max_digits)) {
            case Cert::holds: r.lemma3 = CheckStatus::pass; break;
            case Cert::fails: r.lemma3 = CheckStatus::report_only; break;
            default: r.lemma3 = CheckStatus::inconclusive; break;
        }
    }
    return r;
}

namespace detail {

inline Json int_array(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(dec(x));
    return a;
}

}  // namespace detail

inline Json report_json(const AnalysisReport& r) {
    Json j;
    j["spec"] = r.spec_text;
    j["family"] = family_name(r.family);
    j["q"] = dec(r.q);
    if (r.family == Family::kummer) j["m"] = r.m;
    j["f"] = r.f_text;
    j["n"] = r.n;
    j["genus"] = r.g;
    j["class_number"] = dec(r.h);
    j["deg_different"] = dec(r.deg_different);
    j["ratio"] = r.ratio ? Json(*r.ratio) : Json(nullptr);
    j["effective_lower"] = r.g >= 1 ? Json(r.effective_lower) : Json(nullptr);
    j["ratio_upper"] = r.ratio_upper_q;
    Json zeta;
    zeta["q"] = dec(r.L.q);
    zeta["g"] = r.L.g;
    zeta["coeffs"] = detail::int_array(r.L.coeffs);
    j["zeta"] = zeta;
    j["zeta_at_2"] = r.zeta_at_2.get_str();
    j["place_counts"] = detail::int_array(r.counts);
    j["divisor_counts"] = detail::int_array(divisor_count_series(r.L, 2 * r.g + 1));
    Json ram;
    ram["different_degree"] = dec(r.ram.different_degree);
    ram["genus"] = dec(r.ram.genus);
    Json entries = Json::array();
    for (const auto& en : r.ram.entries) {
        Json e;
        e["place"] = en.name();
        e["degree"] = en.place.degree;
        e["count"] = en.count;
        if (en.aggregated) e["aggregated"] = true;
        e["e"] = en.e;
        e["alpha"] = dec(en.alpha);
        e["jumps"] = en.jumps;
        entries.push_back(e);
    }
    ram["entries"] = entries;
    j["ramification"] = ram;
    Json checks;
    const auto vals = r.checks.values();
    for (std::size_t i = 0; i < vals.size(); ++i) checks[CheckSet::names[i]] = to_string(vals[i]);
    j["checks"] = checks;
    j["lemma3_ratio_bound"] = r.g >= 1 ? Json(to_string(r.lemma3)) : Json(nullptr);
    Json work;
    work["places_enumerated"] = r.work.places_enumerated;
    work["ext_elements"] = r.work.ext_elements;
    j["work"] = work;
    return j;
}

inline std::string csv_header(bool timings) {
    std::string s = "spec,family,q,m,f,n,g,h,deg_diff,ratio";
    for (const char* name : CheckSet::names) {
        s += ',';
        s += name;
    }
    s += ",places_enumerated,ext_elements";
    if (timings) s += ",wall_ms";
    s += '\n';
    return s;
}

inline std::string csv_row(const AnalysisReport& r,
                           std::optional<std::uint64_t> wall_ms = std::nullopt) {
    std::string s = r.spec_text;
    s += ',';
    s += family_name(r.family);
    s += ',' + dec(r.q);
    s += ',';
    if (r.family == Family::kummer) s += std::to_string(r.m);
    s += ',' + r.f_text;
    s += ',' + std::to_string(r.n);
    s += ',' + std::to_string(r.g);
    s += ',' + dec(r.h);
    s += ',' + dec(r.deg_different);
    s += ',';
    if (r.ratio) s += *r.ratio;
    for (const CheckStatus st : r.checks.values()) {
        s += ',';
        s += to_string(st);
    }
    s += ',' + std::to_string(r.work.places_enumerated);
    s += ',' + std::to_string(r.work.ext_elements);
    if (wall_ms) s += ',' + std::to_string(*wall_ms);
    s += '\n';
    return s;
}

}  // namespace abelzeta
