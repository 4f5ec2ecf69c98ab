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
   Randomized splitting-vs-brute-force oracle. The corrupted-count tests
   exercise the detection path itself: a broken comparison harness would
   silently pass everything, so we make sure injected damage is caught.
*/

#include <catch2/catch_amalgamated.hpp>

#include <abelzeta/oracle.hpp>

using namespace abelzeta;

TEST_CASE("closed-form genus matches the ramification report", "[oracle]") {
    struct Case {
        Family family;
        std::uint64_t p, n;
        unsigned m, D;
    };
    const Case grid[] = {
        {Family::artin_schreier, 2, 1, 0, 3}, {Family::artin_schreier, 2, 1, 0, 9},
        {Family::artin_schreier, 3, 1, 0, 4}, {Family::artin_schreier, 2, 3, 0, 5},
        {Family::kummer, 3, 1, 2, 4},         {Family::kummer, 5, 1, 2, 5},
        {Family::kummer, 5, 1, 4, 3},         {Family::kummer, 2, 2, 3, 3},
        {Family::kummer, 3, 2, 8, 2},         {Family::kummer, 7, 1, 6, 4},
    };
    Rng rng(99);
    for (const auto& c : grid) {
        const FieldCtxPtr base = field_ctx(c.p, static_cast<unsigned>(c.n));
        const CoverSpec spec = random_cover(c.family, base, c.m, c.D, rng);
        const auto ram = ramification_report(spec);
        INFO(format_cover_spec(spec));
        REQUIRE(Int(family_genus(c.family, c.p, c.m, c.D)) == ram.genus);
    }
}

TEST_CASE("candidate pool respects family, genus cap, and draw cap", "[oracle]") {
    // q = 2 admits no kummer cover, so the pool is the odd-degree ladder
    const auto c2 = oracle_candidates(field_ctx(2, 1), 6, 1ull << 20);
    REQUIRE(c2.size() == 7);
    for (unsigned i = 0; i < c2.size(); ++i) {
        REQUIRE(c2[i].family == Family::artin_schreier);
        REQUIRE(c2[i].D == 2 * i + 1);
        REQUIRE(c2[i].g == i);
        REQUIRE(c2[i].g <= 6);
    }
    // q = 9 exceeds any cap below 9 at its smallest tower
    REQUIRE(oracle_candidates(field_ctx(3, 2), 6, 8).empty());
    // both families appear over q = 5
    const auto c5 = oracle_candidates(field_ctx(5, 1), 4, 1ull << 20);
    bool saw_as = false, saw_kummer = false;
    for (const auto& c : c5) {
        saw_as = saw_as || c.family == Family::artin_schreier;
        saw_kummer = saw_kummer || c.family == Family::kummer;
        REQUIRE(c.g <= 4);
        REQUIRE(int_pow(Int(5), 2 * c.g + 1) <= Int(1) << 20);
    }
    REQUIRE(saw_as);
    REQUIRE(saw_kummer);
}

TEST_CASE("release draw is consistent across the spec pool", "[oracle][slow]") {
    const auto out = run_oracle(1, 25, 6);
    REQUIRE(out.ok());
    REQUIRE(out.specs.size() == 25);
    for (const auto& s : out.specs) REQUIRE_FALSE(s.empty());
    REQUIRE(out.work.places_enumerated > 0);
    REQUIRE(out.work.ext_elements > 0);
    REQUIRE(oracle_text(out).find("oracle: 25 specs checked, all consistent (seed 1)\n") !=
            std::string::npos);
    const Json j = oracle_json(out);
    REQUIRE(j["seed"] == 1);
    REQUIRE(j["count"] == 25);
    REQUIRE(j["max_genus"] == 6);
    REQUIRE(j["ok"] == true);
    REQUIRE(j["failures"].empty());
    REQUIRE(j["specs"].size() == 25);
}

TEST_CASE("zero draws pass vacuously", "[oracle]") {
    const auto out = run_oracle(9, 0, 6);
    REQUIRE(out.ok());
    REQUIRE(out.specs.empty());
    REQUIRE(oracle_text(out).find("oracle: 0 specs checked, all consistent (seed 9)\n") !=
            std::string::npos);
}

TEST_CASE("corrupted degree-2 counts are caught at k=2", "[oracle]") {
    // genus-0 draws only have N_1, so the damage (and the detection) skips them
    const CountMutator bump = [](const CoverSpec&, std::vector<Int>& N) {
        if (N.size() >= 2) N[1] += 1;
    };
    const auto out = run_oracle(1, 5, 2, {}, 1ull << 20, bump);
    unsigned expected = 0;
    for (const auto& s : out.specs)
        if (ramification_report(parse_cover_spec(s)).genus >= 1) ++expected;
    REQUIRE(expected >= 1);
    REQUIRE(out.failures.size() == expected);
    REQUIRE_FALSE(out.ok());
    for (const auto& f : out.failures) {
        REQUIRE_FALSE(f.spec.empty());
        REQUIRE(f.message.rfind("S_2 mismatch at k=2: splitting gives ", 0) == 0);
        REQUIRE(f.message.find(", brute force gives ") != std::string::npos);
    }
    const std::string text = oracle_text(out);
    REQUIRE(text.find("FAIL ") != std::string::npos);
    REQUIRE(text.find("of 5 specs failed\n") != std::string::npos);
    REQUIRE(oracle_json(out)["ok"] == false);
}

TEST_CASE("corrupting the top count is always caught", "[oracle]") {
    const CountMutator bump = [](const CoverSpec&, std::vector<Int>& N) { N.back() += 1; };
    const auto out = run_oracle(2, 4, 2, {}, 1ull << 20, bump);
    REQUIRE(out.failures.size() == 4);
    for (const auto& f : out.failures)
        REQUIRE(f.message.find("mismatch at k=") != std::string::npos);
}

TEST_CASE("an impossible draw cap fails every draw with a clear message", "[oracle]") {
    const auto out = run_oracle(4, 3, 6, {}, 1);
    REQUIRE(out.draw_cap == 1);
    REQUIRE(out.failures.size() == 3);
    for (const auto& f : out.failures) {
        REQUIRE(f.spec.empty());  // no spec was ever drawn
        REQUIRE(f.message == "no candidate fits the draw cap");
    }
}

TEST_CASE("oracle outcome is seed-determined and thread-independent", "[oracle]") {
    AnalysisOptions one;
    one.threads = 1;
    AnalysisOptions eight;
    eight.threads = 8;
    const auto a = run_oracle(42, 10, 4, one);
    const auto b = run_oracle(42, 10, 4, eight);
    REQUIRE(oracle_json(a).dump(2) == oracle_json(b).dump(2));
    REQUIRE(a.specs == b.specs);
    const auto c = run_oracle(43, 10, 4, one);
    REQUIRE(a.specs != c.specs);  // a different seed draws a different pool
}
