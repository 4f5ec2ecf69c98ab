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
   Irreducible-count tests: the Moebius-inversion formula for psi(d) against
   exhaustive enumeration, and the degree-sum identity that every monic
   polynomial factors uniquely.
*/

#include <catch2/catch_amalgamated.hpp>

#include <abelzeta/irreducible.hpp>

using namespace abelzeta;

TEST_CASE("psi matches hand-computed small tables", "[irreducible]") {
    // q=2: [2,1,2,3]; q=3: [3,3,8]
    const Int two(2), three(3);
    REQUIRE(count_monic_irreducibles(two, 1) == 2);
    REQUIRE(count_monic_irreducibles(two, 2) == 1);
    REQUIRE(count_monic_irreducibles(two, 3) == 2);
    REQUIRE(count_monic_irreducibles(two, 4) == 3);
    REQUIRE(count_monic_irreducibles(three, 1) == 3);
    REQUIRE(count_monic_irreducibles(three, 2) == 3);
    REQUIRE(count_monic_irreducibles(three, 3) == 8);
}

TEST_CASE("psi formula equals exhaustive enumeration", "[irreducible][oracle]") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto ctx = q == 4 ? field_ctx(2, 2) : field_ctx(q, 1);
        const auto tab = irreducibles_up_to(ctx, 6);
        for (unsigned d = 2; d <= 6; ++d) {
            REQUIRE(Int(static_cast<unsigned long>(tab->codes(d).size())) ==
                    count_monic_irreducibles(ctx->q_int(), d));
            for (std::uint64_t code : tab->codes(d))
                REQUIRE(is_irreducible(poly_from_low_code(ctx, d, code)));
        }
    }
}

TEST_CASE("degree-weighted psi sums give q^m", "[irreducible]") {
    for (std::uint64_t q : {2, 3, 5, 9}) {
        const Int qi(static_cast<unsigned long>(q));
        for (unsigned m = 1; m <= 12; ++m) {
            Int total = 0;
            for (unsigned d : divisors_of(m)) total += Int(d) * count_monic_irreducibles(qi, d);
            REQUIRE(total == int_pow(qi, m));
        }
    }
}

TEST_CASE("degree-1 streaming avoids table construction", "[irreducible]") {
    const auto ctx = field_ctx(5, 1);
    unsigned seen = 0;
    for_each_monic_irreducible(ctx, 1, [&](const Poly& f) {
        REQUIRE(f.deg() == 1);
        REQUIRE(f.is_monic());
        ++seen;
    });
    REQUIRE(seen == 5);
}

TEST_CASE("table construction respects the budget", "[irreducible]") {
    REQUIRE_THROWS_AS(irreducibles_up_to(field_ctx(5, 1), 10, 1000), BudgetError);
}
