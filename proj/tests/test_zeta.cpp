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
   Zeta layer tests. Divisor counts from the L-polynomial are checked
   against an independent oracle that multiplies out the Euler product
   (1 - u^d)^{-N_d} with exact stars-and-bars coefficients.
*/

#include <catch2/catch_amalgamated.hpp>

#include <abelzeta/bounds.hpp>
#include <abelzeta/cover.hpp>
#include <abelzeta/zeta.hpp>

using namespace abelzeta;

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Effective divisors of each degree, counted as multisets of places.
std::vector<Int> divisor_counts_by_multisets(const std::vector<Int>& N, unsigned nmax) {
    std::vector<Int> A(nmax + 1, 0);
    A[0] = 1;
    for (unsigned d = 1; d <= nmax && d <= N.size(); ++d) {
        if (N[d - 1] == 0) continue;
        const unsigned long nd = N[d - 1].get_ui();
        std::vector<Int> B(nmax + 1, 0);
        for (unsigned n = 0; n <= nmax; ++n) {
            if (A[n] == 0) continue;
            for (unsigned j = 0; n + j * d <= nmax; ++j)
                B[n + j * d] += A[n] * binom(nd - 1 + j, j);
        }
        A = std::move(B);
    }
    return A;
}

LPolynomial lpoly_of(const std::string& text) {
    const CoverSpec spec = parse_cover_spec(text);
    const Int genus = genus_via_riemann_hurwitz(spec);
    const unsigned g = static_cast<unsigned>(genus.get_ui());
    return lpoly_from_counts(spec.base->q_int(), g, count_places(spec, std::max(1u, g)));
}

}  // namespace

TEST_CASE("worked instances have the known L-polynomials", "[zeta]") {
    const LPolynomial as = lpoly_of("as:q=2,f=x^3");
    REQUIRE(as.coeffs == std::vector<Int>{1, 0, 2});
    REQUIRE(class_number(as) == 3);
    const LPolynomial ku = lpoly_of("kummer:q=3,m=2,f=x^3+2*x");
    REQUIRE(ku.coeffs == std::vector<Int>{1, 0, 3});
    REQUIRE(class_number(ku) == 4);
}

TEST_CASE("functional equation holds coefficient by coefficient", "[zeta]") {
    for (const char* text : {"as:q=2,f=x^3", "as:q=2,f=x^5+x^3+1", "kummer:q=3,m=2,f=x^3+2*x",
                             "kummer:q=5,m=4,f=x^3+x+1", "kummer:q=4,m=3,f=x^2+x+e2"}) {
        const LPolynomial L = lpoly_of(text);
        INFO(text);
        for (unsigned i = 0; i <= L.g; ++i)
            REQUIRE(L.coeffs[2 * L.g - i] == int_pow(L.q, L.g - i) * L.coeffs[i]);
    }
}

TEST_CASE("predicted counts reproduce the enumerated counts", "[zeta]") {
    for (const char* text : {"as:q=2,f=x^5+x^3+1", "kummer:q=3,m=2,f=x^5+2*x+1"}) {
        INFO(text);
        const CoverSpec spec = parse_cover_spec(text);
        const LPolynomial L = lpoly_of(text);
        const unsigned kmax = 2 * L.g + 1;
        const auto enumerated = count_places(spec, kmax);
        REQUIRE(predicted_place_counts(L, kmax) == enumerated);
        // round trip through power sums
        const auto S = power_sums_of_counts(enumerated);
        REQUIRE(counts_from_power_sums(S) == enumerated);
        REQUIRE(predicted_power_sum_counts(L, kmax) == S);
        // the inverse-root power sums complement S_k to q^k + 1
        const auto p = predicted_power_sums(L, kmax);
        for (unsigned k = 1; k <= kmax; ++k)
            REQUIRE(p[k - 1] + S[k - 1] == int_pow(L.q, k) + 1);
    }
}

TEST_CASE("divisor counts match the Euler-product oracle", "[zeta][oracle]") {
    for (const char* text :
         {"as:q=2,f=x^3", "kummer:q=3,m=2,f=x^3+2*x", "as:q=2,f=x^5+x^3+1"}) {
        INFO(text);
        const CoverSpec spec = parse_cover_spec(text);
        const LPolynomial L = lpoly_of(text);
        const unsigned nmax = 2 * L.g + 1;
        const auto A = divisor_count_series(L, nmax);
        const auto oracle = divisor_counts_by_multisets(count_places(spec, nmax), nmax);
        for (unsigned n = 0; n <= nmax; ++n) {
            INFO("degree " << n);
            REQUIRE(A[n] == oracle[n]);
        }
    }
}

TEST_CASE("divisor counts enter the exact class-number window", "[zeta]") {
    for (const char* text : {"as:q=2,f=x^3", "kummer:q=3,m=2,f=x^3+2*x", "as:q=2,f=x^5+x^3+1",
                             "kummer:q=5,m=4,f=x^3+x+1"}) {
        INFO(text);
        const LPolynomial L = lpoly_of(text);
        const Int h = class_number(L);
        const unsigned lo = L.g == 0 ? 0 : 2 * L.g - 1;
        const auto A = divisor_count_series(L, 2 * L.g + 1);
        for (unsigned n = lo; n <= 2 * L.g + 1; ++n)
            REQUIRE(A[n] * (L.q - 1) == h * (int_pow(L.q, n - L.g + 1) - 1));
    }
}

TEST_CASE("zeta values at s=2 are exact rationals", "[zeta]") {
    REQUIRE(base_zeta_at_2(Int(2)) == Rat(8, 3));
    REQUIRE(base_zeta_at_2(Int(3)) == Rat(27, 16));
    const LPolynomial as = lpoly_of("as:q=2,f=x^3");
    REQUIRE(zeta_eval(as, Rat(1, 4)) == Rat(3));
    const LPolynomial ku = lpoly_of("kummer:q=3,m=2,f=x^3+2*x");
    REQUIRE(zeta_eval(ku, Rat(1, 9)) == Rat(7, 4));
    REQUIRE_THROWS_AS(zeta_eval(as, Rat(1, 2)), ValidationError);
    REQUIRE_THROWS_AS(zeta_eval(as, Rat(0)), ValidationError);
}

TEST_CASE("construction rejects impossible counts", "[zeta]") {
    // no genus-1 curve over F_2 has 6 rational places (Weil bound: at most 5)
    REQUIRE_THROWS_AS(lpoly_from_counts(Int(2), 1, {Int(6)}), InvariantError);
}
