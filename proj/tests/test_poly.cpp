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
   Polynomial layer tests. Irreducibility, resultants and root power sums
   are validated against independent oracles: trial division by all smaller
   monic polynomials, and direct conjugate arithmetic inside the splitting
   field reached through the embedding layer.
*/

#include <catch2/catch_amalgamated.hpp>

#include <abelzeta/poly.hpp>
#include <abelzeta/rng.hpp>

using namespace abelzeta;

namespace {

Poly monic_from_code(const FieldCtxPtr& ctx, unsigned deg, std::uint64_t code) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        c[i] = static_cast<std::uint32_t>(code % ctx->q());
        code /= ctx->q();
    }
    c[deg] = 1;
    return Poly(ctx, std::move(c));
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Trial-division irreducibility: no monic divisor of degree in [1, deg/2].
bool irreducible_by_trial_division(const Poly& f) {
    const auto& ctx = f.ctx();
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.deg()); ++d)
        for (std::uint64_t code = 0; code < pow_u64(ctx->q(), d); ++code)
            if ((f % monic_from_code(ctx, d, code)).is_zero()) return false;
    return f.deg() >= 1;
}

Poly random_poly(const FieldCtxPtr& ctx, unsigned deg, Rng& rng) {
    std::vector<std::uint32_t> c(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) c[i] = static_cast<std::uint32_t>(rng.below(ctx->q()));
    c[deg] = static_cast<std::uint32_t>(1 + rng.below(ctx->q() - 1));
    return Poly(ctx, std::move(c));
}

/// Root of pi inside F_{q^d}, found through the packed engines.
FieldElement splitting_root(const Poly& pi, const FieldCtxPtr& ext) {
    std::vector<std::uint32_t> mu(pi.coeffs());
    const std::uint64_t ridx =
        with_engine(ext, [&](auto eng) { return engine_find_root(eng, mu); });
    REQUIRE(ridx < ext->q());
    return ext->element_from_index(ridx);
}

}  // namespace

TEST_CASE("polynomial parse and format round trip", "[poly]") {
    const auto f2 = field_ctx(2, 1);
    const auto f3 = field_ctx(3, 1);
    const auto f4 = field_ctx(2, 2);
    for (const char* text : {"x^3", "x^5+x^3+1", "x"}) {
        REQUIRE(format_poly(parse_poly(f2, text)) == text);
    }
    REQUIRE(format_poly(parse_poly(f3, "x^3+2*x")) == "x^3+2*x");
    REQUIRE(format_poly(parse_poly(f4, "x^2+e2*x+e3")) == "x^2+e2*x+e3");
    REQUIRE(format_poly(parse_poly(f4, "e3")) == "e3");
    REQUIRE(parse_poly(f3, "x^2+5") == parse_poly(f3, "x^2+2"));
    REQUIRE(parse_poly(f3, "x^2-x") == parse_poly(f3, "x^2+2*x"));
    REQUIRE(format_poly(Poly::zero(f3)) == "0");
}

TEST_CASE("polynomial parser rejects malformed input", "[poly]") {
    const auto f3 = field_ctx(3, 1);
    REQUIRE_THROWS_AS(parse_poly(f3, ""), ParseError);
    REQUIRE_THROWS_AS(parse_poly(f3, "x^2+2x"), ParseError);
    REQUIRE_THROWS_AS(parse_poly(f3, "x^2++1"), ParseError);
    REQUIRE_THROWS_AS(parse_poly(f3, "y^2"), ParseError);
    REQUIRE_THROWS_AS(parse_poly(f3, "x^2+"), ParseError);
    REQUIRE_THROWS_AS(parse_poly(field_ctx(2, 2), "e4"), ParseError);
}

TEST_CASE("ring identities hold on random polynomials", "[poly]") {
    Rng rng(42);
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const auto ctx = q == 4 ? field_ctx(2, 2) : field_ctx(q, 1);
        for (int trial = 0; trial < 40; ++trial) {
            const Poly a = random_poly(ctx, 1 + unsigned(rng.below(6)), rng);
            const Poly b = random_poly(ctx, 1 + unsigned(rng.below(6)), rng);
            const Poly c = random_poly(ctx, 1 + unsigned(rng.below(4)), rng);
            REQUIRE((a + b) * c == a * c + b * c);
            REQUIRE(a * b == b * a);
            const auto [quot, rem] = Poly::divmod(a, b);
            REQUIRE(quot * b + rem == a);
            REQUIRE(rem.deg() < b.deg());
            const Poly g = Poly::gcd(a, b);
            REQUIRE(g.is_monic());
            REQUIRE((a % g).is_zero());
            REQUIRE((b % g).is_zero());
            // a forced common factor always survives into the gcd
            REQUIRE((Poly::gcd(a * c, b * c) % c.make_monic()).is_zero());
        }
    }
}

TEST_CASE("derivative satisfies the Leibniz rule", "[poly]") {
    Rng rng(7);
    const auto ctx = field_ctx(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = random_poly(ctx, 1 + unsigned(rng.below(5)), rng);
        const Poly b = random_poly(ctx, 1 + unsigned(rng.below(5)), rng);
        REQUIRE((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("Rabin irreducibility agrees with trial division", "[poly][oracle]") {
    const struct {
        std::uint64_t p;
        unsigned n, max_deg;
    } grids[] = {{2, 1, 6}, {3, 1, 4}, {5, 1, 3}, {2, 2, 3}};
    for (const auto& grid : grids) {
        const auto ctx = field_ctx(grid.p, grid.n);
        for (unsigned d = 1; d <= grid.max_deg; ++d)
            for (std::uint64_t code = 0; code < pow_u64(ctx->q(), d); ++code) {
                const Poly f = monic_from_code(ctx, d, code);
                REQUIRE(is_irreducible(f) == irreducible_by_trial_division(f));
            }
    }
}

TEST_CASE("resultant against a monic irreducible equals the splitting-field norm",
          "[poly][oracle]") {
    // Res(pi, f) = prod f(alpha_i) over the roots of pi, i.e. the norm of
    // f(alpha) from F_{q^d} down to F_q; the oracle computes it upstairs.
    Rng rng(11);
    for (std::uint64_t q : {2, 3}) {
        const auto base = field_ctx(q, 1);
        for (unsigned d = 1; d <= 4; ++d) {
            const auto ext = field_ctx(q, d);
            for (std::uint64_t code = 0; code < pow_u64(q, d); ++code) {
                const Poly pi = monic_from_code(base, d, code);
                if (!is_irreducible(pi)) continue;
                const FieldElement alpha = splitting_root(pi, ext);
                for (int trial = 0; trial < 4; ++trial) {
                    const Poly f = random_poly(base, 1 + unsigned(rng.below(5)), rng);
                    FieldElement norm = ext->one(), conj = alpha;
                    for (unsigned i = 0; i < d; ++i) {
                        norm = norm * f.eval_embedded(conj, ext);
                        conj = ext->pow(conj, Int(static_cast<unsigned long>(q)));
                    }
                    REQUIRE(conj == alpha);  // the Frobenius orbit closes after d steps
                    for (unsigned i = 1; i < ext->n(); ++i) REQUIRE(norm.digits()[i] == 0);
                    REQUIRE(resultant_monic(pi, f) == norm.digits()[0]);
                }
            }
        }
    }
}

TEST_CASE("root power sums match conjugate sums in the splitting field", "[poly][oracle]") {
    for (std::uint64_t q : {2, 3}) {
        const auto base = field_ctx(q, 1);
        for (unsigned d = 1; d <= 4; ++d) {
            const auto ext = field_ctx(q, d);
            for (std::uint64_t code = 0; code < pow_u64(q, d); ++code) {
                const Poly pi = monic_from_code(base, d, code);
                if (!is_irreducible(pi)) continue;
                const FieldElement alpha = splitting_root(pi, ext);
                const auto sums = root_power_sums(pi, 9);
                for (unsigned j = 0; j < 9; ++j) {
                    FieldElement s = ext->zero(), conj = ext->pow(alpha, Int(j));
                    for (unsigned i = 0; i < d; ++i) {
                        s = s + conj;
                        conj = ext->pow(conj, Int(static_cast<unsigned long>(q)));
                    }
                    for (unsigned i = 1; i < ext->n(); ++i) REQUIRE(s.digits()[i] == 0);
                    REQUIRE(sums[j] == s.digits()[0]);
                }
            }
        }
    }
}

TEST_CASE("pow_mod matches naive modular exponentiation", "[poly]") {
    Rng rng(3);
    const auto ctx = field_ctx(3, 1);
    const Poly mod = parse_poly(ctx, "x^4+x+2");
    for (int trial = 0; trial < 12; ++trial) {
        const Poly b = random_poly(ctx, 1 + unsigned(rng.below(4)), rng);
        Poly acc = Poly::one(ctx) % mod;
        for (unsigned e = 0; e <= 10; ++e) {
            REQUIRE(Poly::pow_mod(b, Int(e), mod) == acc);
            acc = acc * b % mod;
        }
    }
}

TEST_CASE("evaluation agrees with direct computation", "[poly]") {
    const auto ctx = field_ctx(5, 1);
    const Poly f = parse_poly(ctx, "x^3+x+1");
    for (std::uint64_t a = 0; a < 5; ++a) {
        const std::uint64_t v = (a * a * a + a + 1) % 5;
        REQUIRE(ctx->index_of(f.eval(ctx->element_from_index(a))) == v);
    }
}
