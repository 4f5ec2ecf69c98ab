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
   Monic irreducible polynomials over F_q: the Moebius-inversion count and a
   sieve-based enumerator. A monic degree-d polynomial is identified with its
   low code sum_i idx(c_i) q^i over the non-leading coefficients (constant
   term = least significant digit); ascending code is the canonical order,
   matching the modulus selection rule in the field layer. The sieve marks
   every product of an irreducible with every monic cofactor, so whatever
   survives at each degree is irreducible; no factorization is ever needed.
*/

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "poly.hpp"

namespace abelzeta {

/// psi(m) = (1/m) * sum_{d | m} mu(m/d) q^d; divisibility of the sum by m is
/// a theorem, asserted here via exact division.
inline Int count_monic_irreducibles(const Int& q, unsigned m) {
    if (m == 0) throw ValidationError("irreducible count needs degree >= 1");
    if (q < 2) throw ValidationError("field order must be at least 2");
    Int s = 0;
    for (unsigned d : divisors_of(m)) {
        const int mu = mobius(m / d);
        if (mu) s += Int(mu) * int_pow(q, d);
    }
    return exact_div(s, Int(m));
}

inline Poly poly_from_low_code(const FieldCtxPtr& ctx, unsigned d, std::uint64_t code) {
    std::vector<std::uint32_t> c(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<std::uint32_t>(code % ctx->q());
        code /= ctx->q();
    }
    c[d] = 1;
    return Poly(ctx, std::move(c));
}

inline std::uint64_t low_code(const Poly& f) {
    if (!f.is_monic()) throw ValidationError("low code is defined for monic polynomials");
    std::uint64_t code = 0;
    for (std::size_t i = static_cast<std::size_t>(f.deg()); i-- > 0;)
        code = code * f.ctx()->q() + f.coeff(i);
    return code;
}

struct IrreducibleTable {
    FieldCtxPtr ctx;
    unsigned max_degree = 0;
    // by_degree[d - 2]: ascending low codes of the degree-d irreducibles;
    // degree 1 is not stored (every monic linear is irreducible).
    std::vector<std::vector<std::uint64_t>> by_degree;

    const std::vector<std::uint64_t>& codes(unsigned d) const {
        if (d < 2 || d > max_degree) throw ValidationError("degree outside sieve range");
        return by_degree[d - 2];
    }
};

namespace detail {

inline std::shared_ptr<const IrreducibleTable> build_table(const FieldCtxPtr& ctx, unsigned B) {
    const std::uint64_t q = ctx->q();
    auto tab = std::make_shared<IrreducibleTable>();
    tab->ctx = ctx;
    tab->max_degree = B;
    if (B < 2) return tab;
    tab->by_degree.resize(B - 1);
    // offsets of each degree block in the mark bitmap, degrees 2..B
    std::vector<std::uint64_t> offset(B + 2, 0);
    std::vector<std::uint64_t> qpow(B + 1, 1);
    for (unsigned d = 1; d <= B; ++d) qpow[d] = qpow[d - 1] * q;
    for (unsigned d = 2; d <= B; ++d) offset[d + 1] = offset[d] + qpow[d];
    std::vector<bool> marked(offset[B + 1], false);

    std::vector<std::uint32_t> pi, mc, prod;
    const auto mark_multiples = [&](unsigned d) {
        // pi holds a degree-d irreducible; mark pi * m for every monic m
        for (unsigned b = 1; d + b <= B; ++b) {
            mc.assign(b, 0);
            prod.assign(d + b + 1, 0);
            for (std::uint64_t step = 0; step < qpow[b]; ++step) {
                std::fill(prod.begin(), prod.end(), 0);
                for (unsigned i = 0; i <= d; ++i) {
                    const std::uint32_t a = (i == d) ? 1u : pi[i];
                    if (!a) continue;
                    for (unsigned j = 0; j <= b; ++j) {
                        const std::uint32_t m = (j == b) ? 1u : mc[j];
                        if (m)
                            prod[i + j] = static_cast<std::uint32_t>(
                                ctx->add_index(prod[i + j], ctx->mul_index(a, m)));
                    }
                }
                std::uint64_t code = 0;
                for (unsigned i = d + b; i-- > 0;) code = code * q + prod[i];
                marked[offset[d + b] + code] = true;
                // odometer increment of the cofactor coefficients
                for (unsigned i = 0; i < b; ++i) {
                    if (++mc[i] < q) break;
                    mc[i] = 0;
                }
            }
        }
    };

    pi.assign(1, 0);
    for (std::uint64_t a = 0; a < q; ++a) {  // degree 1: x + c, all irreducible
        pi[0] = static_cast<std::uint32_t>(a);
        mark_multiples(1);
    }
    for (unsigned d = 2; d <= B; ++d) {
        auto& out = tab->by_degree[d - 2];
        for (std::uint64_t code = 0; code < qpow[d]; ++code) {
            if (marked[offset[d] + code]) continue;
            out.push_back(code);
            pi.assign(d, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) {
                pi[i] = static_cast<std::uint32_t>(c % q);
                c /= q;
            }
            mark_multiples(d);
        }
    }
    return tab;
}

}  // namespace detail

/*
   Memoized sieve lookup. Growing the bound installs a fresh table; existing
   holders keep their snapshot, so concurrent readers are safe. Budget check
   follows the enumeration contract: q^B elements of work, hard error beyond.
*/
inline std::shared_ptr<const IrreducibleTable> irreducibles_up_to(
    const FieldCtxPtr& ctx, unsigned B, std::uint64_t budget = default_budget) {
    if (B >= 1) {
        Int work = int_pow(ctx->q_int(), B);
        if (work > Int(static_cast<unsigned long>(budget)))
            throw BudgetError("irreducible enumeration of degree " + std::to_string(B) +
                              " over F_" + dec(ctx->q_int()) + " exceeds the budget");
    }
    static std::mutex mu;
    static std::map<const FieldCtx*, std::shared_ptr<const IrreducibleTable>> reg;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = reg[ctx.get()];
    if (!slot || slot->max_degree < B) slot = detail::build_table(ctx, B);
    return slot;
}

/// Visits every monic irreducible of degree exactly d in canonical order.
template <typename Fn>
void for_each_monic_irreducible(const FieldCtxPtr& ctx, unsigned d, Fn&& fn,
                                std::uint64_t budget = default_budget) {
    if (d == 0) throw ValidationError("irreducible enumeration needs degree >= 1");
    if (d == 1) {
        if (ctx->q() > budget) throw BudgetError("degree-1 enumeration exceeds the budget");
        for (std::uint64_t a = 0; a < ctx->q(); ++a) fn(poly_from_low_code(ctx, 1, a));
        return;
    }
    const auto tab = irreducibles_up_to(ctx, d, budget);
    for (std::uint64_t code : tab->codes(d)) fn(poly_from_low_code(ctx, d, code));
}

inline std::vector<Poly> enumerate_monic_irreducibles(const FieldCtxPtr& ctx, unsigned d,
                                                      std::uint64_t budget = default_budget) {
    std::vector<Poly> out;
    for_each_monic_irreducible(ctx, d, [&](const Poly& f) { out.push_back(f); }, budget);
    return out;
}

}  // namespace abelzeta
