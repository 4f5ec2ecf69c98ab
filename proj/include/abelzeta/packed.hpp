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
   Machine-word field kernels for exhaustive enumeration. Elements of
   F_{p^M} are packed into words (bit vectors for p = 2, fixed-width lanes
   otherwise) and multiplications by a loop constant go through precomputed
   tables, which is what makes full sweeps over 10^6..10^7 field elements
   affordable. Results always flow back into the exact layer, so these
   kernels affect speed, never the meaning of a count.
*/

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "field.hpp"

namespace abelzeta {

/* ---- F_{2^M}, M <= 62, one word per element, index == bit pattern ---- */

class PackedBinary {
  public:
    using Elem = std::uint64_t;

    static bool usable(const FieldCtx& ctx) { return ctx.p() == 2 && ctx.n() <= 62; }

    explicit PackedBinary(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
        if (!usable(*ctx_)) throw InvariantError("PackedBinary: unsuitable context");
        M_ = ctx_->n();
        mask_ = (M_ == 62) ? ((1ULL << 62) - 1) : ((1ULL << M_) - 1);
        mod_low_ = 0;
        for (unsigned i = 0; i < M_; ++i)
            if (ctx_->modulus()[i]) mod_low_ |= 1ULL << i;
        trace_mask_ = 0;
        FieldElement ti = ctx_->one();
        const FieldElement t = ctx_->gen();
        for (unsigned i = 0; i < M_; ++i) {
            if (i) ti = ti * t;
            if (!trace_to_prime(ti).is_zero()) trace_mask_ |= 1ULL << i;
        }
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint64_t Q() const { return ctx_->q(); }
    unsigned M() const { return M_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_index(std::uint64_t idx) const { return idx; }
    std::uint64_t to_index(Elem a) const { return a; }
    Elem from_element(const FieldElement& a) const {
        Elem r = 0;
        for (unsigned i = 0; i < M_; ++i)
            if (a.digits()[i]) r |= 1ULL << i;
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const { return a ^ b; }
    // lazy-sum API mirrors the odd-characteristic engine; XOR never overflows
    static constexpr unsigned max_lazy_terms = 1u << 30;
    void add_lazy(Elem& acc, Elem x) const { acc ^= x; }
    void renorm(Elem&) const {}

    Elem mul(Elem a, Elem b) const {
        Elem r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a = xtime(a);
        }
        return r;
    }

    Elem pow(Elem a, Int e) const {
        Elem r = 1, b = a;
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /// Multiplication by a fixed constant: 4-bit window tables, XOR to combine.
    struct ConstMul {
        std::vector<std::array<std::uint64_t, 16>> tab;
    };

    ConstMul prep_mul(Elem c) const {
        ConstMul cm;
        const unsigned windows = (M_ + 3) / 4;
        cm.tab.assign(windows, {});
        std::vector<Elem> pt(M_);
        Elem v = c;
        for (unsigned i = 0; i < M_; ++i) {
            pt[i] = v;
            v = xtime(v);
        }
        for (unsigned w = 0; w < windows; ++w)
            for (unsigned nib = 1; nib < 16; ++nib) {
                Elem r = 0;
                for (unsigned b = 0; b < 4; ++b)
                    if ((nib >> b & 1) && (4 * w + b) < M_) r ^= pt[4 * w + b];
                cm.tab[w][nib] = r;
            }
        return cm;
    }

    Elem apply(const ConstMul& cm, Elem a) const {
        Elem r = 0;
        for (std::size_t w = 0; w < cm.tab.size(); ++w) r ^= cm.tab[w][(a >> (4 * w)) & 15];
        return r;
    }

    unsigned trace_mod_p(Elem a) const { return __builtin_popcountll(a & trace_mask_) & 1u; }

  private:
    Elem xtime(Elem a) const {
        const bool hi = (a >> (M_ - 1)) & 1;
        a = (a << 1) & mask_;
        return hi ? (a ^ mod_low_) : a;
    }

    FieldCtxPtr ctx_;
    unsigned M_ = 0;
    std::uint64_t mask_ = 0, mod_low_ = 0, trace_mask_ = 0;
};

/* ---- odd characteristic: digits in fixed-width lanes over up to 4 words ---- */

template <typename Lane>
class PackedOdd {
  public:
    using Elem = std::array<std::uint64_t, 4>;
    static constexpr unsigned lane_bytes = sizeof(Lane);
    static constexpr unsigned lanes_per_word = 8 / lane_bytes;

    static bool usable(const FieldCtx& ctx) {
        const std::uint64_t p = ctx.p();
        const unsigned M = ctx.n();
        if (p == 2) return false;
        if (M > 4 * lanes_per_word) return false;
        const std::uint64_t lane_max = (lane_bytes == 8) ? ~0ULL : ((1ULL << (8 * lane_bytes)) - 1);
        // lazy sums of up to max_lazy_terms canonical digits must not overflow a lane
        return (p - 1) <= lane_max / max_lazy_terms;
    }

    static constexpr unsigned max_lazy_terms = 32;

    explicit PackedOdd(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
        if (!usable(*ctx_)) throw InvariantError("PackedOdd: unsuitable context");
        p_ = ctx_->p();
        M_ = ctx_->n();
        mod_.assign(ctx_->modulus().begin(), ctx_->modulus().end());
        if (lane_bytes == 1) {
            mod_tab_.resize(256);
            for (unsigned v = 0; v < 256; ++v) mod_tab_[v] = static_cast<std::uint8_t>(v % p_);
        }
        tr_.resize(M_);
        FieldElement ti = ctx_->one();
        const FieldElement t = ctx_->gen();
        for (unsigned i = 0; i < M_; ++i) {
            if (i) ti = ti * t;
            tr_[i] = trace_to_prime(ti).digits()[0];
        }
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint64_t Q() const { return ctx_->q(); }
    unsigned M() const { return M_; }

    Elem zero() const { return {}; }
    Elem one() const {
        Elem r{};
        set_lane(r, 0, 1);
        return r;
    }
    Elem from_index(std::uint64_t idx) const {
        Elem r{};
        for (unsigned i = 0; i < M_; ++i) {
            set_lane(r, i, idx % p_);
            idx /= p_;
        }
        return r;
    }
    std::uint64_t to_index(const Elem& a) const {
        std::uint64_t idx = 0;
        for (unsigned i = M_; i-- > 0;) idx = idx * p_ + lane(a, i);
        return idx;
    }
    Elem from_element(const FieldElement& a) const {
        Elem r{};
        for (unsigned i = 0; i < M_; ++i) set_lane(r, i, a.digits()[i]);
        return r;
    }
    bool is_zero(const Elem& a) const { return a == Elem{}; }

    /// Lane-wise sum without normalization; caller respects max_lazy_terms.
    void add_lazy(Elem& acc, const Elem& x) const {
        acc[0] += x[0];
        acc[1] += x[1];
        acc[2] += x[2];
        acc[3] += x[3];
    }
    void renorm(Elem& a) const {
        for (unsigned i = 0; i < M_; ++i) {
            const std::uint64_t v = lane(a, i);
            set_lane(a, i, lane_bytes == 1 ? mod_tab_[v] : v % p_);
        }
    }
    Elem add(Elem a, const Elem& b) const {
        add_lazy(a, b);
        renorm(a);
        return a;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::uint64_t acc[63] = {0};
        for (unsigned i = 0; i < M_; ++i) {
            const std::uint64_t ai = lane(a, i);
            if (!ai) continue;
            for (unsigned j = 0; j < M_; ++j) acc[i + j] += ai * lane(b, j);
        }
        for (unsigned k = 0; k < 2 * M_ - 1; ++k) acc[k] %= p_;
        for (unsigned j = 2 * M_ - 2; j >= M_; --j) {  // modulus is monic
            const std::uint64_t c = acc[j];
            if (c) {
                for (unsigned i = 0; i < M_; ++i)
                    acc[j - M_ + i] = (acc[j - M_ + i] + c * (p_ - mod_[i])) % p_;
            }
            if (j == M_) break;
        }
        Elem r{};
        for (unsigned i = 0; i < M_; ++i) set_lane(r, i, acc[i]);
        return r;
    }

    Elem pow(Elem a, Int e) const {
        Elem r = one(), b = a;
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    /*
       Fixed-constant multiplication. When M * p is small a full table over
       (digit position, digit value) turns the product into M lazy additions;
       otherwise it falls back to the generic product.
    */
    struct ConstMul {
        std::vector<Elem> tab;  // [i * p + v] = v * t^i * c, canonical
        Elem c{};
        bool tabulated = false;
    };

    ConstMul prep_mul(const Elem& c) const {
        ConstMul cm;
        cm.c = c;
        if (std::uint64_t(M_) * p_ > (1ULL << 20)) return cm;
        cm.tabulated = true;
        cm.tab.assign(std::size_t(M_) * p_, Elem{});
        Elem ti = c;
        const Elem t = from_element(ctx_->gen());
        for (unsigned i = 0; i < M_; ++i) {
            if (i) ti = mul(ti, t);
            Elem acc{};
            for (std::uint64_t v = 1; v < p_; ++v) {
                add_lazy(acc, ti);
                Elem canon = acc;
                renorm(canon);
                cm.tab[std::size_t(i) * p_ + v] = canon;
                if (v % (max_lazy_terms / 2) == 0) {
                    renorm(acc);
                }
            }
        }
        return cm;
    }

    Elem apply(const ConstMul& cm, const Elem& a) const {
        if (!cm.tabulated) return mul(a, cm.c);
        Elem acc{};
        for (unsigned i = 0; i < M_; ++i) {
            const std::uint64_t v = lane(a, i);
            if (v) add_lazy(acc, cm.tab[std::size_t(i) * p_ + v]);
        }
        renorm(acc);
        return acc;
    }

    unsigned trace_mod_p(const Elem& a) const {
        std::uint64_t s = 0;
        for (unsigned i = 0; i < M_; ++i) s += lane(a, i) * tr_[i];
        return static_cast<unsigned>(s % p_);
    }

    std::uint64_t lane(const Elem& a, unsigned i) const {
        const unsigned word = i / lanes_per_word, slot = i % lanes_per_word;
        const std::uint64_t lane_mask = (lane_bytes == 8) ? ~0ULL : ((1ULL << (8 * lane_bytes)) - 1);
        return (a[word] >> (slot * 8 * lane_bytes)) & lane_mask;
    }
    void set_lane(Elem& a, unsigned i, std::uint64_t v) const {
        const unsigned word = i / lanes_per_word, slot = i % lanes_per_word;
        const std::uint64_t lane_mask = (lane_bytes == 8) ? ~0ULL : ((1ULL << (8 * lane_bytes)) - 1);
        a[word] = (a[word] & ~(lane_mask << (slot * 8 * lane_bytes))) | (v << (slot * 8 * lane_bytes));
    }

  private:
    FieldCtxPtr ctx_;
    std::uint64_t p_ = 0;
    unsigned M_ = 0;
    std::vector<std::uint32_t> mod_;
    std::vector<std::uint8_t> mod_tab_;
    std::vector<std::uint32_t> tr_;
};

/*
   Engine dispatch: picks the narrowest lane that fits p and M. Throws when the
   field is too large for any kernel, which only happens past enumeration sizes
   that would be unusable anyway.
*/
template <typename Fn>
auto with_engine(const FieldCtxPtr& ctx, Fn&& fn) {
    if (PackedBinary::usable(*ctx)) return fn(PackedBinary(ctx));
    if (PackedOdd<std::uint8_t>::usable(*ctx)) return fn(PackedOdd<std::uint8_t>(ctx));
    if (PackedOdd<std::uint16_t>::usable(*ctx)) return fn(PackedOdd<std::uint16_t>(ctx));
    if (PackedOdd<std::uint32_t>::usable(*ctx)) return fn(PackedOdd<std::uint32_t>(ctx));
    if (PackedOdd<std::uint64_t>::usable(*ctx)) return fn(PackedOdd<std::uint64_t>(ctx));
    throw BudgetError("field of order " + dec(ctx->q_int()) + " exceeds enumeration kernel limits");
}

/// Smallest multiplicative generator by canonical index, via packed arithmetic.
template <typename Engine>
std::uint64_t engine_find_generator(const Engine& eng) {
    const Int group = Int(static_cast<unsigned long>(eng.Q())) - 1;
    const auto primes = distinct_prime_factors(group);
    for (std::uint64_t idx = 1; idx < eng.Q(); ++idx) {
        const auto cand = eng.from_index(idx);
        bool ok = true;
        for (const Int& l : primes)
            if (eng.pow(cand, group / l) == eng.one()) {
                ok = false;
                break;
            }
        if (ok) return idx;
    }
    throw InvariantError("no multiplicative generator found");
}

/*
   Least root (by canonical index) of a polynomial with prime-subfield
   coefficients, or Q if there is none. Walks the multiplicative cycle once,
   keeping one register per coefficient; register j holds c_j * g^{i j} after
   i steps, so the candidate value is just the register sum. Zero is never a
   root of the irreducible moduli this is used for, but it is still checked.
*/
template <typename Engine>
std::uint64_t engine_find_root(const Engine& eng, const std::vector<std::uint32_t>& coeffs,
                               std::uint64_t* visited = nullptr) {
    const std::uint64_t p = eng.ctx()->p();
    const std::uint64_t gidx = engine_find_generator(eng);
    std::uint64_t best = (coeffs[0] % p == 0) ? 0 : eng.Q();
    struct Reg {
        typename Engine::Elem value;
        typename Engine::ConstMul step;
    };
    std::vector<Reg> regs;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] % p == 0) continue;
        Reg r;
        r.value = eng.from_index(coeffs[j] % p);
        r.step = eng.prep_mul(eng.pow(eng.from_index(gidx), Int(static_cast<unsigned long>(j))));
        regs.push_back(std::move(r));
    }
    // after i+1 advances register j holds c_j * g^{(i+1) j}, the term at x = g^{i+1}
    const std::uint64_t steps = eng.Q() - 1;
    auto cur = eng.from_index(gidx);
    auto gstep = eng.prep_mul(eng.from_index(gidx));
    for (std::uint64_t i = 0; i < steps; ++i) {
        auto val = eng.zero();
        for (auto& r : regs) {
            r.value = eng.apply(r.step, r.value);
            val = eng.add(val, r.value);
        }
        if (eng.is_zero(val)) {
            const std::uint64_t idx = eng.to_index(cur);
            if (idx < best) best = idx;
        }
        cur = eng.apply(gstep, cur);
    }
    if (visited) *visited += steps;
    return best;
}

}  // namespace abelzeta
