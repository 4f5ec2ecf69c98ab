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
   Finite fields F_{p^n} in a single canonical representation: F_p[t] modulo
   the first monic irreducible of degree n, where "first" orders coefficient
   vectors (constant term in the least significant position) as base-p
   integers. Elements are coefficient vectors over F_p; their index
   sum(d_i p^i) defines the canonical element order used for enumeration,
   generator search, and root selection everywhere else in the library.
*/

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace abelzeta {

inline constexpr std::uint64_t default_budget = 1ULL << 26;

namespace detail {

/* ---- bare polynomial arithmetic over F_p, used to bootstrap moduli ---- */

using PVec = std::vector<std::uint32_t>;  // coefficients, constant term first, no trailing zeros

inline void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return r;
}

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline PVec pmod(PVec a, const PVec& m, std::uint64_t p) {
    const std::uint64_t lead_inv = inv_mod_prime(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t off = a.size() - m.size();
        if (c != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[off + i] = static_cast<std::uint32_t>((a[off + i] + (p - c * m[i] % p)) % p);
        a.pop_back();
        ptrim(a);
        if (a.size() < m.size()) break;
    }
    ptrim(a);
    return a;
}

inline PVec pmulmod(const PVec& a, const PVec& b, const PVec& m, std::uint64_t p) {
    return pmod(pmul(a, b, p), m, p);
}

inline PVec ppowmod(PVec base, std::uint64_t e, const PVec& m, std::uint64_t p) {
    PVec r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline PVec pgcd(PVec a, PVec b, std::uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t inv = inv_mod_prime(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t(c) * inv % p);
    }
    return a;
}

/// Rabin's criterion: f irreducible iff x^{p^d} = x (mod f) and
/// gcd(x^{p^{d/l}} - x, f) = 1 for every prime l dividing d.
inline bool prime_field_irreducible(const PVec& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    std::vector<std::size_t> checkpoints;
    {
        auto primes = distinct_prime_factors(Int(static_cast<unsigned long>(d)));
        for (const auto& l : primes) checkpoints.push_back(d / l.get_ui());
    }
    const PVec xref = pmod(PVec{0, 1}, f, p);  // x reduced mod f; differs from x only for d = 1
    PVec h = xref;
    for (std::size_t e = 1; e <= d; ++e) {
        h = ppowmod(std::move(h), p, f, p);  // now x^{p^e} mod f
        for (std::size_t cp : checkpoints) {
            if (e != cp) continue;
            PVec diff = h;
            diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
            diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
            ptrim(diff);
            PVec g = pgcd(diff, f, p);
            if (!(g.size() == 1 && g[0] == 1)) return false;
        }
    }
    return h == xref;
}

}  // namespace detail

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldCtxPtr ctx, std::vector<std::uint32_t> digits)
        : ctx_(std::move(ctx)), d_(std::move(digits)) {}

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<std::uint32_t>& digits() const { return d_; }

    bool is_zero() const {
        for (auto v : d_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.ctx_ == b.ctx_ && a.d_ == b.d_;
    }

  private:
    FieldCtxPtr ctx_;
    std::vector<std::uint32_t> d_;
};

/*
   Immutable field context. Instances are unique per (p, n) via field_ctx(),
   so contexts compare by pointer identity. For q <= 256 full index tables
   for addition, multiplication and inversion are precomputed; larger fields
   fall back to digit-vector arithmetic.
*/
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  public:
    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    Int q_int() const { return Int(static_cast<unsigned long>(q_)); }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !mul_tab_.empty(); }

    FieldElement zero() const { return {shared_from_this(), std::vector<std::uint32_t>(n_, 0)}; }
    FieldElement one() const { return element_from_index(1 % q_); }
    /// t, the residue class of the variable. Generates F_q over F_p as an algebra.
    FieldElement gen() const {
        std::vector<std::uint32_t> d(n_, 0);
        if (n_ == 1)
            d[0] = static_cast<std::uint32_t>(1 % p_);
        else
            d[1] = 1;
        return {shared_from_this(), std::move(d)};
    }
    /// Constant c mod p viewed as an element of the prime subfield.
    FieldElement from_integer(const Int& c) const {
        Int r = c % Int(static_cast<unsigned long>(p_));
        if (r < 0) r += Int(static_cast<unsigned long>(p_));
        std::vector<std::uint32_t> d(n_, 0);
        d[0] = static_cast<std::uint32_t>(r.get_ui());
        return {shared_from_this(), std::move(d)};
    }

    std::uint64_t index_of(const FieldElement& a) const {
        std::uint64_t idx = 0;
        for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + a.digits()[i];
        return idx;
    }
    FieldElement element_from_index(std::uint64_t idx) const {
        if (idx >= q_) throw ValidationError("element index out of range");
        std::vector<std::uint32_t> d(n_);
        for (unsigned i = 0; i < n_; ++i) {
            d[i] = static_cast<std::uint32_t>(idx % p_);
            idx /= p_;
        }
        return {shared_from_this(), std::move(d)};
    }

    /* ---- index arithmetic; table-backed when available ---- */

    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const {
        if (has_tables()) return add_tab_[a * q_ + b];
        return index_of(add(element_from_index(a), element_from_index(b)));
    }
    std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const {
        return add_index(a, neg_index(b));
    }
    std::uint64_t neg_index(std::uint64_t a) const {
        if (has_tables()) return neg_tab_[a];
        return index_of(neg(element_from_index(a)));
    }
    std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const {
        if (has_tables()) return mul_tab_[a * q_ + b];
        return index_of(mul(element_from_index(a), element_from_index(b)));
    }
    std::uint64_t inv_index(std::uint64_t a) const {
        if (a == 0) throw ValidationError("division by zero");
        if (has_tables()) return inv_tab_[a];
        return index_of(inv(element_from_index(a)));
    }

    /* ---- digit arithmetic ---- */

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a), check(b);
        std::vector<std::uint32_t> d(n_);
        for (unsigned i = 0; i < n_; ++i)
            d[i] = static_cast<std::uint32_t>((std::uint64_t(a.digits()[i]) + b.digits()[i]) % p_);
        return {shared_from_this(), std::move(d)};
    }
    FieldElement neg(const FieldElement& a) const {
        check(a);
        std::vector<std::uint32_t> d(n_);
        for (unsigned i = 0; i < n_; ++i)
            d[i] = static_cast<std::uint32_t>((p_ - a.digits()[i]) % p_);
        return {shared_from_this(), std::move(d)};
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a), check(b);
        detail::PVec pa(a.digits()), pb(b.digits());
        detail::ptrim(pa);
        detail::ptrim(pb);
        detail::PVec r = detail::pmod(detail::pmul(pa, pb, p_), modulus_, p_);
        r.resize(n_, 0);
        return {shared_from_this(), std::vector<std::uint32_t>(r.begin(), r.end())};
    }
    FieldElement pow(const FieldElement& a, const Int& e) const {
        check(a);
        if (e < 0) return pow(inv(a), -e);
        FieldElement r = one(), b = a;
        Int k = e;
        while (k != 0) {
            if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
            b = mul(b, b);
            k >>= 1;
        }
        return r;
    }
    FieldElement inv(const FieldElement& a) const {
        if (a.is_zero()) throw ValidationError("division by zero");
        return pow(a, Int(static_cast<unsigned long>(q_)) - 2);
    }
    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

    void check(const FieldElement& a) const {
        if (a.ctx().get() != this) throw ValidationError("field context mismatch");
    }

  private:
    friend FieldCtxPtr field_ctx(std::uint64_t, unsigned, std::uint64_t);

    FieldCtx(std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus, std::uint64_t q)
        : p_(p), n_(n), q_(q), modulus_(std::move(modulus)) {}

    void build_tables() {
        if (q_ > 256) return;
        const std::size_t q = q_;
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        neg_tab_.resize(q);
        inv_tab_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            const FieldElement ea = element_from_index(a);
            neg_tab_[a] = static_cast<std::uint8_t>(index_of(neg(ea)));
            for (std::size_t b = 0; b < q; ++b) {
                const FieldElement eb = element_from_index(b);
                add_tab_[a * q + b] = static_cast<std::uint8_t>(index_of(add(ea, eb)));
                mul_tab_[a * q + b] = static_cast<std::uint8_t>(index_of(mul(ea, eb)));
            }
        }
        for (std::size_t a = 1; a < q; ++a)
            for (std::size_t b = 1; b < q; ++b)
                if (mul_tab_[a * q + b] == 1) inv_tab_[a] = static_cast<std::uint8_t>(b);
    }

    std::uint64_t p_;
    unsigned n_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint8_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

/*
   Canonical context factory. The modulus for degree n is found by scanning
   monic candidates in ascending base-p code order and keeping the first
   irreducible one, so every process agrees on the representation.
*/
inline FieldCtxPtr field_ctx(std::uint64_t p, unsigned n, std::uint64_t budget = default_budget) {
    if (!is_prime(Int(static_cast<unsigned long>(p)))) throw ValidationError("characteristic must be prime");
    if (n < 1) throw ValidationError("extension degree must be >= 1");
    Int q = int_pow(static_cast<unsigned long>(p), n);
    if (q > Int(static_cast<unsigned long>(budget)))
        throw BudgetError("field of order " + dec(q) + " exceeds budget " + std::to_string(budget));
    const std::uint64_t qu = q.get_ui();

    static std::mutex mtx;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldCtxPtr> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find({p, n});
    if (it != registry.end()) return it->second;

    std::vector<std::uint32_t> mod;
    for (std::uint64_t code = 0;; ++code) {
        detail::PVec f(n + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (c != 0) throw InvariantError("no irreducible of requested degree found");
        f[n] = 1;
        if (detail::prime_field_irreducible(f, p)) {
            mod.assign(f.begin(), f.end());
            break;
        }
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx(p, n, std::move(mod), qu));
    ctx->build_tables();
    registry[{p, n}] = ctx;
    return ctx;
}

/* ---- element operators ---- */

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.ctx()->add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.ctx()->sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.ctx()->mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a.ctx()->div(a, b); }
inline FieldElement operator-(const FieldElement& a) { return a.ctx()->neg(a); }
inline FieldElement pow(const FieldElement& a, const Int& e) { return a.ctx()->pow(a, e); }
inline FieldElement inv(const FieldElement& a) { return a.ctx()->inv(a); }

/// Trace onto the prime subfield: sum of a^{p^i} for i < n. Result lives in F_p.
inline FieldElement trace_to_prime(const FieldElement& a) {
    const auto& ctx = *a.ctx();
    FieldElement acc = a, frob = a;
    for (unsigned i = 1; i < ctx.n(); ++i) {
        frob = ctx.pow(frob, Int(static_cast<unsigned long>(ctx.p())));
        acc = acc + frob;
    }
    for (unsigned i = 1; i < ctx.n(); ++i)
        if (acc.digits()[i] != 0) throw InvariantError("trace left the prime subfield");
    return field_ctx(ctx.p(), 1)->element_from_index(acc.digits()[0]);
}

/// Multiplicative order; a must be nonzero. Cost O(sqrt-free factorization of q - 1).
inline Int multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw ValidationError("order of zero is undefined");
    const auto& ctx = *a.ctx();
    Int ord = ctx.q_int() - 1;
    for (const Int& l : distinct_prime_factors(ord)) {
        while (ord % l == 0 && ctx.pow(a, ord / l) == ctx.one()) ord /= l;
    }
    return ord;
}

/*
   Least j >= 1 such that u0 is an r-th power in F_{q^{d j}}, where u0 lives in
   the context representing F_{q^d}. Equivalently the order of
   z = u0^{(q^d - 1)/r} inside the group of r-th roots of unity; z is fixed by
   x -> x^q because r divides q - 1, which collapses the defining exponent
   (q^{d j} - 1)/r to j times the single exponent used here. The result always
   divides r.
*/
inline unsigned rth_power_residue_degree(const FieldElement& u0, std::uint64_t q, unsigned r) {
    if (u0.is_zero()) throw ValidationError("residue degree of zero is undefined");
    if (r == 0) throw ValidationError("r must be >= 1");
    const auto& ctx = *u0.ctx();
    if (q < 2 || (q - 1) % r != 0) throw ValidationError("r must divide q - 1");
    Int Q = ctx.q_int();
    Int qd = 1;
    unsigned d = 0;
    while (qd < Q) {
        qd *= static_cast<unsigned long>(q);
        ++d;
    }
    if (qd != Q) throw ValidationError("element context is not an extension of F_q");
    const FieldElement z = ctx.pow(u0, (Q - 1) / r);
    const Int jz = multiplicative_order(z);
    if (r % jz != 0) throw InvariantError("power residue degree does not divide r");
    return static_cast<unsigned>(jz.get_ui());
}

/// Smallest generator of the multiplicative group, in canonical element order.
inline FieldElement find_generator(const FieldCtxPtr& ctx) {
    const Int group = ctx->q_int() - 1;
    if (group == 0) throw ValidationError("trivial group has no generator");
    const auto primes = distinct_prime_factors(group);
    for (std::uint64_t idx = 1; idx < ctx->q(); ++idx) {
        const FieldElement cand = ctx->element_from_index(idx);
        bool ok = true;
        for (const Int& l : primes) {
            if (ctx->pow(cand, group / l) == ctx->one()) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw InvariantError("no multiplicative generator found");
}

}  // namespace abelzeta
