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
   Dense univariate polynomials over a finite field context. Coefficients are
   stored as canonical element indices, so all ring operations go through the
   context's index arithmetic (table-backed for small fields). This is the
   ring F_q[x]: place enumeration, splitting rules and cover validation are
   all built on top of it.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "field.hpp"

namespace abelzeta {

class Poly {
  public:
    Poly() = default;
    Poly(FieldCtxPtr ctx, std::vector<std::uint32_t> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        for (std::uint32_t ci : c_)
            if (ci >= ctx_->q()) throw ValidationError("coefficient index out of range");
        trim();
    }

    static Poly zero(FieldCtxPtr ctx) { return Poly(std::move(ctx), {}); }
    static Poly one(FieldCtxPtr ctx) { return Poly(std::move(ctx), {1}); }
    static Poly x(FieldCtxPtr ctx) { return Poly(std::move(ctx), {0, 1}); }
    static Poly from_elements(const FieldCtxPtr& ctx, const std::vector<FieldElement>& elems) {
        std::vector<std::uint32_t> idx;
        idx.reserve(elems.size());
        for (const auto& e : elems) {
            ctx->check(e);
            idx.push_back(static_cast<std::uint32_t>(ctx->index_of(e)));
        }
        return Poly(ctx, std::move(idx));
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff_elem(std::size_t i) const { return ctx_->element_from_index(coeff(i)); }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return ctx_.get() == o.ctx_.get() && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.match(b);
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.ctx_->add_index(a.coeff(i), b.coeff(i));
        return Poly(a.ctx_, std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.match(b);
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a.ctx_->sub_index(a.coeff(i), b.coeff(i));
        return Poly(a.ctx_, std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.match(b);
        if (a.is_zero() || b.is_zero()) return zero(a.ctx_);
        std::vector<std::uint32_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j])
                    r[i + j] = a.ctx_->add_index(r[i + j], a.ctx_->mul_index(a.c_[i], b.c_[j]));
        }
        return Poly(a.ctx_, std::move(r));
    }

    Poly scaled(std::uint32_t s) const {
        std::vector<std::uint32_t> r(c_);
        for (auto& ci : r) ci = ctx_->mul_index(ci, s);
        return Poly(ctx_, std::move(r));
    }

    Poly make_monic() const {
        if (is_zero()) throw ValidationError("cannot normalize the zero polynomial");
        if (is_monic()) return *this;
        return scaled(ctx_->inv_index(lead()));
    }

    /// Euclidean division; remainder has degree < deg(den).
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        num.match(den);
        if (den.is_zero()) throw ValidationError("polynomial division by zero");
        if (num.deg() < den.deg()) return {zero(num.ctx_), num};
        const auto& ctx = num.ctx_;
        const std::uint32_t dlead_inv = ctx->inv_index(den.lead());
        std::vector<std::uint32_t> rem(num.c_);
        std::vector<std::uint32_t> quot(num.c_.size() - den.c_.size() + 1, 0);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const std::uint32_t top = rem[k + den.c_.size() - 1];
            if (!top) continue;
            const std::uint32_t q = ctx->mul_index(top, dlead_inv);
            quot[k] = q;
            for (std::size_t i = 0; i < den.c_.size(); ++i)
                rem[k + i] = ctx->sub_index(rem[k + i], ctx->mul_index(q, den.c_[i]));
        }
        return {Poly(ctx, std::move(quot)), Poly(ctx, std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    static Poly gcd(Poly a, Poly b) {
        a.match(b);
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.make_monic();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero(ctx_);
        std::vector<std::uint32_t> r(c_.size() - 1, 0);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            const std::uint64_t mult = i % ctx_->p();
            std::uint32_t term = 0;
            for (std::uint64_t t = 0; t < mult; ++t) term = ctx_->add_index(term, c_[i]);
            r[i - 1] = term;
        }
        return Poly(ctx_, std::move(r));
    }

    /// Horner evaluation at a point of the same field.
    std::uint32_t eval_index(std::uint32_t xidx) const {
        std::uint32_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = ctx_->add_index(ctx_->mul_index(acc, xidx), c_[i]);
        return acc;
    }
    FieldElement eval(const FieldElement& x) const {
        ctx_->check(x);
        return ctx_->element_from_index(eval_index(static_cast<std::uint32_t>(ctx_->index_of(x))));
    }

    /// Evaluation at a point of an extension; coefficients pass through the
    /// canonical embedding of the base into the point's field.
    FieldElement eval_embedded(const FieldElement& x, const FieldCtxPtr& ext) const {
        ext->check(x);
        const Embedding& em = get_embedding(ctx_, ext);
        FieldElement acc = ext->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(coeff_elem(i), em);
        return acc;
    }

    static Poly pow_mod(const Poly& base, Int e, const Poly& mod) {
        base.match(mod);
        if (mod.deg() < 1) throw ValidationError("pow_mod modulus must be nonconstant");
        if (e < 0) throw ValidationError("pow_mod exponent must be nonnegative");
        Poly r = one(base.ctx_), b = base % mod;
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % mod;
            b = (b * b) % mod;
            e >>= 1;
        }
        return r;
    }

  private:
    void match(const Poly& o) const {
        if (ctx_.get() != o.ctx_.get()) throw ValidationError("polynomial context mismatch");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldCtxPtr ctx_;
    std::vector<std::uint32_t> c_;
};

/// Deterministic irreducibility test: f (monic, deg d >= 1) is irreducible
/// over F_q iff x^{q^d} = x (mod f) and gcd(x^{q^{d/l}} - x, f) = 1 for every
/// prime l | d.
inline bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) throw ValidationError("irreducibility is defined for nonconstant f");
    if (!f.is_monic()) throw ValidationError("irreducibility test expects monic input");
    const auto& ctx = f.ctx();
    const unsigned d = static_cast<unsigned>(f.deg());
    if (d == 1) return true;
    const Poly xp = Poly::x(ctx);
    const Poly xr = xp % f;
    const Int q = ctx->q_int();
    for (const Int& l : distinct_prime_factors(Int(d))) {
        const unsigned sub = d / static_cast<unsigned>(l.get_ui());
        const Poly h = Poly::pow_mod(xp, int_pow(q, sub), f);
        if (Poly::gcd(h - xr, f).deg() != 0) return false;
    }
    return Poly::pow_mod(xp, int_pow(q, d), f) == xr;
}

/*
   Resultant of a monic polynomial a with b: the product of b over the roots
   of a. Computed by the Euclidean chain Res(a, b) = lc(b)^{deg a - deg r} *
   (-1)^{deg a deg b} Res(b, r) with r = a mod b. Used as the residue-field
   norm N(b mod a) when a is irreducible.
*/
inline std::uint32_t resultant_monic(const Poly& a, const Poly& b) {
    if (!a.is_monic()) throw ValidationError("resultant expects a monic first argument");
    const auto& ctx = a.ctx();
    Poly f = a, g = b;
    std::uint32_t acc = 1;
    bool negate = false;
    while (true) {
        if (g.is_zero()) return f.deg() == 0 ? (negate ? ctx->neg_index(acc) : acc) : 0;
        if (g.deg() == 0) {
            std::uint32_t pw = 1;
            for (int i = 0; i < f.deg(); ++i) pw = ctx->mul_index(pw, g.lead());
            acc = ctx->mul_index(acc, pw);
            return negate ? ctx->neg_index(acc) : acc;
        }
        const Poly r = f % g;
        const int drop = f.deg() - (r.is_zero() ? 0 : r.deg());
        std::uint32_t pw = 1;
        for (int i = 0; i < drop; ++i) pw = ctx->mul_index(pw, g.lead());
        acc = ctx->mul_index(acc, pw);
        if ((static_cast<unsigned>(f.deg()) & 1u) && (static_cast<unsigned>(g.deg()) & 1u))
            negate = !negate;
        f = g;
        g = r;
    }
}

/*
   Power sums of the roots of a monic polynomial, inside its coefficient
   field: out[k] = sum of (root_i)^k for k = 0..count-1, by Newton's
   identities. For irreducible pi this gives the relative traces
   Tr_{F_{q^d}/F_q}(x^k mod pi) without any extension arithmetic.
*/
inline std::vector<std::uint32_t> root_power_sums(const Poly& pi, unsigned count) {
    if (!pi.is_monic() || pi.deg() < 1)
        throw ValidationError("power sums expect a monic nonconstant polynomial");
    const auto& ctx = pi.ctx();
    const unsigned d = static_cast<unsigned>(pi.deg());
    const std::uint64_t p = ctx->p();
    // t_j = -(coefficient of x^{d-j}); p_k = sum_{j<=min(k-1,d)} t_j p_{k-j} + [k<=d] k t_k
    std::vector<std::uint32_t> t(d + 1, 0);
    for (unsigned j = 1; j <= d; ++j) t[j] = ctx->neg_index(pi.coeff(d - j));
    std::vector<std::uint32_t> ps(count, 0);
    if (count > 0) ps[0] = static_cast<std::uint32_t>(d % p);  // indices < p are constants
    for (unsigned k = 1; k < count; ++k) {
        std::uint32_t acc = 0;
        const unsigned jmax = std::min(k - 1, d);
        for (unsigned j = 1; j <= jmax; ++j)
            acc = ctx->add_index(acc, ctx->mul_index(t[j], ps[k - j]));
        if (k <= d) acc = ctx->add_index(acc, ctx->mul_index(static_cast<std::uint32_t>(k % p), t[k]));
        ps[k] = acc;
    }
    return ps;
}

/*
   Text form: sparse sum of `c*x^k` terms, `^1` and `1*` omissible, whitespace
   ignored, e.g. `x^3+2*x`. Plain decimal coefficients are reduced mod p; a
   coefficient outside the prime subfield is written `e<i>` with i its
   canonical element index (needed over non-prime base fields, where the
   decimal form cannot reach every element).
*/
inline Poly parse_poly(const FieldCtxPtr& ctx, const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<std::uint32_t> coeffs;
    const auto bump = [&](unsigned long expo, std::uint64_t cidx) {
        if (coeffs.size() <= expo) coeffs.resize(expo + 1, 0);
        coeffs[expo] = static_cast<std::uint32_t>(ctx->add_index(coeffs[expo], cidx));
    };
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = (s[i] == '-');
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        if (i >= s.size()) throw ParseError("dangling sign in polynomial");
        const auto read_digits = [&]() -> std::string {
            std::size_t j = i;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j == i) throw ParseError("expected digits at position " + std::to_string(i));
            std::string d = s.substr(i, j - i);
            i = j;
            return d;
        };
        std::uint64_t cidx = 1;
        bool have_coef = false;
        if (s[i] == 'e' && i + 1 < s.size() && s[i + 1] >= '0' && s[i + 1] <= '9') {
            ++i;
            const Int raw(read_digits());
            if (raw >= ctx->q_int())
                throw ParseError("element index " + dec(raw) + " out of range for this field");
            cidx = raw.get_ui();
            have_coef = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            const Int raw(read_digits());
            cidx = ctx->index_of(ctx->from_integer(raw));
            have_coef = true;
        }
        unsigned long expo = 0;
        bool have_var = false;
        if (have_coef && i < s.size() && s[i] == '*') {
            ++i;
            if (i >= s.size() || s[i] != 'x')
                throw ParseError("expected 'x' after '*' at position " + std::to_string(i));
        } else if (have_coef && i < s.size() && s[i] == 'x') {
            throw ParseError("missing '*' between coefficient and 'x' at position " +
                             std::to_string(i));
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            have_var = true;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::string d = read_digits();
                if (d.size() > 6) throw ParseError("exponent too large");
                expo = std::stoul(d);
            }
        }
        if (!have_coef && !have_var)
            throw ParseError("malformed term at position " + std::to_string(i));
        bump(expo, negative ? ctx->neg_index(cidx) : cidx);
    }
    return Poly(ctx, std::move(coeffs));
}

inline std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& ctx = f.ctx();
    std::string out;
    for (int k = f.deg(); k >= 0; --k) {
        const std::uint32_t c = f.coeff(static_cast<std::size_t>(k));
        if (!c) continue;
        if (!out.empty()) out += '+';
        const bool unit = (c == 1);
        if (!unit || k == 0) {
            out += (c < ctx->p()) ? std::to_string(c) : ("e" + std::to_string(c));
            if (k > 0) out += '*';
        }
        if (k == 1)
            out += "x";
        else if (k > 1)
            out += "x^" + std::to_string(k);
    }
    return out;
}

}  // namespace abelzeta
