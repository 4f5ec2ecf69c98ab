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

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace abelzeta {

/// Outcome of a certified comparison.
enum class Cert { holds, fails, inconclusive };

inline const char* to_string(Cert c) {
    switch (c) {
        case Cert::holds: return "holds";
        case Cert::fails: return "fails";
        default: return "inconclusive";
    }
}

inline mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 32);
}

/*
   Closed interval with directed-rounding endpoints. Every operation rounds the
   lower endpoint down and the upper endpoint up, so the true real value is
   always enclosed; comparisons are certified, never heuristic.
*/
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval of(const Int& z, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static Interval of(const Rat& q, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Interval of(unsigned long v, mpfr_prec_t prec) {
        Interval r(prec);
        mpfr_set_ui(r.lo_, v, MPFR_RNDD);
        mpfr_set_ui(r.hi_, v, MPFR_RNDU);
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(a.prec_);
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(a.prec_);
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    /// Multiplication is only needed for nonnegative operands here.
    friend Interval operator*(const Interval& a, const Interval& b) {
        if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(b.lo_) < 0)
            throw InvariantError("Interval: product of possibly negative intervals unsupported");
        Interval r(a.prec_);
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    /// Denominator must be strictly positive; numerator may have either sign.
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (mpfr_sgn(b.lo_) <= 0) throw InvariantError("Interval: division needs positive denominator");
        Interval r(a.prec_);
        mpfr_div(r.lo_, a.lo_, mpfr_sgn(a.lo_) >= 0 ? b.hi_ : b.lo_, MPFR_RNDD);
        mpfr_div(r.hi_, a.hi_, mpfr_sgn(a.hi_) >= 0 ? b.lo_ : b.hi_, MPFR_RNDU);
        return r;
    }

    Interval log() const {
        if (mpfr_sgn(lo_) <= 0) throw InvariantError("Interval: log needs positive argument");
        Interval r(prec_);
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }
    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0) throw InvariantError("Interval: sqrt needs nonnegative argument");
        Interval r(prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    /// True if every point of *this is <= every point of rhs.
    bool certainly_le(const Interval& rhs) const { return mpfr_cmp(hi_, rhs.lo_) <= 0; }
    /// True if every point of *this is > every point of rhs.
    bool certainly_gt(const Interval& rhs) const { return mpfr_cmp(lo_, rhs.hi_) > 0; }

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

/*
   Certifies lhs <= rhs, rebuilding both sides at doubled precision until the
   comparison resolves or the digit cap is reached. The builder receives the
   working precision in bits and returns the {lhs, rhs} pair.
*/
template <typename Builder>
Cert certify_le(Builder&& build, unsigned start_digits = 30, unsigned max_digits = 120) {
    for (unsigned digits = start_digits;; digits *= 2) {
        if (digits > max_digits) digits = max_digits;
        const auto [lhs, rhs] = build(bits_for_digits(digits));
        if (lhs.certainly_le(rhs)) return Cert::holds;
        if (lhs.certainly_gt(rhs)) return Cert::fails;
        if (digits >= max_digits) return Cert::inconclusive;
    }
}

/// Midpoint-style decimal rendering of a point value with `digits` significant digits.
inline std::string decimal_string(mpfr_srcptr v, unsigned digits) {
    if (mpfr_nan_p(v)) return "nan";
    if (mpfr_zero_p(v)) return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v, MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!s.empty() && s[0] == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + s;
    } else if (static_cast<std::size_t>(exp) >= s.size()) {
        out = s + std::string(static_cast<std::size_t>(exp) - s.size(), '0');
    } else {
        out = s.substr(0, static_cast<std::size_t>(exp)) + "." + s.substr(static_cast<std::size_t>(exp));
    }
    return sign + out;
}

}  // namespace abelzeta
