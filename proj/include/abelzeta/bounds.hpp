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
   Per-instance inequality checks on (q, g, h, deg different, ramification).
   Everything decidable in integers or rationals is decided exactly; the
   genuinely logarithmic comparisons run in certified interval arithmetic
   with escalating precision and a ternary verdict, so no check ever rests
   on unverified floating point. Each check reports one of four statuses:

     pass          the inequality is certified to hold
     fail          it is certified violated in a context that asserts it
     report-only   violated or not evaluable, and nothing asserts it here
     inconclusive  the interval comparison stayed undecided at the cap

   The hard checks (lemma2, upper_h, ratio_upper, zeta_chain, lemma5, both
   hasse_arf parts, riemann_roch) are asserted on every instance. The two
   asymptotic hypotheses (thm1_lower, effective_lower) are recorded only,
   unless the caller marks the instance as part of an asserted sweep segment.
*/

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cover.hpp"
#include "interval.hpp"
#include "zeta.hpp"

namespace abelzeta {

enum class CheckStatus { pass, fail, report_only, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::report_only: return "report-only";
        default: return "inconclusive";
    }
}

/// (N_m - n_m)^2 <= 16 g^2 q^m for every m <= B, comparing the cover's place
/// counts against the rational base's.
inline bool lemma2_check(const std::vector<Int>& N, const Int& q, unsigned g, unsigned B) {
    if (N.size() < B) throw ValidationError("lemma2 needs counts complete to the bound");
    const auto base = rational_place_counts(q, B);
    for (unsigned m = 1; m <= B; ++m) {
        const Int d = N[m - 1] - base[m - 1];
        if (d * d > Int(16) * Int(g) * Int(g) * int_pow(q, m)) return false;
    }
    return true;
}

/// 4g h >= (q - 1) q^{g-1}; the asymptotic class-number floor, reported
/// without asserting.
inline bool thm1_lower_bound(const Int& q, unsigned g, const Int& h) {
    if (g < 1) throw ValidationError("thm1 lower bound needs g >= 1");
    return Int(4) * Int(g) * h >= (q - 1) * int_pow(q, g - 1);
}

namespace detail {

/// (a + b sqrt(q))^e by binary powering; coefficients stay nonnegative.
inline std::pair<Int, Int> sqrt_ring_pow(const Int& q, Int a, Int b, unsigned e) {
    Int ra = 1, rb = 0;
    while (e) {
        if (e & 1u) {
            const Int na = ra * a + rb * b * q;
            rb = ra * b + rb * a;
            ra = na;
        }
        const Int sa = a * a + b * b * q;
        b = 2 * a * b;
        a = sa;
        e >>= 1u;
    }
    return {ra, rb};
}

}  // namespace detail

/// h <= (1 + sqrt(q))^{2g}, decided exactly in Z[sqrt(q)]: the right side is
/// (1 + q + 2 sqrt(q))^g = A + B sqrt(q), and h - A <= B sqrt(q) is settled
/// by squaring. Equality can occur when q is a square.
inline bool upper_bound_h(const Int& q, unsigned g, const Int& h) {
    const auto [A, B] = detail::sqrt_ring_pow(q, 1 + q, Int(2), g);
    const Int t = h - A;
    if (t <= 0) return true;
    return t * t <= B * B * q;
}

/// Exact value of the rational base's zeta at s = 2, i.e. at u = q^{-2}:
/// 1 / ((1 - q^{-2})(1 - q^{-1})).
inline Rat base_zeta_at_2(const Int& q) {
    const Rat u = Rat(1) / (q * q);
    return Rat(1) / ((1 - u) * (1 - Rat(q) * u));
}

/// Exact rational sandwich at s = 2:
/// h q^{-2g} zeta_0(2) <= zeta_K(2) <= zeta_0(2)^n.
inline std::pair<bool, bool> zeta_chain_check(const LPolynomial& L, const Int& h, unsigned n) {
    const Rat z0 = base_zeta_at_2(L.q);
    const Rat zK = zeta_eval(L, Rat(1) / (L.q * L.q));
    const Rat lower = Rat(h) / int_pow(L.q, 2 * L.g) * z0;
    Rat upper = 1;
    for (unsigned i = 0; i < n; ++i) upper *= z0;
    return {lower <= zK, zK <= upper};
}

/// q^{2 deg(different)} >= n^n with [H:F] = 1, which the family construction
/// certifies through its totally ramified place.
inline bool lemma5_check(const Int& q, unsigned n, const Int& deg_different) {
    if (n < 2) throw ValidationError("lemma5 needs a proper extension");
    if (deg_different < 0) return false;
    const Int e2 = 2 * deg_different;
    if (e2.fits_ulong_p() && e2 <= 2000000)
        return int_pow(q, e2.get_ui()) >= int_pow(Int(n), n);
    // n <= q forces n^n <= q^n, so e2 >= n settles it without the giant power
    if (Int(n) <= q && e2 >= n) return true;
    throw BudgetError("lemma5 exponents too large for exact comparison");
}

/// Per ramified entry: 2 alpha >= k e, and e <= q^{d k} with d the degree of
/// the place below. Returns {all first bounds, all second bounds}.
inline std::pair<bool, bool> hasse_arf_checks(const RamificationReport& rep, const Int& q) {
    bool first = true, second = true;
    for (const auto& en : rep.entries) {
        if (Int(2) * en.alpha < Int(en.jumps) * Int(en.e)) first = false;
        if (Int(en.e) > int_pow(q, std::uint64_t(en.place.degree) * en.jumps)) second = false;
    }
    return {first, second};
}

/// A_n = h (q^{n-g+1} - 1)/(q - 1) exactly for max(0, 2g-1) <= n <= 2g+1.
inline bool riemann_roch_window_check(const LPolynomial& L, const Int& h) {
    const unsigned top = 2 * L.g + 1;
    const unsigned lo = L.g == 0 ? 0 : 2 * L.g - 1;
    const auto A = divisor_count_series(L, top);
    for (unsigned n = lo; n <= top; ++n) {
        const Int expected = h * exact_div(int_pow(L.q, n - L.g + 1) - 1, L.q - 1);
        if (A[n] != expected) return false;
    }
    return true;
}

namespace detail {

inline Interval ratio_interval(const Int& q, unsigned g, const Int& h, mpfr_prec_t prec) {
    return Interval::of(h, prec).log() /
           (Interval::of(static_cast<unsigned long>(g), prec) * Interval::of(q, prec).log());
}

inline Interval effective_floor_interval(unsigned g, mpfr_prec_t prec) {
    const Interval one = Interval::of(1ul, prec);
    const Interval num = one + Interval::of(4ul * g, prec).log();
    const Interval den =
        Interval::of(static_cast<unsigned long>(g), prec) * Interval::of(2ul, prec).log();
    return one - num / den;
}

inline Interval ratio_upper_interval(const Int& q, mpfr_prec_t prec) {
    const Interval one = Interval::of(1ul, prec);
    return Interval::of(2ul, prec) * (one + Interval::of(q, prec).sqrt()).log() /
           Interval::of(q, prec).log();
}

}  // namespace detail

/// Certifies ratio >= 1 - (1 + ln 4g)/(g ln 2). Interval-only; the bound is
/// transcendental in g, so escalation decides every practical case.
inline Cert certify_effective_lower(const Int& q, unsigned g, const Int& h,
                                    unsigned max_digits = 120) {
    if (g < 1) throw ValidationError("effective lower ratio needs g >= 1");
    return certify_le(
        [&](mpfr_prec_t prec) {
            return std::pair{detail::effective_floor_interval(g, prec),
                             detail::ratio_interval(q, g, h, prec)};
        },
        30, max_digits);
}

/// Certifies ratio <= 2 ln(1 + sqrt(q))/ln(q). An inconclusive interval
/// comparison (exact equality happens for maximal h over square q) falls
/// back to the equivalent exact statement h <= (1 + sqrt(q))^{2g}.
inline Cert certify_ratio_upper(const Int& q, unsigned g, const Int& h,
                                unsigned max_digits = 120) {
    if (g < 1) throw ValidationError("ratio upper bound needs g >= 1");
    const Cert c = certify_le(
        [&](mpfr_prec_t prec) {
            return std::pair{detail::ratio_interval(q, g, h, prec),
                             detail::ratio_upper_interval(q, prec)};
        },
        30, max_digits);
    if (c != Cert::inconclusive) return c;
    return upper_bound_h(q, g, h) ? Cert::holds : Cert::fails;
}

/// Certifies ratio <= s + (n-1) ln(8/3)/(g ln 2) at s = 2, where 8/3 is the
/// exact zeta value of the rational base over F_2.
inline Cert lemma3_ratio_bound(const Int& q, unsigned g, const Int& h, unsigned n,
                               unsigned max_digits = 120) {
    if (g < 1) throw ValidationError("lemma3 ratio bound needs g >= 1");
    return certify_le(
        [&](mpfr_prec_t prec) {
            const Interval rhs =
                Interval::of(2ul, prec) +
                Interval::of(static_cast<unsigned long>(n - 1), prec) *
                    Interval::of(Rat(8) / 3, prec).log() /
                    (Interval::of(static_cast<unsigned long>(g), prec) *
                     Interval::of(2ul, prec).log());
            return std::pair{detail::ratio_interval(q, g, h, prec), rhs};
        },
        30, max_digits);
}

/// ln h / (g ln q) rendered to `digits` significant digits (default 30).
inline std::string ratio_decimal(const Int& q, unsigned g, const Int& h, unsigned digits = 30) {
    if (g < 1) throw ValidationError("convergence ratio undefined at genus 0");
    if (h < 1) throw ValidationError("convergence ratio needs h >= 1");
    const Interval iv = detail::ratio_interval(q, g, h, bits_for_digits(digits + 20));
    return decimal_string(iv.lo(), digits);
}

inline std::string effective_lower_decimal(unsigned g, unsigned digits = 30) {
    if (g < 1) throw ValidationError("effective lower ratio needs g >= 1");
    const Interval iv = detail::effective_floor_interval(g, bits_for_digits(digits + 20));
    return decimal_string(iv.lo(), digits);
}

inline std::string ratio_upper_decimal(const Int& q, unsigned digits = 30) {
    const Interval iv = detail::ratio_upper_interval(q, bits_for_digits(digits + 20));
    return decimal_string(iv.lo(), digits);
}

/// The ten per-instance checks in report column order.
struct CheckSet {
    CheckStatus lemma2 = CheckStatus::pass;
    CheckStatus thm1_lower = CheckStatus::pass;
    CheckStatus effective_lower = CheckStatus::pass;
    CheckStatus upper_h = CheckStatus::pass;
    CheckStatus ratio_upper = CheckStatus::pass;
    CheckStatus zeta_chain = CheckStatus::pass;
    CheckStatus lemma5 = CheckStatus::pass;
    CheckStatus hasse_arf_first = CheckStatus::pass;
    CheckStatus hasse_arf_second = CheckStatus::pass;
    CheckStatus riemann_roch = CheckStatus::pass;

    static constexpr std::array<const char*, 10> names = {
        "lemma2",     "thm1_lower", "effective_lower", "upper_h",
        "ratio_upper", "zeta_chain", "lemma5",          "hasse_arf_first",
        "hasse_arf_second", "riemann_roch"};

    std::array<CheckStatus, 10> values() const {
        return {lemma2,     thm1_lower, effective_lower, upper_h,        ratio_upper,
                zeta_chain, lemma5,     hasse_arf_first, hasse_arf_second, riemann_roch};
    }
};

struct CheckInputs {
    const LPolynomial* L = nullptr;
    Int h;
    unsigned n = 0;  // [K:F]
    Int deg_different;
    const RamificationReport* ram = nullptr;
    bool assert_asymptotic = false;  // sweep segment membership
    unsigned max_digits = 120;
};

/// Runs every check. Hard checks map holds/violated to pass/fail; the two
/// asymptotic ones map violated to report-only unless asserted.
inline CheckSet evaluate_checks(const CheckInputs& in) {
    if (!in.L || !in.ram) throw ValidationError("check evaluation needs zeta and ramification");
    const LPolynomial& L = *in.L;
    const Int& q = L.q;
    const unsigned g = L.g;
    CheckSet out;
    const auto hard = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };
    const auto soft = [&](bool ok) {
        return ok ? CheckStatus::pass
                  : (in.assert_asymptotic ? CheckStatus::fail : CheckStatus::report_only);
    };
    const auto cert_soft = [&](Cert c) {
        if (c == Cert::inconclusive) return CheckStatus::inconclusive;
        return soft(c == Cert::holds);
    };
    out.lemma2 = hard(lemma2_check(predicted_place_counts(L, 2 * g), q, g, 2 * g));
    out.thm1_lower = g >= 1 ? soft(thm1_lower_bound(q, g, in.h)) : CheckStatus::report_only;
    out.effective_lower = g >= 1 ? cert_soft(certify_effective_lower(q, g, in.h, in.max_digits))
                                 : CheckStatus::report_only;
    out.upper_h = hard(upper_bound_h(q, g, in.h));
    if (g >= 1) {
        const Cert c = certify_ratio_upper(q, g, in.h, in.max_digits);
        out.ratio_upper = hard(c == Cert::holds);
    } else {
        // ratio is undefined at genus 0; the exact equivalent is h <= 1
        out.ratio_upper = hard(upper_bound_h(q, 0, in.h));
    }
    const auto [zlo, zhi] = zeta_chain_check(L, in.h, in.n);
    out.zeta_chain = hard(zlo && zhi);
    out.lemma5 = hard(lemma5_check(q, in.n, in.deg_different));
    const auto [ha1, ha2] = hasse_arf_checks(*in.ram, q);
    out.hasse_arf_first = hard(ha1);
    out.hasse_arf_second = hard(ha2);
    out.riemann_roch = hard(riemann_roch_window_check(L, in.h));
    return out;
}

/// True when some asserted check failed (hard ones always assert; the
/// asymptotic ones only inside a declared sweep segment).
inline bool has_hard_failure(const CheckSet& cs) {
    for (const CheckStatus s : cs.values())
        if (s == CheckStatus::fail) return true;
    return false;
}

}  // namespace abelzeta
