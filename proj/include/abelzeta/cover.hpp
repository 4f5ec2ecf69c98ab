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
   Abelian covers of the rational function field F_q(x) and their place
   arithmetic. Two families:

     kummer         y^m = f(x),  m | q - 1, f monic squarefree nonconstant
     artin-schreier y^p - y = f(x),  p = char F_q, f monic, p not | deg f

   Both are cyclic and geometric with a totally ramified place. Splitting of
   a rational place is decided by closed rules: the Kummer unramified part is
   the splitting of T^r - u0 over the residue field, resolved through the
   norm (a resultant) because the relevant power class is Frobenius-fixed;
   the Artin-Schreier criterion is the absolute trace of f mod the place,
   resolved through Newton power sums. Neither needs extension-field
   arithmetic, so place enumeration stays cheap.
*/

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "irreducible.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace abelzeta {

enum class Family { kummer, artin_schreier };

inline std::string family_name(Family f) {
    return f == Family::kummer ? "kummer" : "artin-schreier";
}

struct CoverSpec {
    Family family = Family::kummer;
    FieldCtxPtr base;
    unsigned m = 0;  // cyclic degree for kummer; unused for artin-schreier
    Poly f;

    /// [K : F_q(x)]
    unsigned degree() const {
        return family == Family::kummer ? m : static_cast<unsigned>(base->p());
    }
};

/// Enforces every family invariant; returns the spec unchanged on success.
inline CoverSpec validate_cover(CoverSpec spec) {
    if (!spec.base) throw ValidationError("cover needs a base field");
    if (spec.f.ctx().get() != spec.base.get())
        throw ValidationError("cover polynomial lives over the wrong field");
    if (spec.f.deg() < 1) throw ValidationError("cover polynomial must be nonconstant");
    if (!spec.f.is_monic()) throw ValidationError("cover polynomial must be monic");
    if (spec.family == Family::kummer) {
        if (spec.m < 2) throw ValidationError("kummer degree m must be at least 2");
        if ((spec.base->q() - 1) % spec.m != 0)
            throw ValidationError("kummer degree " + std::to_string(spec.m) +
                                  " does not divide q - 1 = " + std::to_string(spec.base->q() - 1));
        const Poly d = spec.f.derivative();
        if (d.is_zero() || Poly::gcd(spec.f, d).deg() != 0)
            throw ValidationError("kummer polynomial must be squarefree");
    } else {
        if (static_cast<std::uint64_t>(spec.f.deg()) % spec.base->p() == 0)
            throw ValidationError("artin-schreier needs deg f prime to the characteristic");
    }
    return spec;
}

struct RationalPlace {
    bool infinite = false;
    Poly pi;  // monic irreducible when finite
    unsigned degree = 1;

    static RationalPlace infinity() { return {true, {}, 1}; }
    /// Checked constructor for external callers; enumeration skips the check.
    static RationalPlace finite(const Poly& pi) {
        if (!pi.is_monic() || !is_irreducible(pi))
            throw ValidationError("finite place needs a monic irreducible polynomial");
        return {false, pi, static_cast<unsigned>(pi.deg())};
    }
    std::string name() const { return infinite ? "infinity" : format_poly(pi); }
};

struct SplittingType {
    unsigned e = 1, f_res = 1, g_count = 1;
};

namespace detail {

/// Order of the base-field element with the given index, as a machine word.
inline unsigned index_order(const FieldCtxPtr& ctx, std::uint64_t idx) {
    const FieldElement a = ctx->element_from_index(idx);
    const Int ord = multiplicative_order(a);
    return static_cast<unsigned>(ord.get_ui());
}

inline SplittingType split_kummer_finite(const CoverSpec& spec, const Poly& pi) {
    const auto& ctx = spec.base;
    if ((spec.f % pi).is_zero()) return {spec.m, 1, 1};  // v = 1: totally ramified
    // v = 0: r = m, e = 1. The class to test is u0 = f mod pi; its r-th power
    // residue degree is ord(u0^{(q^d-1)/r}) = ord(N(u0)^{(q-1)/r}), and the
    // norm N(u0) is the resultant of pi with f.
    const std::uint32_t norm = resultant_monic(pi, spec.f);
    if (norm == 0) throw InvariantError("zero norm at an unramified place");
    const Int expo = Int(static_cast<unsigned long>(ctx->q() - 1)) / spec.m;
    const FieldElement z = pow(ctx->element_from_index(norm), expo);
    const unsigned f_res = index_order(ctx, ctx->index_of(z));
    if (spec.m % f_res != 0) throw InvariantError("residue degree does not divide r");
    return {1, f_res, spec.m / f_res};
}

inline SplittingType split_as_finite(const CoverSpec& spec, const Poly& pi) {
    const auto& ctx = spec.base;
    const unsigned p = static_cast<unsigned>(ctx->p());
    const Poly c = spec.f % pi;
    // Tr_{F_{q^d}/F_q}(x^i mod pi) is the i-th power sum of pi's roots
    const auto ps = root_power_sums(pi, static_cast<unsigned>(pi.deg()));
    std::uint64_t rel = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        rel = ctx->add_index(rel, ctx->mul_index(c.coeff(i), ps[i]));
    const FieldElement abs = trace_to_prime(ctx->element_from_index(rel));
    return abs.is_zero() ? SplittingType{1, 1, p} : SplittingType{1, p, 1};
}

}  // namespace detail

/// Splitting type of a rational place in the cover; e * f_res * g_count = [K:F].
inline SplittingType split_place(const CoverSpec& spec, const RationalPlace& place) {
    SplittingType st;
    if (spec.family == Family::kummer) {
        if (place.infinite) {
            const unsigned r = std::gcd(spec.m, static_cast<unsigned>(spec.f.deg()));
            st = {spec.m / r, 1, r};  // leading coefficient 1 is an r-th power
        } else {
            st = detail::split_kummer_finite(spec, place.pi);
        }
    } else {
        const unsigned p = static_cast<unsigned>(spec.base->p());
        st = place.infinite ? SplittingType{p, 1, 1} : detail::split_as_finite(spec, place.pi);
    }
    if (std::uint64_t(st.e) * st.f_res * st.g_count != spec.degree())
        throw InvariantError("splitting type violates e*f*g = n at " + place.name());
    return st;
}

/*
   One ramified rational place, or an aggregated class of them. count > 1
   only for Kummer covers whose ramified primes of one degree cannot be
   listed individually inside the enumeration budget; the class polynomial is
   then their product. Every derived quantity depends only on (degree, count,
   e, alpha, jumps), so aggregation never changes a result.
*/
struct RamifiedEntry {
    RationalPlace place;
    unsigned count = 1;
    bool aggregated = false;
    Poly cls;  // product of the class's primes when aggregated
    unsigned e = 1;
    Int alpha;
    unsigned jumps = 1;
    Int places_above_total_degree;

    std::string name() const {
        if (!aggregated) return place.name();
        return format_poly(cls) + " (" + std::to_string(count) + " places of degree " +
               std::to_string(place.degree) + ")";
    }
};

struct RamificationReport {
    std::vector<RamifiedEntry> entries;
    Int different_degree;
    Int genus;
};

namespace detail {

/// Distinct-degree split of a squarefree monic f: parts[d] = product of the
/// degree-d irreducible factors (monic), via gcd(x^{q^d} - x, f).
inline std::vector<Poly> distinct_degree_parts(const Poly& f) {
    const auto& ctx = f.ctx();
    std::vector<Poly> parts(static_cast<std::size_t>(f.deg()) + 1, Poly::zero(ctx));
    Poly rest = f.make_monic();
    Poly h = Poly::x(ctx) % rest;  // x^{q^d} mod f, iterated
    const Poly xp = Poly::x(ctx);
    for (unsigned d = 1; rest.deg() >= static_cast<int>(d) && rest.deg() > 0; ++d) {
        h = Poly::pow_mod(h, ctx->q_int(), rest);
        const Poly g = Poly::gcd(h - (xp % rest), rest);
        if (g.deg() > 0) {
            parts[d] = g;
            rest = (rest / g).make_monic();
            h = h % rest;
        }
        if (rest.deg() > 0 && static_cast<unsigned>(rest.deg()) <= 2 * d + 1) {
            // every remaining factor has degree > d, so this is irreducible
            parts[static_cast<std::size_t>(rest.deg())] = rest;
            rest = Poly::one(ctx);
        }
    }
    return parts;
}

inline void push_kummer_entries(const CoverSpec& spec, std::vector<RamifiedEntry>& out,
                                std::uint64_t budget) {
    const auto& ctx = spec.base;
    const auto parts = distinct_degree_parts(spec.f);
    for (unsigned d = 1; d < parts.size(); ++d) {
        const Poly& part = parts[d];
        if (part.is_zero() || part.deg() == 0) continue;
        const unsigned count = static_cast<unsigned>(part.deg()) / d;
        const Int alpha = Int(spec.m - 1);
        const auto entry_for = [&](const Poly& pi) {
            RamifiedEntry en;
            en.place = RationalPlace{false, pi, d};
            en.e = spec.m;
            en.alpha = alpha;
            en.jumps = 1;
            en.places_above_total_degree = Int(d);  // (n/e) * deg = 1 * d
            return en;
        };
        if (count == 1) {
            out.push_back(entry_for(part));
            continue;
        }
        bool named = false;
        if (int_pow(ctx->q_int(), d) <= Int(static_cast<unsigned long>(budget))) {
            unsigned found = 0;
            for_each_monic_irreducible(ctx, d, [&](const Poly& pi) {
                if (found < count && (part % pi).is_zero()) {
                    out.push_back(entry_for(pi));
                    ++found;
                }
            }, budget);
            if (found != count) throw InvariantError("distinct-degree part miscounted");
            named = true;
        }
        if (!named) {
            RamifiedEntry en;
            en.place = RationalPlace{false, Poly{}, d};
            en.count = count;
            en.aggregated = true;
            en.cls = part;
            en.e = spec.m;
            en.alpha = alpha;
            en.jumps = 1;
            en.places_above_total_degree = Int(count) * Int(d);
            out.push_back(en);
        }
    }
}

}  // namespace detail

inline RamificationReport ramification_report(const CoverSpec& spec,
                                              std::uint64_t budget = default_budget) {
    RamificationReport rep;
    const unsigned n = spec.degree();
    const unsigned D = static_cast<unsigned>(spec.f.deg());
    if (spec.family == Family::kummer) {
        detail::push_kummer_entries(spec, rep.entries, budget);
        const unsigned r = std::gcd(spec.m, D);
        if (r < spec.m) {
            RamifiedEntry en;
            en.place = RationalPlace::infinity();
            en.e = spec.m / r;
            en.alpha = Int(en.e - 1);
            en.jumps = 1;
            en.places_above_total_degree = Int(r);  // n/e places of degree 1
            rep.entries.push_back(en);
        }
    } else {
        const unsigned p = static_cast<unsigned>(spec.base->p());
        RamifiedEntry en;
        en.place = RationalPlace::infinity();
        en.e = p;
        en.alpha = Int(p - 1) * Int(D + 1);
        en.jumps = 1;
        en.places_above_total_degree = Int(1);
        rep.entries.push_back(en);
    }
    rep.different_degree = 0;
    for (const auto& en : rep.entries) {
        if (en.e < 2) throw InvariantError("unramified entry in ramification report");
        rep.different_degree += en.alpha * en.places_above_total_degree;
    }
    // Riemann-Hurwitz over a genus-0 base: 2g - 2 = -2n + deg(different)
    const Int twog2 = Int(-2) * Int(n) + rep.different_degree;
    if (mpz_odd_p(twog2.get_mpz_t())) throw InvariantError("different degree has wrong parity");
    rep.genus = (twog2 + 2) / 2;
    if (rep.genus < 0) throw InvariantError("negative genus from Riemann-Hurwitz");
    return rep;
}

inline Int genus_via_riemann_hurwitz(const CoverSpec& spec) {
    return ramification_report(spec).genus;
}

struct WorkCounters {
    std::uint64_t places_enumerated = 0;
    std::uint64_t ext_elements = 0;
};

/*
   Place counts N_1..N_B of the cover: every rational place of degree d <= B
   is split; a place with relative residue degree f contributes g_count
   places of degree d*f. The place stream is partitioned across workers;
   merging is integer addition, so any worker count gives identical results.
*/
inline std::vector<Int> count_places(const CoverSpec& spec, unsigned B,
                                     std::uint64_t budget = default_budget, unsigned threads = 1,
                                     WorkCounters* counters = nullptr) {
    std::vector<Int> N(B, 0);
    if (B == 0) return N;
    const auto add_split = [&](std::vector<Int>& acc, unsigned d, const SplittingType& st) {
        const std::uint64_t deg_above = std::uint64_t(d) * st.f_res;
        if (deg_above <= B) acc[deg_above - 1] += st.g_count;
    };
    {
        const SplittingType st = split_place(spec, RationalPlace::infinity());
        add_split(N, 1, st);
        if (counters) counters->places_enumerated += 1;
    }
    for (unsigned d = 1; d <= B; ++d) {
        std::vector<std::uint64_t> codes_d1;
        const std::uint64_t* codes = nullptr;
        std::size_t items = 0;
        std::shared_ptr<const IrreducibleTable> tab;
        if (d == 1) {
            if (spec.base->q() > budget) throw BudgetError("degree-1 places exceed the budget");
            codes_d1.resize(spec.base->q());
            for (std::uint64_t a = 0; a < spec.base->q(); ++a) codes_d1[a] = a;
            codes = codes_d1.data();
            items = codes_d1.size();
        } else {
            tab = irreducibles_up_to(spec.base, d, budget);
            codes = tab->codes(d).data();
            items = tab->codes(d).size();
        }
        if (counters) counters->places_enumerated += items;
        const std::size_t chunk_count = std::max<std::size_t>(
            1, std::min<std::size_t>(items, std::size_t(threads) * 4));
        std::vector<std::vector<Int>> slots(chunk_count, std::vector<Int>(B, 0));
        parallel_tasks(chunk_count, threads, [&](std::size_t t) {
            const std::size_t lo = items * t / chunk_count;
            const std::size_t hi = items * (t + 1) / chunk_count;
            for (std::size_t i = lo; i < hi; ++i) {
                const Poly pi = poly_from_low_code(spec.base, d, codes[i]);
                const RationalPlace place{false, pi, d};
                add_split(slots[t], d, split_place(spec, place));
            }
        });
        for (const auto& slot : slots)
            for (unsigned i = 0; i < B; ++i) N[i] += slot[i];
    }
    return N;
}

/// Rational-base place counts: n_1 = q + 1 (finite linears plus infinity),
/// n_d = psi(d) for d >= 2.
inline std::vector<Int> rational_place_counts(const Int& q, unsigned B) {
    std::vector<Int> n;
    n.reserve(B);
    for (unsigned d = 1; d <= B; ++d)
        n.push_back(d == 1 ? q + 1 : count_monic_irreducibles(q, d));
    return n;
}

/// Context for F_q from the order alone; q must be a prime power.
inline FieldCtxPtr field_from_order(std::uint64_t q, std::uint64_t budget = default_budget) {
    if (q < 2) throw ValidationError("field order must be at least 2");
    std::uint64_t p = q;
    for (std::uint64_t c = 2; c * c <= q; ++c)
        if (q % c == 0) {
            p = c;
            break;
        }
    unsigned n = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw ValidationError(std::to_string(q) + " is not a prime power");
        t /= p;
        ++n;
    }
    return field_ctx(p, n, budget);
}

/*
   Text form: `kummer:q=3,m=2,f=x^3+2*x` or `as:q=2,f=x^3`. q must be a prime
   power; coefficients of f follow the polynomial text format over F_q.
*/
inline CoverSpec parse_cover_spec(const std::string& text,
                                  std::uint64_t budget = default_budget) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("cover spec needs 'family:...'");
    const std::string fam = text.substr(0, colon);
    Family family;
    if (fam == "kummer")
        family = Family::kummer;
    else if (fam == "as" || fam == "artin-schreier")
        family = Family::artin_schreier;
    else
        throw ParseError("unknown cover family '" + fam + "'");
    std::optional<std::uint64_t> qv;
    std::optional<unsigned> mv;
    std::optional<std::string> fv;
    std::size_t i = colon + 1;
    while (i < text.size()) {
        const auto eq = text.find('=', i);
        if (eq == std::string::npos) throw ParseError("expected key=value in cover spec");
        const std::string key = text.substr(i, eq - i);
        const auto comma = text.find(',', eq + 1);
        const std::string val =
            text.substr(eq + 1, comma == std::string::npos ? std::string::npos : comma - eq - 1);
        if (val.empty()) throw ParseError("empty value for '" + key + "'");
        if (key == "q") {
            try {
                std::size_t used = 0;
                qv = std::stoull(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw ParseError("bad field order '" + val + "'");
            }
        } else if (key == "m") {
            try {
                std::size_t used = 0;
                const unsigned long raw = std::stoul(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
                mv = static_cast<unsigned>(raw);
            } catch (const std::exception&) {
                throw ParseError("bad kummer degree '" + val + "'");
            }
        } else if (key == "f") {
            fv = val;
        } else {
            throw ParseError("unknown cover spec key '" + key + "'");
        }
        i = (comma == std::string::npos) ? text.size() : comma + 1;
    }
    if (!qv) throw ParseError("cover spec needs q=");
    if (!fv) throw ParseError("cover spec needs f=");
    if (family == Family::kummer && !mv) throw ParseError("kummer cover spec needs m=");
    if (family == Family::artin_schreier && mv)
        throw ParseError("artin-schreier cover spec takes no m=");
    CoverSpec spec;
    spec.family = family;
    spec.base = field_from_order(*qv, budget);
    spec.m = mv.value_or(0);
    spec.f = parse_poly(spec.base, *fv);
    return validate_cover(spec);
}

inline std::string format_cover_spec(const CoverSpec& spec) {
    std::string s = (spec.family == Family::kummer ? "kummer" : "as");
    s += ":q=" + std::to_string(spec.base->q());
    if (spec.family == Family::kummer) s += ",m=" + std::to_string(spec.m);
    s += ",f=" + format_poly(spec.f);
    return s;
}

/// The same cover over the degree-k constant extension F_{q^k}.
inline CoverSpec extend_base(const CoverSpec& spec, unsigned k,
                             std::uint64_t budget = default_budget) {
    CoverSpec ext;
    ext.family = spec.family;
    ext.base = extension_ctx(spec.base, k, budget);
    ext.m = spec.m;
    const Embedding& em = get_embedding(spec.base, ext.base);
    std::vector<std::uint32_t> c(spec.f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>(
            ext.base->index_of(embed(spec.base->element_from_index(spec.f.coeff(i)), em)));
    ext.f = Poly(ext.base, std::move(c));
    return validate_cover(ext);
}

}  // namespace abelzeta
