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
   Brute-force degree-one place counts over constant extensions. Both cover
   families are smooth in the affine (x, y) chart (squarefree f rules out a
   common zero of the partials in the Kummer case; the y-partial is -1 in the
   Artin-Schreier case), so degree-one places away from infinity biject with
   affine F_Q-points. Points over infinity come from the closed splitting
   rule. These counts are the independent check against the splitting-based
   enumeration: sum_{d | k} d N_d equals the degree-one count over F_{q^k}.

   Evaluation walks the multiplicative cycle x = g^j with one register per
   coefficient, so each step costs a handful of table lookups and lazy adds.
*/

#pragma once

#include "cover.hpp"
#include "packed.hpp"

namespace abelzeta {
namespace detail {

/// Sums f's coefficient registers with chunked lazy adds.
template <class Engine>
typename Engine::Elem sum_registers(const Engine& eng,
                                    const std::vector<typename Engine::Elem>& vals) {
    const unsigned chunk = std::max(2u, Engine::max_lazy_terms / 2);
    auto acc = vals[0];
    unsigned lazy = 1;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        eng.add_lazy(acc, vals[i]);
        if (++lazy >= chunk) {
            eng.renorm(acc);
            lazy = 1;
        }
    }
    eng.renorm(acc);
    return acc;
}

template <class Engine, class Cnt>
std::uint64_t kummer_affine(const Engine& eng, const CoverSpec& ext, std::vector<Cnt>& cnt) {
    const std::uint64_t Q = eng.ctx()->q();
    const unsigned d = static_cast<unsigned>(ext.f.deg());
    // pass 1: tally y^m over all y; y = 0 alone solves y^m = 0
    cnt.assign(Q, 0);
    cnt[0] = 1;
    const auto g = eng.from_index(engine_find_generator(eng));
    const auto mstep = eng.prep_mul(eng.pow(g, Int(static_cast<unsigned long>(ext.m))));
    auto val = eng.one();
    for (std::uint64_t j = 0; j + 1 < Q; ++j) {
        ++cnt[eng.to_index(val)];
        val = eng.apply(mstep, val);
    }
    // pass 2: count solutions fibre by fibre; x = 0 first, then x = g^j
    std::uint64_t affine = cnt[ext.f.coeff(0)];
    std::vector<typename Engine::Elem> vals(d + 1);
    std::vector<typename Engine::ConstMul> steps;
    steps.reserve(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        vals[i] = eng.from_index(ext.f.coeff(i));
        steps.push_back(eng.prep_mul(eng.pow(g, Int(static_cast<unsigned long>(i)))));
    }
    for (std::uint64_t j = 0; j + 1 < Q; ++j) {
        affine += cnt[eng.to_index(sum_registers(eng, vals))];
        for (unsigned i = 1; i <= d; ++i) vals[i] = eng.apply(steps[i], vals[i]);
    }
    return affine;
}

template <class Engine>
std::uint64_t as_affine(const Engine& eng, const CoverSpec& ext) {
    const std::uint64_t Q = eng.ctx()->q();
    const unsigned p = static_cast<unsigned>(eng.ctx()->p());
    const unsigned d = static_cast<unsigned>(ext.f.deg());
    // y^p - y = c is solvable iff the absolute trace of c vanishes, and then
    // has exactly p solutions
    std::uint64_t zero_fibres = eng.trace_mod_p(eng.from_index(ext.f.coeff(0))) == 0 ? 1 : 0;
    const auto g = eng.from_index(engine_find_generator(eng));
    std::vector<typename Engine::Elem> vals(d + 1);
    std::vector<typename Engine::ConstMul> steps;
    steps.reserve(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        vals[i] = eng.from_index(ext.f.coeff(i));
        steps.push_back(eng.prep_mul(eng.pow(g, Int(static_cast<unsigned long>(i)))));
    }
    for (std::uint64_t j = 0; j + 1 < Q; ++j) {
        if (eng.trace_mod_p(detail::sum_registers(eng, vals)) == 0) ++zero_fibres;
        for (unsigned i = 1; i <= d; ++i) vals[i] = eng.apply(steps[i], vals[i]);
    }
    return std::uint64_t(p) * zero_fibres;
}

}  // namespace detail

/// Degree-one places of the cover after a degree-k constant extension,
/// counted by exhaustive enumeration of F_{q^k}.
inline Int degree_one_places_bruteforce(const CoverSpec& spec, unsigned k,
                                        std::uint64_t budget = default_budget,
                                        WorkCounters* counters = nullptr) {
    if (k == 0) throw ValidationError("extension degree must be positive");
    if (int_pow(spec.base->q_int(), k) > Int(static_cast<unsigned long>(budget)))
        throw BudgetError("field of order " + dec(int_pow(spec.base->q_int(), k)) +
                          " exceeds the enumeration budget");
    const CoverSpec ext = (k == 1) ? spec : extend_base(spec, k, budget);
    const std::uint64_t affine = with_engine(ext.base, [&](const auto& eng) -> std::uint64_t {
        if (ext.family == Family::artin_schreier) {
            if (counters) counters->ext_elements += ext.base->q();
            return detail::as_affine(eng, ext);
        }
        if (counters) counters->ext_elements += 2 * ext.base->q();
        if (ext.m <= 0xff) {
            std::vector<std::uint8_t> cnt;
            return detail::kummer_affine(eng, ext, cnt);
        }
        if (ext.m <= 0xffff) {
            std::vector<std::uint16_t> cnt;
            return detail::kummer_affine(eng, ext, cnt);
        }
        std::vector<std::uint32_t> cnt;
        return detail::kummer_affine(eng, ext, cnt);
    });
    Int total(static_cast<unsigned long>(affine));
    const SplittingType st = split_place(ext, RationalPlace::infinity());
    if (counters) counters->places_enumerated += 1;
    if (st.f_res == 1) total += st.g_count;
    return total;
}

/// S_k for k = 1..kmax by brute force; S_k = sum_{d | k} d N_d.
inline std::vector<Int> power_sums_bruteforce(const CoverSpec& spec, unsigned kmax,
                                              std::uint64_t budget = default_budget,
                                              WorkCounters* counters = nullptr) {
    std::vector<Int> s;
    s.reserve(kmax);
    for (unsigned k = 1; k <= kmax; ++k)
        s.push_back(degree_one_places_bruteforce(spec, k, budget, counters));
    return s;
}

/// S_k from splitting-based place counts N_1..N_kmax.
inline std::vector<Int> power_sums_from_counts(const std::vector<Int>& N) {
    std::vector<Int> s(N.size(), 0);
    for (unsigned k = 1; k <= N.size(); ++k)
        for (unsigned d : divisors_of(k)) s[k - 1] += Int(d) * N[d - 1];
    return s;
}

}  // namespace abelzeta
