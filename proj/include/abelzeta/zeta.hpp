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
   Exact zeta arithmetic for a function field of genus g over F_q. The
   numerator L-polynomial P(u) = prod (1 - alpha_i u) has degree 2g, integer
   coefficients, P(0) = 1, and the functional equation
   c_{2g-i} = q^{g-i} c_i. The place counts determine the power sums
   a_k = q^k + 1 - S_k of the alpha_i, Newton's identities turn the first g
   of them into c_1..c_g, and the functional equation supplies the rest.
   Everything here is exact integer or rational arithmetic; any division is
   asserted to be exact, so corrupted counts surface as invariant errors.
*/

#pragma once

#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace abelzeta {

struct LPolynomial {
    Int q;
    unsigned g = 0;
    std::vector<Int> coeffs;  // c_0..c_{2g}
};

/// S_k = sum_{d | k} d N_d for k = 1..N.size().
inline std::vector<Int> power_sums_of_counts(const std::vector<Int>& N) {
    std::vector<Int> s(N.size(), 0);
    for (unsigned k = 1; k <= N.size(); ++k)
        for (unsigned d : divisors_of(k)) s[k - 1] += Int(d) * N[d - 1];
    return s;
}

/// N_1..N_mmax recovered from S_1..S_mmax by Moebius inversion; every
/// division must be exact.
inline std::vector<Int> counts_from_power_sums(const std::vector<Int>& S) {
    std::vector<Int> N(S.size());
    for (unsigned m = 1; m <= S.size(); ++m) {
        Int acc = 0;
        for (unsigned d : divisors_of(m)) acc += Int(mobius(m / d)) * S[d - 1];
        N[m - 1] = exact_div(acc, Int(m));
    }
    return N;
}

/// Power sums p_1..p_kmax of the inverse roots of P, from its coefficients:
/// p_k = -k c_k - sum_{j=1}^{k-1} c_j p_{k-j}, with c_j = 0 past 2g.
inline std::vector<Int> predicted_power_sums(const LPolynomial& L, unsigned kmax) {
    std::vector<Int> p(kmax);
    for (unsigned k = 1; k <= kmax; ++k) {
        Int acc = k <= 2 * L.g ? Int(-long(k)) * L.coeffs[k] : Int(0);
        for (unsigned j = 1; j < k && j <= 2 * L.g; ++j) acc -= L.coeffs[j] * p[k - j - 1];
        p[k - 1] = acc;
    }
    return p;
}

/// S_k = q^k + 1 - a_k as predicted by the L-polynomial.
inline std::vector<Int> predicted_power_sum_counts(const LPolynomial& L, unsigned kmax) {
    const auto p = predicted_power_sums(L, kmax);
    std::vector<Int> s(kmax);
    for (unsigned k = 1; k <= kmax; ++k) s[k - 1] = int_pow(L.q, k) + 1 - p[k - 1];
    return s;
}

/// Place counts N_1..N_mmax implied by the L-polynomial.
inline std::vector<Int> predicted_place_counts(const LPolynomial& L, unsigned mmax) {
    return counts_from_power_sums(predicted_power_sum_counts(L, mmax));
}

inline Int class_number(const LPolynomial& L) {
    Int h = 0;
    for (const Int& c : L.coeffs) h += c;
    return h;
}

/// Builds P(u) from the genus and the place counts N_1..N_g (longer vectors
/// are fine; only the first g entries are used). Checks every structural
/// invariant of a Weil polynomial and throws InvariantError on any breach.
inline LPolynomial lpoly_from_counts(const Int& q, unsigned g, const std::vector<Int>& N) {
    if (q < 2) throw ValidationError("base field order must be at least 2");
    if (N.size() < g) throw ValidationError("need place counts N_1..N_g");
    LPolynomial L;
    L.q = q;
    L.g = g;
    L.coeffs.assign(2 * std::size_t(g) + 1, 0);
    L.coeffs[0] = 1;
    if (g > 0) {
        const auto S = power_sums_of_counts(std::vector<Int>(N.begin(), N.begin() + g));
        std::vector<Int> a(g), e(g + 1);
        for (unsigned k = 1; k <= g; ++k) a[k - 1] = int_pow(q, k) + 1 - S[k - 1];
        e[0] = 1;
        for (unsigned k = 1; k <= g; ++k) {
            Int acc = 0;
            for (unsigned j = 1; j <= k; ++j) {
                const Int term = e[k - j] * a[j - 1];
                if (j % 2 == 1)
                    acc += term;
                else
                    acc -= term;
            }
            e[k] = exact_div(acc, Int(k));  // Newton: k e_k = sum (-1)^{j-1} e_{k-j} a_j
        }
        for (unsigned k = 1; k <= g; ++k) L.coeffs[k] = (k % 2 == 0) ? e[k] : -e[k];
        for (unsigned i = 0; i < g; ++i) L.coeffs[2 * g - i] = int_pow(q, g - i) * L.coeffs[i];
    }
    // structural checks: the functional equation across the whole range, a
    // positive class number, and the Weil modulus bound on every power sum
    if (L.coeffs[0] != 1) throw InvariantError("L(0) must be 1");
    for (unsigned i = 0; i <= g; ++i)
        if (L.coeffs[2 * g - i] != int_pow(q, g - i) * L.coeffs[i])
            throw InvariantError("functional equation breach at coefficient " + std::to_string(i));
    if (class_number(L) <= 0) throw InvariantError("class number must be positive");
    const auto p = predicted_power_sums(L, 2 * g);
    for (unsigned k = 1; k <= 2 * g; ++k)
        if (p[k - 1] * p[k - 1] > Int(4) * Int(g) * Int(g) * int_pow(q, k))
            throw InvariantError("Weil bound breach at power sum " + std::to_string(k));
    return L;
}

/// A_0..A_nmax: the number of effective divisors of each degree, read off
/// the series P(u) / ((1 - u)(1 - qu)). Every A_n must be nonnegative.
inline std::vector<Int> divisor_count_series(const LPolynomial& L, unsigned nmax) {
    std::vector<Int> A(nmax + 1);
    // B_j = 1 + q + ... + q^j is the divisor count of the rational base
    std::vector<Int> B(nmax + 1);
    B[0] = 1;
    for (unsigned j = 1; j <= nmax; ++j) B[j] = B[j - 1] * L.q + 1;
    for (unsigned n = 0; n <= nmax; ++n) {
        Int acc = 0;
        for (unsigned k = 0; k <= std::min<unsigned>(n, 2 * L.g); ++k)
            acc += L.coeffs[k] * B[n - k];
        if (acc < 0) throw InvariantError("negative divisor count at degree " + std::to_string(n));
        A[n] = acc;
    }
    return A;
}

/// Exact value of zeta(u) = P(u) / ((1 - u)(1 - qu)) inside the disc of
/// convergence 0 < u < 1/q.
inline Rat zeta_eval(const LPolynomial& L, const Rat& u) {
    if (u <= 0 || u * L.q >= 1)
        throw ValidationError("zeta evaluation needs 0 < u < 1/q");
    Rat num = 0;
    for (std::size_t k = L.coeffs.size(); k-- > 0;) num = num * u + L.coeffs[k];
    return num / ((1 - u) * (1 - Rat(L.q) * u));
}

}  // namespace abelzeta
