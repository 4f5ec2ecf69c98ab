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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace abelzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// Exact integer division; throws if the quotient is not integral.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw InvariantError("exact_div: division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InvariantError("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string dec(const Int& a) { return a.get_str(); }

/// "n/d" in lowest terms; integers render without the denominator.
inline std::string dec(const Rat& a) {
    Rat c = a;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Ascending prime factors, without multiplicity. Trial division; fine for word-sized inputs.
inline std::vector<Int> distinct_prime_factors(Int n) {
    std::vector<Int> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;  // deterministic below 3.3e24
}

/// Moebius function; domain n >= 1.
inline int mobius(unsigned long n) {
    if (n == 0) throw ValidationError("mobius: n must be >= 1");
    int sign = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> sml, lrg;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            sml.push_back(d);
            if (d != n / d) lrg.push_back(n / d);
        }
    }
    for (auto it = lrg.rbegin(); it != lrg.rend(); ++it) sml.push_back(*it);
    return sml;
}

}  // namespace abelzeta
