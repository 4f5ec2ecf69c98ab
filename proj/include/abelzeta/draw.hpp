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

/// Seeded random cover generation shared by sweeps and the oracle. Kummer
/// draws rejection-sample until squarefree, so the result is uniform over
/// the valid polynomials of the scheduled degree.

#pragma once

#include "cover.hpp"
#include "rng.hpp"

namespace abelzeta {

inline Poly random_monic(const FieldCtxPtr& base, unsigned D, Rng& rng) {
    std::vector<std::uint32_t> c(D + 1);
    c[D] = base->index_of(base->one());
    for (unsigned i = 0; i < D; ++i) c[i] = static_cast<std::uint32_t>(rng.below(base->q()));
    return Poly(base, std::move(c));
}

/// Valid cover of the given family and degree-D polynomial. Static
/// preconditions (m | q-1, p not dividing D for artin-schreier) must already
/// hold; only the squarefree condition is sampled for.
inline CoverSpec random_cover(Family family, const FieldCtxPtr& base, unsigned m, unsigned D,
                              Rng& rng) {
    for (;;) {
        CoverSpec spec;
        spec.family = family;
        spec.base = base;
        spec.m = family == Family::kummer ? m : 0;
        spec.f = random_monic(base, D, rng);
        if (family == Family::kummer) {
            const Poly d = spec.f.derivative();
            if (d.is_zero() || Poly::gcd(spec.f, d).deg() != 0) continue;
        }
        return validate_cover(std::move(spec));
    }
}

}  // namespace abelzeta
