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
   Canonical embeddings between finite field contexts. F_{p^a} sits inside
   F_{p^b} exactly when a | b; the embedding chosen here maps the generator of
   the small field to the root of its modulus with least canonical index in
   the big field. That choice is deterministic, so every run of every tool
   agrees on coordinates.
*/

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "field.hpp"
#include "packed.hpp"

namespace abelzeta {

struct Embedding {
    FieldCtxPtr from, to;
    FieldElement root;                        // image of the small field's generator
    std::vector<FieldElement> basis_images;   // root^i for i < from->n()
};

/// Image of `a` under the embedding; digits of `a` weight powers of the root.
inline FieldElement embed(const FieldElement& a, const Embedding& em) {
    em.from->check(a);
    FieldElement r = em.to->zero();
    for (unsigned i = 0; i < em.from->n(); ++i) {
        const std::uint32_t d = a.digits()[i];
        if (d) r = r + em.to->from_integer(Int(d)) * em.basis_images[i];
    }
    return r;
}

namespace detail {

inline Embedding build_embedding(const FieldCtxPtr& from, const FieldCtxPtr& to) {
    if (from->p() != to->p()) throw ValidationError("embedding requires equal characteristic");
    if (to->n() % from->n() != 0)
        throw ValidationError("no embedding: " + dec(from->q_int()) + " into " + dec(to->q_int()));
    Embedding em{from, to, to->zero(), {}};
    if (from->n() == 1) {
        em.basis_images = {to->one()};
        return em;
    }
    if (from.get() == to.get()) {
        em.root = to->gen();
    } else {
        const std::vector<std::uint32_t> mu(from->modulus().begin(), from->modulus().end());
        const std::uint64_t ridx =
            with_engine(to, [&](auto eng) { return engine_find_root(eng, mu); });
        if (ridx >= to->q()) throw InvariantError("modulus has no root in the extension");
        em.root = to->element_from_index(ridx);
        // independent recheck of the packed scan through the generic layer
        FieldElement acc = to->zero();
        for (std::size_t i = mu.size(); i-- > 0;)
            acc = acc * em.root + to->from_integer(Int(mu[i]));
        if (!acc.is_zero()) throw InvariantError("embedding root fails its minimal polynomial");
    }
    em.basis_images.reserve(from->n());
    FieldElement pw = to->one();
    for (unsigned i = 0; i < from->n(); ++i) {
        em.basis_images.push_back(pw);
        if (i + 1 < from->n()) pw = pw * em.root;
    }
    return em;
}

}  // namespace detail

/// Memoized embedding lookup; contexts are singletons, so pointer keys suffice.
inline const Embedding& get_embedding(const FieldCtxPtr& from, const FieldCtxPtr& to) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>> reg;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(from.get(), to.get());
    auto it = reg.find(key);
    if (it == reg.end())
        it = reg.emplace(key, std::make_unique<Embedding>(detail::build_embedding(from, to))).first;
    return *it->second;
}

/// Degree-k extension of a base context, sharing its characteristic.
inline FieldCtxPtr extension_ctx(const FieldCtxPtr& base, unsigned k,
                                 std::uint64_t budget = default_budget) {
    if (k == 0) throw ValidationError("extension degree must be positive");
    return field_ctx(base->p(), base->n() * k, budget);
}

}  // namespace abelzeta
