#pragma once

// Brute-force reference implementations used to check the library. They
// read only the composition table and share no code with the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cohesion/fincat.hpp"

namespace testsupport {

inline std::size_t hom_size(const cohesion::FinCategory& c, std::size_t a, std::size_t b) {
    std::size_t k = 0;
    for (const auto& m : c.morphisms()) k += m.dom.index == a && m.cod.index == b;
    return k;
}

inline std::optional<std::size_t> bf_terminal(const cohesion::FinCategory& c) {
    for (std::size_t t = 0; t < c.object_count(); ++t) {
        bool ok = true;
        for (std::size_t x = 0; x < c.object_count(); ++x) ok = ok && hom_size(c, x, t) == 1;
        if (ok) return t;
    }
    return std::nullopt;
}

inline std::vector<std::size_t> bf_points(const cohesion::FinCategory& c, std::size_t x) {
    std::vector<std::size_t> out;
    const auto t = *bf_terminal(c);
    for (std::size_t i = 0; i < c.morphism_count(); ++i)
        if (c.morphisms()[i].dom.index == t && c.morphisms()[i].cod.index == x) out.push_back(i);
    return out;
}

inline std::optional<std::size_t> bf_compose(const cohesion::FinCategory& c, std::size_t g, std::size_t f) {
    auto r = c.compose_table()[g * c.morphism_count() + f];
    if (!r) return std::nullopt;
    return r->index;
}

inline bool bf_pseudo_constant(const cohesion::FinCategory& c, std::size_t f) {
    const auto pts = bf_points(c, c.morphisms()[f].dom.index);
    for (auto a : pts)
        for (auto b : pts)
            if (bf_compose(c, f, a) != bf_compose(c, f, b)) return false;
    return true;
}

inline bool bf_is_ideal(const cohesion::FinCategory& c, std::uint64_t mask) {
    const std::size_t n = c.morphism_count();
    for (std::size_t g = 0; g < n; ++g) {
        if (!((mask >> g) & 1U)) continue;
        for (std::size_t h = 0; h < n; ++h) {
            if (auto gh = bf_compose(c, g, h); gh && !((mask >> *gh) & 1U)) return false;
            if (auto hg = bf_compose(c, h, g); hg && !((mask >> *hg) & 1U)) return false;
        }
    }
    return true;
}

inline bool bf_is_idempotent(const cohesion::FinCategory& c, std::uint64_t mask) {
    const std::size_t n = c.morphism_count();
    for (std::size_t f = 0; f < n; ++f) {
        if (!((mask >> f) & 1U)) continue;
        bool found = false;
        for (std::size_t g = 0; g < n && !found; ++g)
            for (std::size_t h = 0; h < n && !found; ++h)
                found = ((mask >> g) & 1U) && ((mask >> h) & 1U) && bf_compose(c, g, h) == f;
        if (!found) return false;
    }
    return true;
}

// Masks of every idempotent ideal, by scanning all 2^n subsets.
inline std::vector<std::uint64_t> bf_idempotent_ideals(const cohesion::FinCategory& c) {
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << c.morphism_count();
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (bf_is_ideal(c, mask) && bf_is_idempotent(c, mask)) out.push_back(mask);
    return out;
}

// Does f factor as m∘e through an object with exactly one point?
inline bool bf_factors_through_little_figure(const cohesion::FinCategory& c, std::size_t f) {
    const std::size_t n = c.morphism_count();
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t m = 0; m < n; ++m)
            if (bf_compose(c, m, e) == f && bf_points(c, c.morphisms()[e].cod.index).size() == 1) return true;
    return false;
}

}  // namespace testsupport
