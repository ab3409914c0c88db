#pragma once

// Exhaustive counterparts of presheaf computations, for small inputs.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cohesion/presheaf.hpp"

namespace testsupport {

inline std::size_t bf_component_count(const cohesion::Presheaf& x) {
    const auto& c = *x.category();
    std::vector<std::pair<std::size_t, std::size_t>> nodes;
    for (auto o : c.object_ids())
        for (std::size_t i = 0; i < x.size(o); ++i) nodes.emplace_back(o.index, i);
    std::vector<int> seen(nodes.size(), 0);
    auto id = [&](std::size_t o, std::size_t i) {
        for (std::size_t k = 0; k < nodes.size(); ++k)
            if (nodes[k] == std::pair{o, i}) return k;
        throw std::logic_error("node");
    };
    std::size_t count = 0;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto k = stack.back();
            stack.pop_back();
            for (auto f : c.morphism_ids()) {
                const auto d = c.dom(f).index;
                const auto cd = c.cod(f).index;
                for (std::size_t i = 0; i < x.size(cohesion::ObjectId(cd)); ++i) {
                    const auto a = id(cd, i);
                    const auto b = id(d, x.act(f, i));
                    if (a == k && !seen[b]) seen[b] = 1, stack.push_back(b);
                    if (b == k && !seen[a]) seen[a] = 1, stack.push_back(a);
                }
            }
        }
    }
    return count;
}

// Tries every family of functions x(C) → y(C); refuses huge searches.
inline std::size_t bf_count_transformations(const cohesion::Presheaf& x, const cohesion::Presheaf& y,
                                            std::uint64_t limit = 2'000'000) {
    const auto& c = *x.category();
    std::vector<std::pair<std::size_t, std::size_t>> slots;  // (object, element)
    std::uint64_t space = 1;
    for (auto o : c.object_ids())
        for (std::size_t i = 0; i < x.size(o); ++i) {
            slots.emplace_back(o.index, i);
            space *= y.size(o);
            if (space > limit) throw std::length_error("search space too large");
        }
    std::vector<std::vector<std::size_t>> comp(c.object_count());
    for (auto o : c.object_ids()) comp[o.index].assign(x.size(o), 0);
    std::size_t count = 0;
    for (std::uint64_t code = 0; code < space; ++code) {
        auto rest = code;
        for (const auto& [o, i] : slots) {
            const auto n = y.size(cohesion::ObjectId(o));
            comp[o][i] = rest % n;
            rest /= n;
        }
        bool natural = true;
        for (auto f : c.morphism_ids()) {
            const auto d = c.dom(f).index;
            const auto cd = c.cod(f).index;
            for (std::size_t i = 0; i < x.size(cohesion::ObjectId(cd)) && natural; ++i)
                natural = comp[d][x.act(f, i)] == y.act(f, comp[cd][i]);
            if (!natural) break;
        }
        count += natural;
    }
    return count;
}

inline std::size_t bf_count_subpresheaves(const cohesion::Presheaf& x) {
    const auto& c = *x.category();
    std::vector<std::size_t> offset(c.object_count() + 1, 0);
    for (auto o : c.object_ids()) offset[o.index + 1] = offset[o.index] + x.size(o);
    const auto n = offset.back();
    if (n > 24) throw std::length_error("too many elements");
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool closed = true;
        for (auto f : c.morphism_ids()) {
            const auto d = c.dom(f).index;
            const auto cd = c.cod(f).index;
            for (std::size_t i = 0; i < x.size(cohesion::ObjectId(cd)); ++i)
                if (((mask >> (offset[cd] + i)) & 1U) && !((mask >> (offset[d] + x.act(f, i))) & 1U)) closed = false;
        }
        count += closed;
    }
    return count;
}

}  // namespace testsupport
