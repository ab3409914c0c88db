#pragma once

// Small categories realised as finite sets and functions. Composition is
// computed by composing the functions, independently of any table.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohesion/fincat.hpp"

namespace testsupport {

struct ConcreteMorphism {
    std::string name;
    std::size_t dom;
    std::size_t cod;
    std::vector<std::size_t> values;  // values[i] = image of element i of dom
};

inline cohesion::FinCategory concrete_category(const std::vector<std::pair<std::string, std::size_t>>& objects,
                                               const std::vector<ConcreteMorphism>& morphisms) {
    using namespace cohesion;
    std::vector<std::string> names;
    for (const auto& [n, size] : objects) names.push_back(n);
    std::vector<MorphismInfo> infos;
    for (const auto& m : morphisms) infos.push_back({m.name, ObjectId(m.dom), ObjectId(m.cod)});
    std::vector<MorphismId> ids(objects.size(), MorphismId(0));
    for (std::size_t o = 0; o < objects.size(); ++o) {
        bool found = false;
        for (std::size_t i = 0; i < morphisms.size(); ++i) {
            const auto& m = morphisms[i];
            if (m.dom != o || m.cod != o) continue;
            bool is_id = true;
            for (std::size_t k = 0; k < m.values.size(); ++k) is_id = is_id && m.values[k] == k;
            if (is_id) {
                ids[o] = MorphismId(i);
                found = true;
            }
        }
        if (!found) throw std::logic_error("concrete category without identity on " + objects[o].first);
    }
    const std::size_t n = morphisms.size();
    std::vector<std::optional<MorphismId>> table(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            if (morphisms[g].dom != morphisms[f].cod) continue;
            std::vector<std::size_t> gf;
            for (auto v : morphisms[f].values) gf.push_back(morphisms[g].values[v]);
            for (std::size_t h = 0; h < n; ++h)
                if (morphisms[h].dom == morphisms[f].dom && morphisms[h].cod == morphisms[g].cod &&
                    morphisms[h].values == gf)
                    table[g * n + f] = MorphismId(h);
        }
    return FinCategory(names, infos, ids, table);
}

// Reflexive graphs: monotone maps between [0] and [1]; d_i picks i, e_i = d_i∘s.
inline cohesion::FinCategory delta1() {
    return concrete_category({{"0", 1}, {"1", 2}}, {{"id0", 0, 0, {0}},
                                                    {"id1", 1, 1, {0, 1}},
                                                    {"d0", 0, 1, {0}},
                                                    {"d1", 0, 1, {1}},
                                                    {"s", 1, 0, {0, 0}},
                                                    {"e0", 1, 1, {0, 0}},
                                                    {"e1", 1, 1, {1, 1}}});
}

// The chain 0 < h < 1 as a category of inclusions of initial segments.
inline cohesion::FinCategory chain3() {
    return concrete_category({{"0", 1}, {"h", 2}, {"1", 3}}, {{"id_0", 0, 0, {0}},
                                                              {"id_h", 1, 1, {0, 1}},
                                                              {"id_1", 2, 2, {0, 1, 2}},
                                                              {"0<h", 0, 1, {0}},
                                                              {"0<1", 0, 2, {0}},
                                                              {"h<1", 1, 2, {0, 1}}});
}

// The graphic monoid on one object acting on {0, 1, 2}.
inline cohesion::FinCategory graphic_monoid() {
    return concrete_category({{"G", 3}}, {{"id", 0, 0, {0, 1, 2}},
                                          {"alpha", 0, 0, {0, 0, 2}},
                                          {"bot", 0, 0, {0, 0, 0}},
                                          {"top", 0, 0, {1, 1, 1}}});
}

// X and Y each have two points; f: X → Y identifies them without being
// constant, so the pseudo-constants do not form an idempotent ideal.
inline cohesion::FinCategory glued_pair() {
    return concrete_category({{"1", 1}, {"X", 3}, {"Y", 3}}, {{"id_1", 0, 0, {0}},
                                                              {"id_X", 1, 1, {0, 1, 2}},
                                                              {"id_Y", 2, 2, {0, 1, 2}},
                                                              {"a", 0, 1, {0}},
                                                              {"b", 0, 1, {1}},
                                                              {"c", 0, 2, {0}},
                                                              {"d", 0, 2, {1}},
                                                              {"!X", 1, 0, {0, 0, 0}},
                                                              {"!Y", 2, 0, {0, 0, 0}},
                                                              {"a!X", 1, 1, {0, 0, 0}},
                                                              {"b!X", 1, 1, {1, 1, 1}},
                                                              {"c!Y", 2, 2, {0, 0, 0}},
                                                              {"d!Y", 2, 2, {1, 1, 1}},
                                                              {"f", 1, 2, {0, 0, 1}},
                                                              {"c!X", 1, 2, {0, 0, 0}},
                                                              {"d!X", 1, 2, {1, 1, 1}},
                                                              {"a!Y", 2, 1, {0, 0, 0}},
                                                              {"b!Y", 2, 1, {1, 1, 1}}});
}

// One object, one morphism.
inline cohesion::FinCategory terminal_category() { return concrete_category({{"*", 1}}, {{"id", 0, 0, {0}}}); }

// One object with an idempotent e.
inline cohesion::FinCategory idempotent_monoid() {
    return concrete_category({{"*", 2}}, {{"id", 0, 0, {0, 1}}, {"e", 0, 0, {0, 0}}});
}

}  // namespace testsupport
