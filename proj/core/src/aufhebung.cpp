#include "cohesion/aufhebung.hpp"

#include <algorithm>

#include "cohesion/cohesion.hpp"
#include "cohesion/error.hpp"
#include "cohesion/kan.hpp"

namespace cohesion {

bool is_way_above(const Level& lower, const Level& upper, const std::vector<Presheaf>& witnesses) {
    if (!is_above(upper, lower)) return false;
    const auto d = level_subcategory(lower);
    return std::ranges::all_of(
        witnesses, [&](const Presheaf& x) { return sheaf_check(upper.topology(), skeleton(d, x).presheaf); });
}

std::vector<Presheaf> default_witnesses(const CategoryPtr& c) {
    std::vector<Presheaf> out;
    for (auto x : c->object_ids()) out.push_back(representable(c, x));
    out.push_back(omega(c));
    out.push_back(codiscrete(c, standard_set(2)));
    return out;
}

SearchReport aufhebung_search(const Level& l, const std::vector<Presheaf>& witnesses, std::size_t bound) {
    for (const auto& w : witnesses)
        if (!same_category(w.category(), l.category()))
            throw Error(ErrorCode::BaseMismatch, "witness lives on another category");
    SearchReport r;
    r.witness_count = witnesses.size();
    for (const auto& i : enumerate_idempotent_ideals(l.category(), bound)) {
        Level j(i);
        if (!is_above(j, l)) continue;
        ++r.levels_considered;
        if (is_way_above(l, j, witnesses)) r.candidates.push_back(std::move(j));
    }
    for (const auto& j : r.candidates) {
        const bool minimal = std::ranges::none_of(r.candidates, [&](const Level& k) {
            return !(k == j) && is_above(j, k);
        });
        if (minimal) r.minimal.push_back(j);
    }
    return r;
}

}  // namespace cohesion
