#include "cohesion/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cohesion/error.hpp"
#include "detail/functional_csp.hpp"

namespace cohesion {

namespace {

std::string element_name(const Presheaf& x, ObjectId c, std::size_t i) {
    return x.category()->name(c) + ":" + x.tag(c, i);
}

// One variable per element of x; constraints make the assignment natural.
detail::FunctionalCsp naturality_problem(const Presheaf& x, const Presheaf& y, std::vector<std::size_t>& offset) {
    const auto& c = *x.category();
    offset.assign(c.object_count() + 1, 0);
    std::vector<std::size_t> domains;
    for (auto o : c.object_ids()) {
        offset[o.index + 1] = offset[o.index] + x.size(o);
        for (std::size_t i = 0; i < x.size(o); ++i) domains.push_back(y.size(o));
    }
    detail::FunctionalCsp csp(std::move(domains));
    for (auto f : c.morphism_ids()) {
        if (c.is_identity(f)) continue;
        const auto d = c.dom(f);
        const auto cd = c.cod(f);
        for (std::size_t i = 0; i < x.size(cd); ++i)
            csp.add_constraint(offset[cd.index] + i, offset[d.index] + x.act(f, i), &y.action(f));
    }
    return csp;
}

std::vector<std::vector<std::size_t>> split(const std::vector<std::size_t>& flat, const std::vector<std::size_t>& offset) {
    std::vector<std::vector<std::size_t>> out(offset.size() - 1);
    for (std::size_t o = 0; o + 1 < offset.size(); ++o)
        out[o].assign(flat.begin() + static_cast<std::ptrdiff_t>(offset[o]),
                      flat.begin() + static_cast<std::ptrdiff_t>(offset[o + 1]));
    return out;
}

}  // namespace

Presheaf::Presheaf(CategoryPtr category, std::vector<std::vector<std::string>> tags,
                   std::vector<std::vector<std::size_t>> actions)
    : category_(std::move(category)) {
    const auto& c = *category_;
    if (tags.size() != c.object_count()) throw Error(ErrorCode::InvalidInput, "presheaf needs a set per object");
    if (actions.size() != c.morphism_count())
        throw Error(ErrorCode::InvalidInput, "presheaf needs an action per morphism");
    std::vector<std::vector<std::size_t>> new_to_old(tags.size());
    std::vector<std::vector<std::size_t>> old_to_new(tags.size());
    for (std::size_t o = 0; o < tags.size(); ++o) {
        auto& order = new_to_old[o];
        order.resize(tags[o].size());
        std::iota(order.begin(), order.end(), 0);
        std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return tags[o][a] < tags[o][b]; });
        old_to_new[o].resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) old_to_new[o][order[i]] = i;
        for (std::size_t i = 1; i < order.size(); ++i)
            if (tags[o][order[i]] == tags[o][order[i - 1]])
                throw Error(ErrorCode::InvalidInput,
                            "duplicate element '" + tags[o][order[i]] + "' at " + c.name(ObjectId(o)));
    }
    for (auto f : c.morphism_ids()) {
        const auto d = c.dom(f).index;
        const auto cd = c.cod(f).index;
        const auto& a = actions[f.index];
        if (a.size() != tags[cd].size())
            throw Error(ErrorCode::InvalidInput, "action of " + c.name(f) + " has the wrong length");
        for (auto v : a)
            if (v >= tags[d].size()) throw Error(ErrorCode::InvalidInput, "action of " + c.name(f) + " leaves its set");
    }
    tags_.resize(tags.size());
    for (std::size_t o = 0; o < tags.size(); ++o)
        for (auto i : new_to_old[o]) tags_[o].push_back(std::move(tags[o][i]));
    actions_.resize(actions.size());
    for (auto f : c.morphism_ids()) {
        const auto d = c.dom(f).index;
        const auto cd = c.cod(f).index;
        auto& out = actions_[f.index];
        out.resize(actions[f.index].size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = old_to_new[d][actions[f.index][new_to_old[cd][i]]];
    }
}

std::size_t Presheaf::total_size() const {
    std::size_t n = 0;
    for (const auto& t : tags_) n += t.size();
    return n;
}

std::size_t Presheaf::max_size() const {
    std::size_t n = 0;
    for (const auto& t : tags_) n = std::max(n, t.size());
    return n;
}

std::optional<std::size_t> Presheaf::find(ObjectId x, const std::string& tag) const {
    const auto& t = tags_.at(x.index);
    auto it = std::ranges::lower_bound(t, tag);
    if (it == t.end() || *it != tag) return std::nullopt;
    return static_cast<std::size_t>(it - t.begin());
}

ValidationReport validate_presheaf(const Presheaf& x) {
    ValidationReport report;
    const auto& c = *x.category();
    for (auto o : c.object_ids()) {
        const auto& a = x.action(c.identity(o));
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != i) {
                report.violations.push_back("identity on " + c.name(o) + " moves " + element_name(x, o, i));
                break;
            }
    }
    for (auto g : c.morphism_ids())
        for (auto f : c.into(c.dom(g))) {
            const auto gf = c.compose(g, f);
            for (std::size_t i = 0; i < x.size(c.cod(g)); ++i)
                if (x.act(gf, i) != x.act(f, x.act(g, i))) {
                    report.violations.push_back("action of " + c.name(g) + "∘" + c.name(f) + " differs from " +
                                                c.name(f) + " after " + c.name(g) + " at " +
                                                element_name(x, c.cod(g), i));
                    break;
                }
        }
    return report;
}

Presheaf representable(const CategoryPtr& c, ObjectId x) {
    std::vector<std::vector<std::string>> tags(c->object_count());
    std::vector<std::vector<std::size_t>> index_in_hom(c->morphism_count());
    for (auto b : c->object_ids())
        for (auto f : c->hom(b, x)) tags[b.index].push_back(c->name(f));
    auto position = [&](MorphismId f) {
        const auto& h = c->hom(c->dom(f), x);
        return static_cast<std::size_t>(std::ranges::find(h, f) - h.begin());
    };
    std::vector<std::vector<std::size_t>> actions(c->morphism_count());
    for (auto h : c->morphism_ids())
        for (auto f : c->hom(c->cod(h), x)) actions[h.index].push_back(position(c->compose(f, h)));
    return Presheaf(c, std::move(tags), std::move(actions));
}

NaturalTransformation::NaturalTransformation(Presheaf source, Presheaf target,
                                             std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (!same_category(source_.category(), target_.category()))
        throw Error(ErrorCode::BaseMismatch, "transformation between presheaves on different categories");
    const auto& c = *source_.category();
    if (components_.size() != c.object_count())
        throw Error(ErrorCode::InvalidInput, "transformation needs a component per object");
    for (auto o : c.object_ids()) {
        if (components_[o.index].size() != source_.size(o))
            throw Error(ErrorCode::InvalidInput, "component at " + c.name(o) + " has the wrong length");
        for (auto v : components_[o.index])
            if (v >= target_.size(o)) throw Error(ErrorCode::InvalidInput, "component at " + c.name(o) + " leaves target");
    }
}

ValidationReport validate_natural_transformation(const NaturalTransformation& t) {
    ValidationReport report;
    const auto& x = t.source();
    const auto& y = t.target();
    const auto& c = *x.category();
    for (auto f : c.morphism_ids()) {
        const auto d = c.dom(f);
        const auto cd = c.cod(f);
        for (std::size_t i = 0; i < x.size(cd); ++i)
            if (t.component(d)[x.act(f, i)] != y.act(f, t.component(cd)[i])) {
                report.violations.push_back("square for " + c.name(f) + " fails at " + element_name(x, cd, i));
                break;
            }
    }
    return report;
}

NaturalTransformation identity_transformation(const Presheaf& x) {
    std::vector<std::vector<std::size_t>> comps;
    for (auto o : x.category()->object_ids()) {
        comps.emplace_back(x.size(o));
        std::iota(comps.back().begin(), comps.back().end(), 0);
    }
    return NaturalTransformation(x, x, std::move(comps));
}

NaturalTransformation compose(const NaturalTransformation& beta, const NaturalTransformation& alpha) {
    if (!(alpha.target() == beta.source()))
        throw Error(ErrorCode::InvalidInput, "transformations are not composable");
    std::vector<std::vector<std::size_t>> comps;
    for (auto o : alpha.source().category()->object_ids()) {
        comps.emplace_back();
        for (auto v : alpha.component(o)) comps.back().push_back(beta.component(o)[v]);
    }
    return NaturalTransformation(alpha.source(), beta.target(), std::move(comps));
}

bool is_monic(const NaturalTransformation& t) {
    for (const auto& comp : t.components()) {
        auto sorted = comp;
        std::ranges::sort(sorted);
        if (std::ranges::adjacent_find(sorted) != sorted.end()) return false;
    }
    return true;
}

bool is_isomorphism(const NaturalTransformation& t) {
    for (auto o : t.source().category()->object_ids())
        if (t.source().size(o) != t.target().size(o)) return false;
    return is_monic(t);
}

std::vector<NaturalTransformation> natural_transformations(const Presheaf& x, const Presheaf& y) {
    if (!same_category(x.category(), y.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaves on different categories");
    std::vector<std::size_t> offset;
    auto csp = naturality_problem(x, y, offset);
    std::vector<NaturalTransformation> out;
    csp.solve([&](const std::vector<std::size_t>& values) {
        out.emplace_back(x, y, split(values, offset));
        return true;
    });
    return out;
}

std::size_t count_natural_transformations(const Presheaf& x, const Presheaf& y) {
    if (!same_category(x.category(), y.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaves on different categories");
    std::vector<std::size_t> offset;
    return naturality_problem(x, y, offset).count();
}

std::optional<NaturalTransformation> find_isomorphism(const Presheaf& x, const Presheaf& y) {
    if (!same_category(x.category(), y.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaves on different categories");
    for (auto o : x.category()->object_ids())
        if (x.size(o) != y.size(o)) return std::nullopt;
    std::vector<std::size_t> offset;
    auto csp = naturality_problem(x, y, offset);
    std::optional<NaturalTransformation> found;
    csp.solve([&](const std::vector<std::size_t>& values) {
        NaturalTransformation t(x, y, split(values, offset));
        if (is_isomorphism(t)) {
            found.emplace(std::move(t));
            return false;
        }
        return true;
    });
    return found;
}

std::size_t count_subpresheaves(const Presheaf& x) {
    // A subpresheaf is a set of elements closed under the actions: an
    // up-set for the order e ≤ X(f)(e). Count by include/exclude search.
    const auto& c = *x.category();
    std::vector<std::size_t> offset(c.object_count() + 1, 0);
    for (auto o : c.object_ids()) offset[o.index + 1] = offset[o.index] + x.size(o);
    const std::size_t n = offset.back();
    std::vector<std::vector<std::size_t>> forced(n);  // elements reachable by actions
    std::vector<std::vector<std::size_t>> forcing(n);
    for (auto f : c.morphism_ids())
        for (std::size_t i = 0; i < x.size(c.cod(f)); ++i) {
            const auto a = offset[c.cod(f).index] + i;
            const auto b = offset[c.dom(f).index] + x.act(f, i);
            forced[a].push_back(b);
            forcing[b].push_back(a);
        }
    std::vector<int> state(n, -1);
    std::size_t count = 0;
    std::vector<std::size_t> trail;
    auto propagate = [&](std::size_t v, int value, const std::vector<std::vector<std::size_t>>& next) {
        std::vector<std::size_t> stack{v};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            if (state[u] != -1) continue;
            state[u] = value;
            trail.push_back(u);
            for (auto w : next[u]) stack.push_back(w);
        }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < n && state[i] != -1) ++i;
        if (i == n) {
            ++count;
            return;
        }
        for (int value : {1, 0}) {
            const auto mark = trail.size();
            propagate(i, value, value == 1 ? forced : forcing);
            rec(i + 1);
            while (trail.size() > mark) {
                state[trail.back()] = -1;
                trail.pop_back();
            }
        }
    };
    rec(0);
    return count;
}

}  // namespace cohesion
