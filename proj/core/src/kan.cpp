#include "cohesion/kan.hpp"

#include <algorithm>
#include <map>

#include "cohesion/error.hpp"
#include "detail/functional_csp.hpp"

namespace cohesion {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void require_parent(const FullSubcategory& l, const Presheaf& x) {
    if (!same_category(l.parent(), x.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaf is not on the parent category");
}

void require_sub(const FullSubcategory& l, const Presheaf& y) {
    if (!same_category(l.category(), y.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaf is not on the subcategory");
}

// Left Kan extension with enough bookkeeping to build units and functorial
// actions. A triple (g: C → iD, v ∈ y(D)) has id base[g] + v within C.
struct LanBuild {
    std::vector<std::size_t> base;                          // per parent morphism
    std::vector<std::vector<std::size_t>> element_of;       // per C: triple → element
    std::vector<std::vector<std::pair<MorphismId, std::size_t>>> rep;  // per C: element → (g, v)
    std::optional<Presheaf> result;
};

LanBuild build_left_kan(const FullSubcategory& l, const Presheaf& y) {
    require_sub(l, y);
    const auto& c = *l.parent();
    const auto& sc = *l.category();
    LanBuild b;
    b.base.assign(c.morphism_count(), kNone);
    std::vector<std::vector<std::pair<MorphismId, std::size_t>>> triples(c.object_count());
    for (auto x : c.object_ids()) {
        for (auto d : sc.object_ids()) {
            for (auto g : c.hom(x, l.to_parent(d))) {
                b.base[g.index] = triples[x.index].size();
                for (std::size_t v = 0; v < y.size(d); ++v) triples[x.index].emplace_back(g, v);
            }
        }
    }
    std::vector<std::vector<std::string>> tags(c.object_count());
    std::vector<std::vector<std::size_t>> raw_class(c.object_count());
    for (auto x : c.object_ids()) {
        detail::UnionFind uf(triples[x.index].size());
        for (auto d : sc.object_ids()) {
            for (auto g : c.hom(x, l.to_parent(d))) {
                for (auto h : sc.out_of(d)) {
                    const auto g2 = c.compose(l.to_parent(h), g);
                    const auto d2 = sc.cod(h);
                    for (std::size_t v2 = 0; v2 < y.size(d2); ++v2)
                        uf.unite(b.base[g2.index] + v2, b.base[g.index] + y.act(h, v2));
                }
            }
        }
        auto& cls = raw_class[x.index];
        cls.assign(triples[x.index].size(), kNone);
        std::size_t next = 0;
        std::vector<std::size_t> class_of_root(triples[x.index].size(), kNone);
        for (std::size_t t = 0; t < triples[x.index].size(); ++t) {
            const auto r = uf.find(t);
            if (class_of_root[r] == kNone) {
                class_of_root[r] = next++;
                const auto [g, v] = triples[x.index][t];
                tags[x.index].push_back("(" + c.name(g) + "," + y.tag(*l.from_parent(c.cod(g)), v) + ")");
            }
            cls[t] = class_of_root[r];
        }
    }
    // Representative triple per raw class.
    std::vector<std::vector<std::pair<MorphismId, std::size_t>>> raw_rep(c.object_count());
    for (auto x : c.object_ids()) {
        raw_rep[x.index].assign(tags[x.index].size(), {MorphismId(0), 0});
        std::vector<bool> seen(tags[x.index].size(), false);
        for (std::size_t t = 0; t < triples[x.index].size(); ++t) {
            const auto k = raw_class[x.index][t];
            if (!seen[k]) {
                seen[k] = true;
                raw_rep[x.index][k] = triples[x.index][t];
            }
        }
    }
    std::vector<std::vector<std::size_t>> actions(c.morphism_count());
    for (auto f : c.morphism_ids()) {
        const auto d = c.dom(f);
        const auto cd = c.cod(f);
        for (const auto& [g, v] : raw_rep[cd.index])
            actions[f.index].push_back(raw_class[d.index][b.base[c.compose(g, f).index] + v]);
    }
    auto tags_copy = tags;
    b.result.emplace(l.parent(), std::move(tags_copy), std::move(actions));
    b.element_of.resize(c.object_count());
    b.rep.resize(c.object_count());
    for (auto x : c.object_ids()) {
        std::vector<std::size_t> sorted_index(tags[x.index].size());
        for (std::size_t k = 0; k < tags[x.index].size(); ++k) sorted_index[k] = *b.result->find(x, tags[x.index][k]);
        b.element_of[x.index].resize(triples[x.index].size());
        for (std::size_t t = 0; t < triples[x.index].size(); ++t)
            b.element_of[x.index][t] = sorted_index[raw_class[x.index][t]];
        b.rep[x.index].resize(tags[x.index].size());
        for (std::size_t k = 0; k < tags[x.index].size(); ++k) b.rep[x.index][sorted_index[k]] = raw_rep[x.index][k];
    }
    return b;
}

// Right Kan extension: at C one variable per arrow g: iD → C.
struct RanBuild {
    std::vector<std::size_t> slot;                            // per parent morphism: variable at its codomain
    std::vector<std::vector<MorphismId>> arrows;              // per C
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;  // per C: family → element
    std::vector<std::vector<std::vector<std::size_t>>> family;           // per C: element → family
    std::optional<Presheaf> result;
};

RanBuild build_right_kan(const FullSubcategory& l, const Presheaf& y) {
    require_sub(l, y);
    const auto& c = *l.parent();
    const auto& sc = *l.category();
    RanBuild b;
    b.slot.assign(c.morphism_count(), kNone);
    b.arrows.resize(c.object_count());
    std::vector<std::vector<std::vector<std::size_t>>> raw(c.object_count());
    std::vector<std::vector<std::string>> tags(c.object_count());
    for (auto x : c.object_ids()) {
        auto& arrows = b.arrows[x.index];
        std::vector<std::size_t> domains;
        for (auto d : sc.object_ids())
            for (auto g : c.hom(l.to_parent(d), x)) {
                b.slot[g.index] = arrows.size();
                arrows.push_back(g);
                domains.push_back(y.size(d));
            }
        detail::FunctionalCsp csp(std::move(domains));
        for (auto g : arrows) {
            const auto d = *l.from_parent(c.dom(g));
            for (auto h : sc.into(d)) {
                if (sc.is_identity(h)) continue;
                csp.add_constraint(b.slot[g.index], b.slot[c.compose(g, l.to_parent(h)).index], &y.action(h));
            }
        }
        csp.solve([&](const std::vector<std::size_t>& values) {
            raw[x.index].push_back(values);
            std::string tag = "{";
            for (std::size_t k = 0; k < arrows.size(); ++k) {
                if (k) tag += ",";
                tag += c.name(arrows[k]) + "=" + y.tag(*l.from_parent(c.dom(arrows[k])), values[k]);
            }
            tags[x.index].push_back(tag + "}");
            return true;
        });
    }
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> raw_index(c.object_count());
    for (auto x : c.object_ids())
        for (std::size_t k = 0; k < raw[x.index].size(); ++k) raw_index[x.index][raw[x.index][k]] = k;
    std::vector<std::vector<std::size_t>> actions(c.morphism_count());
    for (auto f : c.morphism_ids()) {
        const auto d = c.dom(f);
        const auto cd = c.cod(f);
        for (const auto& fam : raw[cd.index]) {
            std::vector<std::size_t> pulled;
            for (auto g : b.arrows[d.index]) pulled.push_back(fam[b.slot[c.compose(f, g).index]]);
            actions[f.index].push_back(raw_index[d.index].at(pulled));
        }
    }
    auto tags_copy = tags;
    b.result.emplace(l.parent(), std::move(tags_copy), std::move(actions));
    b.index.resize(c.object_count());
    b.family.resize(c.object_count());
    for (auto x : c.object_ids()) {
        b.family[x.index].resize(raw[x.index].size());
        for (std::size_t k = 0; k < raw[x.index].size(); ++k) {
            const auto s = *b.result->find(x, tags[x.index][k]);
            b.index[x.index][raw[x.index][k]] = s;
            b.family[x.index][s] = raw[x.index][k];
        }
    }
    return b;
}

}  // namespace

Presheaf restrict(const FullSubcategory& l, const Presheaf& x) {
    require_parent(l, x);
    const auto& sc = *l.category();
    std::vector<std::vector<std::string>> tags;
    for (auto d : sc.object_ids()) tags.push_back(x.tags(l.to_parent(d)));
    std::vector<std::vector<std::size_t>> actions;
    for (auto h : sc.morphism_ids()) actions.push_back(x.action(l.to_parent(h)));
    return Presheaf(l.category(), std::move(tags), std::move(actions));
}

NaturalTransformation restrict(const FullSubcategory& l, const NaturalTransformation& t) {
    std::vector<std::vector<std::size_t>> comps;
    for (auto d : l.category()->object_ids()) comps.push_back(t.component(l.to_parent(d)));
    return NaturalTransformation(restrict(l, t.source()), restrict(l, t.target()), std::move(comps));
}

Presheaf left_kan(const FullSubcategory& l, const Presheaf& y) { return *build_left_kan(l, y).result; }

NaturalTransformation left_kan(const FullSubcategory& l, const NaturalTransformation& t) {
    const auto src = build_left_kan(l, t.source());
    const auto dst = build_left_kan(l, t.target());
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps(c.object_count());
    for (auto x : c.object_ids())
        for (const auto& [g, v] : src.rep[x.index]) {
            const auto d = *l.from_parent(c.cod(g));
            comps[x.index].push_back(dst.element_of[x.index][dst.base[g.index] + t.component(d)[v]]);
        }
    return NaturalTransformation(*src.result, *dst.result, std::move(comps));
}

Presheaf right_kan(const FullSubcategory& l, const Presheaf& y) { return *build_right_kan(l, y).result; }

NaturalTransformation right_kan(const FullSubcategory& l, const NaturalTransformation& t) {
    const auto src = build_right_kan(l, t.source());
    const auto dst = build_right_kan(l, t.target());
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps(c.object_count());
    for (auto x : c.object_ids())
        for (const auto& fam : src.family[x.index]) {
            std::vector<std::size_t> image;
            for (std::size_t k = 0; k < fam.size(); ++k) {
                const auto d = *l.from_parent(c.dom(src.arrows[x.index][k]));
                image.push_back(t.component(d)[fam[k]]);
            }
            comps[x.index].push_back(dst.index[x.index].at(image));
        }
    return NaturalTransformation(*src.result, *dst.result, std::move(comps));
}

NaturalTransformation left_kan_unit(const FullSubcategory& l, const Presheaf& y) {
    const auto b = build_left_kan(l, y);
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps;
    for (auto d : l.category()->object_ids()) {
        const auto x = l.to_parent(d);
        comps.emplace_back();
        for (std::size_t v = 0; v < y.size(d); ++v)
            comps.back().push_back(b.element_of[x.index][b.base[c.identity(x).index] + v]);
    }
    return NaturalTransformation(y, restrict(l, *b.result), std::move(comps));
}

NaturalTransformation left_kan_counit(const FullSubcategory& l, const Presheaf& x) {
    const auto b = build_left_kan(l, restrict(l, x));
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps(c.object_count());
    for (auto o : c.object_ids())
        for (const auto& [g, v] : b.rep[o.index]) comps[o.index].push_back(x.act(g, v));
    return NaturalTransformation(*b.result, x, std::move(comps));
}

NaturalTransformation right_kan_unit(const FullSubcategory& l, const Presheaf& x) {
    const auto b = build_right_kan(l, restrict(l, x));
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps(c.object_count());
    for (auto o : c.object_ids())
        for (std::size_t e = 0; e < x.size(o); ++e) {
            std::vector<std::size_t> fam;
            for (auto g : b.arrows[o.index]) fam.push_back(x.act(g, e));
            comps[o.index].push_back(b.index[o.index].at(fam));
        }
    return NaturalTransformation(x, *b.result, std::move(comps));
}

NaturalTransformation right_kan_counit(const FullSubcategory& l, const Presheaf& y) {
    const auto b = build_right_kan(l, y);
    const auto& c = *l.parent();
    std::vector<std::vector<std::size_t>> comps;
    for (auto d : l.category()->object_ids()) {
        const auto x = l.to_parent(d);
        comps.emplace_back();
        for (const auto& fam : b.family[x.index]) comps.back().push_back(fam[b.slot[c.identity(x).index]]);
    }
    return NaturalTransformation(restrict(l, *b.result), y, std::move(comps));
}

namespace {

void check_identity(const NaturalTransformation& t, const std::string& what, std::vector<std::string>& failures) {
    if (!(t == identity_transformation(t.source()))) failures.push_back(what);
}

}  // namespace

AdjunctionWitness left_kan_adjunction(const FullSubcategory& l, const std::vector<Presheaf>& on_subcategory,
                                      const std::vector<Presheaf>& on_parent) {
    AdjunctionWitness w{"left_kan", "restrict", {}, {}, {}};
    for (std::size_t i = 0; i < on_subcategory.size(); ++i) {
        const auto& y = on_subcategory[i];
        auto eta = left_kan_unit(l, y);
        if (!is_isomorphism(eta)) w.failures.push_back("unit not invertible at subcategory input " + std::to_string(i));
        auto first = compose(left_kan_counit(l, left_kan(l, y)), left_kan(l, eta));
        check_identity(first, "counit∘left_kan(unit) ≠ id at subcategory input " + std::to_string(i), w.failures);
        w.unit.push_back(std::move(eta));
    }
    for (std::size_t i = 0; i < on_parent.size(); ++i) {
        const auto& x = on_parent[i];
        auto eps = left_kan_counit(l, x);
        auto second = compose(restrict(l, eps), left_kan_unit(l, restrict(l, x)));
        check_identity(second, "restrict(counit)∘unit ≠ id at parent input " + std::to_string(i), w.failures);
        w.counit.push_back(std::move(eps));
    }
    return w;
}

AdjunctionWitness right_kan_adjunction(const FullSubcategory& l, const std::vector<Presheaf>& on_parent,
                                       const std::vector<Presheaf>& on_subcategory) {
    AdjunctionWitness w{"restrict", "right_kan", {}, {}, {}};
    for (std::size_t i = 0; i < on_parent.size(); ++i) {
        const auto& x = on_parent[i];
        auto eta = right_kan_unit(l, x);
        auto first = compose(right_kan_counit(l, restrict(l, x)), restrict(l, eta));
        check_identity(first, "counit∘restrict(unit) ≠ id at parent input " + std::to_string(i), w.failures);
        w.unit.push_back(std::move(eta));
    }
    for (std::size_t i = 0; i < on_subcategory.size(); ++i) {
        const auto& y = on_subcategory[i];
        auto eps = right_kan_counit(l, y);
        if (!is_isomorphism(eps))
            w.failures.push_back("counit not invertible at subcategory input " + std::to_string(i));
        auto second = compose(right_kan(l, eps), right_kan_unit(l, right_kan(l, y)));
        check_identity(second, "right_kan(counit)∘unit ≠ id at subcategory input " + std::to_string(i), w.failures);
        w.counit.push_back(std::move(eps));
    }
    return w;
}

Skeleton skeleton(const FullSubcategory& l, const Presheaf& x) {
    auto counit = left_kan_counit(l, x);
    auto p = counit.source();
    return {std::move(p), std::move(counit)};
}

Coskeleton coskeleton(const FullSubcategory& l, const Presheaf& x) {
    auto unit = right_kan_unit(l, x);
    auto p = unit.target();
    return {std::move(p), std::move(unit)};
}

bool is_skeletal(const FullSubcategory& l, const Presheaf& x) { return is_isomorphism(left_kan_counit(l, x)); }

bool is_level_sheaf(const FullSubcategory& l, const Presheaf& x) { return is_isomorphism(right_kan_unit(l, x)); }

bool sheaf_check(const GrothendieckTopology& t, const Presheaf& x) {
    if (!same_category(t.category(), x.category()))
        throw Error(ErrorCode::BaseMismatch, "topology and presheaf on different categories");
    const auto& c = *x.category();
    for (auto o : c.object_ids()) {
        for (const auto& cover : t.covers(o)) {
            std::vector<MorphismId> arrows(cover.begin(), cover.end());
            std::vector<std::size_t> var(c.morphism_count(), kNone);
            std::vector<std::size_t> domains;
            for (std::size_t k = 0; k < arrows.size(); ++k) {
                var[arrows[k].index] = k;
                domains.push_back(x.size(c.dom(arrows[k])));
            }
            detail::FunctionalCsp csp(std::move(domains));
            for (auto f : arrows)
                for (auto h : c.into(c.dom(f))) {
                    if (c.is_identity(h)) continue;
                    csp.add_constraint(var[f.index], var[c.compose(f, h).index], &x.action(h));
                }
            const auto n = x.size(o);
            if (arrows.empty()) {
                if (n != 1) return false;
                continue;
            }
            if (csp.count(n + 1) != n) return false;
            std::map<std::vector<std::size_t>, std::size_t> seen;
            for (std::size_t e = 0; e < n; ++e) {
                std::vector<std::size_t> fam;
                for (auto f : arrows) fam.push_back(x.act(f, e));
                if (!seen.emplace(std::move(fam), e).second) return false;
            }
        }
    }
    return true;
}

Presheaf extend_to_karoubi(const KaroubiEnvelope& env, const Presheaf& x) {
    if (!same_category(env.embedding.source, x.category()))
        throw Error(ErrorCode::BaseMismatch, "presheaf is not on the base of the envelope");
    const auto& c = *x.category();
    const auto& k = *env.category;
    std::vector<std::vector<std::size_t>> fixed(k.object_count());
    std::vector<std::vector<std::string>> tags(k.object_count());
    for (auto o : k.object_ids()) {
        const auto e = env.idempotent[o.index];
        for (std::size_t i = 0; i < x.size(c.dom(e)); ++i)
            if (x.act(e, i) == i) {
                fixed[o.index].push_back(i);
                tags[o.index].push_back(x.tag(c.dom(e), i));
            }
    }
    std::vector<std::vector<std::size_t>> actions(k.morphism_count());
    for (auto f : k.morphism_ids()) {
        const auto& src = fixed[k.dom(f).index];
        for (auto i : fixed[k.cod(f).index]) {
            const auto v = x.act(env.underlying[f.index], i);
            actions[f.index].push_back(static_cast<std::size_t>(std::ranges::find(src, v) - src.begin()));
        }
    }
    return Presheaf(env.category, std::move(tags), std::move(actions));
}

Presheaf sheafify_rigid(const GrothendieckTopology& t, const Presheaf& x) {
    if (!is_rigid(t)) throw Error(ErrorCode::NotRigid, "sheafification needs a rigid topology");
    FullSubcategory irr(t.category(), irreducible_objects(t));
    return right_kan(irr, restrict(irr, x));
}

}  // namespace cohesion
