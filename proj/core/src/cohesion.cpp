#include "cohesion/cohesion.hpp"

#include <algorithm>
#include <map>

#include "cohesion/error.hpp"
#include "cohesion/kan.hpp"
#include "detail/functional_csp.hpp"

namespace cohesion {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string function_tag(const FinCategory& c, const std::vector<MorphismId>& pts, const std::vector<std::size_t>& v,
                         const std::vector<std::string>& a) {
    std::string tag = "{";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) tag += ",";
        tag += c.name(pts[k]) + "=" + a[v[k]];
    }
    return tag + "}";
}

// All functions points → A in lexicographic order.
std::vector<std::vector<std::size_t>> all_functions(std::size_t points, std::size_t a) {
    std::vector<std::vector<std::size_t>> out;
    const auto total = power(a, points);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> v(points);
        auto rest = code;
        for (std::size_t k = points; k-- > 0;) {
            v[k] = rest % a;
            rest /= a;
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool bijective_on_components(const NaturalTransformation& t) {
    const auto src = pi0(t.source());
    const auto dst = pi0(t.target());
    if (src.count() != dst.count()) return false;
    std::vector<std::size_t> image(src.count(), static_cast<std::size_t>(-1));
    for (auto o : t.source().category()->object_ids())
        for (std::size_t i = 0; i < t.source().size(o); ++i) {
            const auto k = src.assignment[o.index][i];
            const auto m = dst.assignment[o.index][t.component(o)[i]];
            if (image[k] != static_cast<std::size_t>(-1) && image[k] != m) return false;
            image[k] = m;
        }
    std::ranges::sort(image);
    return std::ranges::adjacent_find(image) == image.end();
}

FullSubcategory checked_level_subcategory(const Level& l) {
    require_terminal(*l.category());
    if (!is_above_centre(l)) throw Error(ErrorCode::NotAboveCentre, "level is not above the centre");
    return level_subcategory(l);
}

}  // namespace

Components pi0(const Presheaf& x) {
    const auto& c = *x.category();
    std::vector<std::size_t> offset(c.object_count() + 1, 0);
    for (auto o : c.object_ids()) offset[o.index + 1] = offset[o.index] + x.size(o);
    detail::UnionFind uf(offset.back());
    for (auto f : c.morphism_ids())
        for (std::size_t i = 0; i < x.size(c.cod(f)); ++i)
            uf.unite(offset[c.cod(f).index] + i, offset[c.dom(f).index] + x.act(f, i));
    Components out;
    out.assignment.resize(c.object_count());
    std::map<std::size_t, std::size_t> component_of_root;
    for (auto o : c.object_ids())
        for (std::size_t i = 0; i < x.size(o); ++i) {
            const auto r = uf.find(offset[o.index] + i);
            auto [it, fresh] = component_of_root.emplace(r, out.representatives.size());
            if (fresh) out.representatives.emplace_back(o, i);
            out.assignment[o.index].push_back(it->second);
        }
    return out;
}

std::vector<std::string> global_sections(const Presheaf& x) { return x.tags(require_terminal(*x.category())); }

std::vector<std::string> standard_set(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

Presheaf constant_presheaf(const CategoryPtr& c, const std::vector<std::string>& a) {
    std::vector<std::vector<std::string>> tags(c->object_count(), a);
    std::vector<std::size_t> id(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) id[i] = i;
    std::vector<std::vector<std::size_t>> actions(c->morphism_count(), id);
    return Presheaf(c, std::move(tags), std::move(actions));
}

Presheaf codiscrete(const CategoryPtr& c, const std::vector<std::string>& a) {
    std::vector<std::vector<MorphismId>> pts;
    std::vector<std::vector<std::vector<std::size_t>>> funcs;
    std::vector<std::vector<std::string>> tags;
    for (auto o : c->object_ids()) {
        pts.push_back(points(*c, o));
        funcs.push_back(all_functions(pts.back().size(), a.size()));
        tags.emplace_back();
        for (const auto& v : funcs.back()) tags.back().push_back(function_tag(*c, pts.back(), v, a));
    }
    // Function code → index, both lexicographic.
    auto encode = [&](const std::vector<std::size_t>& v) {
        std::size_t code = 0;
        for (auto x : v) code = code * a.size() + x;
        return code;
    };
    std::vector<std::vector<std::size_t>> actions(c->morphism_count());
    for (auto f : c->morphism_ids()) {
        const auto d = c->dom(f);
        const auto cd = c->cod(f);
        std::vector<std::size_t> where;
        for (auto b : pts[d.index]) {
            const auto& pc = pts[cd.index];
            where.push_back(static_cast<std::size_t>(std::ranges::find(pc, c->compose(f, b)) - pc.begin()));
        }
        for (const auto& v : funcs[cd.index]) {
            std::vector<std::size_t> pulled;
            for (auto w : where) pulled.push_back(v[w]);
            actions[f.index].push_back(encode(pulled));
        }
    }
    return Presheaf(c, std::move(tags), std::move(actions));
}

NaturalTransformation phi(const CategoryPtr& c, const std::vector<std::string>& a) {
    auto source = constant_presheaf(c, a);
    auto target = codiscrete(c, a);
    std::vector<std::vector<std::size_t>> comps;
    for (auto o : c->object_ids()) {
        const auto pts = points(*c, o);
        comps.emplace_back();
        for (std::size_t i = 0; i < source.size(o); ++i) {
            const auto& tag = source.tag(o, i);
            const auto k = static_cast<std::size_t>(std::ranges::find(a, tag) - a.begin());
            comps.back().push_back(
                *target.find(o, function_tag(*c, pts, std::vector<std::size_t>(pts.size(), k), a)));
        }
    }
    return NaturalTransformation(std::move(source), std::move(target), std::move(comps));
}

bool is_nullstellensatz(const CategoryPtr& c, const std::vector<std::size_t>& sizes) {
    require_pre_cohesive_site(*c);
    return std::ranges::all_of(sizes, [&](std::size_t n) { return is_monic(phi(c, standard_set(n))); });
}

bool is_quality_type_level(const Level& l, const std::vector<std::size_t>& sizes) {
    const auto d = checked_level_subcategory(l);
    return std::ranges::all_of(sizes, [&](std::size_t n) {
        return is_isomorphism(restrict(d, phi(l.category(), standard_set(n))));
    });
}

Presheaf omega(const CategoryPtr& c) {
    std::vector<std::vector<Sieve>> sieves;
    std::vector<std::vector<std::string>> tags;
    for (auto o : c->object_ids()) {
        sieves.push_back(sieves_on(*c, o));
        tags.emplace_back();
        for (const auto& s : sieves.back()) {
            std::string tag = "{";
            bool first = true;
            for (auto f : s.members) {
                if (!first) tag += ",";
                first = false;
                tag += c->name(f);
            }
            tags.back().push_back(tag + "}");
        }
    }
    std::vector<std::vector<std::size_t>> actions(c->morphism_count());
    for (auto f : c->morphism_ids()) {
        const auto& src = sieves[c->dom(f).index];
        for (const auto& s : sieves[c->cod(f).index]) {
            const auto p = pullback(*c, s, f);
            actions[f.index].push_back(static_cast<std::size_t>(std::ranges::find(src, p) - src.begin()));
        }
    }
    return Presheaf(c, std::move(tags), std::move(actions));
}

std::size_t pi0_omega(const CategoryPtr& c) {
    require_terminal(*c);
    return pi0(omega(c)).count();
}

bool check_way_above(const FullSubcategory& l, const Presheaf& x) {
    const auto t = require_terminal(*l.parent());
    if (!l.contains(t)) throw Error(ErrorCode::NotAboveCentre, "subcategory misses the terminal object");
    return bijective_on_components(skeleton(l, x).counit);
}

bool check_way_above(const Level& l, const Presheaf& x) { return check_way_above(checked_level_subcategory(l), x); }

FourFunctorsReport level_four_functors(const Level& l, const std::vector<Presheaf>& level_inputs,
                                       const std::vector<std::size_t>& set_sizes) {
    const auto d = checked_level_subcategory(l);
    const auto& c = l.category();
    const auto t = require_terminal(*c);
    const auto t_sub = *d.from_parent(t);
    FourFunctorsReport r;
    r.level_objects = d.objects();
    r.adjunctions_hold = true;
    for (const auto& y : level_inputs) {
        FourFunctorsReport::OnObject o;
        o.shriek = pi0(left_kan(d, y)).count();
        const auto direct = right_kan(d, y);
        o.shriek_direct = pi0(direct).count();
        o.sections = global_sections(direct).size();
        o.shriek_forms_agree = o.shriek == o.shriek_direct;
        o.shriek_matches_pi0 = o.shriek == pi0(y).count();
        o.sections_match_terminal = o.sections == y.size(t_sub);
        r.objects.push_back(o);
    }
    r.quality_type = true;
    for (auto n : set_sizes) {
        const auto a = standard_set(n);
        auto inverse = restrict(d, constant_presheaf(c, a));
        auto upper = restrict(d, codiscrete(c, a));
        const bool phi_iso = is_isomorphism(restrict(d, phi(c, a)));
        const bool round = global_sections(right_kan(d, inverse)).size() == n;
        r.quality_type = r.quality_type && phi_iso;
        for (std::size_t i = 0; i < level_inputs.size(); ++i) {
            const auto& y = level_inputs[i];
            const auto& o = r.objects[i];
            // Hom(f_! Y, A) ≅ Hom(Y, f^* A)
            r.adjunctions_hold = r.adjunctions_hold && power(n, o.shriek) == count_natural_transformations(y, inverse);
            // Hom(f^* A, Y) ≅ Hom(A, f_* Y)
            r.adjunctions_hold = r.adjunctions_hold && count_natural_transformations(inverse, y) == power(o.sections, n);
            // Hom(f_* Y, A) ≅ Hom(Y, f^! A)
            r.adjunctions_hold = r.adjunctions_hold && power(n, o.sections) == count_natural_transformations(y, upper);
        }
        r.sets.push_back({n, std::move(inverse), std::move(upper), phi_iso, round});
    }
    return r;
}

}  // namespace cohesion
