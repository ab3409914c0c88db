#include "cohesion/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cohesion/error.hpp"

namespace cohesion {

namespace {

std::string triple_name(const FinCategory& c, MorphismId h, MorphismId g, MorphismId f) {
    return "(" + c.name(h) + ", " + c.name(g) + ", " + c.name(f) + ")";
}

}  // namespace

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                         std::vector<MorphismId> identities, std::vector<std::optional<MorphismId>> compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {
    const std::size_t n = objects_.size();
    const std::size_t m = morphisms_.size();
    if (identities_.size() != n) throw Error(ErrorCode::InvalidInput, "one identity per object is required");
    if (compose_.size() != m * m) throw Error(ErrorCode::InvalidInput, "composition table has the wrong size");
    std::set<std::string_view> seen;
    for (const auto& o : objects_)
        if (!seen.insert(o).second) throw Error(ErrorCode::InvalidInput, "duplicate object name '" + o + "'");
    seen.clear();
    for (const auto& f : morphisms_) {
        if (!seen.insert(f.name).second)
            throw Error(ErrorCode::InvalidInput, "duplicate morphism name '" + f.name + "'");
        if (f.dom.index >= n || f.cod.index >= n)
            throw Error(ErrorCode::InvalidInput, "morphism '" + f.name + "' has an unknown endpoint");
    }
    for (auto id : identities_)
        if (id.index >= m) throw Error(ErrorCode::InvalidInput, "identity refers to an unknown morphism");
    for (const auto& entry : compose_)
        if (entry && entry->index >= m) throw Error(ErrorCode::InvalidInput, "composite refers to an unknown morphism");

    hom_.assign(n * n, {});
    into_.assign(n, {});
    out_of_.assign(n, {});
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = morphisms_[i];
        hom_[f.dom.index * n + f.cod.index].emplace_back(i);
        into_[f.cod.index].emplace_back(i);
        out_of_[f.dom.index].emplace_back(i);
    }
}

std::vector<ObjectId> FinCategory::object_ids() const {
    std::vector<ObjectId> ids;
    ids.reserve(objects_.size());
    for (std::size_t i = 0; i < objects_.size(); ++i) ids.emplace_back(i);
    return ids;
}

std::vector<MorphismId> FinCategory::morphism_ids() const {
    std::vector<MorphismId> ids;
    ids.reserve(morphisms_.size());
    for (std::size_t i = 0; i < morphisms_.size(); ++i) ids.emplace_back(i);
    return ids;
}

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const {
    if (dom(g) != cod(f))
        throw Error(ErrorCode::InvalidInput, "cannot compose " + name(g) + " after " + name(f));
    auto gf = try_compose(g, f);
    if (!gf) throw Error(ErrorCode::InvalidInput, "missing composite " + name(g) + "∘" + name(f));
    return *gf;
}

bool FinCategory::is_idempotent(MorphismId f) const { return dom(f) == cod(f) && compose(f, f) == f; }

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return ObjectId(i);
    return std::nullopt;
}

std::optional<MorphismId> FinCategory::find_morphism(std::string_view name) const {
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
        if (morphisms_[i].name == name) return MorphismId(i);
    return std::nullopt;
}

FinCategory FinCategory::renamed(std::vector<std::string> object_names, std::vector<std::string> morphism_names) const {
    if (object_names.size() != objects_.size() || morphism_names.size() != morphisms_.size())
        throw Error(ErrorCode::InvalidInput, "rename needs one name per object and per morphism");
    auto morphisms = morphisms_;
    for (std::size_t i = 0; i < morphisms.size(); ++i) morphisms[i].name = std::move(morphism_names[i]);
    return FinCategory(std::move(object_names), std::move(morphisms), identities_, compose_);
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport report;
    auto& out = report.violations;
    const auto ms = c.morphism_ids();

    for (auto x : c.object_ids()) {
        auto id = c.identity(x);
        if (c.dom(id) != x || c.cod(id) != x)
            out.push_back("identity " + c.name(id) + " of " + c.name(x) + " is not an endomorphism of it");
    }

    for (auto g : ms) {
        for (auto f : ms) {
            auto gf = c.try_compose(g, f);
            const bool composable = c.dom(g) == c.cod(f);
            if (composable && !gf) {
                out.push_back("missing composite compose(" + c.name(g) + ", " + c.name(f) + ")");
            } else if (!composable && gf) {
                out.push_back("composite given for non-composable pair (" + c.name(g) + ", " + c.name(f) + ")");
            } else if (composable && (c.dom(*gf) != c.dom(f) || c.cod(*gf) != c.cod(g))) {
                out.push_back("dom/cod mismatch: compose(" + c.name(g) + ", " + c.name(f) + ") = " + c.name(*gf));
            }
        }
    }
    if (!out.empty()) return report;

    for (auto f : ms) {
        if (c.compose(c.identity(c.cod(f)), f) != f)
            out.push_back("left identity law fails for " + c.name(f));
        if (c.compose(f, c.identity(c.dom(f))) != f)
            out.push_back("right identity law fails for " + c.name(f));
    }
    for (auto f : ms) {
        for (auto g : c.out_of(c.cod(f))) {
            auto gf = c.compose(g, f);
            for (auto h : c.out_of(c.cod(g))) {
                if (c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    out.push_back("associativity fails for " + triple_name(c, h, g, f));
            }
        }
    }
    return report;
}

std::optional<TerminalObject> terminal_object(const FinCategory& c) {
    TerminalObject t;
    for (auto cand : c.object_ids()) {
        bool terminal = true;
        for (auto x : c.object_ids()) {
            if (c.hom(x, cand).size() != 1) {
                terminal = false;
                break;
            }
        }
        if (terminal) t.iso_class.push_back(cand);
    }
    if (t.iso_class.empty()) return std::nullopt;
    t.object = t.iso_class.front();
    return t;
}

ObjectId require_terminal(const FinCategory& c) {
    auto t = terminal_object(c);
    if (!t) throw Error(ErrorCode::NoTerminal, "the category has no terminal object");
    return t->object;
}

std::vector<MorphismId> points(const FinCategory& c, ObjectId x) { return c.hom(require_terminal(c), x); }

bool is_pre_cohesive_site(const FinCategory& c) {
    auto t = terminal_object(c);
    if (!t) return false;
    return std::ranges::all_of(c.object_ids(), [&](ObjectId x) { return !c.hom(t->object, x).empty(); });
}

void require_pre_cohesive_site(const FinCategory& c) {
    auto t = terminal_object(c);
    if (!t) throw Error(ErrorCode::NotPreCohesiveSite, "the category has no terminal object");
    for (auto x : c.object_ids())
        if (c.hom(t->object, x).empty())
            throw Error(ErrorCode::NotPreCohesiveSite, "object " + c.name(x) + " has no point");
}

bool is_pseudo_constant(const FinCategory& c, MorphismId f) {
    const auto pts = points(c, c.dom(f));
    if (pts.size() <= 1) return true;
    const auto first = c.compose(f, pts.front());
    return std::ranges::all_of(pts, [&](MorphismId a) { return c.compose(f, a) == first; });
}

FullSubcategory::FullSubcategory(CategoryPtr parent, std::vector<ObjectId> objects)
    : parent_(std::move(parent)), objects_(std::move(objects)) {
    const auto& p = *parent_;
    std::ranges::sort(objects_);
    auto dup = std::ranges::unique(objects_);
    objects_.erase(dup.begin(), dup.end());
    to_sub_object_.assign(p.object_count(), std::nullopt);
    to_sub_morphism_.assign(p.morphism_count(), std::nullopt);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i].index >= p.object_count()) throw Error(ErrorCode::InvalidInput, "unknown object in subcategory");
        to_sub_object_[objects_[i].index] = ObjectId(i);
        names.push_back(p.name(objects_[i]));
    }
    std::vector<MorphismInfo> infos;
    for (auto f : p.morphism_ids()) {
        auto d = to_sub_object_[p.dom(f).index];
        auto k = to_sub_object_[p.cod(f).index];
        if (!d || !k) continue;
        to_sub_morphism_[f.index] = MorphismId(morphisms_.size());
        morphisms_.push_back(f);
        infos.push_back({p.name(f), *d, *k});
    }
    std::vector<MorphismId> ids;
    for (auto x : objects_) ids.push_back(*to_sub_morphism_[p.identity(x).index]);
    const std::size_t m = morphisms_.size();
    std::vector<std::optional<MorphismId>> table(m * m);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t f = 0; f < m; ++f)
            if (auto gf = p.try_compose(morphisms_[g], morphisms_[f]); gf && p.dom(morphisms_[g]) == p.cod(morphisms_[f]))
                table[g * m + f] = to_sub_morphism_[gf->index];
    category_ = share(FinCategory(std::move(names), std::move(infos), std::move(ids), std::move(table)));
}

FullSubcategory unique_point_objects(const CategoryPtr& c) {
    std::vector<ObjectId> objs;
    for (auto x : c->object_ids())
        if (points(*c, x).size() == 1) objs.push_back(x);
    return FullSubcategory(c, std::move(objs));
}

ValidationReport validate_functor(const FunctorWitness& f) {
    ValidationReport report;
    const auto& s = *f.source;
    const auto& t = *f.target;
    if (f.on_objects.size() != s.object_count() || f.on_morphisms.size() != s.morphism_count()) {
        report.violations.emplace_back("functor witness has the wrong size");
        return report;
    }
    for (auto x : s.object_ids())
        if (f.on_morphisms[s.identity(x).index] != t.identity(f.on_objects[x.index]))
            report.violations.push_back("identity of " + s.name(x) + " is not preserved");
    for (auto g : s.morphism_ids()) {
        auto fg = f.on_morphisms[g.index];
        if (t.dom(fg) != f.on_objects[s.dom(g).index] || t.cod(fg) != f.on_objects[s.cod(g).index])
            report.violations.push_back("dom/cod of " + s.name(g) + " not preserved");
    }
    if (!report.ok()) return report;
    for (auto g : s.morphism_ids())
        for (auto h : s.out_of(s.cod(g)))
            if (f.on_morphisms[s.compose(h, g).index] != t.compose(f.on_morphisms[h.index], f.on_morphisms[g.index]))
                report.violations.push_back("composite " + s.name(h) + "∘" + s.name(g) + " not preserved");
    return report;
}

KaroubiEnvelope karoubi_envelope(const CategoryPtr& cp, bool skeletal) {
    const auto& c = *cp;
    std::vector<MorphismId> idem;
    for (auto f : c.morphism_ids())
        if (c.is_idempotent(f)) idem.push_back(f);

    // Full (non-skeletal) envelope first.
    const std::size_t n = idem.size();
    std::vector<std::string> obj_names;
    std::set<std::string> used;
    for (auto e : idem) {
        std::string nm = c.is_identity(e) ? c.name(c.dom(e)) : c.name(e);
        while (!used.insert(nm).second) nm += "'";
        obj_names.push_back(nm);
    }
    struct KMorphism {
        std::size_t dom, cod;
        MorphismId f;
    };
    std::vector<KMorphism> kmor;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (auto f : c.hom(c.dom(idem[a]), c.dom(idem[b])))
                if (c.compose(idem[b], c.compose(f, idem[a])) == f) kmor.push_back({a, b, f});
        }
    }
    // Index: (dom, cod, f) -> envelope morphism.
    auto find_k = [&](std::size_t a, std::size_t b, MorphismId f) -> std::size_t {
        for (std::size_t i = 0; i < kmor.size(); ++i)
            if (kmor[i].dom == a && kmor[i].cod == b && kmor[i].f == f) return i;
        throw Error(ErrorCode::InvalidInput, "envelope morphism lookup failed");
    };
    auto object_of = [&](MorphismId e) -> std::size_t {
        return static_cast<std::size_t>(std::ranges::find(idem, e) - idem.begin());
    };

    // Iso classes: a ≅ b iff f: a→b, g: b→a with g∘f = e_a and f∘g = e_b.
    std::vector<std::size_t> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<std::optional<std::pair<MorphismId, MorphismId>>> to_rep(n);  // (a→rep, rep→a) in c
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b <= a && rep[a] == a; ++b) {
            if (b == a) {
                to_rep[a] = std::pair{idem[a], idem[a]};
                break;
            }
            if (rep[b] != b) continue;
            for (const auto& fk : kmor) {
                if (fk.dom != a || fk.cod != b) continue;
                for (const auto& gk : kmor) {
                    if (gk.dom != b || gk.cod != a) continue;
                    if (c.compose(gk.f, fk.f) == idem[a] && c.compose(fk.f, gk.f) == idem[b]) {
                        rep[a] = b;
                        to_rep[a] = std::pair{fk.f, gk.f};
                        break;
                    }
                }
                if (rep[a] != a) break;
            }
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < n; ++a)
        if (!skeletal || rep[a] == a) kept.push_back(a);
    std::vector<std::optional<std::size_t>> new_obj(n);
    for (std::size_t i = 0; i < kept.size(); ++i) new_obj[kept[i]] = i;

    std::vector<std::string> names;
    std::vector<MorphismId> split;
    for (auto a : kept) {
        names.push_back(obj_names[a]);
        split.push_back(idem[a]);
    }
    std::vector<std::size_t> kept_mor;
    std::vector<std::optional<std::size_t>> new_mor(kmor.size());
    std::vector<MorphismInfo> infos;
    std::set<std::string> used_m;
    for (std::size_t i = 0; i < kmor.size(); ++i) {
        const auto& k = kmor[i];
        if (!new_obj[k.dom] || !new_obj[k.cod]) continue;
        new_mor[i] = kept_mor.size();
        kept_mor.push_back(i);
        std::string nm = c.is_identity(idem[k.dom]) && c.is_identity(idem[k.cod])
                             ? c.name(k.f)
                             : c.name(k.f) + "[" + obj_names[k.dom] + "," + obj_names[k.cod] + "]";
        while (!used_m.insert(nm).second) nm += "'";
        infos.push_back({nm, ObjectId(*new_obj[k.dom]), ObjectId(*new_obj[k.cod])});
    }
    std::vector<MorphismId> ids;
    for (auto a : kept) ids.emplace_back(*new_mor[find_k(a, a, idem[a])]);
    const std::size_t m = kept_mor.size();
    std::vector<std::optional<MorphismId>> table(m * m);
    for (std::size_t gi = 0; gi < m; ++gi) {
        for (std::size_t fi = 0; fi < m; ++fi) {
            const auto& g = kmor[kept_mor[gi]];
            const auto& f = kmor[kept_mor[fi]];
            if (g.dom != f.cod) continue;
            table[gi * m + fi] = MorphismId(*new_mor[find_k(f.dom, g.cod, c.compose(g.f, f.f))]);
        }
    }

    KaroubiEnvelope env;
    env.category = share(FinCategory(std::move(names), std::move(infos), std::move(ids), std::move(table)));
    env.idempotent = std::move(split);
    for (auto i : kept_mor) env.underlying.push_back(kmor[i].f);
    env.embedding.source = cp;
    env.embedding.target = env.category;
    for (auto x : c.object_ids()) {
        auto a = object_of(c.identity(x));
        env.embedding.on_objects.emplace_back(*new_obj[skeletal ? rep[a] : a]);
    }
    for (auto f : c.morphism_ids()) {
        auto a = object_of(c.identity(c.dom(f)));
        auto b = object_of(c.identity(c.cod(f)));
        std::size_t ra = skeletal ? rep[a] : a;
        std::size_t rb = skeletal ? rep[b] : b;
        // Transport along the chosen isos: rep(a) → a → b → rep(b).
        MorphismId transported = f;
        if (skeletal) transported = c.compose(to_rep[b]->first, c.compose(f, to_rep[a]->second));
        env.embedding.on_morphisms.emplace_back(*new_mor[find_k(ra, rb, transported)]);
    }
    return env;
}

bool idempotents_split(const FinCategory& c) {
    for (auto e : c.morphism_ids()) {
        if (!c.is_idempotent(e)) continue;
        const auto x = c.dom(e);
        bool found = false;
        for (auto y : c.object_ids()) {
            for (auto s : c.hom(y, x)) {
                for (auto r : c.hom(x, y)) {
                    if (c.compose(r, s) == c.identity(y) && c.compose(s, r) == e) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

LittleFiguresReport has_enough_little_figures(const FinCategory& c) {
    LittleFiguresReport report;
    std::vector<ObjectId> single;
    for (auto b : c.object_ids())
        if (points(c, b).size() == 1) single.push_back(b);
    for (auto f : c.morphism_ids()) {
        if (!is_pseudo_constant(c, f)) continue;
        bool factors = false;
        for (auto b : single) {
            for (auto e : c.hom(c.dom(f), b)) {
                for (auto m : c.hom(b, c.cod(f)))
                    if (c.compose(m, e) == f) {
                        factors = true;
                        break;
                    }
                if (factors) break;
            }
            if (factors) break;
        }
        if (!factors) report.uncovered.push_back(f);
    }
    report.holds = report.uncovered.empty();
    return report;
}

}  // namespace cohesion
