#include "cohesion/levels.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "cohesion/error.hpp"

namespace cohesion {

namespace {

void require_same_base(const CategoryPtr& a, const CategoryPtr& b) {
    if (!same_category(a, b)) throw Error(ErrorCode::BaseMismatch, "levels live over different categories");
}

// Down-sets of a preorder on n ≤ 64 elements, given as principal (below)
// and dual (above) masks. Every leaf of the include/exclude recursion is a
// distinct down-set, so the cost is linear in the output.
void enumerate_down_sets(const std::vector<std::uint64_t>& below, const std::vector<std::uint64_t>& above,
                         const std::function<void(std::uint64_t)>& emit) {
    const std::size_t n = below.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t in, std::uint64_t out) {
        const std::uint64_t undecided = all & ~(in | out);
        if (undecided == 0) {
            emit(in);
            return;
        }
        const auto i = static_cast<std::size_t>(std::countr_zero(undecided));
        rec(in | below[i], out);
        rec(in, out | above[i]);
    };
    rec(0, 0);
}

void check_enumerable(const FinCategory& c, std::size_t max_morphisms) {
    const std::size_t limit = std::min(max_morphisms, kHardMaxMorphisms);
    if (c.morphism_count() > limit)
        throw Error(ErrorCode::TooLarge, "category has " + std::to_string(c.morphism_count()) +
                                             " morphisms; enumeration bound is " + std::to_string(limit));
}

}  // namespace

MorphismIdeal::MorphismIdeal(CategoryPtr category, MorphismSet members)
    : category_(std::move(category)), members_(std::move(members)) {
    if (members_.universe() != category_->morphism_count())
        throw Error(ErrorCode::InvalidInput, "ideal members sized for a different category");
    if (!is_ideal(*category_, members_)) throw Error(ErrorCode::NotAnIdeal, "set is not closed under composition");
}

bool is_ideal(const FinCategory& c, const MorphismSet& s) {
    for (auto g : s) {
        for (auto h : c.into(c.dom(g)))
            if (!s.contains(c.compose(g, h))) return false;
        for (auto f : c.out_of(c.cod(g)))
            if (!s.contains(c.compose(f, g))) return false;
    }
    return true;
}

MorphismSet composite_set(const FinCategory& c, const MorphismSet& s) {
    MorphismSet out = c.empty_set();
    for (auto h : s)
        for (auto g : c.out_of(c.cod(h)))
            if (s.contains(g)) out.insert(c.compose(g, h));
    return out;
}

MorphismIdeal ideal_generated_by(const CategoryPtr& c, const MorphismSet& seed) {
    MorphismSet out = c->empty_set();
    for (auto g : seed)
        for (auto a : c->out_of(c->cod(g)))
            for (auto b : c->into(c->dom(g))) out.insert(c->compose(a, c->compose(g, b)));
    return MorphismIdeal(c, std::move(out));
}

bool is_idempotent_ideal(const MorphismIdeal& i) {
    return i.members().is_subset_of(composite_set(*i.category(), i.members()));
}

MorphismIdeal pseudo_constant_ideal(const CategoryPtr& c) {
    MorphismSet s = c->empty_set();
    for (auto f : c->morphism_ids())
        if (is_pseudo_constant(*c, f)) s.insert(f);
    return MorphismIdeal(c, std::move(s));
}

MorphismIdeal centre_ideal(const CategoryPtr& c) {
    MorphismSet seed = c->empty_set();
    seed.insert(c->identity(require_terminal(*c)));
    return ideal_generated_by(c, seed);
}

MorphismIdeal ideal_of_full_subcategory(const FullSubcategory& d) {
    MorphismSet seed = d.parent()->empty_set();
    for (auto x : d.objects()) seed.insert(d.parent()->identity(x));
    return ideal_generated_by(d.parent(), seed);
}

MorphismIdeal largest_idempotent_subideal(const MorphismIdeal& i) {
    MorphismSet current = i.members();
    while (true) {
        MorphismSet next = composite_set(*i.category(), current);
        if (next == current) return MorphismIdeal(i.category(), std::move(current));
        current = std::move(next);
    }
}

std::vector<MorphismIdeal> enumerate_ideals(const CategoryPtr& c, std::size_t max_morphisms) {
    check_enumerable(*c, max_morphisms);
    const std::size_t n = c->morphism_count();
    std::vector<std::uint64_t> below(n, 0);
    std::vector<std::uint64_t> above(n, 0);
    for (auto g : c->morphism_ids()) {
        MorphismSet seed = c->empty_set();
        seed.insert(g);
        below[g.index] = ideal_generated_by(c, seed).members().mask();
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if ((below[h] >> g) & 1U) above[g] |= std::uint64_t{1} << h;
    std::vector<MorphismIdeal> out;
    enumerate_down_sets(below, above,
                        [&](std::uint64_t mask) { out.emplace_back(c, MorphismSet::from_mask(n, mask)); });
    std::ranges::sort(out, [](const MorphismIdeal& a, const MorphismIdeal& b) { return a.members() < b.members(); });
    return out;
}

std::vector<MorphismIdeal> enumerate_idempotent_ideals(const CategoryPtr& c, std::size_t max_morphisms) {
    auto all = enumerate_ideals(c, max_morphisms);
    std::vector<MorphismIdeal> out;
    for (auto& i : all)
        if (is_idempotent_ideal(i)) out.push_back(std::move(i));
    return out;
}

bool is_sieve(const FinCategory& c, ObjectId target, const MorphismSet& members) {
    for (auto f : members) {
        if (c.cod(f) != target) return false;
        for (auto h : c.into(c.dom(f)))
            if (!members.contains(c.compose(f, h))) return false;
    }
    return true;
}

Sieve maximal_sieve(const FinCategory& c, ObjectId target) {
    Sieve s{target, c.empty_set()};
    for (auto f : c.into(target)) s.members.insert(f);
    return s;
}

Sieve pullback(const FinCategory& c, const Sieve& s, MorphismId f) {
    if (c.cod(f) != s.target) throw Error(ErrorCode::InvalidInput, "pullback along a map into another object");
    Sieve out{c.dom(f), c.empty_set()};
    for (auto h : c.into(c.dom(f)))
        if (s.members.contains(c.compose(f, h))) out.members.insert(h);
    return out;
}

Sieve generated_sieve(const FinCategory& c, ObjectId target, const std::vector<MorphismId>& arrows) {
    Sieve out{target, c.empty_set()};
    for (auto f : arrows) {
        if (c.cod(f) != target) throw Error(ErrorCode::InvalidInput, "generator with the wrong codomain");
        for (auto h : c.into(c.dom(f))) out.members.insert(c.compose(f, h));
    }
    return out;
}

std::vector<Sieve> sieves_on(const FinCategory& c, ObjectId target) {
    const auto& arrows = c.into(target);
    const std::size_t n = arrows.size();
    if (n > 64) throw Error(ErrorCode::TooLarge, "too many arrows into " + c.name(target));
    auto local = [&](MorphismId f) {
        return static_cast<std::size_t>(std::ranges::find(arrows, f) - arrows.begin());
    };
    std::vector<std::uint64_t> below(n, 0);
    std::vector<std::uint64_t> above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (auto h : c.into(c.dom(arrows[i]))) below[i] |= std::uint64_t{1} << local(c.compose(arrows[i], h));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if ((below[h] >> g) & 1U) above[g] |= std::uint64_t{1} << h;
    std::vector<Sieve> out;
    enumerate_down_sets(below, above, [&](std::uint64_t mask) {
        Sieve s{target, c.empty_set()};
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1U) s.members.insert(arrows[i]);
        out.push_back(std::move(s));
    });
    std::ranges::sort(out, [](const Sieve& a, const Sieve& b) { return a.members < b.members; });
    return out;
}

GrothendieckTopology::GrothendieckTopology(CategoryPtr category, std::vector<std::vector<MorphismSet>> covers)
    : category_(std::move(category)), covers_(std::move(covers)) {
    if (covers_.size() != category_->object_count())
        throw Error(ErrorCode::InvalidInput, "topology needs a cover list per object");
    for (auto& list : covers_) {
        std::ranges::sort(list);
        auto dup = std::ranges::unique(list);
        list.erase(dup.begin(), dup.end());
    }
}

bool GrothendieckTopology::is_covering(const Sieve& s) const {
    const auto& list = covers_.at(s.target.index);
    return std::ranges::binary_search(list, s.members);
}

ValidationReport validate_topology(const GrothendieckTopology& t) {
    ValidationReport report;
    const auto& c = *t.category();
    for (auto x : c.object_ids()) {
        if (!t.is_covering(maximal_sieve(c, x)))
            report.violations.push_back("maximal sieve on " + c.name(x) + " does not cover");
        for (const auto& m : t.covers(x))
            if (!is_sieve(c, x, m)) report.violations.push_back("cover on " + c.name(x) + " is not a sieve");
    }
    if (!report.ok()) return report;
    for (auto x : c.object_ids()) {
        for (const auto& m : t.covers(x)) {
            Sieve s{x, m};
            for (auto f : c.into(x))
                if (!t.is_covering(pullback(c, s, f)))
                    report.violations.push_back("pullback of a cover on " + c.name(x) + " along " + c.name(f) +
                                                " does not cover");
        }
        const auto all = sieves_on(c, x);
        for (const auto& r : all) {
            if (t.is_covering(r)) continue;
            for (const auto& m : t.covers(x)) {
                const bool locally = std::ranges::all_of(Sieve{x, m}.members, [&](MorphismId f) {
                    return t.is_covering(pullback(c, r, f));
                });
                if (locally) {
                    report.violations.push_back("transitivity fails on " + c.name(x));
                    break;
                }
            }
        }
    }
    return report;
}

GrothendieckTopology trivial_topology(const CategoryPtr& c) {
    std::vector<std::vector<MorphismSet>> covers;
    for (auto x : c->object_ids()) covers.push_back({maximal_sieve(*c, x).members});
    return GrothendieckTopology(c, std::move(covers));
}

GrothendieckTopology topology_of_ideal(const MorphismIdeal& i) {
    if (!is_idempotent_ideal(i)) throw Error(ErrorCode::NotIdempotent, "topology requested for a non-idempotent ideal");
    const auto& c = *i.category();
    std::vector<std::vector<MorphismSet>> covers;
    for (auto x : c.object_ids()) {
        MorphismSet required = c.empty_set();
        for (auto f : c.into(x))
            if (i.contains(f)) required.insert(f);
        std::vector<MorphismSet> list;
        for (auto& s : sieves_on(c, x))
            if (required.is_subset_of(s.members)) list.push_back(std::move(s.members));
        covers.push_back(std::move(list));
    }
    return GrothendieckTopology(i.category(), std::move(covers));
}

Level::Level(MorphismIdeal ideal) : ideal_(std::move(ideal)), topology_(topology_of_ideal(ideal_)) {}

Level level_of_full_subcategory(const FullSubcategory& d) { return Level(ideal_of_full_subcategory(d)); }

Level top_level(const CategoryPtr& c) { return Level(MorphismIdeal(c, c->all_morphisms())); }

Level bottom_level(const CategoryPtr& c) { return Level(MorphismIdeal(c, c->empty_set())); }

Level centre_level(const CategoryPtr& c) { return Level(centre_ideal(c)); }

bool is_above(const Level& a, const Level& b) {
    require_same_base(a.category(), b.category());
    const bool by_ideal = b.ideal().members().is_subset_of(a.ideal().members());
    bool by_covers = true;
    for (auto x : a.category()->object_ids()) {
        for (const auto& s : a.topology().covers(x))
            if (!b.topology().is_covering(Sieve{x, s})) by_covers = false;
    }
    if (by_ideal != by_covers) throw std::logic_error("ideal order and cover order disagree");
    return by_ideal;
}

bool is_above_centre(const Level& l) {
    const auto& c = *l.category();
    const auto terminal = require_terminal(c);
    bool by_covers = true;
    bool by_ideal = true;
    for (auto x : c.object_ids()) {
        const auto& pts = c.hom(terminal, x);
        for (auto p : pts)
            if (!l.ideal().contains(p)) by_ideal = false;
        for (const auto& s : l.topology().covers(x))
            for (auto p : pts)
                if (!s.contains(p)) by_covers = false;
    }
    if (by_ideal != by_covers) throw std::logic_error("above-centre tests disagree");
    return by_ideal;
}

bool is_subquality_level(const Level& l) {
    const auto& c = *l.category();
    require_pre_cohesive_site(c);
    if (!is_above_centre(l)) throw Error(ErrorCode::NotAboveCentre, "level is not above the centre");
    const auto pc = pseudo_constant_ideal(l.category());
    const bool by_ideal = l.ideal().members().is_subset_of(pc.members());
    bool by_covers = true;
    for (auto x : c.object_ids()) {
        Sieve s{x, c.empty_set()};
        for (auto f : c.into(x))
            if (pc.contains(f)) s.members.insert(f);
        if (!l.topology().is_covering(s)) by_covers = false;
    }
    if (by_ideal != by_covers) throw std::logic_error("subquality tests disagree");
    return by_ideal;
}

std::vector<ObjectId> irreducible_objects(const GrothendieckTopology& t) {
    const auto& c = *t.category();
    std::vector<ObjectId> out;
    for (auto x : c.object_ids()) {
        const auto& list = t.covers(x);
        if (list.size() == 1 && list.front() == maximal_sieve(c, x).members) out.push_back(x);
    }
    return out;
}

bool is_rigid(const GrothendieckTopology& t) {
    const auto& c = *t.category();
    const auto irr = irreducible_objects(t);
    for (auto b : c.object_ids()) {
        std::vector<MorphismId> arrows;
        for (auto i : irr)
            for (auto f : c.hom(i, b)) arrows.push_back(f);
        if (!t.is_covering(generated_sieve(c, b, arrows))) return false;
    }
    return true;
}

FullSubcategory level_subcategory(const Level& l) {
    if (!is_rigid(l.topology())) throw Error(ErrorCode::NotRigid, "level topology is not rigid");
    return FullSubcategory(l.category(), irreducible_objects(l.topology()));
}

EpsilonReport level_epsilon(const CategoryPtr& c, std::size_t max_morphisms) {
    require_pre_cohesive_site(*c);
    EpsilonReport r;
    const auto pc = pseudo_constant_ideal(c);
    const auto centre = centre_ideal(c);
    r.pseudo_constant_count = pc.size();
    r.centre_size = centre.size();
    r.pseudo_constants_idempotent = is_idempotent_ideal(pc);
    if (r.pseudo_constants_idempotent) {
        r.epsilon.emplace(pc);
    } else {
        r.found_by_enumeration = true;
        std::vector<MorphismIdeal> candidates;
        for (auto& i : enumerate_idempotent_ideals(c, max_morphisms))
            if (centre.members().is_subset_of(i.members()) && i.members().is_subset_of(pc.members()))
                candidates.push_back(std::move(i));
        for (const auto& i : candidates) {
            const bool maximal = std::ranges::none_of(candidates, [&](const MorphismIdeal& j) {
                return j.size() > i.size() && i.members().is_subset_of(j.members());
            });
            if (maximal) r.maximal_candidates.push_back(i);
        }
        if (r.maximal_candidates.size() == 1) {
            r.epsilon.emplace(r.maximal_candidates.front());
            r.maximal_candidates.clear();
        }
    }

    const auto figures = has_enough_little_figures(*c);
    r.enough_little_figures = figures.holds;
    r.uncovered_pseudo_constants = figures.uncovered;
    const auto c_bang = unique_point_objects(c);
    r.unique_point_objects = c_bang.objects();
    if (r.epsilon) {
        r.equals_centre = r.epsilon->ideal() == centre;
        r.irreducible_objects = irreducible_objects(r.epsilon->topology());
        r.rigid = is_rigid(r.epsilon->topology());
        r.presentation_matches = r.irreducible_objects == r.unique_point_objects &&
                                 ideal_of_full_subcategory(c_bang) == r.epsilon->ideal();
    }
    return r;
}

}  // namespace cohesion
