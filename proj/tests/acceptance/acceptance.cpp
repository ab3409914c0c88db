// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebras.hpp"
#include "concrete.hpp"
#include "oracles.hpp"
#include "presheaf_oracles.hpp"
#include "random_presheaf.hpp"

#include "cohesion/algfin.hpp"
#include "cohesion/aufhebung.hpp"
#include "cohesion/cohesion.hpp"
#include "cohesion/io.hpp"
#include "cohesion/kan.hpp"
#include "cohesion/levels.hpp"

using namespace cohesion;
using namespace testsupport;

namespace {

// Collects failed conditions with a short description each.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) failures_.push_back(what);
    }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] std::size_t total() const { return total_; }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t total_ = 0;
    std::vector<std::string> failures_;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0: no limit
    std::function<void(Checks&)> body;
};

std::vector<std::string> names(const FinCategory& c, const std::vector<ObjectId>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(c.name(x));
    return out;
}

MorphismSet mask_set(std::size_t n, std::uint64_t mask) {
    MorphismSet s(n);
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) s.insert(MorphismId(i));
    return s;
}

CategoryPtr karoubi_m() {
    static const CategoryPtr k = share(load_category_fixture("karoubi_m"));
    return k;
}

CategoryPtr delta() {
    static const CategoryPtr d = share(load_category_fixture("delta1"));
    return d;
}

// Fixture presheaves over c with at most max elements per object.
std::vector<Presheaf> fixture_presheaves(const CategoryPtr& c, std::size_t max, std::uint32_t seed) {
    std::vector<Presheaf> all;
    for (auto x : c->object_ids()) all.push_back(representable(c, x));
    all.push_back(omega(c));
    for (std::size_t n = 0; n <= 2; ++n) all.push_back(constant_presheaf(c, standard_set(n)));
    if (terminal_object(*c)) all.push_back(codiscrete(c, standard_set(2)));
    std::mt19937 rng(seed);
    for (int i = 0; i < 6; ++i) all.push_back(random_presheaf(c, rng, max));
    std::vector<Presheaf> out;
    for (auto& x : all)
        if (x.max_size() <= max) out.push_back(std::move(x));
    return out;
}

std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// 1. graphic monoid pipeline
void graphic_monoid_pipeline(Checks& ck) {
    const auto m = share(load_category_fixture("graphic_m"));
    const auto env = karoubi_envelope(m, true);
    ck.expect(env.category->object_count() == 3, "skeletal Karoubi envelope has 3 objects");
    const auto k = karoubi_m();
    std::vector<std::string> morphism_names;
    for (const auto& f : k->morphisms()) morphism_names.push_back(f.name);
    ck.expect(env.category->renamed(k->object_names(), morphism_names) == *k, "karoubi_m fixture is the envelope");

    const auto unique = unique_point_objects(k);
    ck.expect(names(*k, unique.objects()) == std::vector<std::string>{"D", "1"}, "C_! = {1, D}");

    const auto pc = pseudo_constant_ideal(k);
    ck.expect(pc.size() == 16 && k->morphism_count() == 17, "16 of 17 morphisms are pseudo-constant");
    std::vector<std::string> complement;
    for (auto f : k->morphism_ids()) {
        ck.expect(pc.contains(f) == bf_pseudo_constant(*k, f.index), "brute-force pseudo-constancy of " + k->name(f));
        if (!pc.contains(f)) complement.push_back(k->name(f));
    }
    ck.expect(complement == std::vector<std::string>{"id_G"}, "complement is {id_G}");

    const auto eps = level_epsilon(k);
    ck.expect(eps.epsilon && eps.epsilon->ideal() == pc, "level ε is the pseudo-constant ideal");
    ck.expect(!eps.equals_centre, "ε differs from the centre");
}

// 2. reflexive graphs
void reflexive_graphs(Checks& ck) {
    const auto d = delta();
    ck.expect(d->morphism_count() == 7, "Δ₁ has 7 morphisms");
    const auto pc = pseudo_constant_ideal(d);
    ck.expect(pc.size() == 6, "6 of 7 morphisms are pseudo-constant");
    for (auto f : d->morphism_ids())
        ck.expect(pc.contains(f) == bf_pseudo_constant(*d, f.index), "brute-force pseudo-constancy of " + d->name(f));
    const auto little = has_enough_little_figures(*d);
    ck.expect(little.holds, "enough little figures");
    for (auto f : d->morphism_ids())
        if (pc.contains(f))
            ck.expect(bf_factors_through_little_figure(*d, f.index), "brute-force little figure for " + d->name(f));
    const auto eps = level_epsilon(d);
    ck.expect(eps.equals_centre, "ε equals the centre");
    ck.expect(names(*d, eps.unique_point_objects) == std::vector<std::string>{"0"}, "C_! = {[0]}");
}

// 3. chain counterexample and the above-centre test
void chain_counterexample(Checks& ck) {
    const auto c = share(load_category_fixture("chain3"));
    const auto terminal = require_terminal(*c);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::vector<ObjectId> objs;
        for (std::size_t i = 0; i < 3; ++i)
            if (mask >> i & 1U) objs.push_back(ObjectId(i));
        const FullSubcategory sub(c, objs);
        const bool has_terminal = sub.contains(terminal);
        const bool above = is_above_centre(level_of_full_subcategory(sub));
        ck.expect(above == has_terminal, "subcategory mask " + std::to_string(mask));
    }
    const FullSubcategory low(c, {*c->find_object("0"), *c->find_object("h")});
    ck.expect(!is_above_centre(level_of_full_subcategory(low)), "{0, h} is not above the centre");
}

// 4. enumeration against the brute-force filter
void kelly_lawvere(Checks& ck) {
    for (const auto& c : {delta(), karoubi_m()}) {
        std::vector<MorphismSet> expected;
        for (auto mask : bf_idempotent_ideals(*c)) expected.push_back(mask_set(c->morphism_count(), mask));
        std::vector<MorphismSet> got;
        for (const auto& i : enumerate_idempotent_ideals(c)) got.push_back(i.members());
        std::ranges::sort(expected);
        std::ranges::sort(got);
        ck.expect(expected.size() >= 3, "brute force finds bottom, top and a proper level");
        ck.expect(got == expected, "idempotent ideals of a " + std::to_string(c->morphism_count()) +
                                       "-morphism fixture: " + std::to_string(got.size()) + " vs " +
                                       std::to_string(expected.size()));
    }
}

// 5. topology axioms and antitone order
void topology_order(Checks& ck) {
    for (const auto& c : {delta(), karoubi_m()}) {
        std::vector<Level> levels;
        for (const auto& i : enumerate_idempotent_ideals(c)) levels.emplace_back(i);
        for (const auto& l : levels) ck.expect(validate_topology(l.topology()).ok(), "Grothendieck axioms");
        for (const auto& a : levels)
            for (const auto& b : levels) {
                const bool ideal_inclusion = a.ideal().members().is_subset_of(b.ideal().members());
                bool covers_reversed = true;
                for (auto x : c->object_ids())
                    for (const auto& s : b.topology().covers(x))
                        covers_reversed = covers_reversed && a.topology().is_covering(Sieve{x, s});
                ck.expect(ideal_inclusion == covers_reversed, "I ⊆ J ⇔ covers(J) ⊆ covers(I)");
            }
    }
}

// 6. adjunctions
void adjunction_suite(Checks& ck) {
    const auto d = delta();
    const std::vector<FullSubcategory> subs{unique_point_objects(karoubi_m()), FullSubcategory(d, {*d->find_object("0")}),
                                            FullSubcategory(d, {*d->find_object("1")})};
    std::uint32_t seed = 100;
    for (const auto& l : subs) {
        const auto upper = fixture_presheaves(l.parent(), 4, seed++);
        const auto lower = fixture_presheaves(l.category(), 4, seed++);
        ck.expect(left_kan_adjunction(l, lower, upper).ok(), "left Kan ⊣ restriction triangle identities");
        ck.expect(right_kan_adjunction(l, upper, lower).ok(), "restriction ⊣ right Kan triangle identities");
    }
    for (const auto& c : {karoubi_m(), d}) {
        for (const auto& x : fixture_presheaves(c, 4, seed++)) {
            const auto components = pi0(x).count();
            const auto sections = global_sections(x).size();
            ck.expect(components == bf_component_count(x), "pi0 against depth-first search");
            for (std::size_t n = 0; n <= 3; ++n) {
                const auto a = standard_set(n);
                const auto to_const = count_natural_transformations(x, constant_presheaf(c, a));
                const auto from_const = count_natural_transformations(constant_presheaf(c, a), x);
                const auto to_codisc = count_natural_transformations(x, codiscrete(c, a));
                ck.expect(to_const == power(n, components), "Hom(X, ΔA) = Hom(π₀X, A)");
                ck.expect(from_const == power(sections, n), "Hom(ΔA, X) = Hom(A, ΓX)");
                ck.expect(to_codisc == power(n, sections), "Hom(X, ∇A) = Hom(ΓX, A)");
                try {
                    ck.expect(to_const == bf_count_transformations(x, constant_presheaf(c, a)), "exhaustive Hom(X, ΔA)");
                    ck.expect(to_codisc == bf_count_transformations(x, codiscrete(c, a)), "exhaustive Hom(X, ∇A)");
                } catch (const std::length_error&) {
                }
            }
        }
    }
}

// 7. φ conditions
void phi_conditions(Checks& ck) {
    ck.expect(is_nullstellensatz(delta()), "Nullstellensatz on reflexive graphs");
    ck.expect(is_nullstellensatz(karoubi_m()), "Nullstellensatz on Karoubi-M");
    const auto eps = *level_epsilon(karoubi_m()).epsilon;
    ck.expect(is_quality_type_level(eps, {0, 1, 2, 3}), "φ invertible on level ε for |A| ≤ 3");
    const auto report = level_four_functors(eps, {}, {0, 1, 2, 3});
    for (const auto& s : report.sets) ck.expect(s.phi_invertible, "four-functor φ for |A| = " + std::to_string(s.size));
    const auto sub = level_subcategory(eps);
    bool one_point_each = true;
    for (auto x : sub.objects()) one_point_each = one_point_each && points(*karoubi_m(), x).size() == 1;
    ck.expect(one_point_each == is_quality_type_level(eps), "quality type ⇔ irreducibles have one point");
}

// 8. Ω
void omega_suite(Checks& ck) {
    for (const auto& c : {delta(), karoubi_m()}) {
        ck.expect(pi0_omega(c) == 1, "p_!Ω = 1");
        const auto om = omega(c);
        for (const auto& x : fixture_presheaves(c, 3, 7)) {
            const auto subs = count_subpresheaves(x);
            ck.expect(subs == count_natural_transformations(x, om), "|Sub(X)| = |Hom(X, Ω)|");
            ck.expect(subs == bf_count_subpresheaves(x), "|Sub(X)| against exhaustive search");
        }
    }
    const auto k = karoubi_m();
    const auto eps = *level_epsilon(k).epsilon;
    ck.expect(!check_way_above(eps, representable(k, *k->find_object("G"))), "ε not way-above 0 at y(G)");
}

// 9. sheaf condition against the Kan test
void sheaf_cross_check(Checks& ck) {
    const auto k = karoubi_m();
    const auto eps = *level_epsilon(k).epsilon;
    const auto& t = eps.topology();
    const auto sub = level_subcategory(eps);
    std::mt19937 rng(20240915);
    std::size_t sheaves = 0;
    for (int i = 0; i < 50; ++i) {
        const auto x = random_presheaf(k, rng, 3);
        const bool s = sheaf_check(t, x);
        sheaves += s;
        ck.expect(s == is_level_sheaf(sub, x), "sheaf_check agrees with the coskeleton test");
        const auto a = sheafify_rigid(t, x);
        ck.expect(sheaf_check(t, a), "sheafification is a sheaf");
        ck.expect(find_isomorphism(sheafify_rigid(t, a), a).has_value(), "sheafification is idempotent");
    }
    ck.expect(sheaves > 0 && sheaves < 50, "sample contains sheaves and non-sheaves");
}

// 10. Aufhebung search
void aufhebung(Checks& ck) {
    const auto k = karoubi_m();
    const auto eps = *level_epsilon(k).epsilon;
    const auto r = aufhebung_search(eps, default_witnesses(k));
    ck.expect(r.minimal.size() == 1 && r.minimal.front() == top_level(k), "unique minimal candidate is the top level");
}

// 11. Weil algebras
void weil_suite(Checks& ck) {
    const auto dual = is_weil(load_algebra_fixture("weil_dual"));
    ck.expect(dual.is_weil && dual.nil_index == 2 && dual.rational_points.size() == 1 && dual.idempotent_count == 2,
              "dual numbers");
    const auto prod = is_weil(load_algebra_fixture("prod_qq"));
    ck.expect(!prod.is_local && prod.idempotent_count == 4 && prod.rational_points.size() == 2, "ℚ×ℚ");
    const auto root2 = is_weil(sqrt2_field());
    ck.expect(root2.is_local && !root2.is_weil && root2.rational_points.empty(), "ℚ[x]/(x²−2)");
    const auto plane_alg = load_algebra_fixture("weil_3dim");
    const auto plane = is_weil(plane_alg);
    ck.expect(plane.is_weil && plane_alg.dim() == 3, "ℚ[x,y]/(x²,xy,y²)");

    const std::vector<StructAlgebra> all{load_algebra_fixture("weil_dual"), load_algebra_fixture("prod_qq"), plane_alg,
                                         sqrt2_field(), three_factors(), cube_minus_x()};
    const std::vector<Rational> grid{-2, -1, 0, 1, 2};
    for (const auto& a : all) {
        const auto rad = radical(a);
        std::vector<std::size_t> idx(a.dim(), 0);
        Vector v(a.dim());
        while (true) {
            for (std::size_t i = 0; i < a.dim(); ++i) v[i] = grid[idx[i]];
            Vector p = v;
            bool nilpotent = false;
            for (std::size_t e = 0; e <= a.dim() && !nilpotent; ++e) {
                nilpotent = is_zero(p);
                p = product(a, p, v);
            }
            ck.expect(nilpotent == in_span(rad, v), "trace-form radical against direct nilpotency");
            std::size_t i = 0;
            while (i < a.dim() && ++idx[i] == grid.size()) idx[i++] = 0;
            if (i == a.dim()) break;
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "graphic-monoid pipeline", 1.0, graphic_monoid_pipeline},
        {2, "reflexive graphs", 1.0, reflexive_graphs},
        {3, "chain counterexample", 1.0, chain_counterexample},
        {4, "idempotent ideals against brute force", 30.0, kelly_lawvere},
        {5, "topology axioms and antitone order", 0.0, topology_order},
        {6, "adjunction suite", 0.0, adjunction_suite},
        {7, "φ conditions", 0.0, phi_conditions},
        {8, "Ω and way-above", 0.0, omega_suite},
        {9, "sheaf and Kan cross-check", 10.0, sheaf_cross_check},
        {10, "Aufhebung bounded search", 10.0, aufhebung},
        {11, "Weil suite", 1.0, weil_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Checks ck;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0.0 || seconds < c.limit_seconds;
        const bool pass = error.empty() && ck.ok() && in_time;
        failed += !pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title
             << "  [tolerance: exact; " << std::fixed << std::setprecision(3) << seconds << " s";
        if (c.limit_seconds > 0) line << " (limit " << std::setprecision(0) << c.limit_seconds << " s)";
        line << "; " << ck.total() << " checks]";
        std::cout << line.str() << "\n";
        if (!error.empty()) std::cout << "      exception: " << error << "\n";
        if (!in_time) std::cout << "      over the time limit\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(ck.failures().size(), 5); ++i)
            std::cout << "      failed: " << ck.failures()[i] << "\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
