#include <random>

#include "build.hpp"
#include "concrete.hpp"
#include "doctest.h"
#include "presheaf_oracles.hpp"
#include "random_presheaf.hpp"

#include "cohesion/cohesion.hpp"
#include "cohesion/error.hpp"
#include "cohesion/presheaf.hpp"

using namespace cohesion;
using namespace testsupport;

namespace {

ObjectId obj(const FinCategory& c, std::string_view name) { return *c.find_object(name); }

Presheaf edge_graph(const CategoryPtr& d) {
    return make_presheaf(d, {{"0", {"u", "v"}}, {"1", {"lu", "lv", "a"}}},
                         {{"d0", {{"lu", "u"}, {"lv", "v"}, {"a", "u"}}},
                          {"d1", {{"lu", "u"}, {"lv", "v"}, {"a", "v"}}},
                          {"s", {{"u", "lu"}, {"v", "lv"}}},
                          {"e0", {{"lu", "lu"}, {"lv", "lv"}, {"a", "lu"}}},
                          {"e1", {{"lu", "lu"}, {"lv", "lv"}, {"a", "lv"}}}});
}

Presheaf discrete_graph(const CategoryPtr& d) {
    return make_presheaf(d, {{"0", {"u", "v"}}, {"1", {"lu", "lv"}}},
                         {{"d0", {{"lu", "u"}, {"lv", "v"}}},
                          {"d1", {{"lu", "u"}, {"lv", "v"}}},
                          {"s", {{"u", "lu"}, {"v", "lv"}}},
                          {"e0", {{"lu", "lu"}, {"lv", "lv"}}},
                          {"e1", {{"lu", "lu"}, {"lv", "lv"}}}});
}

// An edge e from n to m whose preparation is a loop p at n.
Presheaf prepared_edge(const CategoryPtr& m) {
    return make_presheaf(m, {{"G", {"e", "m", "n", "p"}}},
                         {{"alpha", {{"e", "p"}, {"m", "m"}, {"n", "n"}, {"p", "p"}}},
                          {"bot", {{"e", "n"}, {"m", "m"}, {"n", "n"}, {"p", "n"}}},
                          {"top", {{"e", "m"}, {"m", "m"}, {"n", "n"}, {"p", "n"}}}});
}

std::vector<CategoryPtr> fixtures() {
    return {share(delta1()), share(chain3()), share(graphic_monoid()),
            karoubi_envelope(share(graphic_monoid())).category, share(terminal_category())};
}

}  // namespace

TEST_CASE("representables are presheaves") {
    for (auto c : fixtures())
        for (auto x : c->object_ids()) CHECK(validate_presheaf(representable(c, x)).ok());
    auto d = share(delta1());
    auto edge = representable(d, obj(*d, "1"));
    CHECK(edge.size(obj(*d, "0")) == 2);
    CHECK(edge.size(obj(*d, "1")) == 3);
    auto point = representable(d, obj(*d, "0"));
    CHECK(point.total_size() == 2);
    auto t = share(terminal_category());
    CHECK(representable(t, ObjectId(0)).total_size() == 1);
}

TEST_CASE("validate_presheaf names broken composition") {
    auto d = share(delta1());
    auto bad = make_presheaf(d, {{"0", {"u", "v"}}, {"1", {"lu", "lv"}}},
                             {{"d0", {{"lu", "u"}, {"lv", "v"}}},
                              {"d1", {{"lu", "u"}, {"lv", "v"}}},
                              {"s", {{"u", "lv"}, {"v", "lu"}}},
                              {"e0", {{"lu", "lu"}, {"lv", "lv"}}},
                              {"e1", {{"lu", "lu"}, {"lv", "lv"}}}});
    auto report = validate_presheaf(bad);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("∘") != std::string::npos);
    CHECK(validate_presheaf(edge_graph(d)).ok());
    CHECK(validate_presheaf(prepared_edge(share(graphic_monoid()))).ok());
}

TEST_CASE("presheaf construction sorts tags and rejects bad shapes") {
    auto d = share(delta1());
    auto g = edge_graph(d);
    CHECK(g.tags(obj(*d, "1")) == std::vector<std::string>{"a", "lu", "lv"});
    CHECK(g.tag(obj(*d, "0"), g.act(*d->find_morphism("d1"), *g.find(obj(*d, "1"), "a"))) == "v");
    auto t = share(terminal_category());
    CHECK_THROWS_AS(Presheaf(t, {{"u", "u"}}, {{0, 1}}), Error);
    CHECK_THROWS_AS(Presheaf(t, {{"u", "v"}}, {{0, 2}}), Error);
    CHECK_THROWS_AS(Presheaf(d, {{"u"}}, {}), Error);
}

TEST_CASE("components") {
    auto d = share(delta1());
    CHECK(pi0(edge_graph(d)).count() == 1);
    CHECK(pi0(discrete_graph(d)).count() == 2);
    CHECK(pi0(constant_presheaf(d, {})).count() == 0);
    std::mt19937 rng(7);
    for (auto c : fixtures())
        for (int k = 0; k < 10; ++k) {
            auto x = random_presheaf(c, rng, 3);
            CHECK(validate_presheaf(x).ok());
            CHECK(pi0(x).count() == bf_component_count(x));
        }
}

TEST_CASE("global sections") {
    auto d = share(delta1());
    CHECK(global_sections(representable(d, obj(*d, "1"))).size() == 2);
    CHECK(global_sections(constant_presheaf(d, {"*"})).size() == 1);
    for (auto c : fixtures()) {
        if (!terminal_object(*c)) {
            CHECK_THROWS_AS(global_sections(representable(c, ObjectId(0))), Error);
            continue;
        }
        for (auto x : c->object_ids())
            CHECK(global_sections(representable(c, x)).size() == points(*c, x).size());
        // Evaluation at the terminal agrees with the limit Hom(1, X).
        std::mt19937 rng(11);
        const auto one = constant_presheaf(c, {"*"});
        for (int k = 0; k < 5; ++k) {
            auto x = random_presheaf(c, rng, 3);
            CHECK(global_sections(x).size() == count_natural_transformations(one, x));
        }
    }
}

TEST_CASE("constant and codiscrete presheaves") {
    auto d = share(delta1());
    CHECK(constant_presheaf(d, {}).total_size() == 0);
    auto two = constant_presheaf(d, standard_set(2));
    CHECK(two.size(obj(*d, "0")) == 2);
    CHECK(two.size(obj(*d, "1")) == 2);
    auto cod = codiscrete(d, standard_set(2));
    CHECK(validate_presheaf(cod).ok());
    CHECK(cod.size(obj(*d, "0")) == 2);
    CHECK(cod.size(obj(*d, "1")) == 4);
    auto one = codiscrete(d, {"*"});
    CHECK(one.total_size() == 2);
    auto t = share(terminal_category());
    CHECK(codiscrete(t, standard_set(3)).size(ObjectId(0)) == 3);
    CHECK_THROWS_AS(codiscrete(share(graphic_monoid()), standard_set(2)), Error);
}

TEST_CASE("phi and the Nullstellensatz") {
    auto d = share(delta1());
    auto p2 = phi(d, standard_set(2));
    CHECK(validate_natural_transformation(p2).ok());
    CHECK(is_monic(p2));
    CHECK(p2.component(obj(*d, "1")).size() == 2);
    CHECK(p2.target().size(obj(*d, "1")) == 4);
    CHECK(is_isomorphism(phi(d, {"*"})));
    CHECK(phi(d, {}).source().total_size() == 0);

    auto k = karoubi_envelope(share(graphic_monoid())).category;
    CHECK(is_nullstellensatz(d));
    CHECK(is_nullstellensatz(k));
    CHECK(is_nullstellensatz(k, {3}));
    CHECK_THROWS_AS(is_nullstellensatz(share(chain3())), Error);
    for (auto c : {d, k})
        for (std::size_t n = 0; n <= 4; ++n) CHECK(validate_natural_transformation(phi(c, standard_set(n))).ok());
}

TEST_CASE("natural transformations agree with exhaustive search") {
    std::mt19937 rng(3);
    for (auto c : fixtures())
        for (int k = 0; k < 6; ++k) {
            auto x = random_presheaf(c, rng, 3);
            auto y = random_presheaf(c, rng, 3);
            std::size_t oracle = 0;
            try {
                oracle = bf_count_transformations(x, y);
            } catch (const std::length_error&) {
                continue;
            }
            CHECK(count_natural_transformations(x, y) == oracle);
            auto all = natural_transformations(x, y);
            CHECK(all.size() == oracle);
            for (const auto& t : all) CHECK(validate_natural_transformation(t).ok());
        }
}

TEST_CASE("composition and isomorphisms") {
    auto d = share(delta1());
    auto g = edge_graph(d);
    auto id = identity_transformation(g);
    CHECK(compose(id, id) == id);
    CHECK(is_isomorphism(id));
    auto iso = find_isomorphism(g, edge_graph(d));
    REQUIRE(iso);
    CHECK(is_isomorphism(*iso));
    CHECK_FALSE(find_isomorphism(g, discrete_graph(d)));
    auto maps = natural_transformations(discrete_graph(d), g);
    REQUIRE_FALSE(maps.empty());
    CHECK_THROWS_AS(compose(maps.front(), maps.front()), Error);
}

TEST_CASE("omega") {
    auto t = share(terminal_category());
    CHECK(omega(t).total_size() == 2);
    CHECK(pi0_omega(t) == 2);
    auto d = share(delta1());
    auto od = omega(d);
    CHECK(validate_presheaf(od).ok());
    CHECK(od.size(obj(*d, "0")) == 2);
    auto ch = share(chain3());
    CHECK(omega(ch).size(obj(*ch, "1")) == 4);
    CHECK(pi0_omega(d) == 1);
    auto k = karoubi_envelope(share(graphic_monoid())).category;
    CHECK(pi0_omega(k) == 1);
    CHECK(validate_presheaf(omega(k)).ok());
}

TEST_CASE("omega classifies subpresheaves") {
    std::mt19937 rng(5);
    for (auto c : fixtures()) {
        const auto o = omega(c);
        for (int k = 0; k < 8; ++k) {
            auto x = random_presheaf(c, rng, 3);
            const auto subs = count_subpresheaves(x);
            CHECK(subs == bf_count_subpresheaves(x));
            CHECK(subs == count_natural_transformations(x, o));
        }
    }
}
