#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohesion/fincat.hpp"
#include "cohesion/morphism_set.hpp"

namespace cohesion {

inline constexpr std::size_t kDefaultMaxMorphisms = 24;
// Enumerators work on 64-bit masks.
inline constexpr std::size_t kHardMaxMorphisms = 64;

// Two-sided ideal of morphisms.
class MorphismIdeal {
public:
    // Throws NotAnIdeal unless members is closed under pre- and post-composition.
    MorphismIdeal(CategoryPtr category, MorphismSet members);

    [[nodiscard]] const CategoryPtr& category() const { return category_; }
    [[nodiscard]] const MorphismSet& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool contains(MorphismId f) const { return members_.contains(f); }

    friend bool operator==(const MorphismIdeal& a, const MorphismIdeal& b) { return a.members_ == b.members_; }

private:
    CategoryPtr category_;
    MorphismSet members_;
};

bool is_ideal(const FinCategory& c, const MorphismSet& s);

// { g∘h : g, h ∈ s composable }
MorphismSet composite_set(const FinCategory& c, const MorphismSet& s);

MorphismIdeal ideal_generated_by(const CategoryPtr& c, const MorphismSet& seed);
bool is_idempotent_ideal(const MorphismIdeal& i);

// Throws NoTerminal.
MorphismIdeal pseudo_constant_ideal(const CategoryPtr& c);
// Ideal generated by the points; the level of the centre. Throws NoTerminal.
MorphismIdeal centre_ideal(const CategoryPtr& c);
// Morphisms factoring through an object of the subcategory.
MorphismIdeal ideal_of_full_subcategory(const FullSubcategory& d);

// Largest idempotent ideal inside i: the limit of i ⊇ i∘i ⊇ (i∘i)∘(i∘i) ⊇ ...
MorphismIdeal largest_idempotent_subideal(const MorphismIdeal& i);

// All ideals / all idempotent ideals, sorted by cardinality then
// lexicographically. Throws TooLarge above max_morphisms.
std::vector<MorphismIdeal> enumerate_ideals(const CategoryPtr& c, std::size_t max_morphisms = kDefaultMaxMorphisms);
std::vector<MorphismIdeal> enumerate_idempotent_ideals(const CategoryPtr& c,
                                                       std::size_t max_morphisms = kDefaultMaxMorphisms);

struct Sieve {
    ObjectId target;
    MorphismSet members;

    friend bool operator==(const Sieve&, const Sieve&) = default;
};

bool is_sieve(const FinCategory& c, ObjectId target, const MorphismSet& members);
Sieve maximal_sieve(const FinCategory& c, ObjectId target);
// f*S = { h | f∘h ∈ S }
Sieve pullback(const FinCategory& c, const Sieve& s, MorphismId f);
// Least sieve on target containing arrows (each must have cod target).
Sieve generated_sieve(const FinCategory& c, ObjectId target, const std::vector<MorphismId>& arrows);
// Every sieve on target, ordered like MorphismSet. Throws TooLarge when
// Hom(-, target) has more than 64 elements.
std::vector<Sieve> sieves_on(const FinCategory& c, ObjectId target);

class GrothendieckTopology {
public:
    // covers[x] lists the covering sieves on x (deduplicated and sorted here).
    GrothendieckTopology(CategoryPtr category, std::vector<std::vector<MorphismSet>> covers);

    [[nodiscard]] const CategoryPtr& category() const { return category_; }
    [[nodiscard]] const std::vector<MorphismSet>& covers(ObjectId x) const { return covers_.at(x.index); }
    [[nodiscard]] bool is_covering(const Sieve& s) const;

    friend bool operator==(const GrothendieckTopology& a, const GrothendieckTopology& b) {
        return a.covers_ == b.covers_;
    }

private:
    CategoryPtr category_;
    std::vector<std::vector<MorphismSet>> covers_;
};

// Maximality, pullback stability and transitivity, checked over every sieve.
ValidationReport validate_topology(const GrothendieckTopology& t);

// Only maximal sieves cover.
GrothendieckTopology trivial_topology(const CategoryPtr& c);

// covers(C) = sieves containing every member of i with codomain C.
// Throws NotIdempotent.
GrothendieckTopology topology_of_ideal(const MorphismIdeal& i);

// An essential subtopos of the presheaf topos, keyed by its idempotent ideal.
class Level {
public:
    // Throws NotIdempotent.
    explicit Level(MorphismIdeal ideal);

    [[nodiscard]] const MorphismIdeal& ideal() const { return ideal_; }
    [[nodiscard]] const GrothendieckTopology& topology() const { return topology_; }
    [[nodiscard]] const CategoryPtr& category() const { return ideal_.category(); }

    friend bool operator==(const Level& a, const Level& b) { return a.ideal_ == b.ideal_; }

private:
    MorphismIdeal ideal_;
    GrothendieckTopology topology_;
};

Level level_of_full_subcategory(const FullSubcategory& d);
Level top_level(const CategoryPtr& c);
Level bottom_level(const CategoryPtr& c);
Level centre_level(const CategoryPtr& c);

// a.ideal ⊇ b.ideal, cross-checked against covers(a) ⊆ covers(b).
// Throws BaseMismatch.
bool is_above(const Level& a, const Level& b);

// Every covering sieve contains all points of its object; compared with the
// ideal form "ideal contains every point". Throws NoTerminal.
bool is_above_centre(const Level& l);

// The sieve of pseudo-constants into each object covers; compared with the
// ideal form "ideal ⊆ pseudo-constants". Throws NotPreCohesiveSite,
// NotAboveCentre.
bool is_subquality_level(const Level& l);

std::vector<ObjectId> irreducible_objects(const GrothendieckTopology& t);
bool is_rigid(const GrothendieckTopology& t);

// Full subcategory of irreducible objects; for a rigid topology its
// presheaves are the sheaves of the level. Throws NotRigid.
FullSubcategory level_subcategory(const Level& l);

struct EpsilonReport {
    bool pseudo_constants_idempotent = false;
    std::size_t pseudo_constant_count = 0;
    std::size_t centre_size = 0;
    std::optional<Level> epsilon;
    std::vector<MorphismIdeal> maximal_candidates;  // when no largest candidate exists
    bool found_by_enumeration = false;
    bool equals_centre = false;
    bool enough_little_figures = false;
    std::vector<MorphismId> uncovered_pseudo_constants;
    std::vector<ObjectId> unique_point_objects;  // C_!
    std::vector<ObjectId> irreducible_objects;   // of the ε topology
    bool rigid = false;
    // C_! equals the irreducibles of ε and ε is the ideal of maps through C_!.
    bool presentation_matches = false;
};

// Throws NotPreCohesiveSite, TooLarge.
EpsilonReport level_epsilon(const CategoryPtr& c, std::size_t max_morphisms = kDefaultMaxMorphisms);

}  // namespace cohesion
