#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohesion/fincat.hpp"
#include "cohesion/levels.hpp"
#include "cohesion/presheaf.hpp"

namespace cohesion {

// Connected components of the category of elements.
struct Components {
    std::vector<std::pair<ObjectId, std::size_t>> representatives;  // least element of each component
    std::vector<std::vector<std::size_t>> assignment;               // per object, per element

    [[nodiscard]] std::size_t count() const { return representatives.size(); }
};

Components pi0(const Presheaf& x);

// Tags of x at the terminal object. Throws NoTerminal.
std::vector<std::string> global_sections(const Presheaf& x);

// {"0", ..., "n-1"}
std::vector<std::string> standard_set(std::size_t n);

Presheaf constant_presheaf(const CategoryPtr& c, const std::vector<std::string>& a);
// Functions points(C) → A. Throws NoTerminal.
Presheaf codiscrete(const CategoryPtr& c, const std::vector<std::string>& a);
// Constant functions: constant_presheaf(a) → codiscrete(a). Throws NoTerminal.
NaturalTransformation phi(const CategoryPtr& c, const std::vector<std::string>& a);

// φ monic for each tested size. Throws NotPreCohesiveSite.
bool is_nullstellensatz(const CategoryPtr& c, const std::vector<std::size_t>& sizes = {0, 1, 2});

// φ restricted to the level objects is invertible for each tested size.
// Throws NotAboveCentre, NotRigid.
bool is_quality_type_level(const Level& l, const std::vector<std::size_t>& sizes = {0, 1, 2, 3});

// Sieves with pullback.
Presheaf omega(const CategoryPtr& c);
std::size_t pi0_omega(const CategoryPtr& c);

// pi0 of the skeleton counit is a bijection. Throws NotAboveCentre when l
// misses the terminal object.
bool check_way_above(const FullSubcategory& l, const Presheaf& x);
// Same test for the level subcategory. Throws NotAboveCentre, NotRigid.
bool check_way_above(const Level& l, const Presheaf& x);

// f = p∘j for a rigid level j above the centre, with f_! = p_!∘j_!,
// f^* = j^*∘p^*, f_* = p_*∘j_* and f^! = j^*∘p^!. p_!∘j_* is also computed
// and compared with f_!. Level objects are presheaves on the irreducibles.
struct FourFunctorsReport {
    struct OnObject {
        std::size_t shriek = 0;    // |f_! Y| = |p_! j_! Y|
        std::size_t shriek_direct = 0;  // |p_! j_* Y|
        std::size_t sections = 0;  // |f_* Y|
        bool shriek_matches_pi0 = false;
        bool shriek_forms_agree = false;
        bool sections_match_terminal = false;
    };
    struct OnSet {
        std::size_t size = 0;
        Presheaf inverse_image;  // f^* A
        Presheaf codiscrete;     // f^! A
        bool phi_invertible = false;
        bool sections_roundtrip = false;  // f_* f^* A ≅ A
    };
    std::vector<ObjectId> level_objects;
    std::vector<OnObject> objects;
    std::vector<OnSet> sets;
    bool adjunctions_hold = false;  // hom counts along f_! ⊣ f^* ⊣ f_* ⊣ f^!
    bool quality_type = false;      // φ invertible on every tested set
};

FourFunctorsReport level_four_functors(const Level& l, const std::vector<Presheaf>& level_inputs,
                                       const std::vector<std::size_t>& set_sizes = {0, 1, 2, 3});

}  // namespace cohesion
