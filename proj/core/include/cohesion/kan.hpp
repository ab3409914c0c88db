#pragma once

#include <string>
#include <vector>

#include "cohesion/fincat.hpp"
#include "cohesion/levels.hpp"
#include "cohesion/presheaf.hpp"

namespace cohesion {

// Kan extensions along the inclusion i of a full subcategory.

Presheaf restrict(const FullSubcategory& l, const Presheaf& x);
NaturalTransformation restrict(const FullSubcategory& l, const NaturalTransformation& t);

// Colimit formula: classes of (D, g: C → iD, v ∈ y(D)).
Presheaf left_kan(const FullSubcategory& l, const Presheaf& y);
NaturalTransformation left_kan(const FullSubcategory& l, const NaturalTransformation& t);

// Limit formula: matching families over the arrows iD → C.
Presheaf right_kan(const FullSubcategory& l, const Presheaf& y);
NaturalTransformation right_kan(const FullSubcategory& l, const NaturalTransformation& t);

// y → restrict(left_kan y)
NaturalTransformation left_kan_unit(const FullSubcategory& l, const Presheaf& y);
// left_kan(restrict x) → x
NaturalTransformation left_kan_counit(const FullSubcategory& l, const Presheaf& x);
// x → right_kan(restrict x)
NaturalTransformation right_kan_unit(const FullSubcategory& l, const Presheaf& x);
// restrict(right_kan y) → y
NaturalTransformation right_kan_counit(const FullSubcategory& l, const Presheaf& y);

struct AdjunctionWitness {
    std::string left;
    std::string right;
    std::vector<NaturalTransformation> unit;
    std::vector<NaturalTransformation> counit;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

// left_kan ⊣ restrict: units at each presheaf on the subcategory, counits at
// each presheaf on the parent, and both triangle identities.
AdjunctionWitness left_kan_adjunction(const FullSubcategory& l, const std::vector<Presheaf>& on_subcategory,
                                      const std::vector<Presheaf>& on_parent);
// restrict ⊣ right_kan, same layout.
AdjunctionWitness right_kan_adjunction(const FullSubcategory& l, const std::vector<Presheaf>& on_parent,
                                       const std::vector<Presheaf>& on_subcategory);

struct Skeleton {
    Presheaf presheaf;
    NaturalTransformation counit;  // skeleton → x
};

struct Coskeleton {
    Presheaf presheaf;
    NaturalTransformation unit;  // x → coskeleton
};

Skeleton skeleton(const FullSubcategory& l, const Presheaf& x);
Coskeleton coskeleton(const FullSubcategory& l, const Presheaf& x);
bool is_skeletal(const FullSubcategory& l, const Presheaf& x);
bool is_level_sheaf(const FullSubcategory& l, const Presheaf& x);

// For every cover S of every C, x(C) is in bijection with the matching
// families on S.
bool sheaf_check(const GrothendieckTopology& t, const Presheaf& x);

// The equivalence Psh(c) ≅ Psh(envelope): an idempotent e goes to the
// elements fixed by x(e).
Presheaf extend_to_karoubi(const KaroubiEnvelope& env, const Presheaf& x);

// right_kan ∘ restrict along the irreducible objects. Throws NotRigid.
Presheaf sheafify_rigid(const GrothendieckTopology& t, const Presheaf& x);

}  // namespace cohesion
