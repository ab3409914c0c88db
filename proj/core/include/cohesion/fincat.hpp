#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohesion/ids.hpp"
#include "cohesion/morphism_set.hpp"

namespace cohesion {

struct MorphismInfo {
    std::string name;
    ObjectId dom;
    ObjectId cod;

    friend bool operator==(const MorphismInfo&, const MorphismInfo&) = default;
};

// A finite category given by an explicit composition table.
//
// The constructor only checks that the table is well-shaped (ids in range,
// unique names, one identity per object). Whether the table actually is a
// category is the job of validate_category(); every other operation in the
// library assumes a valid category.
class FinCategory {
public:
    // compose[g * n + f] holds g∘f, or nullopt where no entry was given.
    FinCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                std::vector<MorphismId> identities, std::vector<std::optional<MorphismId>> compose);

    [[nodiscard]] std::size_t object_count() const { return objects_.size(); }
    [[nodiscard]] std::size_t morphism_count() const { return morphisms_.size(); }
    [[nodiscard]] std::vector<ObjectId> object_ids() const;
    [[nodiscard]] std::vector<MorphismId> morphism_ids() const;

    [[nodiscard]] const std::string& name(ObjectId x) const { return objects_.at(x.index); }
    [[nodiscard]] const std::string& name(MorphismId f) const { return morphisms_.at(f.index).name; }
    [[nodiscard]] ObjectId dom(MorphismId f) const { return morphisms_.at(f.index).dom; }
    [[nodiscard]] ObjectId cod(MorphismId f) const { return morphisms_.at(f.index).cod; }
    [[nodiscard]] MorphismId identity(ObjectId x) const { return identities_.at(x.index); }
    [[nodiscard]] bool is_identity(MorphismId f) const { return identity(dom(f)) == f; }

    [[nodiscard]] std::optional<MorphismId> try_compose(MorphismId g, MorphismId f) const {
        return compose_[g.index * morphisms_.size() + f.index];
    }
    // g∘f; throws InvalidInput when dom(g) != cod(f) or the entry is missing.
    [[nodiscard]] MorphismId compose(MorphismId g, MorphismId f) const;

    [[nodiscard]] const std::vector<MorphismId>& hom(ObjectId from, ObjectId to) const {
        return hom_[from.index * objects_.size() + to.index];
    }
    [[nodiscard]] const std::vector<MorphismId>& into(ObjectId x) const { return into_[x.index]; }
    [[nodiscard]] const std::vector<MorphismId>& out_of(ObjectId x) const { return out_of_[x.index]; }

    [[nodiscard]] bool is_idempotent(MorphismId f) const;

    [[nodiscard]] std::optional<ObjectId> find_object(std::string_view name) const;
    [[nodiscard]] std::optional<MorphismId> find_morphism(std::string_view name) const;

    [[nodiscard]] MorphismSet empty_set() const { return MorphismSet(morphisms_.size()); }
    [[nodiscard]] MorphismSet all_morphisms() const { return MorphismSet::full(morphisms_.size()); }

    [[nodiscard]] const std::vector<std::string>& object_names() const { return objects_; }
    [[nodiscard]] const std::vector<MorphismInfo>& morphisms() const { return morphisms_; }
    [[nodiscard]] const std::vector<MorphismId>& identities() const { return identities_; }
    [[nodiscard]] const std::vector<std::optional<MorphismId>>& compose_table() const { return compose_; }

    // Same table with new names, e.g. for presenting a computed envelope.
    [[nodiscard]] FinCategory renamed(std::vector<std::string> object_names,
                                      std::vector<std::string> morphism_names) const;

    friend bool operator==(const FinCategory& a, const FinCategory& b) {
        return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
               a.compose_ == b.compose_;
    }

private:
    std::vector<std::string> objects_;
    std::vector<MorphismInfo> morphisms_;
    std::vector<MorphismId> identities_;
    std::vector<std::optional<MorphismId>> compose_;
    std::vector<std::vector<MorphismId>> hom_;
    std::vector<std::vector<MorphismId>> into_;
    std::vector<std::vector<MorphismId>> out_of_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

// Same structure (pointer identity short-circuits the table comparison).
bool same_category(const CategoryPtr& a, const CategoryPtr& b);

struct ValidationReport {
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

ValidationReport validate_category(const FinCategory& c);

struct TerminalObject {
    ObjectId object;                 // least id in the iso class
    std::vector<ObjectId> iso_class;  // every terminal object
};

std::optional<TerminalObject> terminal_object(const FinCategory& c);

// Terminal object or NoTerminal.
ObjectId require_terminal(const FinCategory& c);

// Maps 1 → x. Throws NoTerminal.
std::vector<MorphismId> points(const FinCategory& c, ObjectId x);

// Terminal object exists and every object has a point.
bool is_pre_cohesive_site(const FinCategory& c);
void require_pre_cohesive_site(const FinCategory& c);

bool is_pseudo_constant(const FinCategory& c, MorphismId f);

class FullSubcategory {
public:
    FullSubcategory(CategoryPtr parent, std::vector<ObjectId> objects);

    [[nodiscard]] const CategoryPtr& parent() const { return parent_; }
    // The subcategory as a category in its own right, ids renumbered densely.
    [[nodiscard]] const CategoryPtr& category() const { return category_; }
    [[nodiscard]] const std::vector<ObjectId>& objects() const { return objects_; }

    [[nodiscard]] bool contains(ObjectId parent_object) const { return to_sub_object_[parent_object.index].has_value(); }
    [[nodiscard]] ObjectId to_parent(ObjectId sub) const { return objects_.at(sub.index); }
    [[nodiscard]] MorphismId to_parent(MorphismId sub) const { return morphisms_.at(sub.index); }
    [[nodiscard]] std::optional<ObjectId> from_parent(ObjectId x) const { return to_sub_object_.at(x.index); }
    [[nodiscard]] std::optional<MorphismId> from_parent(MorphismId f) const { return to_sub_morphism_.at(f.index); }

private:
    CategoryPtr parent_;
    CategoryPtr category_;
    std::vector<ObjectId> objects_;
    std::vector<MorphismId> morphisms_;
    std::vector<std::optional<ObjectId>> to_sub_object_;
    std::vector<std::optional<MorphismId>> to_sub_morphism_;
};

// Objects with exactly one point (the subcategory C_!). Throws NoTerminal.
FullSubcategory unique_point_objects(const CategoryPtr& c);

struct FunctorWitness {
    CategoryPtr source;
    CategoryPtr target;
    std::vector<ObjectId> on_objects;
    std::vector<MorphismId> on_morphisms;
};

// Empty iff the witness preserves dom, cod, identities and composition.
ValidationReport validate_functor(const FunctorWitness& f);

struct KaroubiEnvelope {
    CategoryPtr category;
    FunctorWitness embedding;          // c → envelope, X ↦ (id_X)
    std::vector<MorphismId> idempotent;  // envelope object ↦ idempotent of c it splits
    std::vector<MorphismId> underlying;  // envelope morphism ↦ morphism of c
};

// Objects are idempotents e of c, Hom(e, e') = { f | e'∘f∘e = f }. With
// skeletal=true each iso class keeps only the idempotent of least id.
KaroubiEnvelope karoubi_envelope(const CategoryPtr& c, bool skeletal = true);

// Every idempotent e has r, s with r∘s = id and s∘r = e.
bool idempotents_split(const FinCategory& c);

struct LittleFiguresReport {
    bool holds = false;
    std::vector<MorphismId> uncovered;  // pseudo-constants with no factorization
};

// Every pseudo-constant factors through an object with exactly one point.
LittleFiguresReport has_enough_little_figures(const FinCategory& c);

}  // namespace cohesion
