#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohesion/fincat.hpp"

namespace cohesion {

// A finite presheaf X: C^op → FinSet. Elements are string tags, unique per
// object and kept in sorted order; actions are stored by index.
class Presheaf {
public:
    // actions[f][i] is the index in X(dom f) of X(f) applied to element i of
    // X(cod f). Tags are sorted on construction (actions are permuted to
    // match). Throws InvalidInput on shape errors or duplicate tags.
    Presheaf(CategoryPtr category, std::vector<std::vector<std::string>> tags,
             std::vector<std::vector<std::size_t>> actions);

    [[nodiscard]] const CategoryPtr& category() const { return category_; }
    [[nodiscard]] std::size_t size(ObjectId x) const { return tags_.at(x.index).size(); }
    [[nodiscard]] std::size_t total_size() const;
    [[nodiscard]] std::size_t max_size() const;
    [[nodiscard]] const std::vector<std::string>& tags(ObjectId x) const { return tags_.at(x.index); }
    [[nodiscard]] const std::string& tag(ObjectId x, std::size_t i) const { return tags_.at(x.index).at(i); }
    [[nodiscard]] std::optional<std::size_t> find(ObjectId x, const std::string& tag) const;

    [[nodiscard]] const std::vector<std::size_t>& action(MorphismId f) const { return actions_.at(f.index); }
    [[nodiscard]] std::size_t act(MorphismId f, std::size_t element) const { return actions_.at(f.index).at(element); }

    [[nodiscard]] const std::vector<std::vector<std::string>>& all_tags() const { return tags_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& all_actions() const { return actions_; }

    friend bool operator==(const Presheaf& a, const Presheaf& b) {
        return same_category(a.category_, b.category_) && a.tags_ == b.tags_ && a.actions_ == b.actions_;
    }

private:
    CategoryPtr category_;
    std::vector<std::vector<std::string>> tags_;
    std::vector<std::vector<std::size_t>> actions_;
};

// Empty iff X(id) = id and X(g∘f) = X(f)∘X(g).
ValidationReport validate_presheaf(const Presheaf& x);

Presheaf representable(const CategoryPtr& c, ObjectId x);

class NaturalTransformation {
public:
    // components[x][i] = image in Y(x) of element i of X(x). Shape-checked;
    // naturality is checked by validate_natural_transformation.
    NaturalTransformation(Presheaf source, Presheaf target, std::vector<std::vector<std::size_t>> components);

    [[nodiscard]] const Presheaf& source() const { return source_; }
    [[nodiscard]] const Presheaf& target() const { return target_; }
    [[nodiscard]] const std::vector<std::size_t>& component(ObjectId x) const { return components_.at(x.index); }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& components() const { return components_; }

    friend bool operator==(const NaturalTransformation&, const NaturalTransformation&) = default;

private:
    Presheaf source_;
    Presheaf target_;
    std::vector<std::vector<std::size_t>> components_;
};

ValidationReport validate_natural_transformation(const NaturalTransformation& t);
NaturalTransformation identity_transformation(const Presheaf& x);
// beta ∘ alpha; throws InvalidInput unless alpha.target == beta.source.
NaturalTransformation compose(const NaturalTransformation& beta, const NaturalTransformation& alpha);
bool is_monic(const NaturalTransformation& t);
bool is_isomorphism(const NaturalTransformation& t);

// Every natural transformation X → Y, in lexicographic component order.
std::vector<NaturalTransformation> natural_transformations(const Presheaf& x, const Presheaf& y);
std::size_t count_natural_transformations(const Presheaf& x, const Presheaf& y);

// Some isomorphism X ≅ Y, if one exists.
std::optional<NaturalTransformation> find_isomorphism(const Presheaf& x, const Presheaf& y);

// Subpresheaves of X (subsets closed under every action).
std::size_t count_subpresheaves(const Presheaf& x);

}  // namespace cohesion
