#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohesion/levels.hpp"
#include "cohesion/presheaf.hpp"

namespace cohesion {

inline constexpr const char* kAufhebungSemantics = "witness-bounded: necessary-condition filter, not a proof";

// upper is above lower and, for every witness, the lower-skeleton is a
// sheaf for upper's topology. Throws BaseMismatch, NotRigid.
bool is_way_above(const Level& lower, const Level& upper, const std::vector<Presheaf>& witnesses);

// Representables, Ω and the codiscrete presheaf on 2. Throws NoTerminal.
std::vector<Presheaf> default_witnesses(const CategoryPtr& c);

struct SearchReport {
    std::string semantics = kAufhebungSemantics;
    std::size_t levels_considered = 0;
    std::size_t witness_count = 0;
    std::vector<Level> candidates;  // levels above l passing the filter
    std::vector<Level> minimal;
};

// Throws TooLarge.
SearchReport aufhebung_search(const Level& l, const std::vector<Presheaf>& witnesses,
                              std::size_t bound = kDefaultMaxMorphisms);

}  // namespace cohesion
