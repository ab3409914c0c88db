#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohesion/algfin.hpp"
#include "cohesion/fincat.hpp"
#include "cohesion/levels.hpp"
#include "cohesion/presheaf.hpp"

namespace cohesion {

using Json = nlohmann::json;

// Readers throw InvalidInput on malformed documents. Category tables must be
// complete: every composable pair appears exactly once.

FinCategory category_from_json(const Json& j);
Json category_to_json(const FinCategory& c);

// The "category" member is a fixture name, a path (relative to base_dir) or
// an inline category document. Actions of identities may be omitted.
Presheaf presheaf_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json presheaf_to_json(const Presheaf& x, const Json& category_ref);

// Rationals are strings "p/q" or "p"; JSON integers are also accepted.
StructAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const StructAlgebra& a);

// A list of morphism names. Throws NotAnIdeal when the set is not an ideal.
MorphismIdeal ideal_from_json(const CategoryPtr& c, const Json& j);
Json ideal_to_json(const MorphismIdeal& i);

// Top-level members one per line, arrays one element per line; keys sorted.
std::string format_document(const Json& j);

Json read_json_file(const std::filesystem::path& path);
FinCategory load_category_file(const std::filesystem::path& path);
Presheaf load_presheaf_file(const std::filesystem::path& path);
StructAlgebra load_algebra_file(const std::filesystem::path& path);
MorphismIdeal load_ideal_file(const CategoryPtr& c, const std::filesystem::path& path);

// COHESION_LAB_FIXTURE_DIR from the environment, else the source tree's
// fixtures/ directory.
std::filesystem::path fixture_dir();
const std::vector<std::string>& fixture_names();
bool is_category_fixture(std::string_view name);
bool is_algebra_fixture(std::string_view name);

using Fixture = std::variant<FinCategory, StructAlgebra>;

// Loaded and validated. Throws UnknownFixture.
Fixture load_fixture(std::string_view name);
FinCategory load_category_fixture(std::string_view name);
StructAlgebra load_algebra_fixture(std::string_view name);

}  // namespace cohesion
