#include "cohesion/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohesion/algfin.hpp"
#include "cohesion/aufhebung.hpp"
#include "cohesion/cohesion.hpp"
#include "cohesion/error.hpp"
#include "cohesion/io.hpp"
#include "cohesion/kan.hpp"
#include "cohesion/levels.hpp"

namespace cohesion::cli {
namespace {

namespace fs = std::filesystem;

struct Settings {
    std::string format = "text";
    std::size_t max_morphisms = kDefaultMaxMorphisms;
    bool skeletal = true;
    std::string level;
    std::vector<std::string> witnesses;
    std::vector<std::string> inputs;
};

struct Outcome {
    Json payload = Json::object();
    std::vector<std::string> text;
    std::vector<std::string> diagnostics;
    int exit_code = kSuccess;
};

[[noreturn]] void bad_input(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string braced(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
    return out + "}";
}

std::vector<std::string> names_of(const FinCategory& c, const MorphismSet& s) {
    std::vector<std::string> out;
    for (auto f : c.morphism_ids())
        if (s.contains(f)) out.push_back(c.name(f));
    return out;
}

std::vector<std::string> names_of(const FinCategory& c, const std::vector<ObjectId>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(c.name(x));
    return out;
}

std::size_t resolve_max_morphisms(std::optional<std::size_t> flag) {
    if (flag) return *flag;
    const char* env = std::getenv("COHESION_LAB_MAX_MORPHISMS");
    if (!env || !*env) return kDefaultMaxMorphisms;
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
        bad_input("COHESION_LAB_MAX_MORPHISMS must be a positive integer, got \"" + std::string(text) + "\"");
    return value;
}

fs::path resolve_input(const std::string& input, bool (*is_fixture)(std::string_view)) {
    if (fs::exists(input)) return input;
    if (is_fixture(input)) return fixture_dir() / (input + ".json");
    bad_input("no such file or fixture: " + input);
}

CategoryPtr load_category(const std::string& input, bool require_valid = true) {
    auto c = share(load_category_file(resolve_input(input, is_category_fixture)));
    if (require_valid) {
        const auto report = validate_category(*c);
        if (!report.ok()) bad_input(input + " is not a category: " + report.violations.front());
    }
    return c;
}

struct LoadedPresheaf {
    Presheaf presheaf;
    Json category_ref;
};

LoadedPresheaf load_presheaf(const std::string& input) {
    if (!fs::exists(input)) bad_input("no such file: " + input);
    const Json doc = read_json_file(input);
    return {presheaf_from_json(doc, fs::path(input).parent_path()), doc.at("category")};
}

Level resolve_level(const CategoryPtr& c, const std::string& value, std::size_t max_morphisms) {
    if (value.empty()) bad_input("--level is required");
    if (value == "top") return top_level(c);
    if (value == "bottom") return bottom_level(c);
    if (value == "centre") return centre_level(c);
    if (value == "epsilon") return *level_epsilon(c, max_morphisms).epsilon;
    if (!fs::exists(value)) bad_input("--level expects an ideal file or one of top, bottom, centre, epsilon; got " + value);
    return Level(load_ideal_file(c, value));
}

std::string level_label(const Level& l) {
    const auto& c = *l.category();
    if (l.ideal().size() == c.morphism_count()) return "top level";
    if (l.ideal().size() == 0) return "bottom level";
    if (terminal_object(c) && l.ideal() == centre_ideal(l.category())) return "centre";
    return "level of " + std::to_string(l.ideal().size()) + " morphisms";
}

Json level_json(const Level& l) {
    return {{"size", l.ideal().size()}, {"members", names_of(*l.category(), l.ideal().members())}};
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

// cat

Outcome cat_validate(const Settings& s) {
    const auto c = load_category(s.inputs.front(), false);
    const auto report = validate_category(*c);
    Outcome o;
    o.payload = {{"objects", c->object_count()},
                 {"morphisms", c->morphism_count()},
                 {"valid", report.ok()},
                 {"violations", report.violations}};
    o.text.push_back("category: " + std::to_string(c->object_count()) + " objects, " +
                     std::to_string(c->morphism_count()) + " morphisms");
    o.text.push_back("valid: " + yes_no(report.ok()));
    for (const auto& v : report.violations) o.text.push_back("  " + v);
    if (!report.ok()) {
        o.exit_code = kDomainError;
        o.diagnostics.push_back("composition table is not a category");
    }
    return o;
}

Outcome cat_karoubi(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    const auto env = karoubi_envelope(c, s.skeletal);
    const auto& e = *env.category;
    Outcome o;
    Json objects = Json::array();
    o.text.push_back(std::string("Karoubi envelope (") + (s.skeletal ? "skeletal" : "all idempotents") + "): " +
                     std::to_string(e.object_count()) + " objects, " + std::to_string(e.morphism_count()) +
                     " morphisms");
    for (auto x : e.object_ids()) {
        const auto& idem = c->name(env.idempotent[x.index]);
        objects.push_back({{"name", e.name(x)}, {"idempotent", idem}});
        o.text.push_back("  " + e.name(x) + " splits " + idem);
    }
    o.payload = {{"skeletal", s.skeletal},
                 {"objects", std::move(objects)},
                 {"embedding_valid", validate_functor(env.embedding).ok()},
                 {"category", category_to_json(e)}};
    return o;
}

Outcome cat_info(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    const auto terminal = terminal_object(*c);
    Outcome o;
    Json objects = Json::array();
    o.text.push_back("category: " + std::to_string(c->object_count()) + " objects, " +
                     std::to_string(c->morphism_count()) + " morphisms");
    o.text.push_back("terminal object: " + (terminal ? c->name(terminal->object) : std::string("none")));
    for (auto x : c->object_ids()) {
        Json entry = {{"name", c->name(x)}};
        if (terminal) {
            const auto n = points(*c, x).size();
            entry["points"] = n;
            o.text.push_back("  " + c->name(x) + ": " + std::to_string(n) + " points");
        } else {
            entry["points"] = nullptr;
        }
        objects.push_back(std::move(entry));
    }
    o.payload = {{"objects", std::move(objects)},
                 {"morphisms", c->morphism_count()},
                 {"terminal", terminal ? Json(c->name(terminal->object)) : Json(nullptr)},
                 {"pre_cohesive", is_pre_cohesive_site(*c)},
                 {"idempotents_split", idempotents_split(*c)}};
    o.text.push_back("pre-cohesive site: " + yes_no(is_pre_cohesive_site(*c)));
    o.text.push_back("idempotents split: " + yes_no(idempotents_split(*c)));
    if (terminal) {
        const auto pc = pseudo_constant_ideal(c);
        const auto little = has_enough_little_figures(*c);
        const auto unique = unique_point_objects(c);
        o.payload["pseudo_constants"] = pc.size();
        o.payload["unique_point_objects"] = names_of(*c, unique.objects());
        o.payload["enough_little_figures"] = little.holds;
        o.text.push_back("pseudo-constants: " + std::to_string(pc.size()) + " of " +
                         std::to_string(c->morphism_count()));
        o.text.push_back("unique-point objects: " + braced(names_of(*c, unique.objects())));
        o.text.push_back("enough little figures: " + yes_no(little.holds));
    }
    return o;
}

// levels

Outcome levels_enumerate(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    const auto ideals = enumerate_idempotent_ideals(c, s.max_morphisms);
    const bool has_terminal = terminal_object(*c).has_value();
    const bool pre = is_pre_cohesive_site(*c);
    std::optional<MorphismIdeal> centre, epsilon;
    if (has_terminal) centre = centre_ideal(c);
    if (pre) epsilon = level_epsilon(c, s.max_morphisms).epsilon->ideal();

    Outcome o;
    Json rows = Json::array();
    o.text.push_back("idempotent ideals (levels): " + std::to_string(ideals.size()));
    o.text.push_back("  #  size  above-centre  subquality  members");
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const Level l(ideals[i]);
        Json row = {{"index", i}, {"size", ideals[i].size()}, {"members", names_of(*c, ideals[i].members())}};
        std::optional<bool> above, subquality;
        if (has_terminal) above = is_above_centre(l);
        if (pre && *above) subquality = is_subquality_level(l);
        row["above_centre"] = above ? Json(*above) : Json(nullptr);
        row["subquality"] = subquality ? Json(*subquality) : Json(nullptr);
        std::vector<std::string> notes;
        if (ideals[i].size() == 0) notes.emplace_back("bottom");
        if (ideals[i].size() == c->morphism_count()) notes.emplace_back("top");
        if (centre && ideals[i] == *centre) notes.emplace_back("centre");
        if (epsilon && ideals[i] == *epsilon) notes.emplace_back("epsilon");
        row["notes"] = notes;
        rows.push_back(std::move(row));

        auto cell = [](const std::optional<bool>& b) { return b ? yes_no(*b) : std::string("-"); };
        std::ostringstream line;
        line << "  " << i << "  " << ideals[i].size() << "  " << cell(above) << "  " << cell(subquality) << "  "
             << braced(names_of(*c, ideals[i].members()));
        if (!notes.empty()) {
            line << "  [";
            for (std::size_t k = 0; k < notes.size(); ++k) line << (k ? ", " : "") << (notes[k] == "epsilon" ? "ε" : notes[k]);
            line << "]";
        }
        o.text.push_back(line.str());
    }
    o.payload = {{"count", ideals.size()}, {"levels", std::move(rows)}};
    return o;
}

Outcome levels_epsilon(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    const auto r = level_epsilon(c, s.max_morphisms);
    Outcome o;
    Json maximal = Json::array();
    for (const auto& m : r.maximal_candidates) maximal.push_back(names_of(*c, m.members()));
    o.payload = {{"pseudo_constants_idempotent", r.pseudo_constants_idempotent},
                 {"pseudo_constant_count", r.pseudo_constant_count},
                 {"morphism_count", c->morphism_count()},
                 {"centre_size", r.centre_size},
                 {"epsilon", r.epsilon ? level_json(*r.epsilon) : Json(nullptr)},
                 {"maximal_candidates", std::move(maximal)},
                 {"found_by_enumeration", r.found_by_enumeration},
                 {"equals_centre", r.equals_centre},
                 {"enough_little_figures", r.enough_little_figures},
                 {"uncovered_pseudo_constants", names_of(*c, [&] {
                      MorphismSet u = c->empty_set();
                      for (auto f : r.uncovered_pseudo_constants) u.insert(f);
                      return u;
                  }())},
                 {"unique_point_objects", names_of(*c, r.unique_point_objects)},
                 {"irreducible_objects", names_of(*c, r.irreducible_objects)},
                 {"rigid", r.rigid},
                 {"presentation_matches", r.presentation_matches}};
    o.text.push_back("pseudo-constants: " + std::to_string(r.pseudo_constant_count) + " of " +
                     std::to_string(c->morphism_count()) + " morphisms, idempotent ideal: " +
                     yes_no(r.pseudo_constants_idempotent));
    o.text.push_back("centre: " + std::to_string(r.centre_size) + " morphisms");
    if (r.epsilon)
        o.text.push_back("level ε: " + std::to_string(r.epsilon->ideal().size()) + " morphisms" +
                         (r.found_by_enumeration ? " (found by enumeration)" : ""));
    o.text.push_back("ε equals the centre: " + yes_no(r.equals_centre));
    o.text.push_back("unique-point objects C_!: " + braced(names_of(*c, r.unique_point_objects)));
    o.text.push_back("enough little figures: " + yes_no(r.enough_little_figures));
    o.text.push_back("irreducible objects of ε: " + braced(names_of(*c, r.irreducible_objects)) +
                     ", rigid: " + yes_no(r.rigid));
    o.text.push_back("ε is presented by C_!: " + yes_no(r.presentation_matches));
    return o;
}

Outcome levels_aufhebung(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    const auto level = resolve_level(c, s.level, s.max_morphisms);
    std::vector<Presheaf> witnesses;
    if (s.witnesses.empty()) {
        witnesses = default_witnesses(c);
    } else {
        for (const auto& w : s.witnesses) {
            auto x = load_presheaf(w).presheaf;
            if (!same_category(x.category(), c)) bad_input("witness " + w + " lives over a different category");
            witnesses.push_back(std::move(x));
        }
    }
    const auto r = aufhebung_search(level, witnesses, s.max_morphisms);
    const Level top = top_level(c);
    Json candidates = Json::array(), minimal = Json::array();
    for (const auto& l : r.candidates) candidates.push_back(level_json(l));
    for (const auto& l : r.minimal) minimal.push_back(level_json(l));
    Outcome o;
    o.payload = {{"semantics", r.semantics},
                 {"level", level_json(level)},
                 {"levels_considered", r.levels_considered},
                 {"witness_count", r.witness_count},
                 {"candidates", std::move(candidates)},
                 {"minimal", std::move(minimal)},
                 {"minimal_is_top", r.minimal.size() == 1 && r.minimal.front() == top}};
    o.text.push_back("Aufhebung search from the " + level_label(level) + " (" + r.semantics + ")");
    o.text.push_back("levels above considered: " + std::to_string(r.levels_considered) + ", witnesses: " +
                     std::to_string(r.witness_count));
    o.text.push_back("way-above candidates: " + std::to_string(r.candidates.size()));
    for (const auto& l : r.minimal)
        o.text.push_back("minimal: " + level_label(l) + " " + braced(names_of(*c, l.ideal().members())));
    if (r.minimal.empty()) o.text.push_back("minimal: none");
    return o;
}

// presheaf

Json category_ref_label(const Json& ref) { return ref.is_string() ? ref : Json("(inline)"); }

template <class F>
Outcome for_each_presheaf(const Settings& s, F&& body) {
    Outcome o;
    Json results = Json::array();
    for (const auto& input : s.inputs) {
        auto loaded = load_presheaf(input);
        Json entry = {{"file", input}, {"category", category_ref_label(loaded.category_ref)}};
        o.text.push_back(input + ":");
        body(loaded, entry, o);
        results.push_back(std::move(entry));
    }
    o.payload = {{"presheaves", std::move(results)}};
    return o;
}

Outcome presheaf_pi0(const Settings& s) {
    return for_each_presheaf(s, [](const LoadedPresheaf& in, Json& entry, Outcome& o) {
        const auto& x = in.presheaf;
        const auto& c = *x.category();
        const auto comps = pi0(x);
        Json reps = Json::array();
        for (const auto& [obj, i] : comps.representatives) reps.push_back({{"object", c.name(obj)}, {"element", x.tag(obj, i)}});
        entry["components"] = comps.count();
        entry["representatives"] = std::move(reps);
        o.text.push_back("  connected components (p_!): " + std::to_string(comps.count()));
    });
}

Outcome presheaf_skeleton(const Settings& s, bool co) {
    return for_each_presheaf(s, [&](const LoadedPresheaf& in, Json& entry, Outcome& o) {
        const auto& x = in.presheaf;
        const auto level = resolve_level(x.category(), s.level, s.max_morphisms);
        const auto sub = level_subcategory(level);
        const auto& c = *x.category();
        entry["level"] = level_json(level);
        entry["level_objects"] = names_of(c, sub.objects());
        if (!co) {
            const auto sk = skeleton(sub, x);
            entry["skeletal"] = is_isomorphism(sk.counit);
            entry["skeleton"] = presheaf_to_json(sk.presheaf, in.category_ref);
            o.text.push_back("  skeleton for the " + level_label(level) + ": " + std::to_string(sk.presheaf.total_size()) +
                             " elements (input has " + std::to_string(x.total_size()) + ")");
            o.text.push_back("  input is skeletal: " + yes_no(is_isomorphism(sk.counit)));
        } else {
            const auto cosk = coskeleton(sub, x);
            entry["sheaf"] = is_isomorphism(cosk.unit);
            entry["coskeleton"] = presheaf_to_json(cosk.presheaf, in.category_ref);
            o.text.push_back("  coskeleton for the " + level_label(level) + ": " +
                             std::to_string(cosk.presheaf.total_size()) + " elements (input has " +
                             std::to_string(x.total_size()) + ")");
            o.text.push_back("  input is a sheaf for the level: " + yes_no(is_isomorphism(cosk.unit)));
        }
    });
}

Outcome presheaf_sheaf_check(const Settings& s) {
    return for_each_presheaf(s, [&](const LoadedPresheaf& in, Json& entry, Outcome& o) {
        const auto& x = in.presheaf;
        const auto level = resolve_level(x.category(), s.level, s.max_morphisms);
        const bool sheaf = sheaf_check(level.topology(), x);
        entry["level"] = level_json(level);
        entry["sheaf"] = sheaf;
        o.text.push_back("  sheaf for the " + level_label(level) + ": " + yes_no(sheaf));
        if (is_rigid(level.topology())) {
            const bool via_kan = is_level_sheaf(level_subcategory(level), x);
            entry["rigid"] = true;
            entry["level_sheaf"] = via_kan;
            entry["agree"] = via_kan == sheaf;
            o.text.push_back("  coskeleton test on irreducibles agrees: " + yes_no(via_kan == sheaf));
        } else {
            entry["rigid"] = false;
            entry["level_sheaf"] = nullptr;
        }
    });
}

Outcome presheaf_phi_check(const Settings& s) {
    Outcome o;
    Json results = Json::array();
    for (const auto& input : s.inputs) {
        CategoryPtr c;
        if (fs::exists(input) && read_json_file(input).contains("sets"))
            c = load_presheaf(input).presheaf.category();
        else
            c = load_category(input);
        Json entry = {{"file", input}};
        o.text.push_back(input + ":");
        Json sizes = Json::array();
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto t = phi(c, standard_set(n));
            sizes.push_back({{"size", n}, {"monic", is_monic(t)}, {"invertible", is_isomorphism(t)}});
            o.text.push_back("  φ on a " + std::to_string(n) + "-element set: monic " + yes_no(is_monic(t)) +
                             ", invertible " + yes_no(is_isomorphism(t)));
        }
        entry["phi"] = std::move(sizes);
        if (is_pre_cohesive_site(*c)) {
            entry["nullstellensatz"] = is_nullstellensatz(c);
            o.text.push_back("  Nullstellensatz: " + yes_no(is_nullstellensatz(c)));
        } else {
            entry["nullstellensatz"] = nullptr;
            o.diagnostics.push_back(input + ": not a pre-cohesive site, Nullstellensatz not tested");
        }
        if (!s.level.empty()) {
            const auto level = resolve_level(c, s.level, s.max_morphisms);
            const bool q = is_quality_type_level(level);
            entry["level"] = level_json(level);
            entry["quality_type"] = q;
            o.text.push_back("  φ invertible on the " + level_label(level) + " (quality type): " + yes_no(q));
        }
        results.push_back(std::move(entry));
    }
    o.payload = {{"inputs", std::move(results)}};
    return o;
}

// cohesion

Outcome cohesion_check(const Settings& s) {
    const auto c = load_category(s.inputs.front());
    Outcome o;
    if (!is_pre_cohesive_site(*c)) {
        const auto terminal = terminal_object(*c);
        std::vector<ObjectId> pointless;
        if (terminal)
            for (auto x : c->object_ids())
                if (points(*c, x).empty()) pointless.push_back(x);
        o.payload = {{"pre_cohesive", false},
                     {"terminal", terminal ? Json(c->name(terminal->object)) : Json(nullptr)},
                     {"objects_without_points", names_of(*c, pointless)}};
        o.text.push_back("pre-cohesive site: no");
        o.diagnostics.push_back(std::string(to_string(ErrorCode::NotPreCohesiveSite)) + ": " +
                                (terminal ? "objects without points " + braced(names_of(*c, pointless))
                                          : std::string("no terminal object")));
        o.exit_code = kDomainError;
        return o;
    }
    const bool null = is_nullstellensatz(c);
    const auto p_omega = pi0_omega(c);
    const auto eps = level_epsilon(c, s.max_morphisms);
    const bool quality = is_quality_type_level(*eps.epsilon);
    o.payload = {{"pre_cohesive", true},
                 {"nullstellensatz", null},
                 {"pi0_omega", p_omega},
                 {"epsilon",
                  {{"size", eps.epsilon->ideal().size()},
                   {"equals_centre", eps.equals_centre},
                   {"unique_point_objects", names_of(*c, eps.unique_point_objects)},
                   {"quality_type", quality}}}};
    o.text.push_back("pre-cohesive site: yes");
    o.text.push_back("Nullstellensatz (φ monic): " + yes_no(null));
    o.text.push_back("p_!Ω: " + std::to_string(p_omega));
    o.text.push_back("level ε: " + std::to_string(eps.epsilon->ideal().size()) + " morphisms, equals the centre: " +
                     yes_no(eps.equals_centre) + ", C_! = " + braced(names_of(*c, eps.unique_point_objects)));
    o.text.push_back("ε is a quality type: " + yes_no(quality));
    return o;
}

// alg

Outcome alg_check(const Settings& s) {
    const auto a = load_algebra_file(resolve_input(s.inputs.front(), is_algebra_fixture));
    const auto valid = validate_algebra(a);
    Outcome o;
    std::string basis;
    for (std::size_t i = 0; i < a.dim(); ++i) basis += (i ? ", " : "") + a.basis[i];
    o.text.push_back("algebra of dimension " + std::to_string(a.dim()) + " (basis " + basis + ")");
    if (!valid.ok()) {
        o.payload = {{"dim", a.dim()}, {"valid", false}, {"violations", valid.violations}};
        o.text.push_back("valid: no");
        for (const auto& v : valid.violations) o.text.push_back("  " + v);
        o.diagnostics.push_back("not a commutative associative unital algebra");
        o.exit_code = kDomainError;
        return o;
    }
    const auto r = is_weil(a);
    Json radical = Json::array(), points = Json::array();
    for (const auto& v : r.radical) radical.push_back(vector_json(v));
    for (const auto& p : r.rational_points) {
        Json point = Json::object();
        for (std::size_t i = 0; i < a.dim(); ++i) point[a.basis[i]] = p[i].get_str();
        points.push_back(std::move(point));
    }
    o.payload = {{"dim", a.dim()},
                 {"valid", true},
                 {"radical", std::move(radical)},
                 {"radical_dim", r.radical.size()},
                 {"reduced", r.radical.empty()},
                 {"is_local", r.is_local},
                 {"residue_dim", r.residue_dim},
                 {"nil_index", r.nil_index},
                 {"is_weil", r.is_weil},
                 {"idempotent_count", r.idempotent_count},
                 {"rational_points", std::move(points)}};
    o.text.push_back("radical: dimension " + std::to_string(r.radical.size()) + ", nil index " +
                     std::to_string(r.nil_index));
    o.text.push_back("local: " + yes_no(r.is_local) + ", residue dimension " + std::to_string(r.residue_dim));
    o.text.push_back("Weil algebra: " + yes_no(r.is_weil));
    o.text.push_back("idempotents: " + std::to_string(r.idempotent_count));
    o.text.push_back("rational points: " + std::to_string(r.rational_points.size()));
    for (const auto& p : r.rational_points) {
        std::string line = "  ";
        for (std::size_t i = 0; i < a.dim(); ++i) line += (i ? ", " : "") + a.basis[i] + " -> " + p[i].get_str();
        o.text.push_back(line);
    }
    return o;
}

int exit_code_for(ErrorCode code) {
    return code == ErrorCode::InvalidInput || code == ErrorCode::UnknownFixture ? kBadInput : kDomainError;
}

std::string status_for(int exit_code) {
    switch (exit_code) {
        case kSuccess: return "ok";
        case kDomainError: return "domain_error";
        default: return "input_error";
    }
}

void emit(const std::string& command, const Settings& s, const Outcome& o, std::ostream& out, std::ostream& err) {
    if (s.format == "json") {
        const Json report = {{"schema_version", kSchemaVersion},
                             {"command", command},
                             {"status", status_for(o.exit_code)},
                             {"payload", o.payload},
                             {"diagnostics", o.diagnostics}};
        out << report.dump(2) << "\n";
        return;
    }
    for (const auto& line : o.text) out << line << "\n";
    for (const auto& d : o.diagnostics) err << (o.exit_code == kSuccess ? "note: " : "error: ") << d << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Levels, Aufhebung and Weil-algebra checks on finite sites", "cohesion-lab"};
    app.require_subcommand(1);
    Settings s;
    std::optional<std::size_t> max_flag;
    std::string command;
    std::function<Outcome()> action;

    auto leaf = [&](CLI::App* verb, const std::string& name, const std::string& about, bool many,
                    std::function<Outcome()> handler) {
        auto* sub = verb->add_subcommand(name, about);
        auto* in = sub->add_option("inputs", s.inputs, many ? "input files" : "input file or fixture name")->required();
        if (!many) in->expected(1);
        sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->callback([&, verb, name, handler] {
            command = verb->get_name() + " " + name;
            action = handler;
        });
        return sub;
    };
    auto with_max = [&](CLI::App* sub) {
        sub->add_option_function<std::size_t>("--max-morphisms", [&](const std::size_t& n) { max_flag = n; },
                                               "enumeration bound on the morphism count")
            ->check(CLI::PositiveNumber);
        return sub;
    };
    auto with_level = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--level", s.level, "ideal file, or top, bottom, centre, epsilon");
        if (required) opt->required();
        return with_max(sub);
    };

    auto* cat = app.add_subcommand("cat", "finite categories")->require_subcommand(1);
    leaf(cat, "validate", "check a composition table", false, [&] { return cat_validate(s); });
    leaf(cat, "karoubi", "Karoubi envelope", false, [&] { return cat_karoubi(s); })
        ->add_flag("--skeletal,!--no-skeletal", s.skeletal, "keep one idempotent per iso class (default)");
    leaf(cat, "info", "terminal object, points and pseudo-constants", false, [&] { return cat_info(s); });

    auto* levels = app.add_subcommand("levels", "levels as idempotent ideals")->require_subcommand(1);
    with_max(leaf(levels, "enumerate", "all levels with the above-centre test", false, [&] { return levels_enumerate(s); }));
    with_max(leaf(levels, "epsilon", "the largest subquality level", false, [&] { return levels_epsilon(s); }));
    auto* auf = with_level(leaf(levels, "aufhebung", "bounded Aufhebung search", false, [&] { return levels_aufhebung(s); }),
                           true);
    auf->add_option("--witness", s.witnesses, "presheaf file (repeatable; default: representables, Ω, codiscrete 2)");

    auto* psh = app.add_subcommand("presheaf", "finite presheaves")->require_subcommand(1);
    leaf(psh, "pi0", "connected components", true, [&] { return presheaf_pi0(s); });
    with_level(leaf(psh, "skeleton", "left Kan extension of the restriction", true, [&] { return presheaf_skeleton(s, false); }),
               true);
    with_level(leaf(psh, "coskeleton", "right Kan extension of the restriction", true,
                    [&] { return presheaf_skeleton(s, true); }),
               true);
    with_level(leaf(psh, "sheaf-check", "sheaf condition for a level", true, [&] { return presheaf_sheaf_check(s); }), true);
    with_level(leaf(psh, "phi-check", "the comparison φ from constant to codiscrete", true,
                    [&] { return presheaf_phi_check(s); }),
               false);

    auto* coh = app.add_subcommand("cohesion", "pre-cohesive sites")->require_subcommand(1);
    with_max(leaf(coh, "check", "pre-cohesion, Nullstellensatz, p_!Ω and level ε", false, [&] { return cohesion_check(s); }));

    auto* alg = app.add_subcommand("alg", "finite-dimensional algebras")->require_subcommand(1);
    leaf(alg, "check", "radical, locality, Weil condition, idempotents, points", false, [&] { return alg_check(s); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadInput;
    }

    Outcome o;
    try {
        s.max_morphisms = resolve_max_morphisms(max_flag);
        o = action();
    } catch (const Error& e) {
        o = Outcome{};
        o.exit_code = exit_code_for(e.code());
        o.diagnostics.push_back(e.what());
    }
    emit(command, s, o, out, err);
    return o.exit_code;
}

}  // namespace cohesion::cli
