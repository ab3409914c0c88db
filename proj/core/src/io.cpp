#include "cohesion/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "cohesion/error.hpp"

#ifndef COHESION_LAB_FIXTURE_DIR
#define COHESION_LAB_FIXTURE_DIR "fixtures"
#endif

namespace cohesion {
namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidInput, message); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing member \"") + key + "\"");
    return *it;
}

const std::string& as_string(const Json& j, const std::string& what) {
    if (!j.is_string()) bad(what + " must be a string");
    return j.get_ref<const std::string&>();
}

const Json& as_array(const Json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array");
    return j;
}

const Json& as_object(const Json& j, const std::string& what) {
    if (!j.is_object()) bad(what + " must be an object");
    return j;
}

Rational parse_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    const auto& s = as_string(j, "rational");
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) bad("malformed rational \"" + s + "\"");
    if (r.get_den() == 0) bad("zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

Vector parse_vector(const Json& j, std::size_t n, const std::string& what) {
    as_array(j, what);
    if (j.size() != n) bad(what + " must have " + std::to_string(n) + " entries");
    Vector v;
    for (const auto& x : j) v.push_back(parse_rational(x));
    return v;
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

ObjectId object_named(const FinCategory& c, const std::string& name) {
    const auto o = c.find_object(name);
    if (!o) bad("unknown object \"" + name + "\"");
    return *o;
}

MorphismId morphism_named(const FinCategory& c, const std::string& name) {
    const auto m = c.find_morphism(name);
    if (!m) bad("unknown morphism \"" + name + "\"");
    return *m;
}

void format_into(std::ostringstream& out, const Json& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (depth < 2 && j.is_object() && !j.empty()) {
        out << "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out << pad << "  " << Json(k).dump() << ": ";
            if (depth == 0)
                format_into(out, v, depth + 1);
            else
                out << v.dump();
            out << (++i < j.size() ? ",\n" : "\n");
        }
        out << pad << "}";
    } else if (depth == 1 && j.is_array() && !j.empty()) {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) out << pad << "  " << j[i].dump() << (i + 1 < j.size() ? ",\n" : "\n");
        out << pad << "]";
    } else {
        out << j.dump();
    }
}

}  // namespace

FinCategory category_from_json(const Json& j) {
    std::vector<std::string> objects;
    std::map<std::string, std::size_t> object_index;
    for (const auto& o : as_array(member(j, "objects"), "objects")) {
        const auto& name = as_string(o, "object name");
        if (!object_index.emplace(name, objects.size()).second) bad("duplicate object \"" + name + "\"");
        objects.push_back(name);
    }
    std::vector<MorphismInfo> morphisms;
    std::map<std::string, std::size_t> morphism_index;
    for (const auto& m : as_array(member(j, "morphisms"), "morphisms")) {
        const auto& name = as_string(member(m, "name"), "morphism name");
        auto endpoint = [&](const char* key) {
            const auto& o = as_string(member(m, key), std::string(key) + " of " + name);
            const auto it = object_index.find(o);
            if (it == object_index.end()) bad("morphism \"" + name + "\" has unknown " + key + " \"" + o + "\"");
            return ObjectId(it->second);
        };
        MorphismInfo info{name, endpoint("dom"), endpoint("cod")};
        if (!morphism_index.emplace(name, morphisms.size()).second) bad("duplicate morphism \"" + name + "\"");
        morphisms.push_back(std::move(info));
    }
    auto morphism = [&](const Json& v) {
        const auto& name = as_string(v, "morphism reference");
        const auto it = morphism_index.find(name);
        if (it == morphism_index.end()) bad("unknown morphism \"" + name + "\"");
        return MorphismId(it->second);
    };
    const auto& ids = as_object(member(j, "identities"), "identities");
    std::vector<MorphismId> identities;
    for (const auto& o : objects) {
        const auto it = ids.find(o);
        if (it == ids.end()) bad("no identity given for object \"" + o + "\"");
        identities.push_back(morphism(*it));
    }
    if (ids.size() != objects.size()) bad("identities name an unknown object");

    const std::size_t n = morphisms.size();
    std::vector<std::optional<MorphismId>> table(n * n);
    for (const auto& entry : as_array(member(j, "compose"), "compose")) {
        if (!entry.is_array() || entry.size() != 3) bad("compose entries must be [g, f, g∘f]");
        const auto g = morphism(entry[0]), f = morphism(entry[1]), gf = morphism(entry[2]);
        auto& slot = table[g.index * n + f.index];
        if (slot) bad("composite " + morphisms[g.index].name + "∘" + morphisms[f.index].name + " given twice");
        slot = gf;
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f) {
            const bool composable = morphisms[g].dom == morphisms[f].cod;
            if (composable && !table[g * n + f])
                bad("partial table: missing " + morphisms[g].name + "∘" + morphisms[f].name);
            if (!composable && table[g * n + f])
                bad("composite " + morphisms[g].name + "∘" + morphisms[f].name + " of non-composable pair");
        }
    return FinCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(table));
}

Json category_to_json(const FinCategory& c) {
    Json j;
    j["objects"] = c.object_names();
    Json ms = Json::array();
    for (const auto& m : c.morphisms()) ms.push_back({{"name", m.name}, {"dom", c.name(m.dom)}, {"cod", c.name(m.cod)}});
    j["morphisms"] = std::move(ms);
    Json ids = Json::object();
    for (auto x : c.object_ids()) ids[c.name(x)] = c.name(c.identity(x));
    j["identities"] = std::move(ids);
    Json compose = Json::array();
    for (auto g : c.morphism_ids())
        for (auto f : c.morphism_ids())
            if (auto gf = c.try_compose(g, f)) compose.push_back({c.name(g), c.name(f), c.name(*gf)});
    j["compose"] = std::move(compose);
    return j;
}

Presheaf presheaf_from_json(const Json& j, const std::filesystem::path& base_dir) {
    const auto& ref = member(j, "category");
    CategoryPtr c;
    if (ref.is_object()) {
        c = share(category_from_json(ref));
    } else {
        const auto& name = as_string(ref, "category reference");
        if (is_category_fixture(name))
            c = share(load_category_fixture(name));
        else
            c = share(load_category_file(base_dir / name));
    }
    const auto report = validate_category(*c);
    if (!report.ok()) bad("presheaf over an invalid category: " + report.violations.front());

    const auto& sets = as_object(member(j, "sets"), "sets");
    std::vector<std::vector<std::string>> tags(c->object_count());
    for (const auto& [name, elements] : sets.items()) {
        auto& t = tags[object_named(*c, name).index];
        for (const auto& e : as_array(elements, "set of " + name)) t.push_back(as_string(e, "element tag"));
    }
    for (auto x : c->object_ids())
        if (!sets.contains(c->name(x))) bad("no set given for object \"" + c->name(x) + "\"");
    for (auto& t : tags) {
        auto sorted = t;
        std::ranges::sort(sorted);
        if (std::ranges::adjacent_find(sorted) != sorted.end()) bad("duplicate element tag \"" + *std::ranges::adjacent_find(sorted) + "\"");
    }
    auto index_of = [&](ObjectId x, const std::string& tag) {
        const auto it = std::ranges::find(tags[x.index], tag);
        if (it == tags[x.index].end()) bad("\"" + tag + "\" is not an element over \"" + c->name(x) + "\"");
        return static_cast<std::size_t>(it - tags[x.index].begin());
    };
    const auto& actions = as_object(member(j, "actions"), "actions");
    std::vector<std::vector<std::size_t>> act(c->morphism_count());
    std::vector<bool> given(c->morphism_count(), false);
    for (const auto& [name, mapping] : actions.items()) {
        const auto f = morphism_named(*c, name);
        const auto dom = c->dom(f), cod = c->cod(f);
        as_object(mapping, "action of " + name);
        auto& a = act[f.index];
        a.assign(tags[cod.index].size(), 0);
        std::vector<bool> seen(a.size(), false);
        for (const auto& [from, to] : mapping.items()) {
            const auto i = index_of(cod, from);
            seen[i] = true;
            a[i] = index_of(dom, as_string(to, "action value"));
        }
        if (std::ranges::find(seen, false) != seen.end()) bad("action of \"" + name + "\" is not total");
        given[f.index] = true;
    }
    for (auto f : c->morphism_ids()) {
        if (given[f.index]) continue;
        if (!c->is_identity(f)) bad("no action given for morphism \"" + c->name(f) + "\"");
        auto& a = act[f.index];
        a.resize(tags[c->dom(f).index].size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    }
    Presheaf x(c, std::move(tags), std::move(act));
    const auto valid = validate_presheaf(x);
    if (!valid.ok()) bad("not a presheaf: " + valid.violations.front());
    return x;
}

Json presheaf_to_json(const Presheaf& x, const Json& category_ref) {
    const auto& c = *x.category();
    Json j;
    j["category"] = category_ref;
    Json sets = Json::object();
    for (auto o : c.object_ids()) sets[c.name(o)] = x.tags(o);
    j["sets"] = std::move(sets);
    Json actions = Json::object();
    for (auto f : c.morphism_ids()) {
        if (c.is_identity(f)) continue;
        Json m = Json::object();
        for (std::size_t i = 0; i < x.size(c.cod(f)); ++i) m[x.tag(c.cod(f), i)] = x.tag(c.dom(f), x.act(f, i));
        actions[c.name(f)] = std::move(m);
    }
    j["actions"] = std::move(actions);
    return j;
}

StructAlgebra algebra_from_json(const Json& j) {
    const auto& dim_json = member(j, "dim");
    if (!dim_json.is_number_unsigned()) bad("dim must be a natural number");
    const auto n = dim_json.get<std::size_t>();
    StructAlgebra a;
    for (const auto& b : as_array(member(j, "basis"), "basis")) a.basis.push_back(as_string(b, "basis name"));
    if (a.basis.size() != n) bad("basis must have " + std::to_string(n) + " names");
    a.unit = parse_vector(member(j, "unit"), n, "unit");
    const auto& mult = as_array(member(j, "mult"), "mult");
    if (mult.size() != n) bad("mult must be " + std::to_string(n) + "x" + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : mult) {
        if (!row.is_array() || row.size() != n) bad("mult rows must have " + std::to_string(n) + " entries");
        auto& out = a.mult.emplace_back();
        for (const auto& cell : row) out.push_back(parse_vector(cell, n, "structure constant vector"));
    }
    return a;
}

Json algebra_to_json(const StructAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    j["basis"] = a.basis;
    j["unit"] = vector_json(a.unit);
    Json mult = Json::array();
    for (const auto& row : a.mult) {
        Json r = Json::array();
        for (const auto& cell : row) r.push_back(vector_json(cell));
        mult.push_back(std::move(r));
    }
    j["mult"] = std::move(mult);
    return j;
}

MorphismIdeal ideal_from_json(const CategoryPtr& c, const Json& j) {
    MorphismSet s = c->empty_set();
    for (const auto& m : as_array(j, "ideal")) s.insert(morphism_named(*c, as_string(m, "morphism name")));
    return MorphismIdeal(c, s);
}

Json ideal_to_json(const MorphismIdeal& i) {
    Json j = Json::array();
    for (auto f : i.category()->morphism_ids())
        if (i.contains(f)) j.push_back(i.category()->name(f));
    return j;
}

std::string format_document(const Json& j) {
    std::ostringstream out;
    format_into(out, j, 0);
    out << "\n";
    return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        bad(path.string() + ": " + e.what());
    }
}

FinCategory load_category_file(const std::filesystem::path& path) { return category_from_json(read_json_file(path)); }

Presheaf load_presheaf_file(const std::filesystem::path& path) {
    return presheaf_from_json(read_json_file(path), path.parent_path());
}

StructAlgebra load_algebra_file(const std::filesystem::path& path) { return algebra_from_json(read_json_file(path)); }

MorphismIdeal load_ideal_file(const CategoryPtr& c, const std::filesystem::path& path) {
    return ideal_from_json(c, read_json_file(path));
}

std::filesystem::path fixture_dir() {
    if (const char* env = std::getenv("COHESION_LAB_FIXTURE_DIR"); env && *env) return env;
    return COHESION_LAB_FIXTURE_DIR;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"delta1",    "chain3",  "graphic_m", "karoubi_m",
                                                "weil_dual", "prod_qq", "weil_3dim"};
    return names;
}

bool is_category_fixture(std::string_view name) {
    return name == "delta1" || name == "chain3" || name == "graphic_m" || name == "karoubi_m";
}

bool is_algebra_fixture(std::string_view name) {
    return name == "weil_dual" || name == "prod_qq" || name == "weil_3dim";
}

FinCategory load_category_fixture(std::string_view name) {
    if (!is_category_fixture(name)) throw Error(ErrorCode::UnknownFixture, "no category fixture \"" + std::string(name) + "\"");
    auto c = load_category_file(fixture_dir() / (std::string(name) + ".json"));
    const auto report = validate_category(c);
    if (!report.ok()) bad("fixture " + std::string(name) + " is not a category: " + report.violations.front());
    return c;
}

StructAlgebra load_algebra_fixture(std::string_view name) {
    if (!is_algebra_fixture(name)) throw Error(ErrorCode::UnknownFixture, "no algebra fixture \"" + std::string(name) + "\"");
    auto a = load_algebra_file(fixture_dir() / (std::string(name) + ".json"));
    const auto report = validate_algebra(a);
    if (!report.ok()) bad("fixture " + std::string(name) + " is not an algebra: " + report.violations.front());
    return a;
}

Fixture load_fixture(std::string_view name) {
    if (is_category_fixture(name)) return load_category_fixture(name);
    if (is_algebra_fixture(name)) return load_algebra_fixture(name);
    throw Error(ErrorCode::UnknownFixture, "unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace cohesion
