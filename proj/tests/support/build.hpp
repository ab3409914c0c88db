#pragma once

// Presheaves written out by name, in the same shape as the JSON format.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohesion/presheaf.hpp"

namespace testsupport {

using SetsByName = std::map<std::string, std::vector<std::string>>;
using ActionsByName = std::map<std::string, std::map<std::string, std::string>>;

// Identities may be omitted from actions.
inline cohesion::Presheaf make_presheaf(const cohesion::CategoryPtr& c, const SetsByName& sets,
                                        const ActionsByName& actions) {
    std::vector<std::vector<std::string>> tags(c->object_count());
    for (auto o : c->object_ids()) {
        auto it = sets.find(c->name(o));
        if (it != sets.end()) tags[o.index] = it->second;
    }
    auto index = [&](cohesion::ObjectId o, const std::string& t) {
        const auto& v = tags[o.index];
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] == t) return i;
        throw std::logic_error("unknown element " + t);
    };
    std::vector<std::vector<std::size_t>> acts(c->morphism_count());
    for (auto f : c->morphism_ids()) {
        const auto cd = c->cod(f);
        auto it = actions.find(c->name(f));
        for (const auto& t : tags[cd.index]) {
            if (it == actions.end()) {
                if (!c->is_identity(f)) throw std::logic_error("missing action for " + c->name(f));
                acts[f.index].push_back(index(cd, t));
            } else {
                acts[f.index].push_back(index(c->dom(f), it->second.at(t)));
            }
        }
    }
    return cohesion::Presheaf(c, std::move(tags), std::move(acts));
}

}  // namespace testsupport
