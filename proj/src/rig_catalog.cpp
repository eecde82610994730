#include "gq/galkin.hpp"

#include <map>

namespace gq {

namespace {

struct Listing {
    const char* name;
    const char* spec;
};

// Galkin quandles in the rig listing, copied as printed. C[3,1] is R3.
constexpr Listing kListing[] = {
    {"C[3,1]", "G(Z1,[])"},
    {"C[6,1]", "G(Z2,[0])"},
    {"C[6,2]", "G(Z2,[1])"},
    {"C[9,2]", "G(Z3,[0])"},
    {"C[9,6]", "G(Z3,[1])"},
    {"C[12,5]", "G(Z4,[2])"},
    {"C[12,6]", "G(Z4,[0])"},
    {"C[12,7]", "G(Z4,[1])"},
    {"C[12,8]", "G(Z2xZ2,[0,0])"},
    {"C[12,9]", "G(Z2xZ2,[1,0])"},
    {"C[15,5]", "G(Z5,[1])"},
    {"C[15,6]", "G(Z5,[0])"},
    {"C[18,1]", "G(Z2xZ3,[0,0])"},
    {"C[18,4]", "G(Z2xZ3,[1,0])"},
    {"C[18,5]", "G(Z2xZ3,[1,1])"},
    {"C[18,8]", "G(Z2xZ3,[0,1])"},
    {"C[21,7]", "G(Z7,[1])"},
    {"C[21,8]", "G(Z7,[0])"},
    {"C[24,26]", "G(Z8,[2])"},
    {"C[24,27]", "G(Z8,[0])"},
    {"C[24,28]", "G(Z8,[4])"},
    {"C[24,29]", "G(Z2xZ4,[1,0],[1,2])"},
    {"C[24,30]", "G(Z2xZ4,[0,0])"},
    {"C[24,31]", "G(Z2xZ4,[0,2])"},
    {"C[24,32]", "G(Z8,[1])"},
    {"C[24,33]", "G(Z2xZ4,[0,1],[1,1])"},
    {"C[24,38]", "G(Z2xZ2xZ2,[0,0,1])"},
    {"C[24,39]", "G(Z2xZ2xZ2,[0,0,0])"},
    {"C[27,2]", "G(Z3xZ3,[0,0])"},
    {"C[27,12]", "G(Z9,[3])"},
    {"C[27,13]", "G(Z9,[0])"},
    {"C[27,23]", "G(Z3xZ3,[1,0])"},
    {"C[27,55]", "G(Z9,[1])"},
    {"C[30,12]", "G(Z2xZ5,[0,1])"},
    {"C[30,13]", "G(Z2xZ5,[0,0])"},
    {"C[30,14]", "G(Z2xZ5,[1,1])"},
    {"C[30,15]", "G(Z2xZ5,[1,0])"},
    {"C[33,10]", "G(Z11,[0])"},
    {"C[33,11]", "G(Z11,[1])"},
};

// Identifications stated outside the listing itself.
constexpr Listing kCrossReferences[] = {
    {"C[24,29]", "G(Z2xZ4,[1,0])"},
    {"C[24,31]", "G(Z2xZ4,[0,2])"},
    {"C[9,6]", "G(Z3,[1])"},
};

using ClassKey = std::pair<std::vector<int>, int>; // invariant factors, orbit label of c

ClassKey class_key(const GalkinSpec& spec, const BruteForceLimits& limits) {
    const auto n = normalize(spec).spec;
    const auto labels = automorphism_orbit_labels(n.group, limits);
    return {n.group.factors(), labels[static_cast<std::size_t>(n.group.index_of(n.c2))]};
}

struct Catalog {
    std::map<ClassKey, std::vector<std::string>> names;
    std::map<ClassKey, std::vector<std::string>> conflicts;
    std::vector<std::string> all_conflicts;
};

Catalog make_catalog(const BruteForceLimits& limits) {
    Catalog cat;
    std::map<std::string, ClassKey> key_of_name;
    std::map<ClassKey, std::string> spec_text;
    for (const auto& entry : rig_entries()) {
        const ClassKey key = class_key(entry.literal, limits);
        cat.names[key].push_back(entry.name);
        key_of_name[entry.name] = key;
        spec_text.emplace(key, normalize(entry.literal).spec.to_string());
    }
    for (const auto& [key, names] : cat.names) {
        if (names.size() < 2) continue;
        std::string joined;
        for (const auto& n : names) joined += (joined.empty() ? "" : ", ") + n;
        const std::string msg =
            joined + (names.size() == 2 ? " both" : " all") + " normalize to the class of " + spec_text.at(key);
        cat.conflicts[key].push_back(msg);
        cat.all_conflicts.push_back(msg);
    }
    for (const auto& ref : kCrossReferences) {
        const auto spec = parse_galkin(ref.spec);
        const ClassKey key = class_key(spec, limits);
        const ClassKey listed = key_of_name.at(ref.name);
        if (key == listed) continue;
        const std::string msg = std::string(ref.name) + " is identified with " + spec.to_string() +
                                ", but its listed spec normalizes to " + spec_text.at(listed);
        cat.conflicts[key].push_back(msg);
        cat.conflicts[listed].push_back(msg);
        cat.all_conflicts.push_back(msg);
    }
    return cat;
}

} // namespace

const std::vector<RigEntry>& rig_entries() {
    static const std::vector<RigEntry> entries = [] {
        std::vector<RigEntry> out;
        for (const auto& l : kListing) out.push_back({l.name, parse_galkin(l.spec)});
        return out;
    }();
    return entries;
}

RigMatch rig_lookup(const GalkinSpec& spec, const BruteForceLimits& limits) {
    const Catalog cat = make_catalog(limits);
    const ClassKey key = class_key(spec, limits);
    RigMatch out;
    if (auto it = cat.conflicts.find(key); it != cat.conflicts.end()) {
        out.conflicts = it->second;
        return out;
    }
    if (auto it = cat.names.find(key); it != cat.names.end()) out.name = it->second.front();
    return out;
}

std::vector<std::string> rig_conflicts(const BruteForceLimits& limits) { return make_catalog(limits).all_conflicts; }

} // namespace gq
