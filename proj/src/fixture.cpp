#include "graycat/fixture.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace graycat {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// section -> key -> value
using Sections = std::map<std::string, std::map<std::string, json>>;

Sections parse_ini(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError(path + ": cannot open");
    Sections out;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        auto where = [&] { return path + ":" + std::to_string(lineno); };
        if (t.front() == '[') {
            if (t.back() != ']') throw FixtureError(where() + ": unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw FixtureError(where() + ": empty section name");
            out[section];
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw FixtureError(where() + ": expected 'key = value'");
        if (section.empty())
            throw FixtureError(where() + ": key outside any section");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            out[section][key] = json::parse(val);
        } catch (const json::parse_error& e) {
            throw FixtureError(where() + ": bad value for '" + key + "': " + e.what());
        }
    }
    return out;
}

std::shared_ptr<FiniteGroup> parse_group(const Sections& s, const std::string& section) {
    auto it = s.find(section);
    if (it == s.end()) throw FixtureError("missing section [" + section + "]");
    const auto& kv = it->second;

    try {
        if (kv.count("trivial")) return std::make_shared<FiniteGroup>(trivial_group());
        if (kv.count("cyclic"))
            return std::make_shared<FiniteGroup>(cyclic_group(kv.at("cyclic").get<int>()));
        if (kv.count("table")) {
            auto table = kv.at("table").get<std::vector<std::vector<Elem>>>();
            std::vector<std::string> names;
            if (kv.count("names")) names = kv.at("names").get<std::vector<std::string>>();
            return std::make_shared<FiniteGroup>(group_from_table(std::move(table), std::move(names)));
        }
        if (kv.count("generators")) {
            int degree = kv.at("degree").get<int>();
            std::vector<std::vector<int>> gens;
            for (const auto& g : kv.at("generators"))
                gens.push_back(parse_permutation(g.get<std::string>(), degree));
            return std::make_shared<FiniteGroup>(group_from_permutations(gens, degree));
        }
    } catch (const json::exception& e) {
        throw FixtureError("[" + section + "]: " + e.what());
    } catch (const std::invalid_argument& e) {
        throw FixtureError("[" + section + "]: " + e.what());
    }
    throw FixtureError("[" + section + "]: no group description "
                       "(need table, cyclic, trivial, or degree+generators)");
}

template <typename T>
T get(const Sections& s, const std::string& section, const std::string& key) {
    auto it = s.find(section);
    if (it == s.end() || !it->second.count(key))
        throw FixtureError("missing [" + section + "] " + key);
    try {
        return it->second.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FixtureError("[" + section + "] " + key + ": " + e.what());
    }
}

template <typename T>
T get_or(const Sections& s, const std::string& section, const std::string& key, T def) {
    auto it = s.find(section);
    if (it == s.end() || !it->second.count(key)) return def;
    try {
        return it->second.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FixtureError("[" + section + "] " + key + ": " + e.what());
    }
}

void check_map_sizes(const std::vector<Elem>& m, int src, int dst, const std::string& what) {
    if (static_cast<int>(m.size()) != src)
        throw FixtureError(what + ": expected " + std::to_string(src) + " entries, got " +
                           std::to_string(m.size()));
    for (Elem e : m)
        if (e < 0 || e >= dst)
            throw FixtureError(what + ": image index " + std::to_string(e) + " out of range");
}

void check_table_sizes(const std::vector<std::vector<Elem>>& t, int rows, int cols, int range,
                       const std::string& what) {
    if (static_cast<int>(t.size()) != rows)
        throw FixtureError(what + ": expected " + std::to_string(rows) + " rows, got " +
                           std::to_string(t.size()));
    for (const auto& r : t) {
        if (static_cast<int>(r.size()) != cols)
            throw FixtureError(what + ": row length " + std::to_string(r.size()) +
                               ", expected " + std::to_string(cols));
        for (Elem e : r)
            if (e < 0 || e >= range)
                throw FixtureError(what + ": entry " + std::to_string(e) + " out of range");
    }
}

}  // namespace

FixtureSpec parse_fixture(const std::string& path) {
    Sections s = parse_ini(path);
    FixtureSpec spec;
    spec.name = get_or<std::string>(s, "meta", "name", path);
    spec.kind = get_or<std::string>(s, "meta", "kind", "two_crossed");
    spec.expected_pass = get_or<bool>(s, "meta", "expected_pass", true);
    if (spec.kind != "two_crossed" && spec.kind != "crossed_module")
        throw FixtureError("[meta] kind must be two_crossed or crossed_module");

    spec.M = parse_group(s, "group.M");
    spec.N = parse_group(s, "group.N");
    spec.d1 = get<std::vector<Elem>>(s, "maps", "d1");
    check_map_sizes(spec.d1, spec.M->order, spec.N->order, "[maps] d1");
    spec.act_nm = get<std::vector<std::vector<Elem>>>(s, "actions", "nm");
    check_table_sizes(spec.act_nm, spec.N->order, spec.M->order, spec.M->order, "[actions] nm");

    if (spec.kind == "two_crossed") {
        spec.L = parse_group(s, "group.L");
        spec.d2 = get<std::vector<Elem>>(s, "maps", "d2");
        check_map_sizes(spec.d2, spec.L->order, spec.M->order, "[maps] d2");
        spec.act_nl = get<std::vector<std::vector<Elem>>>(s, "actions", "nl");
        check_table_sizes(spec.act_nl, spec.N->order, spec.L->order, spec.L->order,
                          "[actions] nl");
        spec.lifting = get<std::vector<std::vector<Elem>>>(s, "lifting", "table");
        check_table_sizes(spec.lifting, spec.M->order, spec.M->order, spec.L->order,
                          "[lifting] table");
    }
    return spec;
}

CrossedModule to_crossed_module(const FixtureSpec& spec) {
    if (spec.kind != "crossed_module")
        throw FixtureError(spec.name + ": not a crossed_module fixture");
    CrossedModule x;
    x.M = spec.M;
    x.N = spec.N;
    x.boundary = {x.M.get(), x.N.get(), spec.d1};
    x.action = {x.N.get(), x.M.get(), spec.act_nm};
    validate_hom(x.boundary);
    validate_action(x.action);
    return x;
}

TwoCrossedModule to_module(const FixtureSpec& spec) {
    if (spec.kind == "crossed_module") return from_crossed_module(to_crossed_module(spec));

    TwoCrossedModule x;
    x.L = spec.L;
    x.M = spec.M;
    x.N = spec.N;
    x.d2 = {x.L.get(), x.M.get(), spec.d2};
    x.d1 = {x.M.get(), x.N.get(), spec.d1};
    x.actNM = {x.N.get(), x.M.get(), spec.act_nm};
    x.actNL = {x.N.get(), x.L.get(), spec.act_nl};
    x.lifting = spec.lifting;
    validate_hom(x.d2);
    validate_hom(x.d1);
    validate_action(x.actNM);
    validate_action(x.actNL);
    return x;
}

}  // namespace graycat
