#include "tav/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tav/coset_enum.hpp"
#include "tav/error.hpp"
#include "tav/hashing.hpp"

namespace tav {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(size_t line, const std::string& msg)
{
    fail(ErrorKind::ParseError, "catalog line " + std::to_string(line) + ": " + msg);
}

std::vector<Word> parse_words(const json& arr, uint32_t ngens, size_t line)
{
    std::vector<Word> out;
    if (!arr.is_array())
        parse_fail(line, "expected a list of words");
    for (const auto& w : arr) {
        if (!w.is_string())
            parse_fail(line, "word must be a string");
        out.push_back(parse_word(w.get<std::string>(), ngens));
    }
    return out;
}

std::string canonical_generators(size_t degree, const std::vector<Perm>& gens)
{
    std::ostringstream os;
    os << "perm;" << degree;
    for (const auto& g : gens) {
        os << ';';
        for (size_t i = 0; i < g.size(); ++i)
            os << (i ? "," : "") << g[i];
    }
    return os.str();
}

} // namespace

Catalog parse_catalog(const std::string& text, size_t order_bound)
{
    Catalog cat;
    std::istringstream in(text);
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.find_first_not_of(" \t\r") == std::string::npos || raw[raw.find_first_not_of(" \t")] == '#')
            continue;
        json j;
        try {
            j = json::parse(raw);
        } catch (const json::exception& e) {
            parse_fail(line, e.what());
        }
        if (!j.is_object())
            parse_fail(line, "record is not an object");
        if (j.contains("meta")) {
            const auto& m = j["meta"];
            if (m.contains("complete_orders"))
                for (const auto& o : m["complete_orders"])
                    cat.complete_orders.insert(o.get<size_t>());
            if (m.contains("note"))
                cat.note = m["note"].get<std::string>();
            continue;
        }
        CatalogEntry e;
        e.line = line;
        try {
            e.id = j.at("id").get<std::string>();
            e.name = j.value("name", e.id);
            e.order = j.at("order").get<size_t>();
        } catch (const json::exception& ex) {
            parse_fail(line, ex.what());
        }
        if (e.order > order_bound) {
            cat.diagnostics.push_back("line " + std::to_string(line) + ": group " + e.id + " of order " +
                                      std::to_string(e.order) + " exceeds the order bound " +
                                      std::to_string(order_bound));
            continue;
        }
        try {
            if (j.contains("generators")) {
                size_t degree = j.at("degree").get<size_t>();
                std::vector<Perm> gens;
                for (const auto& g : j["generators"]) {
                    Perm p = g.get<Perm>();
                    if (p.size() != degree || !is_permutation(p))
                        parse_fail(line, "generator is not a permutation of degree " + std::to_string(degree));
                    gens.push_back(std::move(p));
                }
                e.group = std::make_shared<FiniteGroup>(FiniteGroup::from_generators(degree, gens, order_bound));
                e.content_hash = sha256_hex(canonical_generators(degree, gens));
            } else if (j.contains("presentation")) {
                const auto& pj = j["presentation"];
                GroupPresentation p;
                p.generators = pj.at("generators").get<uint32_t>();
                p.relators = parse_words(pj.at("relators"), p.generators, line);
                std::string canon = "pres;" + std::to_string(p.generators);
                for (const auto& r : p.relators)
                    canon += ";" + word_to_string(r, "g");
                e.group = std::make_shared<FiniteGroup>(coset_enumeration(p, {}, kDefaultCosetBound, order_bound));
                e.presentation = std::move(p);
                e.content_hash = sha256_hex(canon);
            } else {
                parse_fail(line, "record needs generators or a presentation");
            }
        } catch (const Error& ex) {
            if (ex.kind() == ErrorKind::OrderBoundExceeded) {
                cat.diagnostics.push_back("line " + std::to_string(line) + ": " + ex.what());
                continue;
            }
            if (ex.kind() == ErrorKind::ParseError)
                throw;
            parse_fail(line, ex.what());
        } catch (const json::exception& ex) {
            parse_fail(line, ex.what());
        }
        if (e.group->order() != e.order)
            parse_fail(line, "declared order " + std::to_string(e.order) + " but generators give " +
                                 std::to_string(e.group->order()));
        if (j.contains("actions")) {
            uint32_t ngens = static_cast<uint32_t>(e.group->generators().size());
            for (const auto& a : j["actions"]) {
                GroupAction act;
                act.name = a.at("name").get<std::string>();
                for (const auto& s : a.at("subgroups"))
                    act.subgroups.push_back(parse_words(s, ngens, line));
                e.actions.push_back(std::move(act));
            }
        }
        cat.entries.push_back(std::move(e));
    }
    std::stable_sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.order != b.order ? a.order < b.order : a.id < b.id;
    });
    std::map<std::string, int> seen;
    for (const auto& e : cat.entries)
        if (++seen[e.id] > 1)
            fail(ErrorKind::ParseError, "duplicate group id " + e.id);
    return cat;
}

Catalog load_catalog(const std::string& path, size_t order_bound)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot read catalog " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    Catalog c = parse_catalog(ss.str(), order_bound);
    c.path = path;
    c.file_hash = sha256_hex(ss.str());
    return c;
}

const CatalogEntry& Catalog::find(const std::string& key) const
{
    for (const auto& e : entries)
        if (e.id == key)
            return e;
    const CatalogEntry* hit = nullptr;
    for (const auto& e : entries) {
        if (e.name == key) {
            if (hit)
                fail(ErrorKind::GroupNotFound, "group name '" + key + "' is ambiguous, use an id");
            hit = &e;
        }
    }
    if (!hit)
        fail(ErrorKind::GroupNotFound, "no group '" + key + "' in catalog");
    return *hit;
}

std::vector<const CatalogEntry*> Catalog::in_order_range(size_t lo, size_t hi) const
{
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries)
        if (e.order >= lo && e.order <= hi)
            out.push_back(&e);
    return out;
}

Representation make_representation(const CatalogEntry& e, const std::string& name)
{
    if (name.empty() || name == "regular")
        return regular_rep(*e.group);
    if (name == "natural")
        return natural_rep(*e.group);
    for (const auto& a : e.actions) {
        if (a.name != name)
            continue;
        if (!e.presentation)
            fail(ErrorKind::InvalidArgument, "action '" + name + "' needs a presented group");
        std::vector<Perm> gen_images(e.presentation->generators);
        size_t offset = 0;
        for (const auto& sub : a.subgroups) {
            CosetTable t = enumerate_cosets(*e.presentation, sub);
            for (size_t k = 0; k < gen_images.size(); ++k) {
                gen_images[k].resize(offset + t.cosets);
                for (size_t i = 0; i < t.cosets; ++i)
                    gen_images[k][offset + i] = static_cast<uint32_t>(offset + t.actions[k][i]);
            }
            offset += t.cosets;
        }
        return rep_from_generator_images(*e.group, gen_images, name);
    }
    fail(ErrorKind::InvalidArgument, "group " + e.id + " has no action '" + name + "'");
}

} // namespace tav
