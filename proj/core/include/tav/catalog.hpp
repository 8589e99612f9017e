#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tav/finite_group.hpp"
#include "tav/representation.hpp"
#include "tav/word.hpp"

namespace tav {

// A faithful permutation action given as the disjoint union of coset
// actions on the listed subgroups (words in the catalog generators).
struct GroupAction {
    std::string name;
    std::vector<std::vector<Word>> subgroups;
};

struct CatalogEntry {
    std::string id;
    std::string name;
    size_t order = 0;
    std::shared_ptr<const FiniteGroup> group;
    std::optional<GroupPresentation> presentation;
    std::vector<GroupAction> actions;
    std::string content_hash;
    size_t line = 0;
};

struct Catalog {
    std::set<size_t> complete_orders;
    std::string note;
    std::vector<CatalogEntry> entries; // sorted by (order, id)
    std::string file_hash;
    std::vector<std::string> diagnostics; // records skipped at load
    std::string path;

    // by id, or by name when unique
    const CatalogEntry& find(const std::string& key) const;
    std::vector<const CatalogEntry*> in_order_range(size_t lo, size_t hi) const;
    bool complete(size_t order) const { return complete_orders.count(order) != 0; }
};

Catalog load_catalog(const std::string& path, size_t order_bound = kDefaultOrderBound);
Catalog parse_catalog(const std::string& text, size_t order_bound = kDefaultOrderBound);

// representation by name: "regular", "natural" or one of the entry's actions
Representation make_representation(const CatalogEntry& e, const std::string& name);

} // namespace tav
