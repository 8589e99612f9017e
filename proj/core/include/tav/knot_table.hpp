#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tav/knot.hpp"
#include "tav/laurent.hpp"

namespace tav {

struct KnotRecord {
    std::string name;
    std::optional<PDCode> pd;
    std::optional<PDCode> alt_pd; // another diagram of the same knot
    KnotPresentation primary; // explicit presentation if given, else Wirtinger from pd
    std::optional<KnotPresentation> reduced;
    std::optional<LaurentPoly> alexander; // reference value from the table
    std::optional<bool> fibered;
    std::string provenance;
    size_t line = 0;
};

struct KnotTable {
    std::map<std::string, KnotRecord> knots;
    std::vector<std::string> order; // file order
    std::string path;
    std::string file_hash;

    const KnotRecord& get(const std::string& name) const;
    // "A", "A#B#C", "A(p,q)" cable, "A:reduced", "A:pd", "A:alt"
    KnotPresentation resolve(const std::string& expr) const;
};

KnotTable load_knot_table(const std::string& path);
KnotTable parse_knot_table(const std::string& text);

} // namespace tav
