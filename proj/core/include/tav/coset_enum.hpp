#pragma once

#include <vector>

#include "tav/finite_group.hpp"
#include "tav/word.hpp"

namespace tav {

inline constexpr size_t kDefaultCosetBound = 1000000;

struct CosetTable {
    size_t cosets = 0;
    // action of each generator on the cosets, coset 0 is the subgroup
    std::vector<Perm> actions;
};

// HLT enumeration: relators scanned in order at each live coset, lowest
// coset with an undefined entry filled first.
CosetTable enumerate_cosets(const GroupPresentation& p, const std::vector<Word>& subgroup,
                            size_t max_cosets = kDefaultCosetBound);

FiniteGroup coset_enumeration(const GroupPresentation& p, const std::vector<Word>& subgroup,
                              size_t max_cosets = kDefaultCosetBound, size_t order_bound = kDefaultOrderBound);

} // namespace tav
