#pragma once

#include <string>
#include <vector>

#include "tav/finite_group.hpp"

namespace tav {

// Permutation representation of a finite group: element g acts on basis
// vectors by e_i -> e_{images[g][i]}, so rho(g) has a 1 at (i, images[g][i]).
struct Representation {
    std::string name;
    size_t degree = 0;
    std::vector<Perm> images; // indexed by element
};

Representation regular_rep(const FiniteGroup& g);
// the group's own action on its points
Representation natural_rep(const FiniteGroup& g);
// representation given by images of the generators; must be a faithful
// homomorphism
Representation rep_from_generator_images(const FiniteGroup& g, const std::vector<Perm>& gen_images,
                                         const std::string& name);

} // namespace tav
