#pragma once

#include <vector>

#include "tav/finite_group.hpp"
#include "tav/hom.hpp"
#include "tav/knot.hpp"

namespace tav {

struct HomOrbit {
    GroupHom rep; // lexicographically smallest image array in the orbit
    size_t size = 0;
};

struct EpiSearchOptions {
    bool surjective_only = true;
    unsigned threads = 1;
};

// All homomorphisms (or epimorphisms), sorted by image array. Presentations
// whose relators are all conjugation relations use class pinning and
// relation propagation; anything else is plain backtracking.
std::vector<GroupHom> enumerate_homs(const KnotPresentation& p, const FiniteGroup& g, bool surjective_only,
                                     unsigned threads = 1);

// One representative per inner-automorphism orbit, sorted by representative.
// Does not materialize whole orbits for conjugate-generator presentations.
std::vector<HomOrbit> enumerate_orbit_reps(const KnotPresentation& p, const FiniteGroup& g,
                                           const EpiSearchOptions& opt = {});

// Throws NotClosedUnderAction if some conjugate of an input hom is missing.
std::vector<HomOrbit> reduce_by_conjugation(const std::vector<GroupHom>& homs, const FiniteGroup& g);

// |G| / |centralizer of the image|
size_t orbit_size(const GroupHom& h, const FiniteGroup& g);
GroupHom conjugate_hom(const GroupHom& h, const FiniteGroup& g, size_t by);

} // namespace tav
