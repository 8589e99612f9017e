#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tav/finite_group.hpp"
#include "tav/knot.hpp"

namespace tav {

struct GroupHom {
    std::vector<size_t> images; // element index per presentation generator
    bool surjective = false;

    friend bool operator==(const GroupHom& a, const GroupHom& b) { return a.images == b.images; }
    friend bool operator<(const GroupHom& a, const GroupHom& b) { return a.images < b.images; }
};

size_t evaluate_word(const FiniteGroup& g, const std::vector<size_t>& images, const Word& w);
// index into all_relators() of the first relator not sent to the identity
std::optional<size_t> failing_relator(const KnotPresentation& p, const FiniteGroup& g,
                                      const std::vector<size_t>& images);
bool images_generate(const FiniteGroup& g, const std::vector<size_t>& images);
// validates and fills the surjective flag; throws InvalidHom naming the relator
GroupHom make_hom(const KnotPresentation& p, const FiniteGroup& g, const std::vector<size_t>& images);

// "x1=e17,x2=e5" (element indices) or "x1=g2*g4*g5*g6" (words in the
// group's generators); generators not listed are an error
std::vector<size_t> parse_hom_spec(const std::string& spec, const KnotPresentation& p, const FiniteGroup& g);
std::string hom_to_string(const GroupHom& h);

} // namespace tav
