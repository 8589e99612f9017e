#include "tav/hom.hpp"

#include <sstream>

#include "tav/error.hpp"

namespace tav {

size_t evaluate_word(const FiniteGroup& g, const std::vector<size_t>& images, const Word& w)
{
    size_t r = g.identity();
    for (const auto& l : w) {
        size_t x = images.at(l.gen);
        r = g.mul(r, l.exp > 0 ? x : g.inv(x));
    }
    return r;
}

std::optional<size_t> failing_relator(const KnotPresentation& p, const FiniteGroup& g,
                                      const std::vector<size_t>& images)
{
    auto rels = p.all_relators();
    for (size_t i = 0; i < rels.size(); ++i)
        if (evaluate_word(g, images, rels[i]) != g.identity())
            return i;
    return std::nullopt;
}

bool images_generate(const FiniteGroup& g, const std::vector<size_t>& images)
{
    return g.subgroup_closure(images).size() == g.order();
}

GroupHom make_hom(const KnotPresentation& p, const FiniteGroup& g, const std::vector<size_t>& images)
{
    if (images.size() != p.n)
        fail(ErrorKind::InvalidHom, "need " + std::to_string(p.n) + " images, got " + std::to_string(images.size()));
    for (size_t x : images)
        if (x >= g.order())
            fail(ErrorKind::InvalidHom, "element index " + std::to_string(x) + " out of range");
    if (auto bad = failing_relator(p, g, images)) {
        auto rels = p.all_relators();
        fail(ErrorKind::InvalidHom, "relator " + std::to_string(*bad + 1) + " (" + word_to_string(rels[*bad]) +
                                        ") is not sent to the identity");
    }
    GroupHom h;
    h.images = images;
    h.surjective = images_generate(g, images);
    return h;
}

std::vector<size_t> parse_hom_spec(const std::string& spec, const KnotPresentation& p, const FiniteGroup& g)
{
    std::vector<std::optional<size_t>> img(p.n);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::ParseError, "hom item '" + item + "' has no '='");
        Word lhs = parse_word(item.substr(0, eq), p.n);
        if (lhs.size() != 1 || lhs[0].exp != 1)
            fail(ErrorKind::ParseError, "hom item '" + item + "' must assign a single generator");
        std::string rhs = item.substr(eq + 1);
        auto rs = rhs.find_first_not_of(" \t");
        auto re = rhs.find_last_not_of(" \t");
        rhs = rs == std::string::npos ? "" : rhs.substr(rs, re - rs + 1);
        size_t value = 0;
        if (!rhs.empty() && rhs[0] == 'e' && rhs.size() > 1 && rhs.find_first_not_of("0123456789", 1) == std::string::npos) {
            value = std::stoull(rhs.substr(1));
            if (value >= g.order())
                fail(ErrorKind::ParseError, "element index " + rhs + " out of range");
        } else {
            value = g.evaluate(parse_word(rhs, static_cast<uint32_t>(g.generators().size())));
        }
        if (img[lhs[0].gen])
            fail(ErrorKind::ParseError, "generator x" + std::to_string(lhs[0].gen + 1) + " assigned twice");
        img[lhs[0].gen] = value;
    }
    std::vector<size_t> out;
    for (uint32_t i = 0; i < p.n; ++i) {
        if (!img[i])
            fail(ErrorKind::ParseError, "no image given for x" + std::to_string(i + 1));
        out.push_back(*img[i]);
    }
    return out;
}

std::string hom_to_string(const GroupHom& h)
{
    std::ostringstream os;
    for (size_t i = 0; i < h.images.size(); ++i)
        os << (i ? "," : "") << 'x' << (i + 1) << "=e" << h.images[i];
    return os.str();
}

} // namespace tav
