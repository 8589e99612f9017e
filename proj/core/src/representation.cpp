#include "tav/representation.hpp"

#include <set>

#include "tav/error.hpp"

namespace tav {

Representation regular_rep(const FiniteGroup& g)
{
    Representation r;
    r.name = "regular";
    r.degree = g.order();
    r.images.reserve(g.order());
    for (size_t e = 0; e < g.order(); ++e)
        r.images.push_back(regular_permutation(g, e));
    return r;
}

Representation natural_rep(const FiniteGroup& g)
{
    Representation r;
    r.name = "natural";
    r.degree = g.degree();
    for (size_t e = 0; e < g.order(); ++e)
        r.images.push_back(g.element(e));
    return r;
}

Representation rep_from_generator_images(const FiniteGroup& g, const std::vector<Perm>& gen_images,
                                         const std::string& name)
{
    if (gen_images.size() != g.generators().size() || gen_images.empty())
        fail(ErrorKind::InvalidArgument, "representation needs one image per generator");
    Representation r;
    r.name = name;
    r.degree = gen_images.front().size();
    r.images.resize(g.order());
    std::vector<char> done(g.order(), 0);
    r.images[0] = identity_perm(r.degree);
    done[0] = 1;
    // BFS through the Cayley graph; check consistency on every edge
    std::vector<size_t> queue{0};
    for (size_t q = 0; q < queue.size(); ++q) {
        size_t x = queue[q];
        for (size_t k = 0; k < gen_images.size(); ++k) {
            size_t y = g.mul(x, g.generator_indices()[k]);
            Perm img = compose(r.images[x], gen_images[k]);
            if (!done[y]) {
                done[y] = 1;
                r.images[y] = std::move(img);
                queue.push_back(y);
            } else if (r.images[y] != img) {
                fail(ErrorKind::InvalidArgument, "generator images of '" + name + "' do not define a homomorphism");
            }
        }
    }
    std::set<Perm> distinct(r.images.begin(), r.images.end());
    if (distinct.size() != g.order())
        fail(ErrorKind::InvalidArgument, "representation '" + name + "' is not faithful");
    return r;
}

} // namespace tav
