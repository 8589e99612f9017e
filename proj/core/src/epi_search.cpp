#include "tav/epi_search.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <set>

#include "tav/error.hpp"
#include "tav/parallel.hpp"

namespace tav {

namespace {

constexpr size_t kUnset = std::numeric_limits<size_t>::max();

// homs with generator 0 pinned to one class representative; every image
// then lies in that class
class PinnedSearch {
public:
    PinnedSearch(const KnotPresentation& p, const FiniteGroup& g, std::vector<ConjugationRelation> rels,
                 const std::vector<size_t>& cls, bool surjective_only)
        : p_(p), g_(g), rels_(std::move(rels)), cls_(cls), in_class_(g.order(), false),
          surjective_only_(surjective_only)
    {
        for (size_t x : cls)
            in_class_[x] = true;
    }

    std::vector<GroupHom> run()
    {
        std::vector<size_t> img(p_.n, kUnset);
        img[0] = cls_.front();
        search(img);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    const KnotPresentation& p_;
    const FiniteGroup& g_;
    std::vector<ConjugationRelation> rels_;
    const std::vector<size_t>& cls_;
    std::vector<bool> in_class_;
    bool surjective_only_;
    std::vector<GroupHom> out_;

    bool assign(std::vector<size_t>& img, uint32_t k, size_t v, bool& changed)
    {
        if (img[k] == kUnset) {
            if (!in_class_[v])
                return false;
            img[k] = v;
            changed = true;
            return true;
        }
        return img[k] == v;
    }

    bool propagate(std::vector<size_t>& img)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rels_) {
                size_t b = img[r.b], c = img[r.c];
                if (r.a < 0) {
                    if (b != kUnset && !assign(img, r.c, b, changed))
                        return false;
                    if (c != kUnset && !assign(img, r.b, c, changed))
                        return false;
                    continue;
                }
                size_t a = img[static_cast<size_t>(r.a)];
                if (a == kUnset)
                    continue;
                size_t w = g_.pow(a, r.e);
                if (b != kUnset) {
                    if (!assign(img, r.c, g_.conj(w, b), changed))
                        return false;
                } else if (c != kUnset) {
                    if (!assign(img, r.b, g_.conj(g_.inv(w), c), changed))
                        return false;
                }
            }
        }
        return true;
    }

    void search(std::vector<size_t> img)
    {
        if (!propagate(img))
            return;
        auto it = std::find(img.begin(), img.end(), kUnset);
        if (it == img.end()) {
            if (failing_relator(p_, g_, img))
                return;
            bool surj = images_generate(g_, img);
            if (surjective_only_ && !surj)
                return;
            out_.push_back(GroupHom{img, surj});
            return;
        }
        auto k = static_cast<size_t>(it - img.begin());
        for (size_t x : cls_) {
            auto next = img;
            next[k] = x;
            search(std::move(next));
        }
    }
};

std::vector<GroupHom> backtrack_all(const KnotPresentation& p, const FiniteGroup& g, bool surjective_only)
{
    std::vector<Word> rels = p.all_relators();
    // relators become checkable once their largest generator is assigned
    std::vector<std::vector<size_t>> check_at(p.n);
    for (size_t i = 0; i < rels.size(); ++i) {
        uint32_t m = 0;
        for (const auto& l : rels[i])
            m = std::max(m, l.gen);
        if (!rels[i].empty() && m < p.n)
            check_at[m].push_back(i);
    }
    std::vector<GroupHom> out;
    std::vector<size_t> img(p.n, 0);
    auto rec = [&](auto&& self, uint32_t k) -> void {
        if (k == p.n) {
            bool surj = images_generate(g, img);
            if (!surjective_only || surj)
                out.push_back(GroupHom{img, surj});
            return;
        }
        for (size_t x = 0; x < g.order(); ++x) {
            img[k] = x;
            bool ok = true;
            for (size_t i : check_at[k])
                if (evaluate_word(g, img, rels[i]) != g.identity()) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, k + 1);
        }
    };
    if (p.n == 0) {
        if (!surjective_only || g.order() == 1)
            out.push_back(GroupHom{{}, g.order() == 1});
        return out;
    }
    rec(rec, 0);
    return out;
}

struct ClassPlan {
    std::vector<ConjugationRelation> rels;
    std::vector<size_t> classes; // indices into g.conjugacy_classes(), search order
};

ClassPlan plan_classes(const FiniteGroup& g, std::vector<ConjugationRelation> rels, bool surjective_only)
{
    ClassPlan plan;
    plan.rels = std::move(rels);
    const auto& cc = g.conjugacy_classes();
    for (size_t i = 0; i < cc.size(); ++i) {
        if (surjective_only && g.normal_closure({cc[i].front()}).size() != g.order())
            continue;
        plan.classes.push_back(i);
    }
    std::stable_sort(plan.classes.begin(), plan.classes.end(), [&](size_t a, size_t b) {
        if (cc[a].size() != cc[b].size())
            return cc[a].size() < cc[b].size();
        return cc[a].front() < cc[b].front();
    });
    return plan;
}

std::vector<std::vector<GroupHom>> pinned_by_class(const KnotPresentation& p, const FiniteGroup& g,
                                                   const ClassPlan& plan, bool surjective_only, unsigned threads)
{
    const auto& cc = g.conjugacy_classes();
    std::vector<std::vector<GroupHom>> res(plan.classes.size());
    parallel_for(plan.classes.size(), threads, [&](size_t i) {
        PinnedSearch s(p, g, plan.rels, cc[plan.classes[i]], surjective_only);
        res[i] = s.run();
    });
    return res;
}

} // namespace

GroupHom conjugate_hom(const GroupHom& h, const FiniteGroup& g, size_t by)
{
    GroupHom r = h;
    for (auto& x : r.images)
        x = g.conj(by, x);
    return r;
}

size_t orbit_size(const GroupHom& h, const FiniteGroup& g)
{
    size_t stab = 0;
    for (size_t y = 0; y < g.order(); ++y) {
        bool fixes = true;
        for (size_t x : h.images)
            if (g.mul(y, x) != g.mul(x, y)) {
                fixes = false;
                break;
            }
        stab += fixes ? 1 : 0;
    }
    return g.order() / stab;
}

std::vector<GroupHom> enumerate_homs(const KnotPresentation& p, const FiniteGroup& g, bool surjective_only,
                                     unsigned threads)
{
    auto rels = p.n > 0 ? p.conjugation_relations() : std::nullopt;
    if (!rels)
        return backtrack_all(p, g, surjective_only);
    ClassPlan plan = plan_classes(g, std::move(*rels), surjective_only);
    std::set<GroupHom> all;
    for (const auto& part : pinned_by_class(p, g, plan, surjective_only, threads))
        for (const auto& h : part)
            for (size_t y = 0; y < g.order(); ++y)
                all.insert(conjugate_hom(h, g, y));
    return {all.begin(), all.end()};
}

std::vector<HomOrbit> enumerate_orbit_reps(const KnotPresentation& p, const FiniteGroup& g,
                                           const EpiSearchOptions& opt)
{
    auto rels = p.n > 0 ? p.conjugation_relations() : std::nullopt;
    if (!rels)
        return reduce_by_conjugation(backtrack_all(p, g, opt.surjective_only), g);
    ClassPlan plan = plan_classes(g, std::move(*rels), opt.surjective_only);
    auto parts = pinned_by_class(p, g, plan, opt.surjective_only, opt.threads);
    const auto& cc = g.conjugacy_classes();
    std::vector<HomOrbit> out;
    for (size_t i = 0; i < parts.size(); ++i) {
        size_t c0 = cc[plan.classes[i]].front();
        std::vector<size_t> centralizer;
        for (size_t y = 0; y < g.order(); ++y)
            if (g.mul(y, c0) == g.mul(c0, y))
                centralizer.push_back(y);
        // the pinned homs of one orbit form a single orbit of the centralizer
        // of the pinned image; the orbit minimum is pinned since c0 is the
        // smallest class element
        std::set<GroupHom> seen;
        for (const auto& h : parts[i]) {
            if (seen.count(h))
                continue;
            GroupHom best = h;
            for (size_t y : centralizer) {
                GroupHom c = conjugate_hom(h, g, y);
                best = std::min(best, c);
                seen.insert(std::move(c));
            }
            best.surjective = h.surjective;
            out.push_back(HomOrbit{best, orbit_size(best, g)});
        }
    }
    std::sort(out.begin(), out.end(), [](const HomOrbit& a, const HomOrbit& b) { return a.rep < b.rep; });
    return out;
}

std::vector<HomOrbit> reduce_by_conjugation(const std::vector<GroupHom>& homs, const FiniteGroup& g)
{
    std::set<GroupHom> input(homs.begin(), homs.end());
    std::set<GroupHom> seen;
    std::vector<HomOrbit> out;
    for (const auto& h : input) {
        if (seen.count(h))
            continue;
        std::set<GroupHom> orbit;
        for (size_t y = 0; y < g.order(); ++y)
            orbit.insert(conjugate_hom(h, g, y));
        for (const auto& o : orbit) {
            auto it = input.find(o);
            if (it == input.end())
                fail(ErrorKind::NotClosedUnderAction,
                     "conjugate " + hom_to_string(o) + " of " + hom_to_string(h) + " is missing");
            seen.insert(o);
        }
        // input is sorted, so h is the orbit minimum
        out.push_back(HomOrbit{h, orbit.size()});
    }
    return out;
}

} // namespace tav
