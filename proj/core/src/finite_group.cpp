#include "tav/finite_group.hpp"

#include <algorithm>
#include <deque>

#include "tav/error.hpp"

namespace tav {

namespace {
constexpr size_t kTableLimit = 1024;
}

std::string FiniteGroup::key(const Perm& p)
{
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(uint32_t));
}

FiniteGroup FiniteGroup::from_generators(size_t degree, const std::vector<Perm>& gens, size_t order_bound)
{
    FiniteGroup g;
    g.degree_ = degree;
    g.gens_ = gens;
    for (const auto& p : gens)
        if (p.size() != degree || !is_permutation(p))
            fail(ErrorKind::InvalidArgument, "generator is not a permutation of degree " + std::to_string(degree));

    Perm id = identity_perm(degree);
    g.elements_.push_back(id);
    g.parent_.push_back(0);
    g.parent_gen_.push_back(0);
    g.index_.emplace(key(id), 0);
    for (size_t i = 0; i < g.elements_.size(); ++i) {
        for (uint32_t k = 0; k < gens.size(); ++k) {
            Perm next = compose(g.elements_[i], gens[k]);
            auto [it, fresh] = g.index_.emplace(key(next), g.elements_.size());
            if (!fresh)
                continue;
            if (g.elements_.size() >= order_bound)
                fail(ErrorKind::OrderBoundExceeded, "group order exceeds " + std::to_string(order_bound));
            g.elements_.push_back(std::move(next));
            g.parent_.push_back(i);
            g.parent_gen_.push_back(k);
        }
    }
    size_t n = g.elements_.size();
    for (const auto& p : gens)
        g.gen_index_.push_back(g.index_of(p));
    if (n <= kTableLimit) {
        g.table_.resize(n * n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                g.table_[a * n + b] = static_cast<uint32_t>(g.index_of(compose(g.elements_[a], g.elements_[b])));
    }
    g.inv_.resize(n);
    for (size_t a = 0; a < n; ++a)
        g.inv_[a] = g.index_of(inverse(g.elements_[a]));

    // conjugacy classes: orbits under conjugation by generators
    g.class_index_.assign(n, SIZE_MAX);
    for (size_t x = 0; x < n; ++x) {
        if (g.class_index_[x] != SIZE_MAX)
            continue;
        size_t ci = g.classes_.size();
        std::vector<size_t> cls{x};
        g.class_index_[x] = ci;
        for (size_t q = 0; q < cls.size(); ++q) {
            for (size_t gi : g.gen_index_) {
                size_t y = g.conj(gi, cls[q]);
                if (g.class_index_[y] == SIZE_MAX) {
                    g.class_index_[y] = ci;
                    cls.push_back(y);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        g.classes_.push_back(std::move(cls));
    }
    return g;
}

std::optional<size_t> FiniteGroup::find(const Perm& p) const
{
    auto it = index_.find(key(p));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

size_t FiniteGroup::index_of(const Perm& p) const
{
    auto it = index_.find(key(p));
    if (it == index_.end())
        fail(ErrorKind::InvalidArgument, "permutation " + cycle_string(p) + " is not a group element");
    return it->second;
}

size_t FiniteGroup::mul(size_t a, size_t b) const
{
    if (!table_.empty())
        return table_[a * elements_.size() + b];
    return index_of(compose(elements_[a], elements_[b]));
}

size_t FiniteGroup::pow(size_t a, int64_t e) const
{
    size_t base = e < 0 ? inv_[a] : a;
    uint64_t n = static_cast<uint64_t>(e < 0 ? -e : e);
    size_t r = 0;
    while (n) {
        if (n & 1)
            r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

size_t FiniteGroup::element_order(size_t a) const
{
    size_t k = 1;
    for (size_t x = a; x != 0; x = mul(x, a))
        ++k;
    return k;
}

size_t FiniteGroup::evaluate(const Word& w) const
{
    size_t r = 0;
    for (const auto& l : w) {
        if (l.gen >= gen_index_.size())
            fail(ErrorKind::InvalidArgument, "word uses generator " + std::to_string(l.gen + 1) + " of " +
                                                 std::to_string(gen_index_.size()));
        size_t g = gen_index_[l.gen];
        r = mul(r, l.exp > 0 ? g : inv_[g]);
    }
    return r;
}

Word FiniteGroup::word_for(size_t i) const
{
    Word w;
    while (i != 0) {
        w.push_back(Letter{parent_gen_[i], 1});
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

bool FiniteGroup::is_abelian() const
{
    for (size_t a : gen_index_)
        for (size_t b : gen_index_)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::vector<size_t> FiniteGroup::subgroup_closure(const std::vector<size_t>& gens) const
{
    std::vector<char> in(order(), 0);
    std::vector<size_t> elems{0};
    in[0] = 1;
    for (size_t q = 0; q < elems.size(); ++q) {
        for (size_t gi : gens) {
            size_t y = mul(elems[q], gi);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<size_t> FiniteGroup::normal_closure(const std::vector<size_t>& seeds) const
{
    std::vector<size_t> gens;
    std::vector<char> seen(order(), 0);
    for (size_t s : seeds) {
        for (size_t c : classes_[class_index_[s]]) {
            if (!seen[c]) {
                seen[c] = 1;
                gens.push_back(c);
            }
        }
    }
    return subgroup_closure(gens);
}

std::vector<size_t> FiniteGroup::commutator_subgroup() const
{
    // normal closure of commutators of generators
    std::vector<size_t> seeds;
    for (size_t a : gen_index_)
        for (size_t b : gen_index_)
            seeds.push_back(mul(mul(inv_[a], inv_[b]), mul(a, b)));
    return normal_closure(seeds);
}

const std::vector<std::vector<size_t>>& FiniteGroup::conjugacy_classes() const
{
    return classes_;
}

size_t FiniteGroup::class_of(size_t g) const
{
    return class_index_.at(g);
}

Perm regular_permutation(const FiniteGroup& g, size_t elem)
{
    Perm p(g.order());
    for (size_t h = 0; h < g.order(); ++h)
        p[h] = static_cast<uint32_t>(g.mul(h, elem));
    return p;
}

std::vector<std::vector<int>> regular_representation(const FiniteGroup& g, size_t elem)
{
    Perm p = regular_permutation(g, elem);
    std::vector<std::vector<int>> m(p.size(), std::vector<int>(p.size(), 0));
    for (size_t i = 0; i < p.size(); ++i)
        m[i][p[i]] = 1;
    return m;
}

} // namespace tav
