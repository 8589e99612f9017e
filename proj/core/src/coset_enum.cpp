#include "tav/coset_enum.hpp"

#include <array>
#include <deque>

#include "tav/error.hpp"

namespace tav {

namespace {

constexpr uint32_t kNone = UINT32_MAX;

class Enumerator {
public:
    Enumerator(uint32_t ngens, size_t bound) : cols_(2 * ngens), bound_(bound) { new_coset(); }

    static uint32_t col(const Letter& l) { return 2 * l.gen + (l.exp > 0 ? 0 : 1); }
    static uint32_t inv_col(uint32_t c) { return c ^ 1u; }

    uint32_t& entry(uint32_t c, uint32_t x) { return table_[static_cast<size_t>(c) * cols_ + x]; }

    bool live(uint32_t c) const { return parent_[c] == c; }

    uint32_t rep(uint32_t c)
    {
        uint32_t r = c;
        while (parent_[r] != r)
            r = parent_[r];
        while (parent_[c] != r) {
            uint32_t n = parent_[c];
            parent_[c] = r;
            c = n;
        }
        return r;
    }

    uint32_t new_coset()
    {
        if (parent_.size() >= bound_)
            fail(ErrorKind::EnumerationBoundExceeded,
                 "coset table exceeded " + std::to_string(bound_) + " rows");
        uint32_t c = static_cast<uint32_t>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + cols_, kNone);
        return c;
    }

    void define(uint32_t c, uint32_t x)
    {
        uint32_t n = new_coset();
        entry(c, x) = n;
        entry(n, inv_col(x)) = c;
    }

    void merge(uint32_t k, uint32_t l, std::deque<uint32_t>& q)
    {
        k = rep(k);
        l = rep(l);
        if (k == l)
            return;
        if (k > l)
            std::swap(k, l);
        parent_[l] = k;
        q.push_back(l);
    }

    void coincidence(uint32_t a, uint32_t b)
    {
        std::deque<uint32_t> q;
        merge(a, b, q);
        while (!q.empty()) {
            uint32_t e = q.front();
            q.pop_front();
            for (uint32_t x = 0; x < cols_; ++x) {
                uint32_t f = entry(e, x);
                if (f == kNone)
                    continue;
                if (entry(f, inv_col(x)) == e)
                    entry(f, inv_col(x)) = kNone;
                uint32_t e1 = rep(e), f1 = rep(f);
                if (entry(e1, x) != kNone) {
                    merge(f1, entry(e1, x), q);
                } else if (entry(f1, inv_col(x)) != kNone) {
                    merge(e1, entry(f1, inv_col(x)), q);
                } else {
                    entry(e1, x) = f1;
                    entry(f1, inv_col(x)) = e1;
                }
            }
        }
    }

    void scan_and_fill(uint32_t c, const Word& w)
    {
        if (w.empty())
            return;
        uint32_t f = c, b = c;
        size_t i = 0, j = w.size() - 1;
        for (;;) {
            while (i <= j && entry(f, col(w[i])) != kNone) {
                f = entry(f, col(w[i]));
                ++i;
            }
            if (i > j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv_col(col(w[j]))) != kNone) {
                b = entry(b, inv_col(col(w[j])));
                if (j == 0) {
                    // fully scanned backwards
                    coincidence(f, b);
                    return;
                }
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                entry(f, col(w[i])) = b;
                entry(b, inv_col(col(w[i]))) = f;
                return;
            }
            define(f, col(w[i]));
        }
    }

    CosetTable run(const GroupPresentation& p, const std::vector<Word>& subgroup)
    {
        for (const auto& w : subgroup)
            if (live(0))
                scan_and_fill(0, w);
        for (uint32_t c = 0; c < parent_.size(); ++c) {
            for (const auto& r : p.relators) {
                if (!live(c))
                    break;
                scan_and_fill(c, r);
            }
            if (!live(c))
                continue;
            for (uint32_t x = 0; x < cols_; ++x)
                if (live(c) && entry(c, x) == kNone)
                    define(c, x);
        }
        // compact
        std::vector<uint32_t> number(parent_.size(), kNone);
        uint32_t count = 0;
        for (uint32_t c = 0; c < parent_.size(); ++c)
            if (live(c))
                number[c] = count++;
        CosetTable t;
        t.cosets = count;
        for (uint32_t g = 0; g < cols_ / 2; ++g) {
            Perm act(count);
            for (uint32_t c = 0; c < parent_.size(); ++c)
                if (live(c))
                    act[number[c]] = number[rep(entry(c, 2 * g))];
            t.actions.push_back(std::move(act));
        }
        return t;
    }

private:
    uint32_t cols_;
    size_t bound_;
    std::vector<uint32_t> table_;
    std::vector<uint32_t> parent_;
};

} // namespace

CosetTable enumerate_cosets(const GroupPresentation& p, const std::vector<Word>& subgroup, size_t max_cosets)
{
    for (const auto& r : p.relators)
        for (const auto& l : r)
            if (l.gen >= p.generators)
                fail(ErrorKind::InvalidArgument, "relator letter outside the generator range");
    Enumerator e(p.generators, max_cosets);
    return e.run(p, subgroup);
}

FiniteGroup coset_enumeration(const GroupPresentation& p, const std::vector<Word>& subgroup, size_t max_cosets,
                              size_t order_bound)
{
    CosetTable t = enumerate_cosets(p, subgroup, max_cosets);
    return FiniteGroup::from_generators(t.cosets, t.actions, order_bound);
}

} // namespace tav
