#include "tav/classifier.hpp"

#include <algorithm>

#include "tav/error.hpp"

namespace tav {

PGroupResult is_p_group(uint64_t order)
{
    if (order == 0)
        fail(ErrorKind::InvalidArgument, "order 0");
    if (order == 1)
        return {true, 0};
    uint64_t p = 0;
    for (uint64_t d = 2; d * d <= order; ++d) {
        if (order % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0)
        return {true, order};
    while (order % p == 0)
        order /= p;
    if (order == 1)
        return {true, p};
    return {false, 0};
}

const char* witness_case_name(WitnessCase c)
{
    return c == WitnessCase::CyclicPQ ? "cyclic-pq" : "nonabelian-p^n-q";
}

namespace {

uint64_t smallest_prime(uint64_t n)
{
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return d;
    return n;
}

} // namespace

WitnessSubgroup minimal_nonprimepower_subgroup(const FiniteGroup& g, const std::vector<size_t>& h)
{
    if (is_p_group(h.size()).yes)
        fail(ErrorKind::PrimePowerInput, "subgroup of order " + std::to_string(h.size()) + " is a p-group");
    // A minimal subgroup of non-prime-power order is generated by an element
    // of prime order p and one of prime order q != p.
    std::vector<std::pair<size_t, uint64_t>> prime_order;
    for (size_t x : h) {
        size_t o = g.element_order(x);
        if (o > 1 && smallest_prime(o) == o)
            prime_order.emplace_back(x, o);
    }
    std::optional<WitnessSubgroup> best;
    for (const auto& [a, pa] : prime_order) {
        for (const auto& [b, pb] : prime_order) {
            if (b <= a || pa == pb)
                continue;
            std::vector<size_t> k = g.subgroup_closure({a, b});
            if (!best || k.size() < best->elements.size()) {
                WitnessSubgroup w;
                w.elements = std::move(k);
                w.gen_a = a;
                w.gen_b = b;
                best = std::move(w);
            }
        }
    }
    if (!best)
        fail(ErrorKind::InvalidArgument, "no non-prime-power subgroup found");
    bool abelian = true;
    for (size_t x : best->elements) {
        if (g.mul(x, best->gen_a) != g.mul(best->gen_a, x) || g.mul(x, best->gen_b) != g.mul(best->gen_b, x)) {
            abelian = false;
            break;
        }
    }
    best->tag = abelian ? WitnessCase::CyclicPQ : WitnessCase::NonabelianPnQ;
    return *best;
}

TavVerdict classify_tav(const FiniteGroup& g, size_t witness_bound)
{
    TavVerdict v;
    size_t n = g.order();
    for (const auto& cls : g.conjugacy_classes()) {
        if (g.normal_closure({cls.front()}).size() == n) {
            v.normally_single_generated = true;
            v.normal_generator = cls.front();
            break;
        }
    }
    std::vector<size_t> comm = g.commutator_subgroup();
    v.commutator_order = comm.size();
    PGroupResult pg = is_p_group(comm.size());
    v.commutator_is_p_group = pg.yes;
    v.commutator_prime = pg.prime;
    v.is_tav = v.normally_single_generated && !v.commutator_is_p_group;

    if (v.normally_single_generated) {
        // G/[G,G] must then be cyclic, generated by the image of the witness
        std::vector<size_t> gens = comm;
        gens.push_back(*v.normal_generator);
        if (g.subgroup_closure(gens).size() != n)
            fail(ErrorKind::InvalidArgument, "abelianization of a normally single generated group is not cyclic");
    }
    if (!v.normally_single_generated)
        v.reasons.emplace_back(kReasonNotNormallyGenerated);
    if (v.commutator_is_p_group)
        v.reasons.emplace_back(kReasonPGroup);
    if (!v.commutator_is_p_group) {
        if (comm.size() <= witness_bound)
            v.witness = minimal_nonprimepower_subgroup(g, comm);
        else
            v.witness_skipped = true;
    }
    return v;
}

} // namespace tav
