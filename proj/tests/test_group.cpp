#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "tav/catalog.hpp"
#include "tav/classifier.hpp"
#include "tav/coset_enum.hpp"
#include "tav/finite_group.hpp"
#include "tav/permutation.hpp"
#include "test_util.hpp"

using namespace tav;
using tavtest::error_kind;
using tavtest::perm_closure;
using tavtest::perm_inv;
using tavtest::perm_mul;

namespace {

FiniteGroup cyclic(uint32_t n)
{
    Perm c(n);
    for (uint32_t i = 0; i < n; ++i)
        c[i] = (i + 1) % n;
    return FiniteGroup::from_generators(n, {c});
}

FiniteGroup s4()
{
    return FiniteGroup::from_generators(4, {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)});
}

std::vector<Perm> elements(const FiniteGroup& g)
{
    std::vector<Perm> out;
    for (size_t i = 0; i < g.order(); ++i)
        out.push_back(g.element(i));
    return out;
}

std::set<Perm> as_perms(const FiniteGroup& g, const std::vector<size_t>& idx)
{
    std::set<Perm> out;
    for (size_t i : idx)
        out.insert(g.element(i));
    return out;
}

// conjugacy classes by brute force over all pairs, keyed by smallest index
std::vector<std::vector<size_t>> brute_classes(const FiniteGroup& g)
{
    std::vector<Perm> el = elements(g);
    std::map<Perm, size_t> idx;
    for (size_t i = 0; i < el.size(); ++i)
        idx[el[i]] = i;
    std::vector<bool> done(el.size());
    std::vector<std::vector<size_t>> out;
    for (size_t x = 0; x < el.size(); ++x) {
        if (done[x])
            continue;
        std::set<size_t> cls;
        for (const auto& h : el)
            cls.insert(idx.at(perm_mul(perm_mul(h, el[x]), perm_inv(h))));
        for (size_t c : cls)
            done[c] = true;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

std::set<Perm> brute_normal_closure(const FiniteGroup& g, const Perm& seed)
{
    std::vector<Perm> conj;
    for (const auto& h : elements(g))
        conj.push_back(perm_mul(perm_mul(h, seed), perm_inv(h)));
    return perm_closure(conj, g.degree());
}

std::set<Perm> brute_commutator(const FiniteGroup& g)
{
    std::vector<Perm> comms;
    auto el = elements(g);
    for (const auto& a : el)
        for (const auto& b : el)
            comms.push_back(perm_mul(perm_mul(perm_mul(a, b), perm_inv(a)), perm_inv(b)));
    return perm_closure(comms, g.degree());
}

} // namespace

TEST(Permutation, Basics)
{
    Perm a = parse_cycles("(0 1 2)", 4);
    EXPECT_TRUE(is_permutation(a));
    EXPECT_FALSE(is_permutation(Perm{0, 0, 1}));
    EXPECT_EQ(compose(a, inverse(a)), identity_perm(4));
    // a then b
    Perm b = parse_cycles("(0 3)", 4);
    EXPECT_EQ(compose(a, b)[0], b[a[0]]);
    EXPECT_EQ(cycle_lengths(a), (std::vector<size_t>{3, 1}));
    EXPECT_EQ(parse_cycles(cycle_string(a), 4), a);
}

TEST(FiniteGroup, FromGenerators)
{
    FiniteGroup s3 = FiniteGroup::from_generators(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
    EXPECT_EQ(s3.order(), 6u);
    EXPECT_EQ(cyclic(4).order(), 4u);
    EXPECT_TRUE(cyclic(4).is_abelian());
    FiniteGroup g = s4();
    EXPECT_EQ(g.order(), 24u);
    EXPECT_FALSE(g.is_abelian());
    EXPECT_EQ(g.element(g.identity()), identity_perm(4));
    EXPECT_EQ(as_perms(g, g.subgroup_closure(g.generator_indices())).size(), 24u);
    std::set<Perm> oracle = perm_closure(g.generators(), 4);
    std::vector<Perm> el = elements(g);
    EXPECT_EQ(std::set<Perm>(el.begin(), el.end()), oracle);
}

TEST(FiniteGroup, OrderBound)
{
    auto k = error_kind([] { FiniteGroup::from_generators(6, {parse_cycles("(0 1)", 6), parse_cycles("(0 1 2 3 4 5)", 6)}, 100); });
    EXPECT_EQ(k, ErrorKind::OrderBoundExceeded);
}

TEST(FiniteGroup, ArithmeticMatchesPermutations)
{
    FiniteGroup g = s4();
    for (size_t a = 0; a < g.order(); ++a) {
        EXPECT_EQ(g.element(g.inv(a)), perm_inv(g.element(a)));
        for (size_t b = 0; b < g.order(); ++b) {
            EXPECT_EQ(g.element(g.mul(a, b)), perm_mul(g.element(a), g.element(b)));
            EXPECT_EQ(g.element(g.conj(a, b)), perm_mul(perm_mul(g.element(a), g.element(b)), perm_inv(g.element(a))));
        }
        EXPECT_EQ(g.evaluate(g.word_for(a)), a);
        EXPECT_EQ(g.pow(a, static_cast<int64_t>(g.element_order(a))), g.identity());
    }
}

TEST(CosetEnumeration, CyclicFive)
{
    GroupPresentation p{1, {parse_word("g1^5")}};
    FiniteGroup g = coset_enumeration(p, {});
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.degree(), 5u);
    EXPECT_TRUE(g.is_abelian());
}

TEST(CosetEnumeration, SymmetricThree)
{
    GroupPresentation p{2, {parse_word("g1^2"), parse_word("g2^3"), parse_word("g1 g2 g1 g2")}};
    CosetTable t = enumerate_cosets(p, {});
    EXPECT_EQ(t.cosets, 6u);
    FiniteGroup g = coset_enumeration(p, {});
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.degree(), 6u);
    EXPECT_FALSE(g.is_abelian());
    // relators act trivially on every coset
    for (const auto& r : p.relators)
        EXPECT_EQ(g.evaluate(r), g.identity());
    // index of <a> is 3
    EXPECT_EQ(enumerate_cosets(p, {parse_word("g1")}).cosets, 3u);
}

TEST(CosetEnumeration, OrderNinetySixFromCatalog)
{
    const CatalogEntry& e = tavtest::catalog().find("96-C2^2_S4");
    ASSERT_TRUE(e.presentation);
    FiniteGroup g = coset_enumeration(*e.presentation, {});
    EXPECT_EQ(g.order(), 96u);
    EXPECT_EQ(g.degree(), 96u);
    for (const auto& r : e.presentation->relators)
        EXPECT_EQ(g.evaluate(r), g.identity());
    EXPECT_EQ(e.group->order(), 96u);
    // a knot group quotient: commutator of index 2, trivial center
    EXPECT_EQ(e.group->commutator_subgroup().size(), 48u);
    size_t central = 0;
    for (size_t x = 0; x < g.order(); ++x) {
        bool c = true;
        for (size_t y = 0; y < g.order() && c; ++y)
            c = g.mul(x, y) == g.mul(y, x);
        central += c ? 1 : 0;
    }
    EXPECT_EQ(central, 1u);
}

TEST(CosetEnumeration, BoundExceeded)
{
    // infinite dihedral group
    GroupPresentation p{2, {parse_word("g1^2"), parse_word("g2^2")}};
    EXPECT_EQ(error_kind([&] { enumerate_cosets(p, {}, 500); }), ErrorKind::EnumerationBoundExceeded);
}

TEST(ConjugacyClasses, Examples)
{
    FiniteGroup s3 = FiniteGroup::from_generators(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
    std::multiset<size_t> sizes;
    for (const auto& c : s3.conjugacy_classes())
        sizes.insert(c.size());
    EXPECT_EQ(sizes, (std::multiset<size_t>{1, 2, 3}));
    EXPECT_EQ(s3.conjugacy_classes().size(), 3u);

    FiniteGroup z4 = cyclic(4);
    EXPECT_EQ(z4.conjugacy_classes().size(), 4u);
    for (const auto& c : z4.conjugacy_classes())
        EXPECT_EQ(c.size(), 1u);

    FiniteGroup g = s4();
    sizes.clear();
    for (const auto& c : g.conjugacy_classes())
        sizes.insert(c.size());
    EXPECT_EQ(sizes, (std::multiset<size_t>{1, 3, 6, 6, 8}));
}

TEST(ConjugacyClasses, MatchBruteForceOnCatalog)
{
    for (const auto& e : tavtest::catalog().entries) {
        if (e.order > 60)
            continue;
        const FiniteGroup& g = *e.group;
        EXPECT_EQ(g.conjugacy_classes(), brute_classes(g)) << e.id;
        for (size_t c = 0; c < g.conjugacy_classes().size(); ++c)
            for (size_t x : g.conjugacy_classes()[c])
                EXPECT_EQ(g.class_of(x), c);
    }
}

TEST(NormalClosure, Examples)
{
    FiniteGroup g = s4();
    size_t transposition = g.index_of(parse_cycles("(0 1)", 4));
    size_t double_tr = g.index_of(parse_cycles("(0 1)(2 3)", 4));
    EXPECT_EQ(g.normal_closure({transposition}).size(), 24u);
    EXPECT_EQ(g.normal_closure({double_tr}).size(), 4u);
    EXPECT_EQ(as_perms(g, g.normal_closure({double_tr})), brute_normal_closure(g, g.element(double_tr)));
    EXPECT_EQ(g.normal_closure({g.identity()}), std::vector<size_t>{g.identity()});
    for (size_t x = 0; x < g.order(); ++x)
        EXPECT_EQ(as_perms(g, g.normal_closure({x})), brute_normal_closure(g, g.element(x)));
}

TEST(CommutatorSubgroup, Examples)
{
    FiniteGroup g = s4();
    EXPECT_EQ(g.commutator_subgroup().size(), 12u);
    EXPECT_EQ(as_perms(g, g.commutator_subgroup()), brute_commutator(g));
    EXPECT_EQ(cyclic(6).commutator_subgroup().size(), 1u);
    const FiniteGroup& a4 = *tavtest::catalog().find("12-A4").group;
    EXPECT_EQ(a4.commutator_subgroup().size(), 4u);
    for (const auto& e : tavtest::catalog().entries)
        if (e.order <= 30)
            EXPECT_EQ(as_perms(*e.group, e.group->commutator_subgroup()), brute_commutator(*e.group)) << e.id;
}

TEST(Classifier, PGroup)
{
    EXPECT_TRUE(is_p_group(8).yes);
    EXPECT_EQ(is_p_group(8).prime, 2u);
    EXPECT_FALSE(is_p_group(12).yes);
    EXPECT_TRUE(is_p_group(1).yes);
    EXPECT_TRUE(is_p_group(81).yes);
    EXPECT_EQ(is_p_group(81).prime, 3u);
    EXPECT_TRUE(is_p_group(97).yes);
    EXPECT_FALSE(is_p_group(96).yes);
}

TEST(Classifier, Examples)
{
    const Catalog& cat = tavtest::catalog();
    TavVerdict a4 = classify_tav(*cat.find("12-A4").group);
    EXPECT_FALSE(a4.is_tav);
    EXPECT_TRUE(a4.commutator_is_p_group);
    EXPECT_EQ(a4.commutator_order, 4u);
    EXPECT_EQ(a4.commutator_prime, 2u);
    EXPECT_FALSE(a4.witness);
    EXPECT_NE(std::find(a4.reasons.begin(), a4.reasons.end(), kReasonPGroup), a4.reasons.end());

    TavVerdict d15 = classify_tav(*cat.find("30-D15").group);
    EXPECT_TRUE(d15.is_tav);
    EXPECT_EQ(d15.commutator_order, 15u);
    ASSERT_TRUE(d15.witness);
    EXPECT_EQ(d15.witness->tag, WitnessCase::CyclicPQ);
    EXPECT_EQ(d15.witness->elements.size(), 15u);

    FiniteGroup g = s4();
    TavVerdict v = classify_tav(g);
    EXPECT_TRUE(v.is_tav);
    EXPECT_TRUE(v.normally_single_generated);
    ASSERT_TRUE(v.normal_generator);
    EXPECT_EQ(g.normal_closure({*v.normal_generator}).size(), 24u);
    EXPECT_EQ(v.commutator_order, 12u);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->tag, WitnessCase::NonabelianPnQ);
    EXPECT_EQ(as_perms(g, v.witness->elements), brute_commutator(g));
    EXPECT_TRUE(v.reasons.empty());
}

TEST(Classifier, NotNormallyGenerated)
{
    // C2 x C2 x S3 has abelianization C2^3
    TavVerdict v = classify_tav(*tavtest::catalog().find("24-C2xC2xS3").group);
    EXPECT_FALSE(v.normally_single_generated);
    EXPECT_FALSE(v.is_tav);
    EXPECT_NE(std::find(v.reasons.begin(), v.reasons.end(), kReasonNotNormallyGenerated), v.reasons.end());
}

TEST(Classifier, MinimalNonPrimePowerSubgroup)
{
    FiniteGroup z15 = cyclic(15);
    std::vector<size_t> all15(15);
    std::iota(all15.begin(), all15.end(), 0);
    WitnessSubgroup w = minimal_nonprimepower_subgroup(z15, all15);
    EXPECT_EQ(w.elements.size(), 15u);
    EXPECT_EQ(w.tag, WitnessCase::CyclicPQ);

    const FiniteGroup& a4 = *tavtest::catalog().find("12-A4").group;
    std::vector<size_t> all12(12);
    std::iota(all12.begin(), all12.end(), 0);
    w = minimal_nonprimepower_subgroup(a4, all12);
    EXPECT_EQ(w.elements.size(), 12u);
    EXPECT_EQ(w.tag, WitnessCase::NonabelianPnQ);

    FiniteGroup z30 = cyclic(30);
    std::vector<size_t> all30(30);
    std::iota(all30.begin(), all30.end(), 0);
    w = minimal_nonprimepower_subgroup(z30, all30);
    EXPECT_EQ(w.elements.size(), 6u);
    EXPECT_EQ(w.tag, WitnessCase::CyclicPQ);
    EXPECT_EQ(w.elements, z30.subgroup_closure({w.gen_a, w.gen_b}));

    FiniteGroup z8 = cyclic(8);
    std::vector<size_t> all8(8);
    std::iota(all8.begin(), all8.end(), 0);
    EXPECT_EQ(error_kind([&] { minimal_nonprimepower_subgroup(z8, all8); }), ErrorKind::PrimePowerInput);
}

TEST(Classifier, CatalogProperties)
{
    for (const auto& e : tavtest::catalog().entries) {
        const FiniteGroup& g = *e.group;
        if (g.order() > 120)
            continue;
        TavVerdict v = classify_tav(g);
        EXPECT_EQ(v.is_tav, v.normally_single_generated && !v.commutator_is_p_group) << e.id;
        if (g.is_abelian())
            EXPECT_FALSE(v.is_tav) << e.id;
        if (e.order < 24)
            EXPECT_FALSE(v.is_tav) << e.id;
        if (!v.commutator_is_p_group && !v.witness_skipped) {
            ASSERT_TRUE(v.witness) << e.id;
            EXPECT_FALSE(is_p_group(v.witness->elements.size()).yes);
        }
        if (v.commutator_is_p_group)
            EXPECT_FALSE(v.witness) << e.id;
        if (v.normally_single_generated) {
            // G/[G,G] cyclic: some element generates G together with [G,G]
            std::vector<size_t> comm = g.commutator_subgroup();
            bool cyclic_quotient = false;
            for (size_t x = 0; x < g.order() && !cyclic_quotient; ++x) {
                std::vector<size_t> gens = comm;
                gens.push_back(x);
                cyclic_quotient = g.subgroup_closure(gens).size() == g.order();
            }
            EXPECT_TRUE(cyclic_quotient) << e.id;
        }
    }
}

TEST(Catalog, ElementListsAreClosed)
{
    auto& r = tavtest::rng();
    for (const auto& e : tavtest::catalog().entries) {
        const FiniteGroup& g = *e.group;
        EXPECT_EQ(g.order(), e.order) << e.id;
        for (int k = 0; k < 50; ++k) {
            const Perm& a = g.element(static_cast<size_t>(tavtest::uniform(r, 0, static_cast<int64_t>(g.order()) - 1)));
            const Perm& b = g.element(static_cast<size_t>(tavtest::uniform(r, 0, static_cast<int64_t>(g.order()) - 1)));
            EXPECT_TRUE(g.find(perm_mul(a, b))) << e.id;
            EXPECT_TRUE(g.find(perm_inv(a))) << e.id;
        }
    }
}

TEST(Catalog, CompleteOrdersAndLookup)
{
    const Catalog& cat = tavtest::catalog();
    for (size_t n = 1; n <= 30; ++n)
        EXPECT_TRUE(cat.complete(n));
    EXPECT_FALSE(cat.complete(96));
    EXPECT_EQ(cat.in_order_range(1, 23).size(), 59u);
    EXPECT_EQ(cat.find("S4").id, "24-S4");
    EXPECT_EQ(error_kind([&] { cat.find("no-such-group"); }), ErrorKind::GroupNotFound);
    EXPECT_TRUE(cat.diagnostics.empty());
}

TEST(Catalog, ParseErrorsAndDiagnostics)
{
    std::string good = "{\"meta\":{\"complete_orders\":[2]}}\n{\"id\":\"2-C2\",\"name\":\"C2\",\"order\":2,\"degree\":2,\"generators\":[[1,0]]}\n";
    Catalog c = parse_catalog(good);
    EXPECT_EQ(c.entries.size(), 1u);

    EXPECT_EQ(error_kind([&] { parse_catalog(good + "{not json\n"); }), ErrorKind::ParseError);
    try {
        parse_catalog(good + "{\"id\":\"x\",\"name\":\"x\",\"order\":3,\"degree\":2,\"generators\":[[1,0]]}\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }

    // over the order bound: skipped with a diagnostic
    std::string big = "{\"id\":\"6-S3\",\"name\":\"S3\",\"order\":6,\"degree\":3,\"generators\":[[1,0,2],[1,2,0]]}\n";
    Catalog d = parse_catalog(good + big, 4);
    EXPECT_EQ(d.entries.size(), 1u);
    EXPECT_EQ(d.diagnostics.size(), 1u);
}

TEST(RegularRepresentation, Examples)
{
    FiniteGroup z2 = cyclic(2);
    auto id = regular_representation(z2, z2.identity());
    EXPECT_EQ(id, (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
    EXPECT_EQ(regular_representation(z2, 1), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
}

TEST(RegularRepresentation, HomomorphismAndFaithful)
{
    auto matmul = [](const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
        size_t n = a.size();
        std::vector<std::vector<int>> c(n, std::vector<int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (a[i][k])
                    for (size_t j = 0; j < n; ++j)
                        c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    FiniteGroup s3 = FiniteGroup::from_generators(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
    int pairs = 0;
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b, ++pairs)
            EXPECT_EQ(matmul(regular_representation(s3, a), regular_representation(s3, b)),
                      regular_representation(s3, s3.mul(a, b)));
    EXPECT_EQ(pairs, 36);

    for (const auto& e : tavtest::catalog().entries) {
        if (e.order > 24)
            continue;
        const FiniteGroup& g = *e.group;
        for (size_t x = 0; x < g.order(); ++x) {
            Perm p = regular_permutation(g, x);
            EXPECT_EQ(is_identity(p), x == g.identity()) << e.id;
            for (size_t y = 0; y < g.order(); ++y)
                EXPECT_EQ(compose(p, regular_permutation(g, y)), regular_permutation(g, g.mul(x, y))) << e.id;
        }
    }
}

TEST(Representations, CatalogActions)
{
    const CatalogEntry& e = tavtest::catalog().find("96-C2^2_S4");
    Representation deg8 = make_representation(e, "deg8");
    EXPECT_EQ(deg8.degree, 8u);
    EXPECT_EQ(deg8.images.size(), 96u);
    const FiniteGroup& g = *e.group;
    std::set<Perm> distinct(deg8.images.begin(), deg8.images.end());
    EXPECT_EQ(distinct.size(), 96u); // faithful
    for (size_t x = 0; x < g.order(); x += 7)
        for (size_t y = 0; y < g.order(); y += 5)
            EXPECT_EQ(compose(deg8.images[x], deg8.images[y]), deg8.images[g.mul(x, y)]);
    Representation reg = make_representation(e, "regular");
    EXPECT_EQ(reg.degree, 96u);
    EXPECT_EQ(error_kind([&] { make_representation(e, "deg5"); }), ErrorKind::InvalidArgument);
}
