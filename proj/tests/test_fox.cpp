#include <gtest/gtest.h>

#include "tav/epi_search.hpp"
#include "tav/fox.hpp"
#include "tav/knot_table.hpp"
#include "test_util.hpp"

using namespace tav;
using tavtest::error_kind;

namespace {

LaurentPoly T(int64_t e = 1)
{
    return LaurentPoly::monomial(1, e);
}

LaurentPoly P(std::initializer_list<long> coeffs)
{
    std::vector<mpz_class> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return LaurentPoly::from_coeffs(c);
}

GroupRingElement W(const std::string& s, long c = 1)
{
    return GroupRingElement::of(parse_word(s), c);
}

const FiniteGroup& group(const std::string& id)
{
    return *tavtest::catalog().find(id).group;
}

// images of phi mod n into a cyclic group generated by gen
std::vector<size_t> cyclic_images(const KnotPresentation& p, const FiniteGroup& g, size_t gen)
{
    std::vector<size_t> im;
    for (int64_t d : p.phi)
        im.push_back(g.pow(gen, d));
    return im;
}

// num_a / den_a == num_b / den_b up to units
bool same_quotient(const TwistedResult& a, const TwistedResult& b)
{
    return equal_up_to_units(*a.numerator_det * b.denominator, *b.numerator_det * a.denominator);
}

} // namespace

TEST(Fox, DerivativeExamples)
{
    EXPECT_EQ(fox_derivative(parse_word("x1 x2"), 0), GroupRingElement::one());
    EXPECT_EQ(fox_derivative(parse_word("x1 x2"), 1), W("x1"));
    EXPECT_TRUE(fox_derivative(parse_word("x2 x3"), 0).is_zero());
    EXPECT_EQ(fox_derivative(parse_word("x1^-1"), 0), W("x1^-1", -1));
    // trefoil relator x y x y^-1 x^-1 y^-1
    GroupRingElement d = fox_derivative(parse_word("x1 x2 x1 x2^-1 x1^-1 x2^-1"), 0);
    EXPECT_EQ(d, GroupRingElement::one() + W("x1 x2") - W("x1 x2 x1 x2^-1 x1^-1"));
}

TEST(Fox, FundamentalIdentity)
{
    std::mt19937_64 r(77);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = tavtest::random_word(r, 3, 12);
        GroupRingElement sum;
        for (uint32_t j = 0; j < 3; ++j)
            sum += fox_derivative(w, j) * (GroupRingElement::of(Word{{j, 1}}) - GroupRingElement::one());
        EXPECT_EQ(sum, GroupRingElement::of(w) - GroupRingElement::one()) << word_to_string(w);
    }
}

TEST(Fox, ProductRule)
{
    std::mt19937_64 r(78);
    for (int trial = 0; trial < 100; ++trial) {
        Word u = tavtest::random_word(r, 3, 8), v = tavtest::random_word(r, 3, 8);
        for (uint32_t j = 0; j < 3; ++j)
            EXPECT_EQ(fox_derivative(concat(u, v), j),
                      fox_derivative(u, j) + GroupRingElement::of(u) * fox_derivative(v, j));
    }
}

TEST(PhiMap, Examples)
{
    KnotPresentation p = tavtest::knots().resolve("3_1");
    const FiniteGroup& c2 = group("2-C2");
    size_t g = c2.generator_indices()[0];
    TwistedSetup s = make_setup(p, c2, {g, g, g}, nullptr);
    PolyMatrix id = phi_map(GroupRingElement::one(), s);
    EXPECT_EQ(id, PolyMatrix::identity(2));

    PolyMatrix m = phi_map(W("x1") - GroupRingElement::one(), s);
    PolyMatrix expect(2, 2);
    expect.at(0, 0) = LaurentPoly(-1);
    expect.at(0, 1) = T();
    expect.at(1, 0) = T();
    expect.at(1, 1) = LaurentPoly(-1);
    EXPECT_EQ(m, expect);

    const FiniteGroup& c1 = group("1-C1");
    TwistedSetup t = make_setup(p, c1, {0, 0, 0}, nullptr);
    PolyMatrix x = phi_map(W("x2"), t);
    ASSERT_EQ(x.rows(), 1u);
    EXPECT_EQ(x.at(0, 0), T());

    KnotPresentation red = tavtest::knots().resolve("3_1:reduced");
    TwistedSetup u = make_setup(red, c1, {0, 0}, nullptr);
    EXPECT_EQ(phi_map(W("x1 x2"), u).at(0, 0), T(5));
}

TEST(PhiMap, Denominator)
{
    // 3-cycle and a fixed point, t^2 scaling
    Perm p = parse_cycles("(0 1 2)", 4);
    EXPECT_EQ(permutation_denominator(p, 2), (T(6) - LaurentPoly(1)) * (T(2) - LaurentPoly(1)));
    // det(t P - I) by cofactor expansion
    PolyMatrix m(4, 4);
    for (size_t i = 0; i < 4; ++i) {
        m.at(i, p[i]) += T();
        m.at(i, i) -= LaurentPoly(1);
    }
    EXPECT_EQ(permutation_denominator(p, 1), tavtest::cofactor_det(tavtest::to_rows(m)));
    Perm q = parse_cycles("(0 1)(2 3)", 4);
    PolyMatrix n(4, 4);
    for (size_t i = 0; i < 4; ++i) {
        n.at(i, q[i]) += T(-1);
        n.at(i, i) -= LaurentPoly(1);
    }
    EXPECT_EQ(permutation_denominator(q, -1), tavtest::cofactor_det(tavtest::to_rows(n)));
}

TEST(Wada, Unknot)
{
    KnotPresentation p = tavtest::knots().resolve("unknot");
    for (const char* id : {"1-C1", "2-C2", "6-S3"}) {
        const FiniteGroup& g = group(id);
        // the unknot group is Z, send the meridian anywhere
        for (size_t x = 0; x < g.order(); ++x) {
            TwistedSetup s = make_setup(p, g, {x}, nullptr);
            WadaMatrix w = wada_matrix(s);
            EXPECT_EQ(w.numerator.rows(), 0u);
            EXPECT_FALSE(w.denominator.is_zero());
            TwistedResult r = twisted_alexander(s, DetMode::Certify);
            EXPECT_FALSE(r.zero);
            EXPECT_EQ(*r.numerator_det, LaurentPoly(1));
        }
    }
}

TEST(Wada, TrefoilTrivialGroup)
{
    KnotPresentation p = tavtest::knots().resolve("3_1");
    TwistedSetup s = make_setup(p, group("1-C1"), {0, 0, 0}, nullptr);
    WadaMatrix w = wada_matrix(s);
    ASSERT_EQ(w.numerator.rows(), 2u); // three generators, one column removed
    EXPECT_TRUE(equal_up_to_units(det_exact(w.numerator), P({1, -1, 1})));
    EXPECT_EQ(w.denominator, T() - LaurentPoly(1));

    KnotPresentation red = tavtest::knots().resolve("3_1:reduced");
    TwistedSetup sr = make_setup(red, group("1-C1"), {0, 0}, nullptr);
    WadaMatrix wr = wada_matrix(sr);
    ASSERT_EQ(wr.numerator.rows(), 1u);
    // d(x1^2 x2^-3)/d x2 = -(x1^2)(x2^-1 + x2^-2 + x2^-3), phi = (3, 2)
    EXPECT_EQ(wr.numerator.at(0, 0), -P({1, 0, 1, 0, 1}));
    EXPECT_EQ(wr.denominator, T(3) - LaurentPoly(1));
    // quotient (t^4 + t^2 + 1)/(t^3 - 1) = Delta/(t - 1)
    LaurentPoly num = det_exact(wr.numerator);
    EXPECT_TRUE(equal_up_to_units(num * (T() - LaurentPoly(1)), P({1, -1, 1}) * wr.denominator));
}

TEST(Wada, TrefoilZ2)
{
    KnotPresentation p = tavtest::knots().resolve("3_1");
    const FiniteGroup& c2 = group("2-C2");
    size_t g = c2.generator_indices()[0];
    TwistedSetup s = make_setup(p, c2, {g, g, g}, nullptr);
    for (DetMode mode : {DetMode::Screen, DetMode::Certify}) {
        TwistedResult r = twisted_alexander(s, mode);
        EXPECT_FALSE(r.zero);
        ASSERT_TRUE(r.numerator_det);
        // Delta(t) Delta(-t) = t^4 + t^2 + 1
        EXPECT_TRUE(equal_up_to_units(*r.numerator_det, P({1, 0, 1, 0, 1})));
        EXPECT_TRUE(equal_up_to_units(*r.numerator_det, tavtest::cyclic_resultant(P({1, -1, 1}), 2)));
        EXPECT_TRUE(equal_up_to_units(r.denominator, T(2) - LaurentPoly(1)));
    }
}

TEST(Wada, InvalidHomNamesRelator)
{
    KnotPresentation p = tavtest::knots().resolve("3_1");
    const FiniteGroup& s3 = group("6-S3");
    // two distinct transpositions and the identity cannot satisfy the relators
    std::vector<size_t> im;
    for (size_t x = 0; x < s3.order() && im.size() < 2; ++x)
        if (s3.element_order(x) == 2)
            im.push_back(x);
    im.push_back(0);
    try {
        make_setup(p, s3, im, nullptr);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidHom);
        EXPECT_NE(std::string(e.what()).find("relator"), std::string::npos) << e.what();
    }
    EXPECT_EQ(error_kind([&] { make_setup(p, s3, {0, 0}, nullptr); }), ErrorKind::InvalidHom);
}

TEST(Classical, Examples)
{
    const KnotTable& t = tavtest::knots();
    EXPECT_EQ(classical_alexander(t.resolve("unknot")), LaurentPoly(1));
    EXPECT_EQ(classical_alexander(t.resolve("3_1")), P({1, -1, 1}));
    EXPECT_EQ(classical_alexander(t.resolve("4_1")), P({1, -3, 1}));
    EXPECT_EQ(classical_alexander(t.resolve("3_1:reduced")), P({1, -1, 1}));
}

TEST(Classical, EveryBundledKnot)
{
    const KnotTable& t = tavtest::knots();
    for (const auto& name : t.order) {
        const KnotRecord& r = t.get(name);
        LaurentPoly d = classical_alexander(r.primary);
        EXPECT_EQ(abs(d.eval_int(1)), 1) << name;
        ASSERT_TRUE(r.alexander);
        EXPECT_TRUE(equal_up_to_units(d, *r.alexander)) << name << ": " << d.to_string();
        // symmetric up to units
        EXPECT_TRUE(equal_up_to_units(d, d.substitute_power(-1))) << name;
        if (r.pd)
            EXPECT_TRUE(equal_up_to_units(classical_alexander(wirtinger_from_pd(*r.pd)), d)) << name;
    }
}

TEST(Classical, NormalizationFailure)
{
    // not a knot group; phi forced by hand
    KnotPresentation p;
    p.n = 2;
    p.relators = {parse_word("x1^2 x2^2 x1^-2 x2^-2")};
    p.meridian = parse_word("x1");
    p.phi = {1, 0};
    EXPECT_EQ(error_kind([&] { classical_alexander(p); }), ErrorKind::NormalizationFailure);
}

TEST(Cyclic, ResultantFormulaForEveryKnot)
{
    const KnotTable& t = tavtest::knots();
    for (const auto& name : t.order) {
        const KnotRecord& r = t.get(name);
        const KnotPresentation& p = r.primary;
        for (int n = 2; n <= 6; ++n) {
            const FiniteGroup& g = group(std::to_string(n) + "-C" + std::to_string(n));
            TwistedSetup s = make_setup(p, g, cyclic_images(p, g, g.generator_indices()[0]), nullptr);
            EXPECT_TRUE(s.hom.surjective);
            TwistedResult res = twisted_alexander(s, DetMode::Certify);
            EXPECT_FALSE(res.zero) << name << " n=" << n;
            ASSERT_TRUE(res.numerator_det);
            LaurentPoly oracle = tavtest::cyclic_resultant(*r.alexander, n);
            // num / den = Res / (t^n - 1)
            EXPECT_TRUE(equal_up_to_units(*res.numerator_det * (T(n) - LaurentPoly(1)), oracle * res.denominator))
                << name << " n=" << n;
        }
    }
}

TEST(Cyclic, AllHomsToCyclicGroupsAreCounted)
{
    for (const char* name : {"3_1", "4_1", "9_46", "3_1:reduced"}) {
        KnotPresentation p = tavtest::knots().resolve(name);
        for (int n = 2; n <= 6; ++n) {
            const FiniteGroup& g = group(std::to_string(n) + "-C" + std::to_string(n));
            auto homs = enumerate_homs(p, g, false);
            EXPECT_EQ(homs.size(), static_cast<size_t>(n)) << name;
            size_t units = 0;
            for (int k = 1; k < n; ++k)
                units += std::gcd(k, n) == 1;
            EXPECT_EQ(enumerate_homs(p, g, true).size(), units) << name;
        }
    }
}

TEST(Wada, PivotIndependence)
{
    for (const char* name : {"3_1", "4_1"}) {
        KnotPresentation p = tavtest::knots().resolve(name);
        for (const auto& e : tavtest::catalog().entries) {
            if (e.order > 6)
                continue;
            for (const auto& h : enumerate_homs(p, *e.group, false)) {
                TwistedSetup base = make_setup(p, *e.group, h.images, nullptr, 0u);
                TwistedResult r0 = twisted_alexander(base, DetMode::Certify);
                for (uint32_t j = 1; j < p.n; ++j) {
                    TwistedSetup s = make_setup(p, *e.group, h.images, nullptr, j);
                    TwistedResult r = twisted_alexander(s, DetMode::Certify);
                    EXPECT_EQ(r.zero, r0.zero);
                    if (!r.zero && !r0.zero)
                        EXPECT_TRUE(same_quotient(r, r0)) << name << " " << e.id << " pivot " << j;
                }
            }
        }
    }
    EXPECT_EQ(error_kind([] {
                  KnotPresentation red = tavtest::knots().resolve("3_1");
                  KnotPresentation q = red;
                  q.phi[1] = 0;
                  make_setup(q, group("1-C1"), {0, 0, 0}, nullptr, 1u);
              }),
              ErrorKind::InvalidArgument);
}

TEST(Classical, ConnectedSumMultiplicativity)
{
    const KnotTable& t = tavtest::knots();
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{{"3_1", "4_1"}, {"5_2", "8_15"}, {"9_46", "10_166"}}) {
        LaurentPoly prod = classical_alexander(t.resolve(a)) * classical_alexander(t.resolve(b));
        EXPECT_TRUE(equal_up_to_units(classical_alexander(t.resolve(a + "#" + b)), prod)) << a << "#" << b;
    }
}

TEST(Twisted, DivisibilityUnderEpimorphisms)
{
    // K1 = A#B maps onto A (resp. B) by sending the other summand to the meridian
    const KnotTable& t = tavtest::knots();
    struct Case {
        std::string a, b;
        bool onto_first;
        std::string group;
    };
    std::vector<Case> cases = {{"3_1", "4_1", true, "6-S3"}, {"3_1", "4_1", false, "10-D5"}, {"5_2", "3_1", false, "6-S3"}};
    for (const auto& c : cases) {
        KnotPresentation k1 = t.resolve(c.a + "#" + c.b);
        KnotPresentation ka = t.resolve(c.a), kb = t.resolve(c.b);
        const KnotPresentation& k2 = c.onto_first ? ka : kb;
        const FiniteGroup& g = group(c.group);
        auto epis = enumerate_homs(k2, g, true);
        ASSERT_FALSE(epis.empty()) << c.a << "#" << c.b;
        for (const auto& f2 : epis) {
            std::vector<size_t> im;
            size_t m = f2.images[0];
            for (uint32_t i = 0; i < ka.n; ++i)
                im.push_back(c.onto_first ? f2.images[i] : m);
            for (uint32_t i = 0; i < kb.n; ++i)
                im.push_back(c.onto_first ? m : f2.images[i]);
            TwistedSetup s1 = make_setup(k1, g, im, nullptr);
            TwistedSetup s2 = make_setup(k2, g, f2.images, nullptr);
            TwistedResult r1 = twisted_alexander(s1, DetMode::Certify);
            TwistedResult r2 = twisted_alexander(s2, DetMode::Certify);
            ASSERT_FALSE(r2.zero);
            if (r1.zero)
                continue;
            // same pivot image, so the denominators agree
            EXPECT_EQ(r1.denominator, r2.denominator);
            EXPECT_TRUE(r1.numerator_det->divisible_over_q(*r2.numerator_det)) << c.a << "#" << c.b;
        }
    }
}

TEST(Twisted, FiberedKnotsNeverVanishUpToOrder24)
{
    for (const char* name : {"3_1", "4_1"}) {
        KnotPresentation p = tavtest::knots().resolve(name);
        for (const auto& e : tavtest::catalog().in_order_range(1, 24)) {
            for (const auto& orbit : enumerate_orbit_reps(p, *e->group)) {
                TwistedSetup s = make_setup(p, *e->group, orbit.rep.images, nullptr);
                TwistedResult r = twisted_alexander(s, DetMode::Certify, {}, false);
                EXPECT_FALSE(r.zero) << name << " " << e->id;
                EXPECT_TRUE(r.verdict.witness_point);
            }
        }
    }
}

TEST(Twisted, NineFortySixVanishesOnOrder24)
{
    KnotPresentation p = tavtest::knots().resolve("9_46");
    const FiniteGroup& s4 = group("24-S4");
    size_t zeros = 0;
    for (const auto& orbit : enumerate_orbit_reps(p, s4)) {
        TwistedSetup s = make_setup(p, s4, orbit.rep.images, nullptr);
        TwistedResult r = twisted_alexander(s, DetMode::Certify, {}, false);
        if (r.zero) {
            ++zeros;
            EXPECT_EQ(r.verdict.points.size(), static_cast<size_t>(r.verdict.span) + 1);
            // screening agrees
            EXPECT_TRUE(twisted_alexander(s, DetMode::Screen, {}, false).zero);
        }
    }
    EXPECT_GT(zeros, 0u);
}

TEST(Twisted, PermutationActionOfOrder96)
{
    KnotPresentation p = tavtest::knots().resolve("10_166");
    const CatalogEntry& e = tavtest::catalog().find("96-C2^2_S4");
    std::vector<size_t> im = parse_hom_spec(
        "x1=g2*g4*g5*g6,x2=g6*g3,x3=g6*g3,x4=g1*g6*g3*g5,x5=g1*g6*g3*g5,x6=g2*g4*g5*g6,x7=g6*g3*g5,x8=g6*g3*g5,"
        "x9=g1*g2*g3*g6,x10=g1*g2*g3*g6",
        p, *e.group);
    auto rep = std::make_shared<Representation>(make_representation(e, "deg8"));
    TwistedSetup s = make_setup(p, *e.group, im, rep);
    EXPECT_TRUE(s.hom.surjective);
    TwistedResult r = twisted_alexander(s, DetMode::Certify, {}, false);
    EXPECT_TRUE(r.zero);
}
