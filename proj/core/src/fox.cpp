#include "tav/fox.hpp"

#include <algorithm>
#include <sstream>

#include "tav/error.hpp"

namespace tav {

GroupRingElement GroupRingElement::one()
{
    return of(Word{});
}

GroupRingElement GroupRingElement::of(const Word& w, const mpz_class& c)
{
    GroupRingElement e;
    if (c != 0)
        e.terms_.emplace_back(free_reduce(w), c);
    return e;
}

void GroupRingElement::normalize()
{
    for (auto& t : terms_)
        t.first = free_reduce(t.first);
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o)
{
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o)
{
    for (const auto& t : o.terms_)
        terms_.emplace_back(t.first, -t.second);
    normalize();
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.terms_.emplace_back(concat(wa, wb), ca * cb);
    r.normalize();
    return r;
}

std::string GroupRingElement::to_string(const std::string& prefix) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || w.empty())
            os << a.get_str();
        if (!w.empty())
            os << (a != 1 ? "*" : "") << word_to_string(w, prefix);
        first = false;
    }
    return os.str();
}

GroupRingElement fox_derivative(const Word& w, uint32_t j)
{
    GroupRingElement r;
    Word prefix;
    for (const auto& l : w) {
        if (l.gen == j) {
            if (l.exp > 0) {
                r += GroupRingElement::of(prefix);
            } else {
                Word p2 = prefix;
                p2.push_back(l);
                r -= GroupRingElement::of(p2);
            }
        }
        prefix.push_back(l);
    }
    return r;
}

TwistedSetup make_setup(const KnotPresentation& p, const FiniteGroup& g, const std::vector<size_t>& images,
                        std::shared_ptr<const Representation> rep, std::optional<uint32_t> pivot)
{
    TwistedSetup s;
    s.presentation = &p;
    s.group = &g;
    s.hom = make_hom(p, g, images);
    if (!rep)
        rep = std::make_shared<Representation>(regular_rep(g));
    if (rep->images.size() != g.order())
        fail(ErrorKind::InvalidArgument, "representation does not match the group");
    s.rep = std::move(rep);
    if (pivot) {
        if (*pivot >= p.n || p.phi[*pivot] == 0)
            fail(ErrorKind::InvalidArgument, "pivot generator must have nonzero degree");
        s.pivot = *pivot;
    } else {
        uint32_t j = 0;
        while (j < p.n && p.phi[j] == 0)
            ++j;
        if (j == p.n)
            fail(ErrorKind::InvalidArgument, "no generator of nonzero degree");
        s.pivot = j;
    }
    return s;
}

PolyMatrix phi_map(const GroupRingElement& e, const TwistedSetup& s)
{
    size_t d = s.degree();
    PolyMatrix m(d, d);
    for (const auto& [w, c] : e.terms()) {
        int64_t deg = weighted_exponent_sum(w, s.presentation->phi);
        const Perm& p = s.rep->images[evaluate_word(*s.group, s.hom.images, w)];
        for (size_t i = 0; i < d; ++i)
            m.at(i, p[i]) += LaurentPoly::monomial(c, deg);
    }
    return m;
}

LaurentPoly permutation_denominator(const Perm& p, int64_t e)
{
    LaurentPoly r(1);
    for (size_t len : cycle_lengths(p)) {
        auto L = static_cast<int64_t>(len);
        LaurentPoly f = LaurentPoly::monomial(1, e * L) - LaurentPoly(1);
        if ((L - 1) & 1)
            f = -f;
        r *= f;
    }
    return r;
}

WadaMatrix wada_matrix(const TwistedSetup& s)
{
    const KnotPresentation& p = *s.presentation;
    const FiniteGroup& g = *s.group;
    size_t d = s.degree();
    size_t nrel = p.relators.size();
    std::vector<int64_t> colblock(p.n, -1);
    int64_t next = 0;
    for (uint32_t j = 0; j < p.n; ++j)
        if (j != s.pivot)
            colblock[j] = next++;
    WadaMatrix w;
    w.numerator = PolyMatrix(nrel * d, static_cast<size_t>(next) * d);
    for (size_t i = 0; i < nrel; ++i) {
        size_t elem = g.identity();
        int64_t deg = 0;
        for (const auto& l : p.relators[i]) {
            size_t x = s.hom.images[l.gen];
            int sign = 1;
            if (l.exp < 0) {
                elem = g.mul(elem, g.inv(x));
                deg -= p.phi[l.gen];
                sign = -1;
            }
            if (colblock[l.gen] >= 0) {
                const Perm& perm = s.rep->images[elem];
                size_t c0 = static_cast<size_t>(colblock[l.gen]) * d;
                LaurentPoly term = LaurentPoly::monomial(sign, deg);
                for (size_t a = 0; a < d; ++a)
                    w.numerator.at(i * d + a, c0 + perm[a]) += term;
            }
            if (l.exp > 0) {
                elem = g.mul(elem, x);
                deg += p.phi[l.gen];
            }
        }
    }
    w.denominator = permutation_denominator(s.rep->images[s.hom.images[s.pivot]], p.phi[s.pivot]);
    return w;
}

TwistedResult twisted_alexander(const TwistedSetup& s, DetMode mode, const DetOptions& opt, bool want_polynomial)
{
    WadaMatrix w = wada_matrix(s);
    TwistedResult r;
    r.denominator = w.denominator;
    r.verdict = det_is_zero(w.numerator, mode, opt);
    r.zero = r.verdict.zero;
    if (!r.zero && want_polynomial) {
        r.numerator_det = det_exact(w.numerator, opt);
        r.quotient = r.numerator_det->divide_exact(w.denominator);
        r.normal = unit_normalize(r.quotient ? *r.quotient : *r.numerator_det);
    }
    return r;
}

LaurentPoly classical_alexander(const KnotPresentation& p, const DetOptions& opt)
{
    FiniteGroup trivial = FiniteGroup::from_generators(1, {});
    std::vector<size_t> images(p.n, 0);
    TwistedSetup s = make_setup(p, trivial, images, nullptr);
    WadaMatrix w = wada_matrix(s);
    LaurentPoly num = det_exact(w.numerator, opt);
    LaurentPoly scaled = num * (LaurentPoly::monomial(1, 1) - LaurentPoly(1));
    auto q = scaled.divide_exact(w.denominator);
    if (!q)
        fail(ErrorKind::NormalizationFailure, "numerator*(t-1) is not divisible by " + w.denominator.to_string());
    LaurentPoly delta = unit_normalize(*q).poly;
    mpz_class at1 = 0;
    for (const auto& [e, c] : delta.terms())
        at1 += c;
    if (at1 != 1 && at1 != -1)
        fail(ErrorKind::NormalizationFailure, "Delta(1) = " + at1.get_str());
    return delta;
}

} // namespace tav
