#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tav/determinant.hpp"
#include "tav/finite_group.hpp"
#include "tav/hom.hpp"
#include "tav/knot.hpp"
#include "tav/laurent.hpp"
#include "tav/representation.hpp"

namespace tav {

// Element of the integral group ring of a free group: integer combination
// of freely reduced words, sorted by word, no zero coefficients.
class GroupRingElement {
public:
    using Term = std::pair<Word, mpz_class>;

    GroupRingElement() = default;
    static GroupRingElement one();
    static GroupRingElement of(const Word& w, const mpz_class& c = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::string& prefix = "x") const;

private:
    std::vector<Term> terms_;
    void normalize();
};

GroupRingElement fox_derivative(const Word& w, uint32_t j);

struct TwistedSetup {
    const KnotPresentation* presentation = nullptr;
    const FiniteGroup* group = nullptr;
    GroupHom hom;
    std::shared_ptr<const Representation> rep;
    uint32_t pivot = 0; // generator whose column is removed

    size_t degree() const { return rep->degree; }
};

// Validates the hom (InvalidHom on a failing relator) and picks the
// smallest generator with nonzero degree as pivot unless one is given.
TwistedSetup make_setup(const KnotPresentation& p, const FiniteGroup& g, const std::vector<size_t>& images,
                        std::shared_ptr<const Representation> rep, std::optional<uint32_t> pivot = std::nullopt);

// sum of c * t^phi(u) * rho(f(u)) over the terms of e
PolyMatrix phi_map(const GroupRingElement& e, const TwistedSetup& s);

struct WadaMatrix {
    PolyMatrix numerator;
    LaurentPoly denominator;
};

// det(t^e P - I) from the cycle type of P
LaurentPoly permutation_denominator(const Perm& p, int64_t e);
WadaMatrix wada_matrix(const TwistedSetup& s);

struct TwistedResult {
    bool zero = false;
    ZeroVerdict verdict;
    LaurentPoly denominator;
    // NonZero with polynomial requested:
    std::optional<LaurentPoly> numerator_det;
    std::optional<LaurentPoly> quotient; // numerator / denominator when exact
    UnitNormalForm normal;               // of quotient, else of numerator_det
};

TwistedResult twisted_alexander(const TwistedSetup& s, DetMode mode, const DetOptions& opt = {},
                                bool want_polynomial = true);

// Alexander polynomial, unit normalized; NormalizationFailure unless
// Delta(1) = +-1
LaurentPoly classical_alexander(const KnotPresentation& p, const DetOptions& opt = {});

} // namespace tav
