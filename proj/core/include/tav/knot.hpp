#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tav/word.hpp"

namespace tav {

// PD code in KnotInfo orientation: crossing {a, b, c, d} lists edge labels
// counterclockwise starting at the incoming under edge a, so c = a + 1
// (mod 2n) and b, d are consecutive labels of the over strand.
using PDCode = std::vector<std::array<int64_t, 4>>;

enum class SourceTag { Wirtinger, Reduced, Composite };
const char* source_name(SourceTag s);

// x_c = x_a^e x_b x_a^-e; a < 0 encodes the plain identification x_c = x_b
struct ConjugationRelation {
    int64_t a = -1;
    int e = 1;
    uint32_t b = 0;
    uint32_t c = 0;
};

struct KnotPresentation {
    std::string name;
    uint32_t n = 0;
    std::vector<Word> relators;
    // relators dropped to reach deficiency one, still checked on homs
    std::vector<Word> redundant;
    Word meridian;
    std::optional<Word> longitude;
    std::vector<int64_t> phi;
    SourceTag source = SourceTag::Wirtinger;

    // throws DeficiencyViolation or InvalidArgument
    void validate() const;
    // every relator is a conjugation relation and the relations connect
    // all generators; nullopt otherwise
    std::optional<std::vector<ConjugationRelation>> conjugation_relations() const;
    bool conjugate_generators() const { return conjugation_relations().has_value(); }
    std::vector<Word> all_relators() const;
    // stable text form used for content hashes
    std::string canonical() const;
    std::string content_hash() const;
};

KnotPresentation wirtinger_from_pd(const PDCode& pd);
Word longitude_from_pd(const PDCode& pd);

// Smith normal form diagonal of an integer matrix (nonzero entries only)
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

// phi with phi(relator) = 0, gcd 1 and phi(meridian) = 1
std::vector<int64_t> abelianization_degrees(uint32_t n, const std::vector<Word>& relators, const Word& meridian);

KnotPresentation connected_sum(const KnotPresentation& a, const KnotPresentation& b);
KnotPresentation cable(const KnotPresentation& k, int64_t p, int64_t q);

} // namespace tav
