#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tav/laurent.hpp"

namespace tav {

enum class DetMode { Screen, Certify };

const char* mode_name(DetMode m);
DetMode parse_mode(const std::string& s);

inline const std::vector<uint64_t>& default_screen_primes()
{
    static const std::vector<uint64_t> primes = {2305843009213693951ULL, 2305843009213693921ULL};
    return primes;
}

struct DetOptions {
    // eliminate +-t^k pivots before evaluation, kept only when it lowers
    // the side^3 * (span + 1) work estimate
    bool presolve = true;
    unsigned threads = 1;
    std::vector<uint64_t> primes = default_screen_primes();
};

// det(original) = sign * t^shift * det(core); core has polynomial entries
// with no row or column divisible by t.
struct PreparedMatrix {
    PolyMatrix core;
    int sign = 1;
    int64_t shift = 0;
    int64_t row_span = 0;
    int64_t col_span = 0;
    int64_t span = 0; // min(row_span, col_span), bounds deg det(core)
    size_t original_side = 0;
    size_t pivots = 0;
    bool zero_line = false; // a zero row or column was found
    bool presolved = false;  // false when the plain matrix was cheaper
};

PreparedMatrix prepare_matrix(const PolyMatrix& m, const DetOptions& opt = {});

// 2, 3, 4, ...
std::vector<int64_t> evaluation_points(size_t count);

// fraction-free elimination, row-major n*n input
mpz_class bareiss_det(std::vector<mpz_class> a, size_t n);
uint64_t det_mod_p(std::vector<uint64_t> a, size_t n, uint64_t p);

mpz_class eval_det_exact(const PolyMatrix& core, int64_t x);
uint64_t eval_det_mod(const PolyMatrix& core, uint64_t x, uint64_t p);

// Newton interpolation through (xs[i], ys[i]); coefficients must be integral
LaurentPoly interpolate(const std::vector<int64_t>& xs, const std::vector<mpz_class>& ys);

LaurentPoly det_exact(const PolyMatrix& m, const DetOptions& opt = {});

struct ZeroVerdict {
    bool zero = false;
    DetMode mode = DetMode::Screen;
    size_t side = 0;  // side of the evaluated core
    int64_t span = 0; // degree bound for the core determinant
    int sign = 1;
    int64_t shift = 0;
    bool presolve = true;
    std::vector<int64_t> points;   // points evaluated, in order
    std::vector<uint64_t> primes;  // screen mode
    std::vector<mpz_class> values; // certify mode, exact values at points
    std::optional<int64_t> witness_point;
    std::optional<uint64_t> witness_prime; // screen witness
    mpz_class witness_value;

    friend bool operator==(const ZeroVerdict&, const ZeroVerdict&) = default;
};

ZeroVerdict det_is_zero(const PolyMatrix& m, DetMode mode, const DetOptions& opt = {});
ZeroVerdict det_is_zero_prepared(const PreparedMatrix& pm, DetMode mode, const DetOptions& opt);

} // namespace tav
