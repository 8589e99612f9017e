#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tav {

// Integer Laurent polynomial in t. Terms are kept sorted by exponent with
// no zero coefficients, so the zero polynomial has no terms.
class LaurentPoly {
public:
    using Term = std::pair<int64_t, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c); // NOLINT constant

    static LaurentPoly constant(const mpz_class& c);
    static LaurentPoly monomial(const mpz_class& c, int64_t e);
    // coeffs[i] is the coefficient of t^(low + i)
    static LaurentPoly from_coeffs(const std::vector<mpz_class>& coeffs, int64_t low = 0);
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // +-t^k
    bool is_unit() const;
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    int64_t min_exp() const;
    int64_t max_exp() const;
    int64_t span() const { return is_zero() ? 0 : max_exp() - min_exp(); }
    mpz_class coeff(int64_t e) const;
    // dense coefficients from min_exp to max_exp
    std::vector<mpz_class> dense() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly shifted(int64_t k) const;
    LaurentPoly scaled(const mpz_class& c) const;
    // this += c * t^k * o
    void add_scaled(const LaurentPoly& o, const mpz_class& c, int64_t k);

    // substitute t -> t^k (k != 0)
    LaurentPoly substitute_power(int64_t k) const;

    mpq_class eval(const mpq_class& x) const;
    // requires min_exp() >= 0 unless x is a unit
    mpz_class eval_int(const mpz_class& x) const;
    // x must be nonzero mod p when negative exponents are present
    uint64_t eval_mod(uint64_t x, uint64_t p) const;

    // exact quotient over Z, nullopt if the division leaves a remainder
    // or needs non-integer coefficients
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;
    // true if d divides this in Q[t, 1/t]
    bool divisible_over_q(const LaurentPoly& d) const;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Term> terms_;
};

struct UnitNormalForm {
    LaurentPoly poly; // min exponent 0, leading coefficient positive
    int64_t shift = 0;
    int sign = 1; // sign * t^shift * poly is the original
};

UnitNormalForm unit_normalize(const LaurentPoly& p);
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

// Dense matrix over LaurentPoly, row major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols);

    static PolyMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    LaurentPoly& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const LaurentPoly& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    // per-row (min, max) exponent over nonzero entries; nullopt for a zero row
    std::optional<std::pair<int64_t, int64_t>> row_degree(size_t r) const;
    std::optional<std::pair<int64_t, int64_t>> col_degree(size_t c) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<LaurentPoly> data_;
};

// modular helpers shared by the engines
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p);

} // namespace tav
