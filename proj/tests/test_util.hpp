#pragma once

// Shared helpers for the test suite: data paths, seeded generators and
// independent oracles that do not reuse the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tav/catalog.hpp"
#include "tav/error.hpp"
#include "tav/knot_table.hpp"
#include "tav/laurent.hpp"
#include "tav/permutation.hpp"
#include "tav/word.hpp"

namespace tavtest {

using tav::LaurentPoly;
using tav::Perm;
using tav::Word;

inline std::string data_dir()
{
    return TAV_TEST_DATA_DIR;
}

inline const tav::KnotTable& knots()
{
    static const tav::KnotTable t = tav::load_knot_table(data_dir() + "/knots.jsonl");
    return t;
}

inline const tav::Catalog& catalog()
{
    static const tav::Catalog c = tav::load_catalog(data_dir() + "/groups.jsonl");
    return c;
}

// kind of the tav::Error thrown by f, nullopt if it returns normally
template <class F>
std::optional<tav::ErrorKind> error_kind(F&& f)
{
    try {
        f();
    } catch (const tav::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 r(0x5eed1234ULL);
    return r;
}

inline int64_t uniform(std::mt19937_64& r, int64_t lo, int64_t hi)
{
    return std::uniform_int_distribution<int64_t>(lo, hi)(r);
}

inline LaurentPoly random_poly(std::mt19937_64& r, int64_t min_exp, int64_t max_exp, int64_t coeff)
{
    std::vector<mpz_class> c;
    for (int64_t e = min_exp; e <= max_exp; ++e)
        c.emplace_back(static_cast<long>(uniform(r, -coeff, coeff)));
    return LaurentPoly::from_coeffs(c, min_exp);
}

inline Word random_word(std::mt19937_64& r, uint32_t gens, size_t max_len)
{
    Word w;
    auto len = static_cast<size_t>(uniform(r, 0, static_cast<int64_t>(max_len)));
    for (size_t i = 0; i < len; ++i)
        w.push_back({static_cast<uint32_t>(uniform(r, 0, gens - 1)), uniform(r, 0, 1) ? 1 : -1});
    return w;
}

// cofactor expansion along the first row
inline LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m)
{
    size_t n = m.size();
    if (n == 0)
        return LaurentPoly(1);
    if (n == 1)
        return m[0][0];
    LaurentPoly d;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(row);
        }
        LaurentPoly term = m[0][j] * cofactor_det(minor);
        if (j % 2)
            d -= term;
        else
            d += term;
    }
    return d;
}

inline std::vector<std::vector<LaurentPoly>> to_rows(const tav::PolyMatrix& m)
{
    std::vector<std::vector<LaurentPoly>> rows(m.rows(), std::vector<LaurentPoly>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

// Dense univariate polynomials with coefficients in Z[t] (low to high),
// used by the resultant oracle.
using ZtPoly = std::vector<LaurentPoly>;

// determinant of a square matrix over Z[t] by Laplace expansion on small
// sizes and fraction-free elimination otherwise: every division is an
// exact division of Laurent polynomials
inline LaurentPoly poly_bareiss(std::vector<std::vector<LaurentPoly>> a)
{
    size_t n = a.size();
    if (n == 0)
        return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return LaurentPoly();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = v.divide_exact(prev);
                if (!q)
                    throw std::runtime_error("inexact Bareiss step in oracle");
                a[i][j] = *q;
            }
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    LaurentPoly d = a[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

// Res_u(f, g) via the Sylvester matrix; f, g are polynomials in u with
// coefficients in Z[t], given low to high
inline LaurentPoly sylvester_resultant(const ZtPoly& f, const ZtPoly& g)
{
    size_t m = f.size() - 1, n = g.size() - 1;
    size_t N = m + n;
    std::vector<std::vector<LaurentPoly>> s(N, std::vector<LaurentPoly>(N));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k <= m; ++k)
            s[i][i + k] = f[m - k];
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k <= n; ++k)
            s[n + i][i + k] = g[n - k];
    return poly_bareiss(s);
}

// Res_u(u^n - t^n, Delta(u)) for Delta a polynomial in u (min exponent 0)
inline LaurentPoly cyclic_resultant(const LaurentPoly& delta, int n)
{
    ZtPoly f(n + 1);
    f[0] = -LaurentPoly::monomial(1, n);
    f[n] = LaurentPoly(1);
    ZtPoly g;
    for (int64_t e = 0; e <= delta.max_exp(); ++e)
        g.push_back(LaurentPoly::constant(delta.coeff(e)));
    return sylvester_resultant(f, g);
}

// permutation arithmetic straight on arrays, independent of FiniteGroup
inline Perm perm_mul(const Perm& a, const Perm& b)
{
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = b[a[i]];
    return r;
}

inline Perm perm_inv(const Perm& a)
{
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[a[i]] = static_cast<uint32_t>(i);
    return r;
}

inline Perm perm_eval(const Word& w, const std::vector<Perm>& images, size_t degree)
{
    Perm r(degree);
    for (size_t i = 0; i < degree; ++i)
        r[i] = static_cast<uint32_t>(i);
    for (const auto& l : w)
        r = perm_mul(r, l.exp > 0 ? images[l.gen] : perm_inv(images[l.gen]));
    return r;
}

// closure of a set of permutations by repeated products
inline std::set<Perm> perm_closure(const std::vector<Perm>& gens, size_t degree)
{
    Perm id(degree);
    for (size_t i = 0; i < degree; ++i)
        id[i] = static_cast<uint32_t>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Perm y = perm_mul(x, g);
            if (seen.insert(y).second)
                todo.push_back(y);
        }
    }
    return seen;
}

} // namespace tavtest
