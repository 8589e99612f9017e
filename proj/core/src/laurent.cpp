#include "tav/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "tav/error.hpp"

namespace tav {

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0)
        terms_.emplace_back(0, mpz_class(c));
}

LaurentPoly LaurentPoly::constant(const mpz_class& c)
{
    return monomial(c, 0);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int64_t e)
{
    LaurentPoly p;
    if (c != 0)
        p.terms_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<mpz_class>& coeffs, int64_t low)
{
    LaurentPoly p;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            p.terms_.emplace_back(low + static_cast<int64_t>(i), coeffs[i]);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second == 0)
            p.terms_.pop_back();
    }
    return p;
}

bool LaurentPoly::is_unit() const
{
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

int64_t LaurentPoly::min_exp() const
{
    return terms_.empty() ? 0 : terms_.front().first;
}

int64_t LaurentPoly::max_exp() const
{
    return terms_.empty() ? 0 : terms_.back().first;
}

mpz_class LaurentPoly::coeff(int64_t e) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int64_t v) { return t.first < v; });
    if (it != terms_.end() && it->first == e)
        return it->second;
    return 0;
}

std::vector<mpz_class> LaurentPoly::dense() const
{
    if (terms_.empty())
        return {};
    std::vector<mpz_class> out(static_cast<size_t>(span() + 1));
    for (const auto& [e, c] : terms_)
        out[static_cast<size_t>(e - min_exp())] = c;
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const mpz_class& c, int64_t k)
{
    if (o.is_zero() || c == 0)
        return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first + k)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || terms_[i].first > o.terms_[j].first + k) {
            out.emplace_back(o.terms_[j].first + k, o.terms_[j].second * c);
            ++j;
        } else {
            mpz_class s = terms_[i].second + o.terms_[j].second * c;
            if (s != 0)
                out.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    add_scaled(o, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    add_scaled(o, -1, 0);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.terms_.size() == 1)
        return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
    if (b.terms_.size() == 1)
        return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
    int64_t lo = a.min_exp() + b.min_exp();
    int64_t width = a.span() + b.span() + 1;
    if (width <= static_cast<int64_t>(4 * a.size() * b.size() + 64)) {
        std::vector<mpz_class> acc(static_cast<size_t>(width));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                mpz_addmul(acc[static_cast<size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        return LaurentPoly::from_coeffs(acc, lo);
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            terms.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int64_t k) const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.first += k;
    return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const
{
    if (c == 0)
        return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int64_t k) const
{
    if (k == 0)
        fail(ErrorKind::InvalidArgument, "substitute_power with k = 0");
    std::vector<Term> terms;
    for (const auto& [e, c] : terms_)
        terms.emplace_back(e * k, c);
    return from_terms(std::move(terms));
}

mpq_class LaurentPoly::eval(const mpq_class& x) const
{
    if (x == 0) {
        if (!terms_.empty() && min_exp() < 0)
            fail(ErrorKind::ZeroAtNegativeExponent, "evaluation at 0 with negative exponents");
        return mpq_class(coeff(0));
    }
    mpq_class acc = 0;
    int64_t cur = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int64_t gap = cur - it->first;
        if (gap > 0) {
            mpq_class pw;
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(x.get_mpq_t()), static_cast<unsigned long>(gap));
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(x.get_mpq_t()), static_cast<unsigned long>(gap));
            pw.canonicalize();
            acc *= pw;
        }
        acc += it->second;
        cur = it->first;
    }
    // acc = sum c_e x^(e - min); multiply back by x^min
    int64_t m = min_exp();
    if (m != 0) {
        mpq_class base = m > 0 ? x : mpq_class(1) / x;
        unsigned long n = static_cast<unsigned long>(m > 0 ? m : -m);
        mpq_class pw;
        mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(base.get_mpq_t()), n);
        mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(base.get_mpq_t()), n);
        pw.canonicalize();
        acc *= pw;
    }
    return acc;
}

mpz_class LaurentPoly::eval_int(const mpz_class& x) const
{
    if (!terms_.empty() && min_exp() < 0) {
        if (x == 0)
            fail(ErrorKind::ZeroAtNegativeExponent, "evaluation at 0 with negative exponents");
        if (x != 1 && x != -1)
            fail(ErrorKind::InvalidArgument, "integer evaluation with negative exponents needs a unit point");
    }
    if (terms_.empty())
        return 0;
    mpz_class acc = 0, pw;
    int64_t cur = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int64_t gap = cur - it->first;
        if (gap > 0) {
            mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(gap));
            acc *= pw;
        }
        acc += it->second;
        cur = it->first;
    }
    int64_t m = min_exp();
    if (m > 0) {
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
        acc *= pw;
    } else if (m < 0 && x == -1 && ((-m) & 1)) {
        acc = -acc;
    }
    return acc;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p)
{
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p)
{
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p)
{
    if (a % p == 0)
        fail(ErrorKind::InvalidArgument, "inverse of zero mod p");
    return powmod(a, p - 2, p);
}

static uint64_t reduce_mod(const mpz_class& c, uint64_t p)
{
    return mpz_fdiv_ui(c.get_mpz_t(), p);
}

uint64_t LaurentPoly::eval_mod(uint64_t x, uint64_t p) const
{
    if (terms_.empty())
        return 0;
    x %= p;
    if (x == 0 && min_exp() < 0)
        fail(ErrorKind::ZeroAtNegativeExponent, "evaluation at 0 mod p with negative exponents");
    uint64_t acc = 0;
    int64_t cur = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int64_t gap = cur - it->first;
        if (gap > 0)
            acc = mulmod(acc, powmod(x, static_cast<uint64_t>(gap), p), p);
        acc = (acc + reduce_mod(it->second, p)) % p;
        cur = it->first;
    }
    int64_t m = min_exp();
    if (m > 0)
        acc = mulmod(acc, powmod(x, static_cast<uint64_t>(m), p), p);
    else if (m < 0)
        acc = mulmod(acc, powmod(invmod(x, p), static_cast<uint64_t>(-m), p), p);
    return acc;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const
{
    if (d.is_zero())
        fail(ErrorKind::InvalidArgument, "division by zero polynomial");
    if (is_zero())
        return LaurentPoly{};
    std::vector<mpz_class> rem = dense();
    std::vector<mpz_class> dv = d.dense();
    if (rem.size() < dv.size())
        return std::nullopt;
    size_t qlen = rem.size() - dv.size() + 1;
    std::vector<mpz_class> q(qlen);
    const mpz_class& lead = dv.back();
    for (size_t k = qlen; k-- > 0;) {
        mpz_class& top = rem[k + dv.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        mpz_class c = top / lead;
        for (size_t i = 0; i < dv.size(); ++i)
            rem[k + i] -= c * dv[i];
        q[k] = c;
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;
    return from_coeffs(q, min_exp() - d.min_exp());
}

bool LaurentPoly::divisible_over_q(const LaurentPoly& d) const
{
    if (d.is_zero())
        return is_zero();
    if (is_zero())
        return true;
    std::vector<mpq_class> rem;
    for (auto& c : dense())
        rem.emplace_back(c);
    std::vector<mpz_class> dv = d.dense();
    if (rem.size() < dv.size())
        return false;
    size_t qlen = rem.size() - dv.size() + 1;
    for (size_t k = qlen; k-- > 0;) {
        mpq_class c = rem[k + dv.size() - 1] / mpq_class(dv.back());
        if (c == 0)
            continue;
        for (size_t i = 0; i < dv.size(); ++i)
            rem[k + i] -= c * dv[i];
    }
    for (const auto& r : rem)
        if (r != 0)
            return false;
    return true;
}

std::string LaurentPoly::to_string(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpz_class c = it->second;
        int64_t e = it->first;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        if (e == 0 || c != 1)
            os << c.get_str();
        if (e != 0) {
            os << var;
            if (e != 1)
                os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

UnitNormalForm unit_normalize(const LaurentPoly& p)
{
    UnitNormalForm u;
    if (p.is_zero())
        return u;
    u.shift = p.min_exp();
    u.sign = p.terms().back().second < 0 ? -1 : 1;
    u.poly = p.shifted(-u.shift);
    if (u.sign < 0)
        u.poly = -u.poly;
    return u;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b)
{
    return unit_normalize(a).poly == unit_normalize(b).poly;
}

PolyMatrix::PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
}

PolyMatrix PolyMatrix::identity(size_t n)
{
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = LaurentPoly(1);
    return m;
}

std::optional<std::pair<int64_t, int64_t>> PolyMatrix::row_degree(size_t r) const
{
    std::optional<std::pair<int64_t, int64_t>> out;
    for (size_t c = 0; c < cols_; ++c) {
        const auto& e = at(r, c);
        if (e.is_zero())
            continue;
        if (!out)
            out = std::make_pair(e.min_exp(), e.max_exp());
        else
            out = std::make_pair(std::min(out->first, e.min_exp()), std::max(out->second, e.max_exp()));
    }
    return out;
}

std::optional<std::pair<int64_t, int64_t>> PolyMatrix::col_degree(size_t c) const
{
    std::optional<std::pair<int64_t, int64_t>> out;
    for (size_t r = 0; r < rows_; ++r) {
        const auto& e = at(r, c);
        if (e.is_zero())
            continue;
        if (!out)
            out = std::make_pair(e.min_exp(), e.max_exp());
        else
            out = std::make_pair(std::min(out->first, e.min_exp()), std::max(out->second, e.max_exp()));
    }
    return out;
}

} // namespace tav
