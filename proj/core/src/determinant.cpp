#include "tav/determinant.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tav/error.hpp"
#include "tav/parallel.hpp"

namespace tav {

const char* mode_name(DetMode m)
{
    return m == DetMode::Screen ? "screen" : "certify";
}

DetMode parse_mode(const std::string& s)
{
    if (s == "screen")
        return DetMode::Screen;
    if (s == "certify")
        return DetMode::Certify;
    fail(ErrorKind::InvalidArgument, "unknown mode '" + s + "'");
}

namespace {

using SparseRow = std::vector<std::pair<size_t, LaurentPoly>>;

// Markowitz elimination restricted to +-t^k pivots. Each step is an exact
// Schur complement over the Laurent ring.
struct Presolver {
    std::vector<SparseRow> rows;
    std::vector<std::set<size_t>> cols;
    std::vector<size_t> live_rows, live_cols;
    int sign = 1;
    int64_t shift = 0;
    size_t pivots = 0;

    explicit Presolver(const PolyMatrix& m) : rows(m.rows()), cols(m.cols())
    {
        for (size_t r = 0; r < m.rows(); ++r) {
            for (size_t c = 0; c < m.cols(); ++c) {
                if (!m.at(r, c).is_zero()) {
                    rows[r].emplace_back(c, m.at(r, c));
                    cols[c].insert(r);
                }
            }
            live_rows.push_back(r);
        }
        for (size_t c = 0; c < m.cols(); ++c)
            live_cols.push_back(c);
    }

    bool step()
    {
        size_t best_cost = std::numeric_limits<size_t>::max();
        size_t br = 0, bc = 0;
        for (size_t r : live_rows) {
            size_t rc = rows[r].size() - 1;
            for (const auto& [c, v] : rows[r]) {
                if (!v.is_unit())
                    continue;
                size_t cost = rc * (cols[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    br = r;
                    bc = c;
                }
            }
            if (best_cost == 0)
                break;
        }
        if (best_cost == std::numeric_limits<size_t>::max())
            return false;
        pivot(br, bc);
        return true;
    }

    void pivot(size_t r, size_t c)
    {
        auto pr = static_cast<size_t>(std::lower_bound(live_rows.begin(), live_rows.end(), r) - live_rows.begin());
        auto pc = static_cast<size_t>(std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin());
        if ((pr + pc) & 1)
            sign = -sign;
        live_rows.erase(live_rows.begin() + static_cast<std::ptrdiff_t>(pr));
        live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(pc));

        SparseRow prow = std::move(rows[r]);
        rows[r].clear();
        const LaurentPoly* pv = nullptr;
        for (const auto& e : prow)
            if (e.first == c)
                pv = &e.second;
        int s = pv->terms()[0].second > 0 ? 1 : -1;
        int64_t k = pv->terms()[0].first;
        if (s < 0)
            sign = -sign;
        shift += k;
        for (const auto& e : prow)
            cols[e.first].erase(r);

        std::vector<size_t> targets(cols[c].begin(), cols[c].end());
        for (size_t i : targets) {
            SparseRow& row = rows[i];
            LaurentPoly factor;
            for (const auto& e : row)
                if (e.first == c)
                    factor = e.second;
            // row_i -= factor * u^{-1} * row_r, with u^{-1} = s t^{-k}
            factor = factor.shifted(-k);
            if (s < 0)
                factor = -factor;
            SparseRow out;
            out.reserve(row.size() + prow.size());
            size_t a = 0, b = 0;
            while (a < row.size() || b < prow.size()) {
                if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
                    out.push_back(std::move(row[a++]));
                } else if (a == row.size() || row[a].first > prow[b].first) {
                    if (prow[b].first != c) {
                        out.emplace_back(prow[b].first, -(factor * prow[b].second));
                        cols[prow[b].first].insert(i);
                    }
                    ++b;
                } else {
                    size_t col = row[a].first;
                    if (col != c) {
                        LaurentPoly v = std::move(row[a].second);
                        v -= factor * prow[b].second;
                        if (v.is_zero())
                            cols[col].erase(i);
                        else
                            out.emplace_back(col, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            row = std::move(out);
        }
        cols[c].clear();
        ++pivots;
    }
};

} // namespace

namespace {

// clear each row's and column's lowest power of t and record the spans
void finish_core(PolyMatrix core, PreparedMatrix& pm)
{
    size_t n = core.rows();
    for (size_t r = 0; r < n; ++r) {
        auto d = core.row_degree(r);
        if (!d) {
            pm.zero_line = true;
            return;
        }
        if (d->first != 0) {
            for (size_t c = 0; c < n; ++c)
                core.at(r, c) = core.at(r, c).shifted(-d->first);
            pm.shift += d->first;
        }
    }
    for (size_t c = 0; c < n; ++c) {
        auto d = core.col_degree(c);
        if (!d) {
            pm.zero_line = true;
            return;
        }
        if (d->first != 0) {
            for (size_t r = 0; r < n; ++r)
                core.at(r, c) = core.at(r, c).shifted(-d->first);
            pm.shift += d->first;
        }
    }
    for (size_t r = 0; r < n; ++r)
        pm.row_span += core.row_degree(r)->second;
    for (size_t c = 0; c < n; ++c)
        pm.col_span += core.col_degree(c)->second;
    pm.span = std::min(pm.row_span, pm.col_span);
    pm.core = std::move(core);
}

PreparedMatrix prepare_plain(const PolyMatrix& m)
{
    PreparedMatrix pm;
    pm.original_side = m.rows();
    finish_core(m, pm);
    return pm;
}

PreparedMatrix prepare_presolved(const PolyMatrix& m)
{
    PreparedMatrix pm;
    pm.original_side = m.rows();
    pm.presolved = true;
    Presolver ps(m);
    bool empty_line = false;
    for (;;) {
        for (size_t r : ps.live_rows)
            if (ps.rows[r].empty())
                empty_line = true;
        if (empty_line || !ps.step())
            break;
    }
    pm.sign = ps.sign;
    pm.shift = ps.shift;
    pm.pivots = ps.pivots;
    if (empty_line) {
        pm.zero_line = true;
        return pm;
    }
    size_t n = ps.live_rows.size();
    PolyMatrix core(n, n);
    std::vector<size_t> col_pos(m.cols(), 0);
    for (size_t j = 0; j < n; ++j)
        col_pos[ps.live_cols[j]] = j;
    for (size_t i = 0; i < n; ++i)
        for (auto& [c, v] : ps.rows[ps.live_rows[i]])
            core.at(i, col_pos[c]) = std::move(v);
    finish_core(std::move(core), pm);
    return pm;
}

// rough work estimate: one n^3 elimination per point
long double evaluation_cost(const PreparedMatrix& pm)
{
    long double n = static_cast<long double>(pm.core.rows());
    return n * n * n * static_cast<long double>(pm.span + 1);
}

} // namespace

PreparedMatrix prepare_matrix(const PolyMatrix& m, const DetOptions& opt)
{
    if (!m.square())
        fail(ErrorKind::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (!opt.presolve || m.rows() == 0)
        return prepare_plain(m);
    PreparedMatrix pre = prepare_presolved(m);
    if (pre.zero_line)
        return pre;
    // elimination fill can raise the degree bound enough to lose
    PreparedMatrix plain = prepare_plain(m);
    if (plain.zero_line || evaluation_cost(plain) < evaluation_cost(pre))
        return plain;
    return pre;
}

std::vector<int64_t> evaluation_points(size_t count)
{
    std::vector<int64_t> pts(count);
    for (size_t i = 0; i < count; ++i)
        pts[i] = 2 + static_cast<int64_t>(i);
    return pts;
}

mpz_class bareiss_det(std::vector<mpz_class> a, size_t n)
{
    if (n == 0)
        return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p * n + k] == 0)
                ++p;
            if (p == n)
                return 0;
            for (size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        const mpz_class& piv = a[k * n + k];
        for (size_t i = k + 1; i < n; ++i) {
            mpz_class& lead = a[i * n + k];
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class& x = a[i * n + j];
                mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
                mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), a[k * n + j].get_mpz_t());
                if (prev != 1)
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
    }
    mpz_class d = a[n * n - 1];
    return sign < 0 ? mpz_class(-d) : d;
}

uint64_t det_mod_p(std::vector<uint64_t> a, size_t n, uint64_t p)
{
    uint64_t det = 1 % p;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv * n + k] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j)
                std::swap(a[k * n + j], a[piv * n + j]);
            det = (p - det) % p;
        }
        uint64_t pv = a[k * n + k];
        det = mulmod(det, pv, p);
        uint64_t inv = invmod(pv, p);
        for (size_t i = k + 1; i < n; ++i) {
            uint64_t f = a[i * n + k];
            if (f == 0)
                continue;
            f = mulmod(f, inv, p);
            for (size_t j = k + 1; j < n; ++j) {
                uint64_t sub = mulmod(f, a[k * n + j], p);
                uint64_t& x = a[i * n + j];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
    }
    return det;
}

mpz_class eval_det_exact(const PolyMatrix& core, int64_t x)
{
    size_t n = core.rows();
    std::vector<mpz_class> a(n * n);
    mpz_class xv(static_cast<long>(x));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            a[r * n + c] = core.at(r, c).eval_int(xv);
    return bareiss_det(std::move(a), n);
}

uint64_t eval_det_mod(const PolyMatrix& core, uint64_t x, uint64_t p)
{
    size_t n = core.rows();
    std::vector<uint64_t> a(n * n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            a[r * n + c] = core.at(r, c).eval_mod(x, p);
    return det_mod_p(std::move(a), n, p);
}

LaurentPoly interpolate(const std::vector<int64_t>& xs, const std::vector<mpz_class>& ys)
{
    size_t n = xs.size();
    if (n == 0)
        return {};
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - k]);
    // Horner on the Newton form
    std::vector<mpq_class> poly{dd[n - 1]};
    for (size_t k = n - 1; k-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1);
        mpq_class xk(xs[k]);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xk;
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<mpz_class> coeffs;
    for (auto& c : poly) {
        if (c.get_den() != 1)
            fail(ErrorKind::InvalidArgument, "interpolated polynomial is not integral");
        coeffs.push_back(c.get_num());
    }
    return LaurentPoly::from_coeffs(coeffs);
}

LaurentPoly det_exact(const PolyMatrix& m, const DetOptions& opt)
{
    PreparedMatrix pm = prepare_matrix(m, opt);
    if (pm.zero_line)
        return {};
    size_t count = static_cast<size_t>(pm.span) + 1;
    std::vector<int64_t> xs = evaluation_points(count);
    std::vector<mpz_class> ys(count);
    parallel_for(count, opt.threads, [&](size_t i) { ys[i] = eval_det_exact(pm.core, xs[i]); });
    LaurentPoly d = interpolate(xs, ys).shifted(pm.shift);
    return pm.sign < 0 ? -d : d;
}

ZeroVerdict det_is_zero_prepared(const PreparedMatrix& pm, DetMode mode, const DetOptions& opt)
{
    ZeroVerdict v;
    v.mode = mode;
    v.side = pm.core.rows();
    v.span = pm.span;
    v.sign = pm.sign;
    v.shift = pm.shift;
    v.presolve = pm.presolved;
    if (pm.zero_line) {
        v.zero = true;
        v.span = 0;
        return v;
    }
    size_t count = static_cast<size_t>(pm.span) + 1;
    std::vector<int64_t> xs = evaluation_points(count);
    unsigned batch = std::max(1u, opt.threads);

    if (mode == DetMode::Screen) {
        v.primes = opt.primes;
        for (uint64_t p : opt.primes) {
            for (size_t start = 0; start < count; start += batch) {
                size_t len = std::min<size_t>(batch, count - start);
                std::vector<uint64_t> vals(len);
                parallel_for(len, opt.threads, [&](size_t i) {
                    vals[i] = eval_det_mod(pm.core, static_cast<uint64_t>(xs[start + i]), p);
                });
                for (size_t i = 0; i < len; ++i) {
                    if (vals[i] != 0) {
                        v.zero = false;
                        v.witness_point = xs[start + i];
                        v.witness_prime = p;
                        v.witness_value = mpz_class(std::to_string(vals[i]));
                        v.points.assign(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(start + i + 1));
                        return v;
                    }
                }
            }
        }
        v.zero = true;
        v.points = xs;
        return v;
    }

    for (size_t start = 0; start < count; start += batch) {
        size_t len = std::min<size_t>(batch, count - start);
        std::vector<mpz_class> vals(len);
        parallel_for(len, opt.threads, [&](size_t i) { vals[i] = eval_det_exact(pm.core, xs[start + i]); });
        for (size_t i = 0; i < len; ++i) {
            v.points.push_back(xs[start + i]);
            v.values.push_back(vals[i]);
            if (vals[i] != 0) {
                v.zero = false;
                v.witness_point = xs[start + i];
                v.witness_value = vals[i];
                return v;
            }
        }
    }
    v.zero = true;
    return v;
}

ZeroVerdict det_is_zero(const PolyMatrix& m, DetMode mode, const DetOptions& opt)
{
    return det_is_zero_prepared(prepare_matrix(m, opt), mode, opt);
}

} // namespace tav
