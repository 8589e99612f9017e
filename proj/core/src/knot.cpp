#include "tav/knot.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tav/error.hpp"
#include "tav/hashing.hpp"

namespace tav {

const char* source_name(SourceTag s)
{
    switch (s) {
    case SourceTag::Wirtinger: return "wirtinger";
    case SourceTag::Reduced: return "reduced";
    case SourceTag::Composite: return "composite";
    }
    return "?";
}

std::vector<Word> KnotPresentation::all_relators() const
{
    std::vector<Word> out = relators;
    out.insert(out.end(), redundant.begin(), redundant.end());
    return out;
}

void KnotPresentation::validate() const
{
    auto check_word = [&](const Word& w, const char* what) {
        for (const auto& l : w)
            if (l.gen >= n)
                fail(ErrorKind::InvalidArgument, std::string(what) + " uses a generator outside 1.." + std::to_string(n));
    };
    if (n == 0)
        fail(ErrorKind::InvalidArgument, "presentation without generators");
    if (relators.size() + 1 != n)
        fail(ErrorKind::DeficiencyViolation, std::to_string(n) + " generators but " + std::to_string(relators.size()) +
                                                 " relators");
    if (phi.size() != n)
        fail(ErrorKind::InvalidArgument, "abelianization array has the wrong length");
    for (const auto& r : all_relators()) {
        check_word(r, "relator");
        if (weighted_exponent_sum(r, phi) != 0)
            fail(ErrorKind::InvalidArgument, "relator " + word_to_string(r) + " has nonzero degree");
    }
    check_word(meridian, "meridian");
    if (weighted_exponent_sum(meridian, phi) != 1)
        fail(ErrorKind::InvalidArgument, "meridian " + word_to_string(meridian) + " does not have degree 1");
    if (longitude) {
        check_word(*longitude, "longitude");
        if (weighted_exponent_sum(*longitude, phi) != 0)
            fail(ErrorKind::InvalidArgument, "longitude has nonzero degree");
    }
}

std::optional<std::vector<ConjugationRelation>> KnotPresentation::conjugation_relations() const
{
    std::vector<ConjugationRelation> out;
    std::vector<uint32_t> uf(n);
    std::iota(uf.begin(), uf.end(), 0u);
    auto find = [&](uint32_t x) {
        while (uf[x] != x)
            x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& r : all_relators()) {
        ConjugationRelation cr;
        if (r.size() == 4 && r[0].gen == r[2].gen && r[0].exp == -r[2].exp && r[1].exp == 1 && r[3].exp == -1) {
            cr.a = r[0].gen;
            cr.e = r[0].exp;
            cr.b = r[1].gen;
            cr.c = r[3].gen;
        } else if (r.size() == 2 && r[0].exp == 1 && r[1].exp == -1) {
            cr.b = r[0].gen;
            cr.c = r[1].gen;
        } else {
            return std::nullopt;
        }
        uf[find(cr.b)] = find(cr.c);
        out.push_back(cr);
    }
    for (uint32_t i = 0; i < n; ++i)
        if (find(i) != find(0))
            return std::nullopt;
    return out;
}

std::string KnotPresentation::canonical() const
{
    std::ostringstream os;
    os << "n=" << n << ";rel=";
    for (const auto& r : relators)
        os << word_to_string(r) << ',';
    os << ";red=";
    for (const auto& r : redundant)
        os << word_to_string(r) << ',';
    os << ";m=" << word_to_string(meridian);
    os << ";l=" << (longitude ? word_to_string(*longitude) : std::string("-"));
    os << ";phi=";
    for (auto v : phi)
        os << v << ',';
    return os.str();
}

std::string KnotPresentation::content_hash() const
{
    return sha256_hex(canonical());
}

namespace {

struct PDInfo {
    int64_t edges = 0;
    std::vector<int64_t> arc;      // arc index per edge label
    std::vector<int> under_at;     // crossing index where edge is the under-incoming edge, or -1
    std::vector<int64_t> over_arc; // per crossing
    std::vector<int> sign;         // per crossing
};

int64_t next_edge(int64_t e, int64_t m)
{
    return e % m + 1;
}

PDInfo analyze_pd(const PDCode& pd)
{
    PDInfo info;
    int64_t n = static_cast<int64_t>(pd.size());
    info.edges = 2 * n;
    if (n == 0) {
        info.arc = {0, 0};
        return info;
    }
    int64_t m = 2 * n;
    std::vector<int> count(static_cast<size_t>(m + 1), 0);
    for (const auto& x : pd) {
        for (int64_t e : x) {
            if (e < 1 || e > m)
                fail(ErrorKind::MalformedPD, "edge label " + std::to_string(e) + " outside 1.." + std::to_string(m));
            ++count[static_cast<size_t>(e)];
        }
    }
    for (int64_t e = 1; e <= m; ++e)
        if (count[static_cast<size_t>(e)] != 2)
            fail(ErrorKind::MalformedPD, "edge label " + std::to_string(e) + " does not appear exactly twice");

    bool consecutive = true;
    for (const auto& x : pd) {
        bool under_ok = x[2] == next_edge(x[0], m);
        bool over_ok = x[3] == next_edge(x[1], m) || x[1] == next_edge(x[3], m);
        if (!under_ok || !over_ok)
            consecutive = false;
    }
    if (!consecutive) {
        // distinguish a link from garbage: strands join a-c and b-d
        std::vector<int64_t> uf(static_cast<size_t>(m + 1));
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int64_t(int64_t)> find = [&](int64_t v) {
            return uf[static_cast<size_t>(v)] == v ? v : uf[static_cast<size_t>(v)] = find(uf[static_cast<size_t>(v)]);
        };
        for (const auto& x : pd) {
            uf[static_cast<size_t>(find(x[0]))] = find(x[2]);
            uf[static_cast<size_t>(find(x[1]))] = find(x[3]);
        }
        std::set<int64_t> comps;
        for (int64_t e = 1; e <= m; ++e)
            comps.insert(find(e));
        if (comps.size() > 1)
            fail(ErrorKind::MultiComponentLink, "PD code has " + std::to_string(comps.size()) + " components");
        fail(ErrorKind::MalformedPD, "edge labels are not consecutive along the knot");
    }

    info.under_at.assign(static_cast<size_t>(m + 1), -1);
    for (size_t i = 0; i < pd.size(); ++i) {
        if (info.under_at[static_cast<size_t>(pd[i][0])] != -1)
            fail(ErrorKind::MalformedPD, "edge " + std::to_string(pd[i][0]) + " enters two undercrossings");
        info.under_at[static_cast<size_t>(pd[i][0])] = static_cast<int>(i);
    }
    info.arc.assign(static_cast<size_t>(m + 1), 0);
    int64_t k = 0;
    for (int64_t e = 1; e < m; ++e) {
        if (info.under_at[static_cast<size_t>(e)] >= 0)
            ++k;
        info.arc[static_cast<size_t>(e + 1)] = k;
    }
    if (info.under_at[static_cast<size_t>(m)] < 0 && k > 0) {
        for (int64_t e = 1; e <= m; ++e)
            if (info.arc[static_cast<size_t>(e)] == k)
                info.arc[static_cast<size_t>(e)] = 0;
    }
    for (const auto& x : pd) {
        info.over_arc.push_back(info.arc[static_cast<size_t>(x[1])]);
        info.sign.push_back(x[3] == next_edge(x[1], m) ? 1 : -1);
    }
    return info;
}

} // namespace

KnotPresentation wirtinger_from_pd(const PDCode& pd)
{
    PDInfo info = analyze_pd(pd);
    KnotPresentation p;
    p.source = SourceTag::Wirtinger;
    p.n = pd.empty() ? 1 : static_cast<uint32_t>(pd.size());
    for (size_t i = 0; i < pd.size(); ++i) {
        auto o = static_cast<uint32_t>(info.over_arc[i]);
        auto in = static_cast<uint32_t>(info.arc[static_cast<size_t>(pd[i][0])]);
        auto out = static_cast<uint32_t>(info.arc[static_cast<size_t>(pd[i][2])]);
        uint32_t b = info.sign[i] > 0 ? in : out;
        uint32_t c = info.sign[i] > 0 ? out : in;
        Word r{{o, 1}, {b, 1}, {o, -1}, {c, -1}};
        if (i + 1 == pd.size())
            p.redundant.push_back(r);
        else
            p.relators.push_back(r);
    }
    p.meridian = Word{{0, 1}};
    p.phi.assign(p.n, 1);
    p.longitude = longitude_from_pd(pd);
    p.validate();
    return p;
}

Word longitude_from_pd(const PDCode& pd)
{
    PDInfo info = analyze_pd(pd);
    Word u; // built right to left: later crossings on the left
    int64_t writhe = 0;
    for (int64_t e = 1; e <= info.edges; ++e) {
        int ci = info.under_at.empty() ? -1 : info.under_at[static_cast<size_t>(e)];
        if (ci < 0)
            continue;
        u.insert(u.begin(), Letter{static_cast<uint32_t>(info.over_arc[static_cast<size_t>(ci)]), info.sign[static_cast<size_t>(ci)]});
        writhe += info.sign[static_cast<size_t>(ci)];
    }
    Word l = concat(u, power(Word{{0, 1}}, -writhe));
    return free_reduce(l);
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> a)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility condition
                for (size_t i = t + 1; i < rows && clean; ++i)
                    for (size_t j = t + 1; j < cols && clean; ++j)
                        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                            for (size_t k = t; k < cols; ++k)
                                a[t][k] += a[i][k];
                            clean = false;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

std::vector<int64_t> abelianization_degrees(uint32_t n, const std::vector<Word>& relators, const Word& meridian)
{
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : relators) {
        std::vector<mpz_class> row(n);
        for (const auto& l : r) {
            if (l.gen >= n)
                fail(ErrorKind::InvalidArgument, "relator letter outside the generator range");
            row[l.gen] += l.exp;
        }
        m.push_back(std::move(row));
    }
    std::vector<mpz_class> diag = smith_diagonal(m);
    if (diag.size() + 1 != n)
        fail(ErrorKind::NotCyclicAbelianization, "abelianization has free rank " + std::to_string(n - diag.size()));
    for (const auto& d : diag)
        if (d != 1)
            fail(ErrorKind::NotCyclicAbelianization, "abelianization has torsion Z/" + d.get_str());

    // rational kernel by reduced row echelon form
    std::vector<std::vector<mpq_class>> a;
    for (const auto& row : m)
        a.emplace_back(row.begin(), row.end());
    std::vector<int64_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < n && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[r], a[p]);
        mpq_class lead = a[r][c];
        for (auto& v : a[r])
            v /= lead;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            mpq_class f = a[i][c];
            for (size_t j = 0; j < n; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int64_t>(c));
        ++r;
    }
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivot_col)
        is_pivot[static_cast<size_t>(c)] = 1;
    size_t free_col = 0;
    while (is_pivot[free_col])
        ++free_col;
    std::vector<mpq_class> v(n);
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
        v[static_cast<size_t>(pivot_col[i])] = -a[i][free_col];
    mpz_class den = 1;
    for (const auto& x : v)
        den = lcm(den, x.get_den());
    std::vector<mpz_class> iv;
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class y = x.get_num() * (den / x.get_den());
        iv.push_back(y);
        g = gcd(g, y);
    }
    mpz_class mer = 0;
    for (const auto& l : meridian)
        mer += l.exp * iv.at(l.gen) / g;
    if (mer != 1 && mer != -1)
        fail(ErrorKind::NotCyclicAbelianization, "meridian maps to " + mer.get_str() + " in the abelianization");
    std::vector<int64_t> phi;
    for (const auto& y : iv) {
        mpz_class z = y / g * mer;
        phi.push_back(z.get_si());
    }
    return phi;
}

namespace {

Word shift_word(const Word& w, uint32_t by)
{
    Word r = w;
    for (auto& l : r)
        l.gen += by;
    return r;
}

} // namespace

KnotPresentation connected_sum(const KnotPresentation& a, const KnotPresentation& b)
{
    KnotPresentation p;
    p.name = a.name + "#" + b.name;
    p.source = SourceTag::Composite;
    p.n = a.n + b.n;
    p.relators = a.relators;
    for (const auto& r : b.relators)
        p.relators.push_back(shift_word(r, a.n));
    p.relators.push_back(concat(a.meridian, inverse(shift_word(b.meridian, a.n))));
    p.redundant = a.redundant;
    for (const auto& r : b.redundant)
        p.redundant.push_back(shift_word(r, a.n));
    p.meridian = a.meridian;
    if (a.longitude && b.longitude)
        p.longitude = free_reduce(concat(*a.longitude, shift_word(*b.longitude, a.n)));
    p.phi = a.phi;
    p.phi.insert(p.phi.end(), b.phi.begin(), b.phi.end());
    p.validate();
    return p;
}

namespace {

// a*p + b*q = 1 with |a| minimal (ties: a positive)
std::pair<int64_t, int64_t> bezout_min_a(int64_t p, int64_t q)
{
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t(),
               mpz_class(static_cast<long>(q)).get_mpz_t());
    if (g < 0) {
        s = -s;
        t = -t;
    }
    int64_t a = s.get_si();
    int64_t aq = q < 0 ? -q : q;
    if (aq == 0)
        return {a, 0};
    // a is determined mod |q|
    int64_t r = ((a % aq) + aq) % aq;
    int64_t best = r;
    if (aq - r < r)
        best = r - aq;
    int64_t b = (1 - best * p) / q;
    return {best, b};
}

} // namespace

KnotPresentation cable(const KnotPresentation& k, int64_t p, int64_t q)
{
    if (!k.longitude)
        fail(ErrorKind::MissingLongitude, "cable of '" + k.name + "' needs a longitude");
    if (p <= 0)
        fail(ErrorKind::InvalidArgument, "cable winding number must be positive");
    if (std::gcd(p, q) != 1)
        fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    KnotPresentation c;
    c.name = k.name + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    c.source = SourceTag::Composite;
    c.n = k.n + 1;
    c.relators = k.relators;
    c.redundant = k.redundant;
    Word lp{{k.n, 1}};
    c.relators.push_back(free_reduce(concat(concat(power(*k.longitude, p), power(k.meridian, q)), power(lp, -p))));
    auto [a, b] = bezout_min_a(p, q);
    c.meridian = free_reduce(concat(power(k.meridian, a), power(lp, b)));
    c.phi = abelianization_degrees(c.n, c.all_relators(), c.meridian);
    c.validate();
    return c;
}

} // namespace tav
