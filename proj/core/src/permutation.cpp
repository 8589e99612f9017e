#include "tav/permutation.hpp"

#include <cctype>
#include <sstream>

#include "tav/error.hpp"

namespace tav {

Perm identity_perm(size_t d)
{
    Perm p(d);
    for (size_t i = 0; i < d; ++i)
        p[i] = static_cast<uint32_t>(i);
    return p;
}

bool is_permutation(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    for (auto v : p) {
        if (v >= p.size() || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& a, const Perm& b)
{
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = b[a[i]];
    return r;
}

Perm inverse(const Perm& p)
{
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<uint32_t>(i);
    return r;
}

bool is_identity(const Perm& p)
{
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

std::vector<size_t> cycle_lengths(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    std::vector<size_t> out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

std::string cycle_string(const Perm& p)
{
    std::ostringstream os;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i)
            continue;
        os << '(';
        bool first = true;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            if (!first)
                os << ' ';
            os << j;
            first = false;
        }
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Perm parse_cycles(const std::string& s, size_t d)
{
    Perm p = identity_perm(d);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') {
            if (!std::isspace(static_cast<unsigned char>(s[i])))
                fail(ErrorKind::ParseError, "cycle notation '" + s + "'");
            ++i;
            continue;
        }
        size_t close = s.find(')', i);
        if (close == std::string::npos)
            fail(ErrorKind::ParseError, "unbalanced cycle '" + s + "'");
        std::istringstream is(s.substr(i + 1, close - i - 1));
        std::vector<uint32_t> cyc;
        long v;
        while (is >> v) {
            if (v < 0 || static_cast<size_t>(v) >= d)
                fail(ErrorKind::ParseError, "point out of range in '" + s + "'");
            cyc.push_back(static_cast<uint32_t>(v));
        }
        for (size_t k = 0; k < cyc.size(); ++k)
            p[cyc[k]] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    if (!is_permutation(p))
        fail(ErrorKind::ParseError, "cycles overlap in '" + s + "'");
    return p;
}

} // namespace tav
