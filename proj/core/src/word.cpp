#include "tav/word.hpp"

#include <cctype>
#include <sstream>

#include "tav/error.hpp"

namespace tav {

Word parse_word(const std::string& text, uint32_t generator_count)
{
    Word w;
    size_t i = 0;
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::ParseError, "word '" + text + "': " + why);
    };
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
            ++i;
            continue;
        }
        if (ch == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            ++i; // identity
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            bad("unexpected character");
        while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
            ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            bad("missing generator number");
        long gen = std::stol(text.substr(start, i - start));
        if (gen < 1 || (generator_count && static_cast<uint32_t>(gen) > generator_count))
            bad("generator " + std::to_string(gen) + " out of range");
        long e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t es = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (es == i || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                bad("bad exponent");
            e = std::stol(text.substr(es, i - es));
        }
        Letter l{static_cast<uint32_t>(gen - 1), e < 0 ? -1 : 1};
        for (long k = 0; k < (e < 0 ? -e : e); ++k)
            w.push_back(l);
    }
    return w;
}

std::string word_to_string(const Word& w, const std::string& prefix)
{
    if (w.empty())
        return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        long run = static_cast<long>(j - i) * w[i].exp;
        if (!first)
            os << ' ';
        os << prefix << (w[i].gen + 1);
        if (run != 1)
            os << '^' << run;
        first = false;
        i = j;
    }
    return os.str();
}

Word inverse(const Word& w)
{
    Word r(w.rbegin(), w.rend());
    for (auto& l : r)
        l.exp = -l.exp;
    return r;
}

Word concat(const Word& a, const Word& b)
{
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, int64_t e)
{
    Word base = e < 0 ? inverse(w) : w;
    Word r;
    for (int64_t k = 0; k < (e < 0 ? -e : e); ++k)
        r.insert(r.end(), base.begin(), base.end());
    return r;
}

Word free_reduce(const Word& w)
{
    Word r;
    for (const auto& l : w) {
        if (!r.empty() && r.back().gen == l.gen && r.back().exp == -l.exp)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

int64_t weighted_exponent_sum(const Word& w, const std::vector<int64_t>& weights)
{
    int64_t s = 0;
    for (const auto& l : w)
        s += l.exp * weights.at(l.gen);
    return s;
}

int64_t exponent_sum(const Word& w, uint32_t gen)
{
    int64_t s = 0;
    for (const auto& l : w)
        if (l.gen == gen)
            s += l.exp;
    return s;
}

} // namespace tav
