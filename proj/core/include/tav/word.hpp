#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tav {

// One letter x_gen^exp of a free-group word, exp is +1 or -1.
struct Letter {
    uint32_t gen = 0;
    int exp = 1;
    friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
    friend bool operator<(const Letter& a, const Letter& b)
    {
        return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
    }
};

using Word = std::vector<Letter>;

// "x1 x2^-1 x3^2", "g2*g4*g5", "1" or "" for the empty word. Generator
// numbers are 1-based in text and 0-based in Letter::gen. The prefix is
// any run of letters, e.g. x, g.
Word parse_word(const std::string& text, uint32_t generator_count = 0);
std::string word_to_string(const Word& w, const std::string& prefix = "x");

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int64_t e);
Word free_reduce(const Word& w);
// exponent sum weighted by per-generator degrees
int64_t weighted_exponent_sum(const Word& w, const std::vector<int64_t>& weights);
int64_t exponent_sum(const Word& w, uint32_t gen);

struct GroupPresentation {
    uint32_t generators = 0;
    std::vector<Word> relators;
};

} // namespace tav
