#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sturmpart/errors.hpp"

namespace sturmpart {

// Words are finite sequences of symbols; symbols are strings so that both
// plain letters ("0", "1") and generated partition labels fit.
using Symbol = std::string;
using Word = std::vector<Symbol>;

Word word_concat(const Word& a, const Word& b);

// k copies of w concatenated; k >= 0.
Word word_pow(const Word& w, long long k);

// Cyclic left rotation by j positions (j >= 0).
Word word_rotate_left(const Word& w, size_t j);

// w[from, to) as a word.
Word subword(const Word& w, size_t from, size_t to);

// Joined display form: plain concatenation when all symbols are single
// characters, comma-separated otherwise.
std::string word_str(const Word& w);

// Positions where w agrees with its own cyclic shift by p:
// { j : w_j = w_{(j - p) mod |w|} }, for 1 <= p < |w|. Sorted ascending.
std::vector<size_t> per_set(const Word& w, size_t p);

} // namespace sturmpart
