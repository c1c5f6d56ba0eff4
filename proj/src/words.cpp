#include "sturmpart/words.hpp"

namespace sturmpart {

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word word_pow(const Word& w, long long k) {
    if (k < 0) throw input_error("word_pow: negative exponent");
    Word out;
    out.reserve(w.size() * (size_t)k);
    for (long long i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word word_rotate_left(const Word& w, size_t j) {
    if (w.empty()) return w;
    j %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + (long)j, w.end());
    out.insert(out.end(), w.begin(), w.begin() + (long)j);
    return out;
}

Word subword(const Word& w, size_t from, size_t to) {
    if (from > to || to > w.size()) throw input_error("subword: bad index range");
    return Word(w.begin() + (long)from, w.begin() + (long)to);
}

std::string word_str(const Word& w) {
    bool single = true;
    for (const auto& s : w)
        if (s.size() != 1) single = false;
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += ",";
        out += w[i];
    }
    return out;
}

std::vector<size_t> per_set(const Word& w, size_t p) {
    if (w.empty() || p < 1 || p >= w.size())
        throw input_error("per_set: shift must satisfy 1 <= p < |word|");
    std::vector<size_t> out;
    size_t n = w.size();
    for (size_t j = 0; j < n; ++j)
        if (w[j] == w[(j + n - p) % n]) out.push_back(j);
    return out;
}

} // namespace sturmpart
