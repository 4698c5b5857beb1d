#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace cell24 {

// A word in a finitely generated group: a sequence of signed letters, where
// letter g+1 is generator g and -(g+1) its inverse.  The empty word is the
// identity.
using Letter = int16_t;
using Word = std::vector<Letter>;

inline int gen_of(Letter l) { return std::abs(l) - 1; }
inline Letter inv(Letter l) { return static_cast<Letter>(-l); }

Word free_reduced(const Word& w);
Word cyclically_reduced(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long n);
Word conjugate(const Word& x, const Word& w);  // x w x^-1

// Substitutes `image[g]` for every occurrence of generator g; entries of
// `image` are words over the target generator set.
Word substitute(const Word& w, const std::vector<Word>& image);

// Renders as e.g. "g^-1j^-1h^-1i" or "a^3"; runs of one letter collapse to
// a power.
std::string word_str(const Word& w, const std::vector<std::string>& names);

// Parses words like "c^-1i", "c(a^-1k^-1eg)c^-1", "a^3(bc)^-2".  Whitespace
// and '*' separators are ignored.  Generator names are matched greedily,
// longest first.  Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

std::vector<std::string> letter_names();  // a..l

}  // namespace cell24
