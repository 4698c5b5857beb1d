#include "cell24/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cell24 {

Word free_reduced(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == inv(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclically_reduced(const Word& w) {
  Word r = free_reduced(w);
  size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == inv(r[j - 1])) {
    ++i;
    --j;
  }
  return Word(r.begin() + i, r.begin() + j);
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(const Word& w, long long n) {
  Word base = n < 0 ? inverse(w) : w;
  long long k = n < 0 ? -n : n;
  Word out;
  for (long long i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word conjugate(const Word& x, const Word& w) {
  return concat(concat(x, w), inverse(x));
}

Word substitute(const Word& w, const std::vector<Word>& image) {
  Word out;
  for (Letter l : w) {
    const Word& im = image.at(gen_of(l));
    if (l > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      Word ii = inverse(im);
      out.insert(out.end(), ii.begin(), ii.end());
    }
  }
  return free_reduced(out);
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    out += names.at(gen_of(w[i]));
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const std::vector<std::string>& names;

  void skip() {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
      ++pos;
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  long long parse_exponent() {
    skip();
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    skip();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("expected exponent digits after '^'");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  }

  Word parse_term() {
    skip();
    if (text[pos] == '(') {
      ++pos;
      Word inner = parse_word_inner(true);
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("unbalanced parenthesis in word");
      ++pos;
      return power(inner, parse_exponent());
    }
    // longest generator-name match
    int best = -1;
    size_t best_len = 0;
    for (size_t g = 0; g < names.size(); ++g) {
      const std::string& n = names[g];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best = static_cast<int>(g);
        best_len = n.size();
      }
    }
    if (best < 0)
      throw std::invalid_argument("unknown generator at '" +
                                  std::string(text.substr(pos)) + "'");
    pos += best_len;
    return power(Word{static_cast<Letter>(best + 1)}, parse_exponent());
  }

  Word parse_word_inner(bool stop_at_paren) {
    Word out;
    while (!done()) {
      if (stop_at_paren && text[pos] == ')') break;
      Word t = parse_term();
      out.insert(out.end(), t.begin(), t.end());
    }
    return out;
  }
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  Parser p{text, 0, names};
  p.skip();
  if (!p.done() && p.text[p.pos] == '1' && p.text.substr(p.pos) == "1") return {};
  Word w = p.parse_word_inner(false);
  if (!p.done()) throw std::invalid_argument("trailing input in word");
  return w;
}

std::vector<std::string> letter_names() {
  std::vector<std::string> out;
  for (char c = 'a'; c <= 'l'; ++c) out.emplace_back(1, c);
  return out;
}

}  // namespace cell24
