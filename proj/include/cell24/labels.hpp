#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cell24 {

// A length-4 string over {+,-,0}, written e.g. "+0-0".  Labels of this shape
// name the sides and ideal vertices of the 24-cell and the elements of the
// coordinate-reflection group K.
struct SignLabel4 {
  std::array<int8_t, 4> s{0, 0, 0, 0};

  constexpr SignLabel4() = default;
  constexpr SignLabel4(int a, int b, int c, int d)
      : s{static_cast<int8_t>(a), static_cast<int8_t>(b),
          static_cast<int8_t>(c), static_cast<int8_t>(d)} {}

  static SignLabel4 parse(std::string_view text);

  int operator[](int i) const { return s[i]; }

  int nonzero_count() const {
    int n = 0;
    for (int8_t x : s) n += (x != 0);
    return n;
  }

  std::string str() const {
    std::string out;
    for (int8_t x : s) out += (x > 0 ? '+' : x < 0 ? '-' : '0');
    return out;
  }

  // Lexicographic with + < - < 0; used for all side/vertex enumeration order.
  static int rank(int8_t x) { return x > 0 ? 0 : x < 0 ? 1 : 2; }
  bool operator==(const SignLabel4&) const = default;
  bool operator<(const SignLabel4& o) const {
    for (int i = 0; i < 4; ++i)
      if (s[i] != o.s[i]) return rank(s[i]) < rank(o.s[i]);
    return false;
  }
};

inline SignLabel4 SignLabel4::parse(std::string_view text) {
  if (text.size() != 4) throw std::invalid_argument("sign label must have length 4");
  SignLabel4 l;
  for (int i = 0; i < 4; ++i) {
    char c = text[i];
    l.s[i] = (c == '+') ? 1 : (c == '-') ? -1 : 0;
    if (c != '+' && c != '-' && c != '0')
      throw std::invalid_argument("sign label may contain only +, -, 0");
  }
  return l;
}

// An element of K = Z_2^4: bit i set means reflection in the coordinate
// plane x_{i+1} = 0.  Acts on labels by flipping the sign of entry i when
// bit i is set; zero entries are fixed.
struct KElem {
  uint8_t bits = 0;

  constexpr KElem() = default;
  explicit constexpr KElem(uint8_t b) : bits(b) {}

  SignLabel4 act(const SignLabel4& l) const {
    SignLabel4 out = l;
    for (int i = 0; i < 4; ++i)
      if (bits >> i & 1) out.s[i] = static_cast<int8_t>(-out.s[i]);
    return out;
  }

  KElem operator*(KElem o) const { return KElem(static_cast<uint8_t>(bits ^ o.bits)); }
  bool identity() const { return bits == 0; }

  int minus_count() const { return __builtin_popcount(bits); }

  // Minus sign at position i of the k_{±±±±} label.
  bool minus_at(int i) const { return bits >> i & 1; }

  // Orientation convention of the census: a side-pairing reverses
  // orientation exactly when its K-part label has an even number of minuses.
  bool orientation_reversing() const { return minus_count() % 2 == 0; }

  SignLabel4 label() const {
    SignLabel4 l(1, 1, 1, 1);
    return act(l);
  }

  bool operator==(const KElem&) const = default;
};

}  // namespace cell24
