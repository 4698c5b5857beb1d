#include "cell24/encoding.hpp"

#include <cctype>

namespace cell24 {

const std::array<std::pair<int, int>, kNumGroups>& group_positions() {
  static const std::array<std::pair<int, int>, kNumGroups> tab = {{
      {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
  }};
  return tab;
}

int group_of_side(Side s) {
  auto [p, q] = side_positions(s);
  const auto& groups = group_positions();
  for (int g = 0; g < kNumGroups; ++g)
    if (groups[g] == std::pair<int, int>{p, q}) return g;
  throw std::logic_error("side with unexpected nonzero positions");
}

std::string generator_name(int gen) { return std::string(1, char('a' + gen)); }

KElem decode_char(char c) {
  int v;
  char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u >= '1' && u <= '9')
    v = u - '0';
  else if (u >= 'A' && u <= 'F')
    v = u - 'A' + 10;
  else
    throw DecodeError(std::string("invalid code character '") + c +
                          "' (expected 1-9 or A-F)",
                      -1, c);
  // hex -> binary -> digit order reversed -> 0 = +, 1 = -: bit i of the
  // value flips coordinate x_{i+1}
  return KElem(static_cast<uint8_t>(v));
}

char encode_kelem(KElem k) {
  if (k.bits == 0 || k.bits > 15) throw std::invalid_argument("K element out of code range");
  return k.bits < 10 ? char('0' + k.bits) : char('A' + k.bits - 10);
}

PairingScheme scheme_from_kparts(const std::array<KElem, kNumGroups>& kparts,
                                 std::string code_label) {
  PairingScheme ps;
  ps.code = std::move(code_label);
  ps.kparts = kparts;
  ps.letter_of_side.fill(0);
  ps.target_of_side.fill(0);
  const auto& groups = group_positions();
  for (int g = 0; g < kNumGroups; ++g) {
    auto [p, q] = groups[g];
    KElem k = kparts[g];
    // the four sides of the group in dictionary order ++, +-, -+, --
    std::array<Side, 4> group_sides;
    int idx = 0;
    for (int sp : {1, -1})
      for (int sq : {1, -1}) {
        SignLabel4 l;
        l.s[p] = static_cast<int8_t>(sp);
        l.s[q] = static_cast<int8_t>(sq);
        group_sides[idx++] = side_from_label(l);
      }
    int letter = 2 * g;  // first of the group's two letters
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
      if (used[i]) continue;
      Side src = group_sides[i];
      Side dst = act(k, src);
      if (dst == src)
        throw DecodeError("K-part " + k.label().str() + " fixes side " +
                              label(src).str() + "; group " +
                              std::to_string(g + 1) + " has no side pairing",
                          g, ps.code.size() == 6 ? ps.code[g] : '?');
      for (int j = 0; j < 4; ++j)
        if (group_sides[j] == dst) used[j] = true;
      used[i] = true;
      ps.letter_of_side[src.id] = static_cast<int8_t>(letter + 1);
      ps.letter_of_side[dst.id] = static_cast<int8_t>(-(letter + 1));
      ps.target_of_side[src.id] = dst.id;
      ps.target_of_side[dst.id] = src.id;
      ps.source_of_generator[letter] = src.id;
      ++letter;
    }
    if (letter != 2 * g + 2)
      throw DecodeError("group does not split into two pairings", g, '?');
  }
  for (int gen = 0; gen < kNumGenerators; ++gen)
    ps.reversing[gen] = ps.kpart_of_generator(gen).orientation_reversing();
  return ps;
}

PairingScheme decode_code(std::string_view code) {
  if (code.size() != 6)
    throw DecodeError("code must have exactly 6 characters", -1,
                      code.empty() ? '?' : code[0]);
  std::string norm;
  std::array<KElem, kNumGroups> kparts;
  for (int i = 0; i < 6; ++i) {
    try {
      kparts[i] = decode_char(code[i]);
    } catch (DecodeError& e) {
      throw DecodeError(std::string(e.what()) + " at position " + std::to_string(i + 1),
                        i, code[i]);
    }
    norm += static_cast<char>(std::toupper(static_cast<unsigned char>(code[i])));
  }
  return scheme_from_kparts(kparts, norm);
}

std::array<bool, kNumGenerators> orientation_character(const PairingScheme& scheme) {
  return scheme.reversing;
}

}  // namespace cell24
