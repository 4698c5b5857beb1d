#pragma once

// Decoding of the 6-character side-pairing codes of the 24-cell.  Each code
// character is a hexadecimal digit from {1..9,A..F}; its binary expansion,
// read with the digit order reversed and 0 -> +, 1 -> -, names the K-part
// shared by one group of four sides.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cell24/cell24.hpp"
#include "cell24/labels.hpp"

namespace cell24 {

struct DecodeError : std::runtime_error {
  int position;  // 0-based index into the code, -1 if not tied to one
  char character;
  DecodeError(const std::string& msg, int pos, char ch)
      : std::runtime_error(msg), position(pos), character(ch) {}
};

inline constexpr int kNumGroups = 6;
inline constexpr int kNumGenerators = 12;

// Side groups in generator-letter order: (a,b), (c,d), (e,f), (g,h), (i,j),
// (k,l) pair the sides with nonzero positions (1,2), (1,3), (2,3), (1,4),
// (2,4), (3,4).
const std::array<std::pair<int, int>, kNumGroups>& group_positions();
int group_of_side(Side s);
inline int group_of_generator(int gen) { return gen / 2; }

std::string generator_name(int gen);

KElem decode_char(char c);  // throws DecodeError
char encode_kelem(KElem k);

// A fully decoded side-pairing scheme: the six K-parts plus the induced
// perfect matching of the 24 sides into 12 side-pairings a..l.
//
// letter_of_side[s] is the signed outgoing letter of side s: the pairing
// with source s is letter g+1 > 0 if s is the group's first-listed source,
// and -(g+1) if s is the target of letter g.  target_of_side[s] is where
// that pairing sends s.
struct PairingScheme {
  std::string code;  // normalized upper-case form
  std::array<KElem, kNumGroups> kparts;
  std::array<int8_t, kNumSides> letter_of_side;
  std::array<uint8_t, kNumSides> target_of_side;
  std::array<uint8_t, kNumGenerators> source_of_generator;
  std::array<bool, kNumGenerators> reversing;  // orientation character

  KElem kpart_of_side(Side s) const { return kparts[group_of_side(s)]; }
  KElem kpart_of_generator(int gen) const { return kparts[group_of_generator(gen)]; }
  Side pair_target(Side s) const { return Side{target_of_side[s.id]}; }
  int outgoing_letter(Side s) const { return letter_of_side[s.id]; }
};

// Builds the scheme from six K-parts directly; `code_label` is only recorded.
// Throws DecodeError if some K-part fixes the sides of its group, in which
// case no perfect matching by that K-part exists.
PairingScheme scheme_from_kparts(const std::array<KElem, kNumGroups>& kparts,
                                 std::string code_label);

// Decodes a 6-character code (case-insensitive).  Throws DecodeError.
PairingScheme decode_code(std::string_view code);

// reversing flags of the scheme, as the spec-level operation
std::array<bool, kNumGenerators> orientation_character(const PairingScheme& scheme);

}  // namespace cell24
