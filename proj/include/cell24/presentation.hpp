#pragma once

// Finite presentations, ridge-cycle relator generation for a side-pairing
// scheme, quotients, and Tietze simplification.

#include <stdexcept>
#include <string>
#include <vector>

#include "cell24/encoding.hpp"
#include "cell24/word.hpp"

namespace cell24 {

struct FPresentation {
  std::vector<std::string> names;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(names.size()); }
  std::string str() const;  // "gens: ..." plus one relator per line
};

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One ridge cycle: the four directed ridges (exit side, partner side) in
// traversal order and the cycle relator read off along the way.
struct RidgeCycle {
  std::array<std::pair<Side, Side>, 4> states;
  Word relator;
};

// Traverses all ridge cycles of the scheme.  Crossing the exit side S
// appends the inverse of S's outgoing letter and moves the state
// (S, U) -> (k_S(U), k_S(S)).  Every cycle must close after exactly four
// crossings with trivial total K-part; otherwise the code does not satisfy
// the polyhedron gluing conditions and a CycleError is thrown.
std::vector<RidgeCycle> ridge_cycles(const PairingScheme& scheme);

// The fundamental group presentation: generators a..l, one length-4 relator
// per ridge cycle (24 in total).
FPresentation ridge_cycle_relators(const PairingScheme& scheme);

// True iff w2 is a cyclic rotation of w1 or of its inverse, after free and
// cyclic reduction.
bool relator_equivalent(const Word& w1, const Word& w2);

// Greedy one-to-one matching of two relator lists under relator_equivalent;
// returns the number of matched pairs (uses augmenting paths, so the count
// is the maximum matching size).
int match_relators(const std::vector<Word>& a, const std::vector<Word>& b);

FPresentation quotient(const FPresentation& p, const std::vector<Word>& extra);

struct TietzeOptions {
  int max_steps = 1000;
  // an elimination is skipped if it would push the total relator length
  // beyond this multiple of the starting total
  double growth_factor = 8.0;
  // when >= 0, only eliminate a generator whose substituted word is at most
  // this long (0/1 covers the " = 1" and " = other letter" stages that hand
  // computations stop at); -1 places no bound
  int max_replacement_length = -1;
};

struct TietzeResult {
  FPresentation pres;
  // original generator -> word over pres' generators
  std::vector<Word> images;
};

// Repeatedly (a) free/cyclically reduces, (b) removes trivial and duplicate
// relators (up to rotation and inversion), (c) eliminates a generator that
// occurs exactly once in some relator by substitution.  Deterministic:
// candidate relators are scanned shortest first, then by index.
TietzeResult tietze_simplify(const FPresentation& p, const TietzeOptions& opt = {});

}  // namespace cell24
