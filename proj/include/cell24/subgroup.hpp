#pragma once

// Finite-index subgroup machinery: Schreier transversals, the
// Reidemeister-Schreier presentation, and rewriting of ambient words into
// subgroup generators.

#include <stdexcept>
#include <vector>

#include "cell24/enumerate.hpp"
#include "cell24/presentation.hpp"

namespace cell24 {

struct NoReversingGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInSubgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfiniteQuotient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SubgroupScheme {
  FPresentation parent;
  CosetTable cosets;               // complete action of the parent generators
  std::vector<Word> transversal;   // prefix-closed Schreier representatives

  int index() const { return static_cast<int>(cosets.cosets); }
  int coset_of(const Word& w) const { return cosets.trace(0, w); }
};

// Index-2 subgroup of the orientation-preserving words.  `rep` pins the
// transversal representative (must be a reversing generator); -1 picks the
// first reversing generator in a..l order.  Throws NoReversingGenerator when
// the character is trivial.
SubgroupScheme orientation_double_cover_scheme(const FPresentation& p,
                                               const std::vector<bool>& reversing,
                                               int rep = -1);

// The subgroup is the kernel of the quotient by the normal closure of
// `relator_kernel`; the quotient must enumerate to a finite group within the
// limits, otherwise InfiniteQuotient is thrown.  The coset table doubles as
// the quotient's multiplication table (regular representation).
SubgroupScheme finite_cover_scheme(const FPresentation& p,
                                   const std::vector<Word>& relator_kernel,
                                   const EnumerateOptions& opt = {});

struct RSResult {
  FPresentation pres;
  // gamma(x, y) = (transversal x) y (transversal of coset x*y)^-1; -1 when
  // the word reduces to the identity
  std::vector<std::vector<int>> gen_index;   // [coset][parent gen]
  std::vector<Word> parent_word_of_gen;      // subgroup gen -> parent word
  std::vector<Word> raw_relators;            // before reduction, one per (coset, relator)
};

// Subgroup generators are named by parent letter plus coset index (c0, c1,
// ...), matching the usual double-cover notation.
RSResult reidemeister_schreier(const SubgroupScheme& s);

// Schreier rewriting of a parent word lying in the subgroup.  Throws
// NotInSubgroup when the word's coset is nontrivial.
Word rewrite_word(const Word& w, const SubgroupScheme& s, const RSResult& rs);

// Expands a subgroup word back to parent letters (for round-trip checks).
Word expand_to_parent(const Word& w, const RSResult& rs);

}  // namespace cell24
