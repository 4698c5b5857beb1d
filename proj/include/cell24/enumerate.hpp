#pragma once

// Todd-Coxeter coset enumeration.  Semidecides finiteness: a completed table
// gives the exact index (group order for the trivial subgroup); hitting the
// coset limit is reported as an overflow outcome, never as "infinite".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cell24/presentation.hpp"
#include "cell24/word.hpp"

namespace cell24 {

enum class Strategy { hlt, felsch };

struct EnumerateOptions {
  long long max_cosets = 1'000'000;
  Strategy strategy = Strategy::hlt;
};

struct CosetTable {
  enum class Status { complete, overflowed };
  Status status = Status::overflowed;
  int ngens = 0;
  long long cosets = 0;                // live cosets (rows of `tab`)
  std::vector<int32_t> tab;            // row-major, 2*ngens columns, -1 empty

  bool complete() const { return status == Status::complete; }
  int columns() const { return 2 * ngens; }
  static int column(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

  int32_t act(int32_t coset, Letter l) const {
    return tab[static_cast<size_t>(coset) * columns() + column(l)];
  }
  // image of `coset` under a word; -1 if an entry is missing
  int32_t trace(int32_t coset, const Word& w) const;

  // Schreier representative words (shortlex BFS over generator order);
  // requires a complete table.
  std::vector<Word> schreier_words() const;

  // one line per coset: images under a, a^-1, b, b^-1, ...
  std::string export_text(const std::vector<std::string>& names) const;
};

// Enumerates the cosets of <subgens> in the presented group.  On completion
// the row count is the subgroup index; with empty subgens it is the group
// order when finite.
CosetTable coset_enumerate(const FPresentation& p, const std::vector<Word>& subgens,
                           const EnumerateOptions& opt = {});

// std::nullopt on overflow
std::optional<long long> order_of_quotient(const FPresentation& p,
                                           const EnumerateOptions& opt = {});

// Full relator-trace validation of a complete table: every relator must act
// trivially on every coset and generator actions must be mutually inverse
// bijections.
bool validate_table(const FPresentation& p, const CosetTable& t);

}  // namespace cell24
