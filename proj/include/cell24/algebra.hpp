#pragma once

// Exact integer linear algebra on arbitrary-precision entries: Smith normal
// form and abelianization of finite presentations.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cell24/presentation.hpp"

namespace cell24 {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  mpz_class& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;
};

// Fraction-free Gaussian elimination (Bareiss); exact.
mpz_class determinant(const IntMatrix& m);

struct SmithResult {
  IntMatrix u, d, v;  // u * a * v = d
};

// Diagonalizes a by unimodular row and column operations; the diagonal of d
// is nonnegative and each entry divides the next.  Pivot choice: least
// absolute nonzero value, ties by position.
SmithResult smith_normal_form(const IntMatrix& a);

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<mpz_class> torsion;  // entries >= 2 in divisibility order

  bool operator==(const AbelianInvariants&) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;  // e.g. "Z^4 + Z_2^3", "1"
};

AbelianInvariants abelian_invariants_of(const IntMatrix& relation_matrix, int ngens);

// Abelianization of a presentation: Smith normal form of the exponent-sum
// matrix (one row per relator).
AbelianInvariants abelianization(const FPresentation& p);

}  // namespace cell24
