#include <doctest.h>

#include <random>

#include "cell24/algebra.hpp"

using namespace cell24;

namespace {
IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = mpz_class(static_cast<long>(rows[i][j]));
  return m;
}
}  // namespace

TEST_CASE("smith normal form of small fixtures") {
  // diag(2,3): elementary operations turn it into diag(1,6)
  SmithResult s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(s.d.at(0, 0) == 1);
  CHECK(s.d.at(1, 1) == 6);

  SmithResult z = smith_normal_form(IntMatrix(3, 2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(z.d.at(i, j) == 0);
  CHECK(abs(determinant(z.u)) == 1);
  CHECK(abs(determinant(z.v)) == 1);

  SmithResult id = smith_normal_form(IntMatrix::identity(4));
  for (int i = 0; i < 4; ++i) CHECK(id.d.at(i, i) == 1);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
  for (int t = 0; t < 60; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (auto& x : a.a) x = mpz_class(entry(rng));
    SmithResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    int n = std::min(s.d.rows, s.d.cols);
    for (int k = 0; k + 1 < n; ++k) {
      CHECK(s.d.at(k, k) >= 0);
      if (s.d.at(k, k) != 0 && s.d.at(k + 1, k + 1) != 0)
        CHECK(s.d.at(k + 1, k + 1) % s.d.at(k, k) == 0);
      if (s.d.at(k, k) == 0) CHECK(s.d.at(k + 1, k + 1) == 0);
    }
    for (int i = 0; i < s.d.rows; ++i)
      for (int j = 0; j < s.d.cols; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
  }
}

TEST_CASE("smith diagonal is invariant under row and column permutation") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix a(5, 4);
  for (auto& x : a.a) x = mpz_class(entry(rng));
  SmithResult base = smith_normal_form(a);
  for (int t = 0; t < 10; ++t) {
    std::vector<int> rp(5), cp(4);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix b(5, 4);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) b.at(i, j) = a.at(rp[i], cp[j]);
    CHECK(smith_normal_form(b).d == base.d);
  }
}

TEST_CASE("abelianization fixtures") {
  FPresentation free3;
  free3.names = {"x", "y", "z"};
  CHECK(abelianization(free3) == AbelianInvariants{3, {}});

  // (Z_2 * Z_2) x| Z abelianizes to Z + Z_2
  FPresentation p;
  p.names = {"a", "e", "f"};
  p.relators = {parse_word("e^2", p.names), parse_word("f^2", p.names),
                parse_word("aea^-1f^-1", p.names), parse_word("afa^-1e^-1", p.names)};
  AbelianInvariants ab = abelianization(p);
  CHECK(ab.free_rank == 1);
  REQUIRE(ab.torsion.size() == 1);
  CHECK(ab.torsion[0] == 2);
  CHECK(ab.str() == "Z + Z_2");
}

TEST_CASE("invariant printing") {
  CHECK(AbelianInvariants{0, {}}.str() == "1");
  CHECK(AbelianInvariants{4, {2, 2, 2}}.str() == "Z^4 + Z_2^3");
  CHECK(AbelianInvariants{1, {4}}.str() == "Z + Z_4");
}
