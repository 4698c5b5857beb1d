#include "cell24/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cell24 {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = q;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

struct SmithWorker {
  IntMatrix a, u, v;

  explicit SmithWorker(const IntMatrix& m)
      : a(m), u(IntMatrix::identity(m.rows)), v(IntMatrix::identity(m.cols)) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const mpz_class& f) {  // row dst += f * row src
    for (int c = 0; c < a.cols; ++c) a.at(dst, c) += f * a.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const mpz_class& f) {
    for (int r = 0; r < a.rows; ++r) a.at(r, dst) += f * a.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  bool find_pivot(int k, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = k; i < a.rows; ++i)
      for (int j = k; j < a.cols; ++j) {
        if (a.at(i, j) == 0) continue;
        mpz_class m = abs(a.at(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    int n = std::min(a.rows, a.cols);
    for (int k = 0; k < n; ++k) {
      int pi, pj;
      if (!find_pivot(k, pi, pj)) break;
      swap_rows(k, pi);
      swap_cols(k, pj);
      for (;;) {
        bool clean = true;
        for (int i = k + 1; i < a.rows; ++i) {
          if (a.at(i, k) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
          add_row(i, k, -q);
          if (a.at(i, k) != 0) {  // remainder becomes the smaller pivot
            swap_rows(k, i);
            clean = false;
          }
        }
        for (int j = k + 1; j < a.cols; ++j) {
          if (a.at(k, j) == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
          add_col(j, k, -q);
          if (a.at(k, j) != 0) {
            swap_cols(k, j);
            clean = false;
          }
        }
        if (!clean) continue;
        // enforce divisibility of the remaining block by the pivot
        bool redo = false;
        for (int i = k + 1; i < a.rows && !redo; ++i)
          for (int j = k + 1; j < a.cols && !redo; ++j)
            if (a.at(i, j) % a.at(k, k) != 0) {
              add_row(k, i, 1);
              redo = true;
            }
        if (!redo) break;
      }
      if (a.at(k, k) < 0) negate_row(k);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithWorker w(m);
  w.run();
  return SmithResult{std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::string AbelianInvariants::str() const {
  if (trivial()) return "1";
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank == 1)
    append("Z");
  else if (free_rank > 1)
    append("Z^" + std::to_string(free_rank));
  size_t i = 0;
  while (i < torsion.size()) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string t = "Z_" + torsion[i].get_str();
    if (j - i > 1) t += "^" + std::to_string(j - i);
    append(t);
    i = j;
  }
  return out;
}

AbelianInvariants abelian_invariants_of(const IntMatrix& rel, int ngens) {
  AbelianInvariants inv;
  if (rel.rows == 0) {
    inv.free_rank = ngens;
    return inv;
  }
  SmithResult s = smith_normal_form(rel);
  int rank = 0;
  int n = std::min(rel.rows, rel.cols);
  for (int k = 0; k < n; ++k) {
    const mpz_class& d = s.d.at(k, k);
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = ngens - rank;
  return inv;
}

AbelianInvariants abelianization(const FPresentation& p) {
  IntMatrix rel(static_cast<int>(p.relators.size()), p.ngens());
  for (int i = 0; i < rel.rows; ++i)
    for (Letter l : p.relators[i]) rel.at(i, gen_of(l)) += (l > 0 ? 1 : -1);
  return abelian_invariants_of(rel, p.ngens());
}

}  // namespace cell24
