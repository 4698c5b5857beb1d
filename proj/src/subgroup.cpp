#include "cell24/subgroup.hpp"

namespace cell24 {

SubgroupScheme orientation_double_cover_scheme(const FPresentation& p,
                                               const std::vector<bool>& reversing,
                                               int rep) {
  int n = p.ngens();
  if (static_cast<int>(reversing.size()) != n)
    throw std::invalid_argument("orientation character size mismatch");
  if (rep < 0) {
    for (int g = 0; g < n && rep < 0; ++g)
      if (reversing[g]) rep = g;
  }
  if (rep < 0)
    throw NoReversingGenerator("orientation character is trivial; the manifold is orientable");
  if (!reversing[rep])
    throw std::invalid_argument("transversal representative " + p.names[rep] +
                                " is orientation-preserving");
  SubgroupScheme s;
  s.parent = p;
  s.cosets.ngens = n;
  s.cosets.cosets = 2;
  s.cosets.status = CosetTable::Status::complete;
  s.cosets.tab.assign(static_cast<size_t>(2) * 2 * n, -1);
  for (int g = 0; g < n; ++g)
    for (int c = 0; c < 2; ++c) {
      int d = reversing[g] ? 1 - c : c;
      s.cosets.tab[static_cast<size_t>(c) * 2 * n + 2 * g] = d;
      s.cosets.tab[static_cast<size_t>(c) * 2 * n + 2 * g + 1] = d;
    }
  s.transversal = {Word{}, Word{static_cast<Letter>(rep + 1)}};
  return s;
}

SubgroupScheme finite_cover_scheme(const FPresentation& p,
                                   const std::vector<Word>& relator_kernel,
                                   const EnumerateOptions& opt) {
  CosetTable t = coset_enumerate(quotient(p, relator_kernel), {}, opt);
  if (!t.complete())
    throw InfiniteQuotient("coset enumeration overflowed at " +
                           std::to_string(opt.max_cosets) +
                           " cosets; the quotient was not shown finite");
  SubgroupScheme s;
  s.parent = p;
  s.cosets = std::move(t);
  s.transversal = s.cosets.schreier_words();
  return s;
}

RSResult reidemeister_schreier(const SubgroupScheme& s) {
  const FPresentation& p = s.parent;
  int n = p.ngens();
  int index = s.index();
  RSResult rs;
  rs.gen_index.assign(index, std::vector<int>(n, -1));
  for (int x = 0; x < index; ++x) {
    for (int y = 0; y < n; ++y) {
      int img = s.cosets.act(x, static_cast<Letter>(y + 1));
      Word gamma = s.transversal[x];
      gamma.push_back(static_cast<Letter>(y + 1));
      Word back = inverse(s.transversal[img]);
      gamma.insert(gamma.end(), back.begin(), back.end());
      gamma = free_reduced(gamma);
      if (gamma.empty()) continue;
      rs.gen_index[x][y] = static_cast<int>(rs.pres.names.size());
      rs.pres.names.push_back(p.names[y] + std::to_string(x));
      rs.parent_word_of_gen.push_back(std::move(gamma));
    }
  }
  for (int x = 0; x < index; ++x) {
    for (const Word& r : p.relators) {
      // rewriting of (transversal x) r (transversal x)^-1 over the gammas
      Word out;
      int c = x;
      for (Letter l : r) {
        int y = gen_of(l);
        if (l > 0) {
          int gi = rs.gen_index[c][y];
          if (gi >= 0) out.push_back(static_cast<Letter>(gi + 1));
          c = s.cosets.act(c, l);
        } else {
          c = s.cosets.act(c, l);
          int gi = rs.gen_index[c][y];
          if (gi >= 0) out.push_back(static_cast<Letter>(-(gi + 1)));
        }
      }
      if (c != x) throw std::logic_error("relator does not stabilize its coset");
      rs.raw_relators.push_back(out);
      Word red = cyclically_reduced(out);
      if (!red.empty()) rs.pres.relators.push_back(std::move(red));
    }
  }
  return rs;
}

Word rewrite_word(const Word& w, const SubgroupScheme& s, const RSResult& rs) {
  int c = 0;
  Word out;
  for (Letter l : w) {
    int y = gen_of(l);
    if (l > 0) {
      int gi = rs.gen_index[c][y];
      if (gi >= 0) out.push_back(static_cast<Letter>(gi + 1));
      c = s.cosets.act(c, l);
    } else {
      c = s.cosets.act(c, l);
      int gi = rs.gen_index[c][y];
      if (gi >= 0) out.push_back(static_cast<Letter>(-(gi + 1)));
    }
  }
  if (c != 0)
    throw NotInSubgroup("word " + word_str(w, s.parent.names) +
                        " lies in coset " + std::to_string(c) +
                        ", not in the subgroup");
  return free_reduced(out);
}

Word expand_to_parent(const Word& w, const RSResult& rs) {
  return substitute(w, rs.parent_word_of_gen);
}

}  // namespace cell24
