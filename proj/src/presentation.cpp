#include "cell24/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cell24 {

std::string FPresentation::str() const {
  std::string out = "gens:";
  for (const auto& n : names) out += " " + n;
  out += "\n";
  for (const Word& r : relators) out += word_str(r, names) + "\n";
  return out;
}

namespace {

using State = std::pair<Side, Side>;

State step(const PairingScheme& ps, State st) {
  KElem k = ps.kpart_of_side(st.first);
  return {act(k, st.second), act(k, st.first)};
}

struct Traversal {
  std::array<State, 4> states;
  Word relator;
  KElem total;
};

Traversal traverse(const PairingScheme& ps, State start) {
  Traversal t;
  State st = start;
  for (int i = 0; i < 4; ++i) {
    t.states[i] = st;
    if (i > 0 && st == start) throw CycleError("ridge cycle closes early");
    t.relator.push_back(static_cast<Letter>(-ps.outgoing_letter(st.first)));
    t.total = t.total * ps.kpart_of_side(st.first);
    st = step(ps, st);
  }
  if (st != start) throw CycleError("ridge cycle fails to close in 4 steps");
  if (!t.total.identity())
    throw CycleError("ridge cycle closes with nontrivial K-part " +
                     t.total.label().str());
  return t;
}

}  // namespace

std::vector<RidgeCycle> ridge_cycles(const PairingScheme& ps) {
  std::vector<RidgeCycle> out;
  std::set<State> visited;
  for (const Ridge& r : ridges()) {
    for (State st : {State{r.a, r.b}, State{r.b, r.a}}) {
      if (visited.count(st)) continue;
      Traversal fwd = traverse(ps, st);
      // canonical representative: among the eight directed states of this
      // cycle, prefer those whose first letter comes out as an inverse
      // generator, then take the lexicographically least
      State best = st;
      auto key = [&](State s) {
        return std::tuple(ps.outgoing_letter(s.first) < 0, s.first.id, s.second.id);
      };
      auto consider = [&](State s) {
        if (key(s) < key(best)) best = s;
      };
      for (const State& s : fwd.states) {
        consider(s);
        consider({s.second, s.first});
      }
      Traversal canon = traverse(ps, best);
      RidgeCycle rc;
      rc.relator = canon.relator;
      for (int i = 0; i < 4; ++i) {
        rc.states[i] = canon.states[i];
        visited.insert(canon.states[i]);
        visited.insert({canon.states[i].second, canon.states[i].first});
      }
      out.push_back(std::move(rc));
    }
  }
  if (out.size() != 24)
    throw CycleError("expected 24 ridge cycles, got " + std::to_string(out.size()));
  return out;
}

FPresentation ridge_cycle_relators(const PairingScheme& ps) {
  FPresentation p;
  p.names = letter_names();
  for (const RidgeCycle& rc : ridge_cycles(ps)) p.relators.push_back(rc.relator);
  return p;
}

bool relator_equivalent(const Word& w1, const Word& w2) {
  Word a = cyclically_reduced(w1), b = cyclically_reduced(w2);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (const Word& c : {a, inverse(a)}) {
    for (size_t r = 0; r < c.size(); ++r) {
      bool eq = true;
      for (size_t i = 0; i < c.size() && eq; ++i)
        eq = c[(r + i) % c.size()] == b[i];
      if (eq) return true;
    }
  }
  return false;
}

int match_relators(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<std::vector<int>> adj(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (relator_equivalent(a[i], b[j])) adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_b(b.size(), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int i) -> bool {
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_b[j] < 0 || augment(match_b[j])) {
        match_b[j] = i;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    seen.assign(b.size(), 0);
    if (augment(static_cast<int>(i))) ++matched;
  }
  return matched;
}

FPresentation quotient(const FPresentation& p, const std::vector<Word>& extra) {
  FPresentation out = p;
  for (const Word& w : extra) {
    Word r = cyclically_reduced(w);
    if (!r.empty()) out.relators.push_back(std::move(r));
  }
  return out;
}

namespace {

size_t total_length(const std::vector<Word>& rels) {
  return std::accumulate(rels.begin(), rels.end(), size_t{0},
                         [](size_t acc, const Word& w) { return acc + w.size(); });
}

void clean_relators(std::vector<Word>& rels) {
  for (Word& r : rels) r = cyclically_reduced(r);
  std::vector<Word> kept;
  for (const Word& r : rels) {
    if (r.empty()) continue;
    bool dup = false;
    for (const Word& k : kept)
      if (relator_equivalent(k, r)) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(r);
  }
  rels = std::move(kept);
}

}  // namespace

TietzeResult tietze_simplify(const FPresentation& p, const TietzeOptions& opt) {
  int n = p.ngens();
  std::vector<Word> rels = p.relators;
  std::vector<char> alive(n, 1);
  // images of the original generators over the current (not yet renumbered)
  // generator set
  std::vector<Word> image(n);
  for (int g = 0; g < n; ++g) image[g] = {static_cast<Letter>(g + 1)};

  clean_relators(rels);
  const size_t budget_len =
      static_cast<size_t>(static_cast<double>(std::max<size_t>(total_length(rels), 16)) *
                          opt.growth_factor);

  for (int step_count = 0; step_count < opt.max_steps; ++step_count) {
    // find an elimination: a generator occurring exactly once in some
    // relator, scanning relators shortest first; within a relator prefer
    // dropping the largest generator, so earlier letters stay alive
    std::vector<int> order(rels.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
      return rels[i].size() < rels[j].size();
    });
    int pick_rel = -1, pick_gen = -1, pick_pos = -1;
    for (int ri : order) {
      const Word& r = rels[ri];
      std::map<int, int> count;
      for (Letter l : r) ++count[gen_of(l)];
      for (size_t pos = 0; pos < r.size(); ++pos) {
        int g = gen_of(r[pos]);
        if (count[g] != 1) continue;
        if (opt.max_replacement_length >= 0 &&
            static_cast<int>(r.size()) - 1 > opt.max_replacement_length) {
          // the substituted word could still reduce below the bound
          Word probe = r;
          std::rotate(probe.begin(), probe.begin() + static_cast<long>(pos), probe.end());
          if (static_cast<int>(free_reduced(Word(probe.begin() + 1, probe.end())).size()) >
              opt.max_replacement_length)
            continue;
        }
        if (g > pick_gen) {
          pick_rel = ri;
          pick_gen = g;
          pick_pos = static_cast<int>(pos);
        }
      }
      if (pick_rel >= 0) break;
    }
    if (pick_rel < 0) break;

    // rotate so the relator starts with the picked letter; then g = w^-1 or
    // g^-1 = w, i.e. g -> replacement, where replacement has no g
    Word r = rels[pick_rel];
    std::rotate(r.begin(), r.begin() + pick_pos, r.end());
    Word rest(r.begin() + 1, r.end());
    Word replacement = r[0] > 0 ? inverse(rest) : rest;

    std::vector<Word> sub(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) sub[g] = {static_cast<Letter>(g + 1)};
    sub[pick_gen] = replacement;

    std::vector<Word> next;
    next.reserve(rels.size());
    for (int ri = 0; ri < static_cast<int>(rels.size()); ++ri) {
      if (ri == pick_rel) continue;
      next.push_back(cyclically_reduced(substitute(rels[ri], sub)));
    }
    clean_relators(next);
    if (total_length(next) > budget_len) break;  // would blow up; stop here

    rels = std::move(next);
    alive[pick_gen] = 0;
    for (int g = 0; g < n; ++g) image[g] = substitute(image[g], sub);
  }

  // renumber surviving generators
  std::vector<Letter> newidx(n, 0);
  TietzeResult out;
  for (int g = 0; g < n; ++g)
    if (alive[g]) {
      newidx[g] = static_cast<Letter>(out.pres.names.size() + 1);
      out.pres.names.push_back(p.names[g]);
    }
  auto renumber = [&](const Word& w) {
    Word o;
    o.reserve(w.size());
    for (Letter l : w) {
      Letter ni = newidx[gen_of(l)];
      if (ni == 0) throw std::logic_error("eliminated generator survived in a word");
      o.push_back(l > 0 ? ni : inv(ni));
    }
    return o;
  };
  for (const Word& r : rels) out.pres.relators.push_back(renumber(r));
  out.images.resize(n);
  for (int g = 0; g < n; ++g) out.images[g] = renumber(image[g]);
  return out;
}

}  // namespace cell24
