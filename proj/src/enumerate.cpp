#include "cell24/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cell24 {

int32_t CosetTable::trace(int32_t coset, const Word& w) const {
  int32_t c = coset;
  for (Letter l : w) {
    c = act(c, l);
    if (c < 0) return -1;
  }
  return c;
}

std::vector<Word> CosetTable::schreier_words() const {
  if (!complete()) throw std::logic_error("schreier_words needs a complete table");
  std::vector<Word> words(static_cast<size_t>(cosets));
  std::vector<char> seen(static_cast<size_t>(cosets), 0);
  std::deque<int32_t> q;
  q.push_back(0);
  seen[0] = 1;
  while (!q.empty()) {
    int32_t c = q.front();
    q.pop_front();
    for (int g = 0; g < ngens; ++g) {
      for (Letter l : {static_cast<Letter>(g + 1), static_cast<Letter>(-(g + 1))}) {
        int32_t d = act(c, l);
        if (d >= 0 && !seen[d]) {
          seen[d] = 1;
          words[d] = words[c];
          words[d].push_back(l);
          q.push_back(d);
        }
      }
    }
  }
  return words;
}

std::string CosetTable::export_text(const std::vector<std::string>& names) const {
  std::string out = "cosets: " + std::to_string(cosets) + "\n";
  out += "      ";
  for (int g = 0; g < ngens; ++g) out += " " + names[g] + " " + names[g] + "^-1";
  out += "\n";
  for (long long r = 0; r < cosets; ++r) {
    out += std::to_string(r + 1) + ":";
    for (int c = 0; c < columns(); ++c) {
      int32_t x = tab[static_cast<size_t>(r) * columns() + c];
      out += " " + (x < 0 ? std::string("-") : std::to_string(x + 1));
    }
    out += "\n";
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const FPresentation& p, const std::vector<Word>& subgens,
             const EnumerateOptions& opt)
      : ngens_(p.ngens()), cols_(2 * p.ngens()), opt_(opt) {
    for (const Word& r : p.relators) {
      Word w = cyclically_reduced(r);
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    for (const Word& s : subgens) {
      Word w = free_reduced(s);
      if (!w.empty()) subgens_.push_back(std::move(w));
    }
    if (opt.strategy == Strategy::felsch) build_edge_rules();
    new_coset();  // coset 0 = the subgroup itself
  }

  CosetTable run() {
    bool overflow = false;
    try {
      for (const Word& s : subgens_) {
        scan_and_fill(0, s);
        process_deductions();
      }
      if (opt_.strategy == Strategy::hlt)
        run_hlt();
      else
        run_felsch();
    } catch (const Overflow&) {
      overflow = true;
    }
    return finish(overflow);
  }

 private:
  struct Overflow {};

  int ngens_, cols_;
  EnumerateOptions opt_;
  std::vector<Word> relators_, subgens_;
  std::vector<int32_t> tab_;
  std::vector<int32_t> rep_;
  std::deque<int32_t> merge_queue_;
  std::vector<std::pair<int32_t, int32_t>> deductions_;  // (coset, column)
  // Felsch: rotations of every relator and inverse, grouped by first column
  std::vector<std::vector<Word>> edge_rules_;
  long long live_ = 0;

  int32_t& entry(int32_t c, int col) { return tab_[static_cast<size_t>(c) * cols_ + col]; }
  static int col_of(Letter l) { return CosetTable::column(l); }
  static int inv_col(int col) { return col ^ 1; }

  bool alive(int32_t c) const { return rep_[c] == c; }

  int32_t find(int32_t c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  int32_t new_coset() {
    if (static_cast<long long>(rep_.size()) >= opt_.max_cosets) throw Overflow{};
    int32_t n = static_cast<int32_t>(rep_.size());
    rep_.push_back(n);
    tab_.resize(tab_.size() + cols_, -1);
    ++live_;
    return n;
  }

  void set_edge(int32_t a, int col, int32_t b) {
    entry(a, col) = b;
    entry(b, inv_col(col)) = a;
    if (opt_.strategy == Strategy::felsch) {
      deductions_.emplace_back(a, col);
      deductions_.emplace_back(b, inv_col(col));
    }
  }

  void merge(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live_;
    merge_queue_.push_back(b);
  }

  void coincidence(int32_t a, int32_t b) {
    merge(a, b);
    while (!merge_queue_.empty()) {
      int32_t dead = merge_queue_.front();
      merge_queue_.pop_front();
      for (int col = 0; col < cols_; ++col) {
        int32_t d = entry(dead, col);
        if (d < 0) continue;
        entry(dead, col) = -1;
        if (entry(d, inv_col(col)) == dead) entry(d, inv_col(col)) = -1;
        int32_t mu = find(dead), nu = find(d);
        int32_t ex = entry(mu, col);
        if (ex >= 0) {
          merge(nu, ex);
        } else {
          int32_t ex2 = entry(nu, inv_col(col));
          if (ex2 >= 0) {
            merge(mu, ex2);
          } else {
            set_edge(mu, col, nu);
          }
        }
      }
    }
  }

  // Scans relator w at coset a; defines new cosets for gaps longer than one
  // (HLT behaviour).  With fill=false only single gaps are deduced.
  void scan(int32_t a, const Word& w, bool fill) {
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int32_t f = a, b = a;
    for (;;) {
      while (i <= j) {
        int32_t n = entry(f, col_of(w[i]));
        if (n < 0) break;
        f = n;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        int32_t n = entry(b, col_of(inv(w[j])));
        if (n < 0) break;
        b = n;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set_edge(f, col_of(w[i]), b);
        return;
      }
      if (!fill) return;
      set_edge(f, col_of(w[i]), new_coset());
    }
  }

  void scan_and_fill(int32_t a, const Word& w) { scan(a, w, true); }

  void run_hlt() {
    for (int32_t q = 0; q < static_cast<int32_t>(rep_.size()); ++q) {
      if (!alive(q)) continue;
      for (const Word& r : relators_) {
        scan_and_fill(q, r);
        if (!alive(q)) break;
      }
      if (!alive(q)) continue;
      for (int col = 0; col < cols_; ++col)
        if (entry(q, col) < 0) set_edge(q, col, new_coset());
    }
  }

  void build_edge_rules() {
    edge_rules_.assign(cols_, {});
    for (const Word& r : relators_) {
      for (const Word& base : {r, inverse(r)}) {
        for (size_t k = 0; k < base.size(); ++k) {
          Word rot(base.begin() + k, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + k);
          edge_rules_[col_of(rot[0])].push_back(std::move(rot));
        }
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) c = find(c);
      if (edge_rules_.empty()) continue;
      for (const Word& rule : edge_rules_[col]) {
        scan(c, rule, false);
        if (!alive(c)) {
          c = find(c);
        }
      }
    }
  }

  void run_felsch() {
    for (;;) {
      process_deductions();
      int32_t q = -1;
      int col = -1;
      for (int32_t c = 0; c < static_cast<int32_t>(rep_.size()) && q < 0; ++c) {
        if (!alive(c)) continue;
        for (int x = 0; x < cols_; ++x)
          if (entry(c, x) < 0) {
            q = c;
            col = x;
            break;
          }
      }
      if (q < 0) return;
      set_edge(q, col, new_coset());
    }
  }

  CosetTable finish(bool overflow) {
    CosetTable out;
    out.ngens = ngens_;
    out.status = overflow ? CosetTable::Status::overflowed : CosetTable::Status::complete;
    // compact live cosets
    std::vector<int32_t> newid(rep_.size(), -1);
    int32_t next = 0;
    for (int32_t c = 0; c < static_cast<int32_t>(rep_.size()); ++c)
      if (alive(c)) newid[c] = next++;
    out.cosets = next;
    out.tab.assign(static_cast<size_t>(next) * cols_, -1);
    for (int32_t c = 0; c < static_cast<int32_t>(rep_.size()); ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < cols_; ++col) {
        int32_t d = entry(c, col);
        if (d >= 0) out.tab[static_cast<size_t>(newid[c]) * cols_ + col] = newid[find(d)];
      }
    }
    if (!overflow) {
      for (int32_t v : out.tab)
        if (v < 0) throw std::logic_error("incomplete table reported as complete");
    }
    return out;
  }
};

}  // namespace

CosetTable coset_enumerate(const FPresentation& p, const std::vector<Word>& subgens,
                           const EnumerateOptions& opt) {
  Enumerator e(p, subgens, opt);
  return e.run();
}

std::optional<long long> order_of_quotient(const FPresentation& p,
                                           const EnumerateOptions& opt) {
  CosetTable t = coset_enumerate(p, {}, opt);
  if (!t.complete()) return std::nullopt;
  return t.cosets;
}

bool validate_table(const FPresentation& p, const CosetTable& t) {
  if (!t.complete()) return false;
  for (int g = 0; g < t.ngens; ++g) {
    std::vector<char> hit(static_cast<size_t>(t.cosets), 0);
    for (int32_t c = 0; c < t.cosets; ++c) {
      int32_t d = t.act(c, static_cast<Letter>(g + 1));
      if (d < 0 || d >= t.cosets) return false;
      if (t.act(d, static_cast<Letter>(-(g + 1))) != c) return false;
      if (hit[d]) return false;  // not injective
      hit[d] = 1;
    }
  }
  for (const Word& r : p.relators)
    for (int32_t c = 0; c < t.cosets; ++c)
      if (t.trace(c, r) != c) return false;
  return true;
}

}  // namespace cell24
