#include "cell24/cusp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace cell24 {

namespace {

// Cusps are listed with the unit-type cycles first, in coordinate order of
// their positive vertex, then the half-type cycles by label.
std::pair<int, int> vertex_order_key(Vertex v) {
  const SignLabel4& l = label(v);
  if (is_half_vertex(v)) return {1, v.id};
  for (int i = 0; i < 4; ++i)
    if (l[i] != 0) return {0, 2 * i + (l[i] < 0 ? 1 : 0)};
  return {2, v.id};
}

}  // namespace

std::vector<std::vector<Vertex>> vertex_cycles(const PairingScheme& ps) {
  std::array<int, kNumVertices> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (uint8_t vi = 0; vi < kNumVertices; ++vi) {
    Vertex v{vi};
    for (Side s : sides_of_vertex(v)) unite(vi, act(ps.kpart_of_side(s), v).id);
  }
  std::map<int, std::vector<Vertex>> groups;
  for (uint8_t vi = 0; vi < kNumVertices; ++vi) groups[find(vi)].push_back(Vertex{vi});
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](Vertex a, Vertex b) { return vertex_order_key(a) < vertex_order_key(b); });
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
              return vertex_order_key(a.front()) < vertex_order_key(b.front());
            });
  return out;
}

namespace {

// Walks cubes of the horosphere tiling at one ideal vertex, keeping the
// current cube's six wall labels.  Crossing the wall with label S appends
// the inverse of S's outgoing letter, applies k_S to all labels, and swaps
// the two walls on the crossing axis (the far wall of the next cube is the
// transported image of the wall behind us).
struct Walker {
  const PairingScheme& ps;
  Vertex v;
  bool half;
  std::array<Side, 6> wall;  // [2*axis + (dir > 0 ? 0 : 1)]
  Vec3 pos = {0, 0, 0};
  std::array<int, 3> flips = {0, 0, 0};
  KElem kappa;
  Word word;
  std::array<int, 3> ambient{};  // ambient coordinate per axis (unit type)
  int vertex_pos = -1;           // nonzero position of a unit-type vertex

  Walker(const PairingScheme& ps_, Vertex v_) : ps(ps_), v(v_) {
    CubeFrame f = cube_frame(v);
    half = f.half;
    for (int a = 0; a < 3; ++a) {
      wall[2 * a] = f.axes[a].pos;
      wall[2 * a + 1] = f.axes[a].neg;
      ambient[a] = f.axes[a].ambient;
    }
    if (!half) {
      const SignLabel4& vl = label(v);
      for (int i = 0; i < 4; ++i)
        if (vl[i] != 0) vertex_pos = i;
    }
  }

  void cross(int axis, int dir) {
    int idx = 2 * axis + (dir > 0 ? 0 : 1);
    Side s = wall[idx];
    word.push_back(static_cast<Letter>(-ps.outgoing_letter(s)));
    KElem k = ps.kpart_of_side(s);
    kappa = kappa * k;
    flips[axis] ^= 1;
    pos[axis] += dir;
    for (Side& w : wall) w = act(k, w);
    std::swap(wall[2 * axis], wall[2 * axis + 1]);
  }

  // crosses the wall whose outgoing letter is the inverse of l, so that l
  // gets appended to the word; false if no wall matches
  bool cross_letter(Letter l) {
    for (int idx = 0; idx < 6; ++idx) {
      if (ps.outgoing_letter(wall[idx]) == -l) {
        cross(idx / 2, idx % 2 == 0 ? 1 : -1);
        return true;
      }
    }
    return false;
  }

  bool fixes_vertex() const {
    if (half) return kappa.identity();
    return !kappa.minus_at(vertex_pos);
  }

  AffineIso3 result() const {
    AffineIso3 iso;
    iso.word = word;
    iso.trans = pos;
    iso.kappa = kappa;
    iso.fixes_vertex = fixes_vertex();
    for (int a = 0; a < 3; ++a) {
      int sign = flips[a] ? -1 : 1;
      if (!half && kappa.minus_at(ambient[a])) sign = -sign;
      iso.rot[a] = sign;
    }
    return iso;
  }
};

}  // namespace

std::vector<AffineIso3> block_search(const PairingScheme& ps, Vertex v) {
  int extent = is_half_vertex(v) ? 4 : 2;
  std::vector<AffineIso3> out;
  for (int n0 = 0; n0 < extent; ++n0)
    for (int n1 = 0; n1 < extent; ++n1)
      for (int n2 = 0; n2 < extent; ++n2) {
        if (n0 == 0 && n1 == 0 && n2 == 0) continue;
        Walker w(ps, v);
        for (int i = 0; i < n0; ++i) w.cross(0, 1);
        for (int i = 0; i < n1; ++i) w.cross(1, 1);
        for (int i = 0; i < n2; ++i) w.cross(2, 1);
        out.push_back(w.result());
      }
  return out;
}

std::array<AffineIso3, 3> t_v_generators(const PairingScheme& ps, Vertex v) {
  int steps = is_half_vertex(v) ? 4 : 2;
  std::array<AffineIso3, 3> out;
  for (int a = 0; a < 3; ++a) {
    Walker w(ps, v);
    for (int i = 0; i < steps; ++i) w.cross(a, 1);
    out[a] = w.result();
    if (!out[a].is_translation())
      throw std::logic_error("reference axis move is not a translation");
  }
  return out;
}

std::optional<AffineIso3> expand_in_stabilizer(const PairingScheme& ps, Vertex v,
                                               const Word& w) {
  Walker walker(ps, v);
  for (Letter l : w)
    if (!walker.cross_letter(l)) return std::nullopt;
  AffineIso3 iso = walker.result();
  if (!iso.fixes_vertex) return std::nullopt;
  return iso;
}

// -------- integer lattices --------

namespace {

long long exact_div(long long a, long long b) { return a / b; }

}  // namespace

Lattice3 Lattice3::from_generators(const std::vector<Vec3>& gens) {
  Lattice3 lat;
  std::array<bool, 3> have{false, false, false};
  auto insert = [&](Vec3 v) {
    for (int col = 0; col < 3; ++col) {
      if (v[col] == 0) continue;
      if (!have[col]) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        lat.basis[col] = v;
        have[col] = true;
        return;
      }
      // gcd-combine with the existing row at this leading column
      Vec3& row = lat.basis[col];
      while (v[col] != 0) {
        long long q = v[col] / row[col];
        for (int j = 0; j < 3; ++j) v[j] -= q * row[j];
        if (v[col] != 0) std::swap(row, v);
      }
    }
  };
  for (const Vec3& g : gens) insert(g);
  lat.rank = static_cast<int>(std::count(have.begin(), have.end(), true));
  return lat;
}

std::optional<Vec3> Lattice3::solve(const Vec3& target) const {
  Vec3 v = target;
  Vec3 coeff = {0, 0, 0};
  for (int col = 0; col < 3; ++col) {
    if (v[col] == 0) continue;
    const Vec3& row = basis[col];
    if (row[col] == 0) return std::nullopt;
    if (v[col] % row[col] != 0) return std::nullopt;
    long long c = exact_div(v[col], row[col]);
    coeff[col] = c;
    for (int j = 0; j < 3; ++j) v[j] -= c * row[j];
  }
  if (v != Vec3{0, 0, 0}) return std::nullopt;
  return coeff;
}

bool Lattice3::contains(const Vec3& v) const { return solve(v).has_value(); }

// -------- stabilizer data --------

VertexStabilizer vertex_stabilizer(const PairingScheme& ps, Vertex v) {
  VertexStabilizer st;
  st.vertex = v;
  st.half = is_half_vertex(v);
  st.tv = t_v_generators(ps, v);
  st.block = block_search(ps, v);
  st.orientable = true;
  std::map<Rot3, AffineIso3> classes;
  for (const AffineIso3& e : st.block) {
    if (!e.fixes_vertex) continue;
    if (rot_det(e.rot) < 0) st.orientable = false;
    if (e.is_translation())
      st.translations.push_back(e);
    else if (!classes.count(e.rot))
      classes[e.rot] = e;
  }
  for (auto& [rot, rep] : classes) st.holonomy.push_back(HolonomyClass{rot, rep});
  std::vector<Vec3> gens;
  for (const AffineIso3& t : st.tv) gens.push_back(t.trans);
  for (const AffineIso3& t : st.translations) gens.push_back(t.trans);
  st.lattice = Lattice3::from_generators(gens);
  if (st.lattice.rank != 3)
    throw std::logic_error("cusp translation lattice is not full rank");
  return st;
}

// -------- flat type classification --------

char flat_type_letter(FlatType t) { return static_cast<char>('A' + static_cast<int>(t)); }

bool flat_type_orientable(FlatType t) { return static_cast<int>(t) <= 5; }

FPresentation stabilizer_presentation(const VertexStabilizer& st) {
  FPresentation p;
  p.names = {"u1", "u2", "u3"};
  auto lattice_word = [&](const Vec3& v) -> Word {
    auto coeff = st.lattice.solve(v);
    if (!coeff) throw std::logic_error("stabilizer translation outside its lattice");
    Word w;
    for (int i = 0; i < 3; ++i) {
      Word g = power(Word{static_cast<Letter>(i + 1)}, (*coeff)[i]);
      w.insert(w.end(), g.begin(), g.end());
    }
    return w;
  };
  int k = static_cast<int>(st.holonomy.size());
  for (int i = 0; i < k; ++i) p.names.push_back("r" + std::to_string(i + 1));
  auto gen = [](int i) { return Word{static_cast<Letter>(i + 1)}; };
  // lattice is abelian
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      p.relators.push_back(free_reduced(
          concat(concat(gen(i), gen(j)), concat(inverse(gen(i)), inverse(gen(j))))));
  for (int ci = 0; ci < k; ++ci) {
    const HolonomyClass& c = st.holonomy[ci];
    Word g = gen(3 + ci);
    // action on the lattice basis
    for (int i = 0; i < 3; ++i) {
      Vec3 image = rot_apply(c.rot, st.lattice.basis[i]);
      p.relators.push_back(free_reduced(
          concat(conjugate(g, gen(i)), inverse(lattice_word(image)))));
    }
    // square is a translation
    Vec3 sq;
    for (int i = 0; i < 3; ++i) sq[i] = c.rep.trans[i] + c.rot[i] * c.rep.trans[i];
    p.relators.push_back(free_reduced(concat(concat(g, g), inverse(lattice_word(sq)))));
  }
  // products land in the right class with a lattice correction
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      Rot3 rc = rot_mul(st.holonomy[a].rot, st.holonomy[b].rot);
      int c = -1;
      for (int i = 0; i < k; ++i)
        if (st.holonomy[i].rot == rc) c = i;
      if (c < 0) throw std::logic_error("holonomy classes are not closed under product");
      Vec3 corr;
      for (int i = 0; i < 3; ++i)
        corr[i] = st.holonomy[a].rep.trans[i] +
                  st.holonomy[a].rot[i] * st.holonomy[b].rep.trans[i] -
                  st.holonomy[c].rep.trans[i];
      Word lhs = concat(gen(3 + a), gen(3 + b));
      Word rhs = concat(lattice_word(corr), gen(3 + c));
      p.relators.push_back(free_reduced(concat(lhs, inverse(rhs))));
    }
  return p;
}

const std::array<FlatSignature, 10>& flat_signature_table() {
  static const std::array<FlatSignature, 10> tab = {{
      {FlatType::A, true, 1, {3, {}}},
      {FlatType::B, true, 2, {1, {2, 2}}},
      {FlatType::C, true, 3, {1, {3}}},
      {FlatType::D, true, 4, {1, {2}}},
      {FlatType::E, true, 6, {1, {}}},
      {FlatType::F, true, 4, {0, {4, 4}}},
      {FlatType::G, false, 2, {2, {2}}},
      {FlatType::H, false, 2, {2, {}}},
      {FlatType::I, false, 4, {1, {2, 2}}},
      {FlatType::J, false, 4, {1, {4}}},
  }};
  return tab;
}

FlatType classify_flat_type(const VertexStabilizer& st, AbelianInvariants* h1_out) {
  AbelianInvariants h1 = abelianization(stabilizer_presentation(st));
  if (h1_out) *h1_out = h1;
  int hol_order = static_cast<int>(st.holonomy.size()) + 1;
  const FlatSignature* found = nullptr;
  for (const FlatSignature& sig : flat_signature_table()) {
    if (sig.orientable != st.orientable || sig.holonomy_order != hol_order) continue;
    if (sig.h1 == h1) {
      if (found)
        throw UnrecognizedType("ambiguous flat type signature at vertex " +
                               label(st.vertex).str());
      found = &sig;
    }
  }
  if (!found)
    throw UnrecognizedType("no flat 3-manifold matches (orientable=" +
                           std::to_string(st.orientable) +
                           ", |hol|=" + std::to_string(hol_order) + ", H1=" + h1.str() +
                           ") at vertex " + label(st.vertex).str());
  return found->type;
}

// -------- cusps of a scheme --------

std::vector<Cusp> analyze_cusps(const PairingScheme& ps) {
  std::vector<Cusp> out;
  int idx = 0;
  for (auto& cycle : vertex_cycles(ps)) {
    Cusp c;
    c.index = ++idx;
    c.cycle = cycle;
    c.base = cycle.front();
    c.stab = vertex_stabilizer(ps, c.base);
    c.type = classify_flat_type(c.stab, &c.h1);
    c.orientable = c.stab.orientable;
    if (c.orientable) {
      // split the cycle into the two double-cover components: breadth-first
      // over v -> k_S(v) with the parity of the crossing letter
      std::map<uint8_t, int> parity;
      parity[c.base.id] = 0;
      std::vector<Vertex> queue = {c.base};
      while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Side s : sides_of_vertex(v)) {
          int gen = gen_of(static_cast<Letter>(ps.outgoing_letter(s)));
          Vertex w = act(ps.kpart_of_side(s), v);
          int np = (parity[v.id] + (ps.reversing[gen] ? 1 : 0)) % 2;
          auto it = parity.find(w.id);
          if (it == parity.end()) {
            parity[w.id] = np;
            queue.push_back(w);
          } else if (it->second != np) {
            throw std::logic_error("orientable cusp with inconsistent lift parity");
          }
        }
      }
      for (Vertex v : cycle) c.lift_parity.push_back(parity.at(v.id));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string LiftInfo::name() const {
  return "E" + std::to_string(cusp_index) + (primed ? "'" : "");
}

std::vector<LiftInfo> double_cover_boundary(const std::vector<Cusp>& cusps) {
  std::vector<LiftInfo> out;
  for (const Cusp& c : cusps) {
    if (c.orientable) {
      out.push_back({c.index, false, c.type});
      out.push_back({c.index, true, c.type});
    } else {
      FlatType lifted;
      switch (c.type) {
        case FlatType::G:
        case FlatType::H:
          lifted = FlatType::A;
          break;
        case FlatType::I:
        case FlatType::J:
          lifted = FlatType::B;
          break;
        default:
          throw UnrecognizedType("nonorientable cusp of unexpected type");
      }
      out.push_back({c.index, false, lifted});
    }
  }
  return out;
}

std::vector<HolonomyClass> lift_holonomy(const VertexStabilizer& st, bool cusp_orientable) {
  if (cusp_orientable) return st.holonomy;
  std::vector<HolonomyClass> out;
  for (const HolonomyClass& c : st.holonomy)
    if (rot_det(c.rot) > 0) out.push_back(c);
  return out;
}

bool is_normal_translation(const AffineIso3& t, const std::vector<HolonomyClass>& hol) {
  Vec3 neg = {-t.trans[0], -t.trans[1], -t.trans[2]};
  for (const HolonomyClass& c : hol) {
    Vec3 img = rot_apply(c.rot, t.trans);
    if (img != t.trans && img != neg) return false;
  }
  return true;
}

bool is_primitive_in_lift(const AffineIso3& t, const VertexStabilizer& st,
                          bool cusp_orientable) {
  long long m = 0;
  for (long long x : t.trans) m = std::max(m, std::llabs(x));
  if (m == 0) return false;  // the identity is not a fiber
  // not a proper multiple of a lattice vector
  for (long long p = 2; p <= m; ++p) {
    bool prime = true;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    if (t.trans[0] % p || t.trans[1] % p || t.trans[2] % p) continue;
    Vec3 quo = {t.trans[0] / p, t.trans[1] / p, t.trans[2] / p};
    if (st.lattice.contains(quo)) return false;
  }
  // not the square of a slide: t = (tau + R tau) + (lambda + R lambda)
  for (const HolonomyClass& c : lift_holonomy(st, cusp_orientable)) {
    std::vector<Vec3> gens;
    for (int i = 0; i < 3; ++i) {
      Vec3 b = st.lattice.basis[i];
      Vec3 sym;
      for (int j = 0; j < 3; ++j) sym[j] = b[j] + c.rot[j] * b[j];
      gens.push_back(sym);
    }
    Lattice3 sym_lattice = Lattice3::from_generators(gens);
    Vec3 target;
    for (int j = 0; j < 3; ++j)
      target[j] = t.trans[j] - (c.rep.trans[j] + c.rot[j] * c.rep.trans[j]);
    if (sym_lattice.contains(target)) return false;
  }
  return true;
}

// -------- bounded word-problem search --------

namespace {

struct InsertionProver {
  std::vector<Word> rules;  // all rotations of all relators and inverses
  std::map<Letter, std::vector<const Word*>> by_front, by_back;
  size_t max_states, max_len;

  explicit InsertionProver(const FPresentation& p, const ProverOptions& opt)
      : max_states(opt.max_states), max_len(opt.max_word_length) {
    std::set<Word> seen;
    for (const Word& r : p.relators) {
      Word cr = cyclically_reduced(r);
      if (cr.empty()) continue;
      for (const Word& base : {cr, inverse(cr)}) {
        for (size_t k = 0; k < base.size(); ++k) {
          Word rot(base.begin() + k, base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + k);
          if (seen.insert(rot).second) rules.push_back(rot);
        }
      }
    }
    for (const Word& r : rules) {
      by_front[r.front()].push_back(&r);
      by_back[r.back()].push_back(&r);
    }
  }

  static std::string key(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s += static_cast<char>(l + 100);
    return s;
  }

  // Breadth-first over relator insertions that cancel at the seam (a rule is
  // only inserted where its first or last letter cancels a neighbour).
  bool run(const Word& start) {
    Word w0 = cyclically_reduced(start);
    if (w0.empty()) return true;
    std::unordered_set<std::string> visited;
    std::vector<Word> frontier = {w0};
    visited.insert(key(w0));
    auto grow = [&](std::vector<Word>& next, const Word& u, const Word& rho,
                    size_t pos) -> bool {
      Word cand(u.begin(), u.begin() + pos);
      cand.insert(cand.end(), rho.begin(), rho.end());
      cand.insert(cand.end(), u.begin() + pos, u.end());
      cand = free_reduced(cand);
      if (cand.empty()) return true;
      if (cand.size() <= max_len && visited.size() < max_states &&
          visited.insert(key(cand)).second)
        next.push_back(std::move(cand));
      return false;
    };
    while (!frontier.empty() && visited.size() < max_states) {
      std::vector<Word> next;
      for (const Word& u : frontier) {
        for (size_t pos = 0; pos <= u.size(); ++pos) {
          if (pos < u.size()) {
            auto it = by_back.find(inv(u[pos]));
            if (it != by_back.end())
              for (const Word* rho : it->second)
                if (grow(next, u, *rho, pos)) return true;
          }
          if (pos > 0) {
            auto it = by_front.find(inv(u[pos - 1]));
            if (it != by_front.end())
              for (const Word* rho : it->second)
                if (grow(next, u, *rho, pos)) return true;
          }
        }
      }
      frontier = std::move(next);
    }
    return false;
  }
};

// zero image in the abelianization?
bool ab_image_zero(const FPresentation& p, const Word& w) {
  IntMatrix rel(static_cast<int>(p.relators.size()), p.ngens());
  for (int i = 0; i < rel.rows; ++i)
    for (Letter l : p.relators[i]) rel.at(i, gen_of(l)) += (l > 0 ? 1 : -1);
  std::vector<mpz_class> v(static_cast<size_t>(p.ngens()));
  for (Letter l : w) v[static_cast<size_t>(gen_of(l))] += (l > 0 ? 1 : -1);
  if (rel.rows == 0)
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
  // v lies in the row span iff v*V clears against the Smith diagonal
  SmithResult s = smith_normal_form(rel);
  std::vector<mpz_class> vv(static_cast<size_t>(s.v.cols));
  for (int j = 0; j < s.v.cols; ++j)
    for (int i = 0; i < s.v.rows; ++i) vv[j] += v[static_cast<size_t>(i)] * s.v.at(i, j);
  int n = std::min(s.d.rows, s.d.cols);
  for (int j = 0; j < s.d.cols; ++j) {
    mpz_class d = j < n ? s.d.at(j, j) : mpz_class(0);
    if (d == 0) {
      if (vv[static_cast<size_t>(j)] != 0) return false;
    } else if (vv[static_cast<size_t>(j)] % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

namespace {

// reusable state for deciding several words in one presented group
struct TrivialityContext {
  const FPresentation& p;
  ProverOptions opt;
  std::optional<CosetTable> finite;  // set when the group enumerated completely
  TietzeResult simp;
  std::optional<InsertionProver> prover;

  TrivialityContext(const FPresentation& pres, const ProverOptions& o) : p(pres), opt(o) {
    EnumerateOptions eo;
    eo.max_cosets = opt.max_cosets;
    CosetTable t = coset_enumerate(p, {}, eo);
    if (t.complete()) {
      finite = std::move(t);
      return;
    }
    simp = tietze_simplify(p);
    prover.emplace(simp.pres, opt);
  }

  Tri decide(const Word& w) {
    Word wr = cyclically_reduced(w);
    if (wr.empty()) return Tri::yes;
    if (finite) return finite->trace(0, wr) == 0 ? Tri::yes : Tri::no;
    if (!ab_image_zero(p, wr)) return Tri::no;
    Word wt = substitute(wr, simp.images);
    if (free_reduced(wt).empty()) return Tri::yes;
    if (prover->run(wt)) return Tri::yes;
    return Tri::unknown;
  }
};

}  // namespace

Tri prove_trivial(const FPresentation& p, const Word& w, const ProverOptions& opt) {
  TrivialityContext ctx(p, opt);
  return ctx.decide(w);
}

SelfConjugacy check_self_conjugate(const Word& t, const FPresentation& quotient,
                                   const std::vector<Word>& candidates,
                                   const ProverOptions& opt) {
  TrivialityContext ctx(quotient, opt);
  bool saw_unknown = false;
  for (const Word& x : candidates) {
    for (int eps : {1, -1}) {
      Word w = concat(conjugate(x, t), power(t, -eps));
      switch (ctx.decide(w)) {
        case Tri::yes: {
          SelfConjugacy sc;
          sc.status = SelfConjugacy::Status::witness;
          sc.x = x;
          sc.exponent = eps;
          return sc;
        }
        case Tri::no:
          break;
        case Tri::unknown:
          saw_unknown = true;
          break;
      }
    }
  }
  SelfConjugacy sc;
  sc.status = saw_unknown ? SelfConjugacy::Status::undecided : SelfConjugacy::Status::none;
  return sc;
}

}  // namespace cell24
