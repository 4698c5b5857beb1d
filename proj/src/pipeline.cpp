#include "cell24/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace cell24 {

uint8_t phi_map(const Word& w) {
  uint8_t out = 0;
  for (Letter l : w) out ^= uint8_t(1) << (gen_of(l) / 2);
  return out;
}

int gf2_dimension(std::vector<uint8_t> vecs) {
  int dim = 0;
  for (int bit = 0; bit < 8; ++bit) {
    uint8_t mask = uint8_t(1) << bit;
    auto pivot = std::find_if(vecs.begin() + dim, vecs.end(),
                              [&](uint8_t v) { return v & mask; });
    if (pivot == vecs.end()) continue;
    std::swap(*pivot, vecs[dim]);
    for (size_t i = 0; i < vecs.size(); ++i)
      if (i != static_cast<size_t>(dim) && (vecs[i] & mask)) vecs[i] ^= vecs[dim];
    ++dim;
  }
  return dim;
}

PhiCriterion phi_criterion(const std::vector<Cusp>& cusps) {
  std::vector<uint8_t> vecs;
  for (const Cusp& c : cusps) {
    for (const AffineIso3& t : c.stab.tv) vecs.push_back(phi_map(t.word));
    for (const AffineIso3& t : c.stab.translations) vecs.push_back(phi_map(t.word));
  }
  PhiCriterion out;
  out.dim = gf2_dimension(std::move(vecs));
  out.pass = out.dim >= 5;
  return out;
}

// -------- the reconstructed census code --------

const std::vector<Word>& m1091_expected_relators() {
  static const std::vector<Word> rels = [] {
    const char* text[24] = {
        "g^-1jh^-1i",    "g^-1dh^-1c",    "e^-1jf^-1i",  "e^-1df^-1c",
        "hjgi",          "hc^-1gd^-1",    "f^-1je^-1i",  "f^-1c^-1e^-1d^-1",
        "g^-1lh^-1k",    "g^-1bh^-1a",    "e^-1lfk",     "e^-1bfa",
        "hlgk",          "ha^-1gb^-1",    "fle^-1k",     "fa^-1e^-1b^-1",
        "i^-1k^-1ik",    "i^-1bia",       "c^-1k^-1d^-1k", "c^-1bd^-1a",
        "jlj^-1l^-1",    "ja^-1j^-1b^-1", "dlcl^-1",     "da^-1cb^-1",
    };
    std::vector<Word> out;
    for (const char* t : text) out.push_back(parse_word(t, letter_names()));
    return out;
  }();
  return rels;
}

const PairingScheme& m1091_scheme() {
  // The census prints this manifold's code as 53RR35, which is outside the
  // alphabet.  Holding the four decodable characters fixed, try every
  // K-part pair for the two damaged groups and accept the one whose ridge
  // cycle relators reproduce the known relator list with every generator
  // orientation-reversing.
  static const PairingScheme scheme = [] {
    std::vector<PairingScheme> hits;
    std::array<KElem, 6> kparts;
    kparts[0] = decode_char('5');
    kparts[1] = decode_char('3');
    kparts[4] = decode_char('3');
    kparts[5] = decode_char('5');
    const auto& expected = m1091_expected_relators();
    for (int e = 1; e <= 15; ++e) {
      for (int g = 1; g <= 15; ++g) {
        kparts[2] = KElem(static_cast<uint8_t>(e));
        kparts[3] = KElem(static_cast<uint8_t>(g));
        bool all_reversing = true;
        for (const KElem& k : kparts) all_reversing &= k.orientation_reversing();
        if (!all_reversing) continue;
        std::string code = "53";
        code += encode_kelem(kparts[2]);
        code += encode_kelem(kparts[3]);
        code += "35";
        try {
          PairingScheme cand = scheme_from_kparts(kparts, code);
          FPresentation p = ridge_cycle_relators(cand);
          if (match_relators(p.relators, expected) == 24) hits.push_back(cand);
        } catch (const DecodeError&) {
        } catch (const CycleError&) {
        }
      }
    }
    if (hits.size() != 1)
      throw std::logic_error("M_1091 reconstruction found " +
                             std::to_string(hits.size()) + " candidates");
    return hits.front();
  }();
  return scheme;
}

PairingScheme resolve_code(std::string_view code, bool* reconstructed) {
  std::string upper(code);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "53RR35") {
    if (reconstructed) *reconstructed = true;
    return m1091_scheme();
  }
  if (reconstructed) *reconstructed = false;
  return decode_code(code);
}

// -------- analysis --------

Analysis analyze(std::string_view code, int transversal_pin) {
  Analysis a;
  a.scheme = resolve_code(code, &a.reconstructed);
  a.pres = ridge_cycle_relators(a.scheme);
  a.cusps = analyze_cusps(a.scheme);
  a.lifts = double_cover_boundary(a.cusps);
  for (const LiftInfo& l : a.lifts) {
    if (l.type == FlatType::A) ++a.tori;
    if (l.type == FlatType::B) ++a.klein_bottles;
  }
  a.phi = phi_criterion(a.cusps);
  std::vector<bool> reversing(a.scheme.reversing.begin(), a.scheme.reversing.end());
  a.cover = orientation_double_cover_scheme(a.pres, reversing, transversal_pin);
  a.transversal_rep = gen_of(a.cover.transversal[1][0]);
  a.rs = reidemeister_schreier(a.cover);
  a.cover_h1 = abelianization(a.rs.pres);
  AbelianInvariants expected;
  expected.free_rank = a.tori;
  for (int i = 0; i < a.klein_bottles; ++i) expected.torsion.emplace_back(2);
  a.h1_pass = (a.cover_h1 == expected);
  return a;
}

std::string holonomy_name(const VertexStabilizer& st, const Rot3& rot) {
  if (rot == kIdentityRot) return "1";
  std::string out;
  CubeFrame f = cube_frame(st.vertex);
  for (int i = 0; i < 3; ++i) {
    if (rot[i] > 0) continue;
    if (st.half)
      out += "u" + std::to_string(i + 1);
    else
      out += "x" + std::to_string(f.axes[i].ambient + 1);
  }
  return out;
}

// -------- fibers --------

namespace {

bool word_reverses(const PairingScheme& ps, const Word& w) {
  int n = 0;
  for (Letter l : w) n += ps.reversing[gen_of(l)] ? 1 : 0;
  return n % 2 != 0;
}

struct FiberContext {
  const Analysis& an;
  std::vector<std::string>* warnings;
};

// Validates a candidate word as the fiber of one double-cover boundary
// component: it must expand as a stabilizer walk at some vertex of the cusp
// cycle (after stripping outer conjugators), be a translation, belong to the
// named component, and be normal and primitive in it.
Fiber make_fiber(const FiberContext& ctx, const LiftInfo& lift, const Word& full,
                 bool overridden) {
  const Analysis& an = ctx.an;
  const Cusp& cusp = an.cusps[static_cast<size_t>(lift.cusp_index - 1)];
  const std::string name = lift.name();
  if (word_reverses(an.scheme, full))
    throw FiberRejected(name, "word is orientation-reversing, not in the double cover");

  Fiber f;
  f.lift = lift;
  f.word = free_reduced(full);
  f.overridden = overridden;

  Word core = full;
  Word conj;
  bool found = false;
  for (;;) {
    for (size_t vi = 0; vi < cusp.cycle.size() && !found; ++vi) {
      auto iso = expand_in_stabilizer(an.scheme, cusp.cycle[vi], core);
      if (iso) {
        f.core = core;
        f.conjugator = conj;
        f.at = cusp.cycle[vi];
        f.iso = *iso;
        if (cusp.orientable) {
          int parity = (cusp.lift_parity[vi] + (word_reverses(an.scheme, conj) ? 1 : 0)) % 2;
          if (parity != (lift.primed ? 1 : 0))
            throw FiberRejected(name, "word lies in the other lift of this cusp");
        }
        found = true;
      }
    }
    if (found) break;
    if (core.size() >= 2 && core.front() == inv(core.back())) {
      conj.push_back(core.front());
      core = Word(core.begin() + 1, core.end() - 1);
    } else {
      throw FiberRejected(name, "word does not expand as a cusp stabilizer walk");
    }
  }

  if (!f.iso.is_translation())
    throw FiberRejected(name, "word is not a translation on the horosphere");

  const VertexStabilizer st =
      f.at == cusp.base ? cusp.stab : vertex_stabilizer(an.scheme, f.at);
  if (!is_normal_translation(f.iso, lift_holonomy(st, cusp.orientable)))
    throw FiberRejected(name, "translation is not normal in the lift");
  if (!is_primitive_in_lift(f.iso, st, cusp.orientable))
    throw FiberRejected(name, "translation is not primitive in the lift");
  return f;
}

Fiber auto_fiber(const FiberContext& ctx, const LiftInfo& lift) {
  const Analysis& an = ctx.an;
  const Cusp& cusp = an.cusps[static_cast<size_t>(lift.cusp_index - 1)];
  std::vector<Word> candidates;
  {
    std::vector<AffineIso3> ts = cusp.stab.translations;
    std::sort(ts.begin(), ts.end(), [](const AffineIso3& a, const AffineIso3& b) {
      return a.word.size() != b.word.size() ? a.word.size() < b.word.size()
                                            : a.word < b.word;
    });
    for (const AffineIso3& t : ts) candidates.push_back(t.word);
    for (const AffineIso3& t : cusp.stab.tv) candidates.push_back(t.word);
  }
  Letter rep = static_cast<Letter>(an.transversal_rep + 1);
  for (const Word& w : candidates) {
    Word full = lift.primed ? conjugate(Word{rep}, w) : w;
    try {
      return make_fiber(ctx, lift, full, false);
    } catch (const FiberRejected&) {
    }
  }
  throw FiberRejected(lift.name(), "no admissible translation found automatically; "
                                   "pass one with --fiber");
}

std::vector<Fiber> assemble_fibers(const FiberContext& ctx, const VerificationPlan& plan) {
  const Analysis& an = ctx.an;
  std::map<std::string, std::string> overrides(plan.fibers.begin(), plan.fibers.end());
  std::map<std::string, long long> powers(plan.powers.begin(), plan.powers.end());
  std::set<std::string> lift_names;
  std::vector<Fiber> out;
  for (const LiftInfo& lift : an.lifts) {
    lift_names.insert(lift.name());
    if (lift.type != FlatType::A && lift.type != FlatType::B)
      throw FiberRejected(lift.name(), std::string("lifted boundary type ") +
                                           flat_type_letter(lift.type) +
                                           " is not a circle bundle over a surface");
    Fiber f;
    auto it = overrides.find(lift.name());
    if (it != overrides.end()) {
      Word w = parse_word(it->second, letter_names());
      f = make_fiber(ctx, lift, w, true);
    } else {
      f = auto_fiber(ctx, lift);
    }
    auto pit = powers.find(lift.name());
    if (pit != powers.end()) {
      if (pit->second < 1) throw FiberRejected(lift.name(), "power must be >= 1");
      f.exponent = pit->second;
    }
    out.push_back(std::move(f));
  }
  for (const auto& [name, _] : overrides)
    if (!lift_names.count(name))
      throw FiberRejected(name, "no boundary component has this name");
  for (const auto& [name, _] : powers)
    if (!lift_names.count(name))
      throw FiberRejected(name, "no boundary component has this name");
  return out;
}

FPresentation filled_presentation(const Analysis& an, const std::vector<Fiber>& fibers) {
  std::vector<Word> extra;
  for (const Fiber& f : fibers)
    extra.push_back(power(rewrite_word(f.word, an.cover, an.rs), f.exponent));
  return quotient(an.rs.pres, extra);
}

}  // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::sphere: return "SPHERE";
    case Verdict::not_sphere: return "NOT_SPHERE";
    default: return "UNDECIDED";
  }
}

VerifyResult verify_sphere(const VerificationPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyResult r;
  r.analysis = analyze(plan.code, plan.transversal);
  const Analysis& an = r.analysis;
  if (!an.phi.pass)
    r.warnings.push_back("phi criterion fails (dim " + std::to_string(an.phi.dim) +
                         " < 5); continuing anyway");
  if (!an.h1_pass)
    r.warnings.push_back("H_1 of the double cover is " + an.cover_h1.str() +
                         ", not the link-complement shape; continuing anyway");

  FiberContext ctx{an, &r.warnings};
  r.fibers = assemble_fibers(ctx, plan);

  std::vector<uint8_t> phis;
  for (const Fiber& f : r.fibers) phis.push_back(phi_map(f.word));
  r.fiber_phi_dim = gf2_dimension(std::move(phis));
  if (r.fiber_phi_dim < 5)
    r.warnings.push_back("chosen fibers span only " + std::to_string(r.fiber_phi_dim) +
                         " phi dimensions; the quotient cannot be trivial");

  FPresentation final_pres = filled_presentation(an, r.fibers);
  r.final_h1 = abelianization(final_pres);
  if (!r.final_h1.trivial()) {
    r.verdict = Verdict::not_sphere;
  } else {
    CosetTable t = coset_enumerate(final_pres, {}, plan.limits);
    if (!t.complete()) {
      r.verdict = Verdict::undecided;
    } else {
      r.quotient_order = t.cosets;
      r.verdict = t.cosets == 1 ? Verdict::sphere : Verdict::not_sphere;
    }
  }
  if (r.verdict == Verdict::sphere && r.fiber_phi_dim < 5)
    throw std::logic_error("trivial quotient with phi span below 5");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CoverResult analyze_cover(const VerificationPlan& plan) {
  auto t0 = std::chrono::steady_clock::now();
  CoverResult r;
  r.analysis = analyze(plan.code, plan.transversal);
  const Analysis& an = r.analysis;
  FiberContext ctx{an, &r.warnings};
  r.fibers = assemble_fibers(ctx, plan);

  FPresentation cover_pres = filled_presentation(an, r.fibers);
  CosetTable deck = coset_enumerate(cover_pres, {}, plan.limits);
  if (!deck.complete()) {
    r.verdict = Verdict::undecided;
    r.warnings.push_back("deck group enumeration overflowed; no cover analysis");
    return r;
  }
  r.verdict = Verdict::sphere;  // decided; reused as "complete" marker below
  r.deck_order = deck.cosets;
  r.chi = 2 * r.deck_order;

  std::vector<Word> schreier = deck.schreier_words();
  auto elem_mul = [&](int32_t a, int32_t b) { return deck.trace(a, schreier[b]); };
  auto elem_inv = [&](int32_t a) { return deck.trace(0, inverse(schreier[a])); };
  auto closure = [&](std::vector<int32_t> gens) {
    std::set<int32_t> seen = {0};
    std::vector<int32_t> frontier = {0};
    for (int32_t g : gens) {
      int32_t gi = elem_inv(g);
      if (!seen.count(g)) {
        seen.insert(g);
        frontier.push_back(g);
      }
      if (!seen.count(gi)) {
        seen.insert(gi);
        frontier.push_back(gi);
      }
    }
    std::vector<int32_t> gens_and_invs(seen.begin(), seen.end());
    while (!frontier.empty()) {
      int32_t x = frontier.back();
      frontier.pop_back();
      for (int32_t g : gens_and_invs) {
        int32_t y = elem_mul(x, g);
        if (seen.insert(y).second) frontier.push_back(y);
      }
    }
    return seen;
  };
  auto image_of = [&](const Word& w) {
    return deck.trace(0, rewrite_word(w, an.cover, an.rs));
  };

  Letter rep = static_cast<Letter>(an.transversal_rep + 1);
  for (const LiftInfo& lift : an.lifts) {
    const Cusp& cusp = an.cusps[static_cast<size_t>(lift.cusp_index - 1)];
    const VertexStabilizer& st = cusp.stab;
    std::vector<Word> translation_words;
    for (const AffineIso3& t : st.tv) translation_words.push_back(t.word);
    for (const AffineIso3& t : st.translations) translation_words.push_back(t.word);
    std::optional<Word> slide;
    if (lift.type == FlatType::B) {
      auto hol = lift_holonomy(st, cusp.orientable);
      if (hol.empty()) throw std::logic_error("type B lift without holonomy");
      slide = hol.front().rep.word;
    }
    if (lift.primed) {
      for (Word& w : translation_words) w = conjugate(Word{rep}, w);
      if (slide) slide = conjugate(Word{rep}, *slide);
    }
    std::vector<int32_t> trans_images;
    for (const Word& w : translation_words) trans_images.push_back(image_of(w));
    std::vector<int32_t> all_images = trans_images;
    if (slide) all_images.push_back(image_of(*slide));
    auto full_image = closure(all_images);
    CoverComponent comp;
    comp.lift_name = lift.name();
    comp.multiplicity = r.deck_order / static_cast<long long>(full_image.size());
    comp.lifted_type = FlatType::A;
    if (slide) {
      auto lattice_image = closure(trans_images);
      comp.lifted_type =
          lattice_image.count(image_of(*slide)) ? FlatType::B : FlatType::A;
    }
    (comp.lifted_type == FlatType::A ? r.tori : r.klein_bottles) += comp.multiplicity;
    r.components.push_back(std::move(comp));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// -------- census and batch --------

std::vector<CensusEntry> parse_census(std::istream& in,
                                      std::vector<std::string>* diagnostics) {
  std::vector<CensusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string id, code, extra;
    if (!(ss >> id)) continue;  // blank
    if (!(ss >> code) || (ss >> extra)) {
      if (diagnostics)
        diagnostics->push_back("line " + std::to_string(lineno) +
                               ": expected `<id> <code>`");
      continue;
    }
    out.push_back(CensusEntry{id, code, lineno});
  }
  return out;
}

BatchResult run_batch(const std::vector<CensusEntry>& entries, const BatchOptions& opt) {
  BatchResult res;
  res.items.resize(entries.size());
  std::mutex mu;
  size_t next = 0;
  auto worker = [&] {
    for (;;) {
      size_t i;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= entries.size()) return;
        i = next++;
      }
      BatchItem item;
      item.entry = entries[i];
      try {
        if (opt.command == BatchOptions::Command::criteria) {
          Analysis a = analyze(entries[i].code);
          item.report = analysis_json(a);
          item.ok = true;
        } else {
          VerificationPlan plan;
          plan.code = entries[i].code;
          plan.id = entries[i].id;
          plan.limits = opt.limits;
          VerifyResult v = verify_sphere(plan);
          item.report = verify_json(v);
          item.ok = true;
        }
      } catch (const std::exception& e) {
        item.error = e.what();
      }
      res.items[i] = std::move(item);
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(res.items.begin(), res.items.end(),
                   [](const BatchItem& a, const BatchItem& b) {
                     auto key = [](const std::string& s) {
                       return std::pair(s.size() == 0 || !std::isdigit((unsigned char)s[0])
                                            ? std::numeric_limits<long long>::max()
                                            : std::stoll(s),
                                        s);
                     };
                     return key(a.entry.id) < key(b.entry.id);
                   });
  for (const BatchItem& it : res.items) {
    if (!it.ok) {
      ++res.failed;
      continue;
    }
    ++res.decoded;
    if (opt.command == BatchOptions::Command::criteria) {
      if (it.report["criteria"]["phi_pass"].get<bool>() &&
          it.report["criteria"]["h1_pass"].get<bool>())
        ++res.criteria_pass;
    } else {
      std::string v = it.report["verdict"].get<std::string>();
      if (v == "SPHERE") ++res.spheres;
      else if (v == "NOT_SPHERE") ++res.non_spheres;
      else ++res.undecided;
    }
  }
  return res;
}

Json BatchResult::summary() const {
  Json j;
  j["entries"] = items.size();
  j["decoded"] = decoded;
  j["failed"] = failed;
  j["criteria_pass"] = criteria_pass;
  j["spheres"] = spheres;
  j["non_spheres"] = non_spheres;
  j["undecided"] = undecided;
  return j;
}

// -------- reports --------

namespace {

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json iso_json(const VertexStabilizer& st, const AffineIso3& iso) {
  Json j;
  j["word"] = word_str(iso.word, letter_names());
  j["trans"] = vec_json(iso.trans);
  j["rot"] = holonomy_name(st, iso.rot);
  return j;
}

}  // namespace

Json scheme_json(const PairingScheme& scheme) {
  Json j;
  j["code"] = scheme.code;
  Json kparts = Json::array();
  for (const KElem& k : scheme.kparts) kparts.push_back(k.label().str());
  j["kparts"] = kparts;
  Json pairings = Json::array();
  for (int g = 0; g < kNumGenerators; ++g) {
    Side src{scheme.source_of_generator[g]};
    Json p;
    p["letter"] = generator_name(g);
    p["from"] = label(src).str();
    p["to"] = label(scheme.pair_target(src)).str();
    p["k"] = scheme.kpart_of_generator(g).label().str();
    pairings.push_back(std::move(p));
  }
  j["pairings"] = pairings;
  Json rev = Json::array();
  for (int g = 0; g < kNumGenerators; ++g)
    if (scheme.reversing[g]) rev.push_back(generator_name(g));
  j["orientation_reversing"] = rev;
  return j;
}

Json presentation_json(const FPresentation& p) {
  Json j;
  j["generators"] = p.names;
  Json rels = Json::array();
  for (const Word& r : p.relators) rels.push_back(word_str(r, p.names));
  j["relators"] = rels;
  return j;
}

Json cusp_json(const Cusp& c) {
  Json j;
  j["name"] = "E" + std::to_string(c.index);
  Json verts = Json::array();
  for (Vertex v : c.cycle) verts.push_back(label(v).str());
  j["vertices"] = verts;
  j["base"] = label(c.base).str();
  j["type"] = std::string(1, flat_type_letter(c.type));
  j["orientable"] = c.orientable;
  j["h1"] = c.h1.str();
  Json hol = Json::array();
  for (const HolonomyClass& h : c.stab.holonomy)
    hol.push_back(holonomy_name(c.stab, h.rot));
  j["holonomy"] = hol;
  Json trans = Json::array();
  for (const AffineIso3& t : c.stab.translations) trans.push_back(iso_json(c.stab, t));
  j["translations"] = trans;
  Json tv = Json::array();
  for (const AffineIso3& t : c.stab.tv) tv.push_back(iso_json(c.stab, t));
  j["tv"] = tv;
  Json lat = Json::array();
  for (int i = 0; i < 3; ++i) lat.push_back(vec_json(c.stab.lattice.basis[i]));
  j["lattice"] = lat;
  return j;
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["code"] = a.scheme.code;
  j["reconstructed"] = a.reconstructed;
  j["scheme"] = scheme_json(a.scheme);
  j["presentation"] = presentation_json(a.pres);
  Json cusps = Json::array();
  for (const Cusp& c : a.cusps) cusps.push_back(cusp_json(c));
  j["cusps"] = cusps;
  std::string boundary;
  for (const Cusp& c : a.cusps) boundary += flat_type_letter(c.type);
  j["boundary"] = boundary;
  Json lifts = Json::array();
  for (const LiftInfo& l : a.lifts) {
    Json lj;
    lj["name"] = l.name();
    lj["type"] = std::string(1, flat_type_letter(l.type));
    lifts.push_back(std::move(lj));
  }
  j["double_cover_boundary"] = lifts;
  Json crit;
  crit["phi_dim"] = a.phi.dim;
  crit["phi_pass"] = a.phi.pass;
  crit["tori"] = a.tori;
  crit["klein_bottles"] = a.klein_bottles;
  crit["double_cover_h1"] = a.cover_h1.str();
  AbelianInvariants expected;
  expected.free_rank = a.tori;
  for (int i = 0; i < a.klein_bottles; ++i) expected.torsion.emplace_back(2);
  crit["expected_h1"] = expected.str();
  crit["h1_pass"] = a.h1_pass;
  j["criteria"] = crit;
  Json dc;
  dc["transversal"] = generator_name(a.transversal_rep);
  dc["generators"] = a.rs.pres.names;
  dc["relator_count"] = a.rs.pres.relators.size();
  j["double_cover"] = dc;
  return j;
}

Json verify_json(const VerifyResult& r) {
  Json j = analysis_json(r.analysis);
  Json fibers = Json::array();
  for (const Fiber& f : r.fibers) {
    Json fj;
    fj["lift"] = f.lift.name();
    fj["word"] = word_str(f.word, letter_names());
    fj["at"] = label(f.at).str();
    fj["trans"] = vec_json(f.iso.trans);
    fj["overridden"] = f.overridden;
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = fibers;
  j["fiber_phi_dim"] = r.fiber_phi_dim;
  j["final_h1"] = r.final_h1.str();
  if (r.quotient_order >= 0) j["quotient_order"] = r.quotient_order;
  j["verdict"] = verdict_str(r.verdict);
  j["warnings"] = r.warnings;
  j["seconds"] = r.seconds;
  return j;
}

Json cover_json(const CoverResult& r) {
  Json j;
  j["code"] = r.analysis.scheme.code;
  Json fibers = Json::array();
  for (const Fiber& f : r.fibers) {
    Json fj;
    fj["lift"] = f.lift.name();
    fj["word"] = word_str(f.word, letter_names());
    if (f.exponent != 1) fj["power"] = f.exponent;
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = fibers;
  if (r.verdict == Verdict::undecided) {
    j["verdict"] = "UNDECIDED";
    j["warnings"] = r.warnings;
    return j;
  }
  j["deck_order"] = r.deck_order;
  j["chi"] = r.chi;
  Json comps = Json::array();
  for (const CoverComponent& c : r.components) {
    Json cj;
    cj["lift"] = c.lift_name;
    cj["components"] = c.multiplicity;
    cj["type"] = std::string(1, flat_type_letter(c.lifted_type));
    comps.push_back(std::move(cj));
  }
  j["boundary"] = comps;
  j["tori"] = r.tori;
  j["klein_bottles"] = r.klein_bottles;
  j["warnings"] = r.warnings;
  j["seconds"] = r.seconds;
  return j;
}

std::string summary_line(const VerifyResult& r) {
  const Analysis& a = r.analysis;
  std::string boundary;
  for (const Cusp& c : a.cusps) boundary += flat_type_letter(c.type);
  std::string out = a.scheme.code + "  boundary " + boundary + "  link " +
                    std::to_string(a.tori) + "T+" + std::to_string(a.klein_bottles) +
                    "K  " + verdict_str(r.verdict);
  return out;
}

}  // namespace cell24
