#include <doctest.h>

#include <map>
#include <set>

#include "cell24/cusp.hpp"
#include "cell24/pipeline.hpp"
#include "fixtures.hpp"

using namespace cell24;

namespace {

Word W(const std::string& s) { return parse_word(s, letter_names()); }
Vertex V(const char* l) { return vertex_from_label(SignLabel4::parse(l)); }

// Standard affine presentations of the ten compact flat 3-manifolds,
// written out from the usual lattice-and-holonomy data (Wolf's ordering:
// G1..G6 orientable, B1..B4 nonorientable).  These are the independent
// oracle for the classifier's signature table.
FPresentation wolf_presentation(FlatType type) {
  FPresentation p;
  p.names = {"t1", "t2", "t3"};
  auto w = [&](const std::string& s) { return parse_word(s, p.names); };
  auto commutators = [&] {
    p.relators.push_back(w("t1t2t1^-1t2^-1"));
    p.relators.push_back(w("t1t3t1^-1t3^-1"));
    p.relators.push_back(w("t2t3t2^-1t3^-1"));
  };
  switch (type) {
    case FlatType::A:
      commutators();
      return p;
    case FlatType::B:  // alpha rotates by pi about the t1 axis
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^2t1^-1"));
      p.relators.push_back(w("st2s^-1t2"));
      p.relators.push_back(w("st3s^-1t3"));
      return p;
    case FlatType::C:  // order 3 rotation, hexagonal lattice
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^3t1^-1"));
      p.relators.push_back(w("st2s^-1t3^-1"));
      p.relators.push_back(w("st3s^-1t3t2"));
      return p;
    case FlatType::D:  // order 4 rotation
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^4t1^-1"));
      p.relators.push_back(w("st2s^-1t3^-1"));
      p.relators.push_back(w("st3s^-1t2"));
      return p;
    case FlatType::E:  // order 6 rotation
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^6t1^-1"));
      p.relators.push_back(w("st2s^-1t3^-1"));
      p.relators.push_back(w("st3s^-1t2t3^-1"));
      return p;
    case FlatType::F: {  // Hantzsche-Wendt
      FPresentation hw;
      hw.names = {"x", "y"};
      hw.relators = {parse_word("xy^2x^-1y^2", hw.names),
                     parse_word("yx^2y^-1x^2", hw.names)};
      return hw;
    }
    case FlatType::G:  // B1 = Klein bottle x S^1: glide along t1, flips t3
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^2t1^-1"));
      p.relators.push_back(w("st2s^-1t2^-1"));
      p.relators.push_back(w("st3s^-1t3"));
      return p;
    case FlatType::H:  // B2: the holonomy swaps a lattice pair
      p.names.push_back("s");
      commutators();
      p.relators.push_back(w("s^2t2^-1"));
      p.relators.push_back(w("st1s^-1t1^-1"));
      p.relators.push_back(w("st2s^-1t2^-1"));
      p.relators.push_back(w("st3s^-1t3t1^-1"));
      return p;
    case FlatType::I:  // B3
      p.names.push_back("s");
      p.names.push_back("e");
      commutators();
      p.relators.push_back(w("s^2t1^-1"));
      p.relators.push_back(w("st2s^-1t2"));
      p.relators.push_back(w("st3s^-1t3"));
      p.relators.push_back(w("e^2t2^-1"));
      p.relators.push_back(w("et1e^-1t1^-1"));
      p.relators.push_back(w("et2e^-1t2^-1"));
      p.relators.push_back(w("et3e^-1t3"));
      p.relators.push_back(w("seset1^-1"));  // (se)^2 = t1
      return p;
    case FlatType::J:  // B4: as B3 with the extra half twist, (se)^2 = t1 t3^-1
      p.names.push_back("s");
      p.names.push_back("e");
      commutators();
      p.relators.push_back(w("s^2t1^-1"));
      p.relators.push_back(w("st2s^-1t2"));
      p.relators.push_back(w("st3s^-1t3"));
      p.relators.push_back(w("e^2t2^-1"));
      p.relators.push_back(w("et1e^-1t1^-1"));
      p.relators.push_back(w("et2e^-1t2^-1"));
      p.relators.push_back(w("et3e^-1t3"));
      p.relators.push_back(w("seset3t1^-1"));
      return p;
  }
  return p;
}

}  // namespace

TEST_CASE("flat signature table agrees with the standard presentations") {
  for (const FlatSignature& sig : flat_signature_table()) {
    AbelianInvariants h1 = abelianization(wolf_presentation(sig.type));
    CHECK(h1 == sig.h1);
    CHECK(flat_type_orientable(sig.type) == sig.orientable);
  }
  // the ten signatures are pairwise distinct as triples
  std::set<std::string> keys;
  for (const FlatSignature& sig : flat_signature_table())
    CHECK(keys
              .insert(std::to_string(sig.orientable) + "|" +
                      std::to_string(sig.holonomy_order) + "|" + sig.h1.str())
              .second);
}

TEST_CASE("vertex cycles of the worked examples") {
  auto cycles = vertex_cycles(decode_code("13D935"));
  REQUIRE(cycles.size() == 5);
  const char* reps[5] = {"+000", "0+00", "00+0", "000+", "++++"};
  for (int i = 0; i < 5; ++i) CHECK(cycles[i].front() == V(reps[i]));
  CHECK(cycles[4].size() == 16);

  auto cycles1091 = vertex_cycles(m1091_scheme());
  REQUIRE(cycles1091.size() == 6);
  CHECK(cycles1091[5].front() == V("+++-"));

  // cycles are closed under every incident K-part
  PairingScheme s = decode_code("13D935");
  for (const auto& cyc : cycles) {
    std::set<uint8_t> members;
    for (Vertex v : cyc) members.insert(v.id);
    for (Vertex v : cyc)
      for (Side sd : sides_of_vertex(v))
        CHECK(members.count(act(s.kpart_of_side(sd), v).id));
  }
}

TEST_CASE("reference translations at v_{+000} of 13D935") {
  auto tv = t_v_generators(decode_code("13D935"), V("+000"));
  CHECK(word_str(tv[0].word, letter_names()) == "a^-1b");
  CHECK(word_str(tv[1].word, letter_names()) == "c^-1d");
  CHECK(word_str(tv[2].word, letter_names()) == "g^-1h");
  for (const auto& t : tv) {
    CHECK(t.rot == kIdentityRot);
    CHECK(t.fixes_vertex);
  }
  auto tv36 = t_v_generators(decode_code("1468AF"), V("+000"));
  CHECK(word_str(tv36[0].word, letter_names()) == "a^-1b");
}

TEST_CASE("block search fixtures from example 4.5") {
  PairingScheme s = decode_code("13D935");
  SUBCASE("no translation at v_{+000}; holonomy x2,x3,x2x3") {
    VertexStabilizer st = vertex_stabilizer(s, V("+000"));
    CHECK(st.translations.empty());
    std::set<std::string> hol;
    for (const auto& h : st.holonomy) hol.insert(holonomy_name(st, h.rot));
    CHECK(hol == std::set<std::string>{"x2", "x3", "x2x3"});
  }
  SUBCASE("v_{000+} carries i^-1k^-1") {
    VertexStabilizer st = vertex_stabilizer(s, V("000+"));
    REQUIRE(st.translations.size() == 1);
    CHECK(word_str(st.translations[0].word, letter_names()) == "i^-1k^-1");
  }
  SUBCASE("v_{++++} carries c^-1i and a^-1k^-1eg") {
    VertexStabilizer st = vertex_stabilizer(s, V("++++"));
    std::set<std::string> words;
    for (const auto& t : st.translations)
      words.insert(word_str(t.word, letter_names()));
    CHECK(words.count("c^-1i"));
    CHECK(words.count("a^-1k^-1eg"));
  }
}

TEST_CASE("expanding a word through the tiling") {
  PairingScheme s = decode_code("13D935");
  // the paper's E2 translation "a" walks in the negative x1 direction
  auto a = expand_in_stabilizer(s, V("0+00"), W("a"));
  REQUIRE(a.has_value());
  CHECK(a->is_translation());
  CHECK(a->trans == Vec3{-1, 0, 0});
  // e^-1dl is the same stabilizer element as the block's c^-1f^-1l
  auto paper = expand_in_stabilizer(s, V("00+0"), W("e^-1dl"));
  auto block = expand_in_stabilizer(s, V("00+0"), W("c^-1f^-1l"));
  REQUIRE(paper.has_value());
  REQUIRE(block.has_value());
  CHECK(paper->rot == block->rot);
  CHECK(paper->trans == block->trans);
  // a word that leaves the cusp's wall language
  CHECK_FALSE(expand_in_stabilizer(s, V("0+00"), W("k")).has_value());
}

TEST_CASE("normality of translations") {
  PairingScheme s = decode_code("13D935");
  VertexStabilizer e3 = vertex_stabilizer(s, V("00+0"));
  auto t3 = expand_in_stabilizer(s, V("00+0"), W("e^-1dl"));
  REQUIRE(t3.has_value());
  // not normal in E3 itself, but normal in the lift (which loses the glide)
  CHECK_FALSE(is_normal_translation(*t3, e3.holonomy));
  CHECK(is_normal_translation(*t3, lift_holonomy(e3, false)));

  VertexStabilizer e4 = vertex_stabilizer(s, V("000+"));
  auto t4 = expand_in_stabilizer(s, V("000+"), W("i^-1k^-1"));
  REQUIRE(t4.has_value());
  CHECK(is_normal_translation(*t4, e4.holonomy));

  VertexStabilizer e5 = vertex_stabilizer(s, V("++++"));
  auto t5 = expand_in_stabilizer(s, V("++++"), W("c^-1i"));
  REQUIRE(t5.has_value());
  CHECK(is_normal_translation(*t5, e5.holonomy));  // trivial holonomy
}

TEST_CASE("primitivity in the lift rejects slide-rotation powers") {
  PairingScheme s = decode_code("13D935");
  VertexStabilizer e1 = vertex_stabilizer(s, V("+000"));
  auto gh = expand_in_stabilizer(s, V("+000"), W("g^-1h"));
  auto cd = expand_in_stabilizer(s, V("+000"), W("c^-1d"));
  auto ab = expand_in_stabilizer(s, V("+000"), W("a^-1b"));
  REQUIRE((gh && cd && ab));
  // E1 is nonorientable type I; its lift keeps only the rotation x2x3
  CHECK_FALSE(is_primitive_in_lift(*gh, e1, false));  // square of a slide-rotation
  CHECK(is_primitive_in_lift(*cd, e1, false));
  CHECK(is_primitive_in_lift(*ab, e1, false));
  // proper multiples of lattice vectors are never primitive
  auto cd2 = expand_in_stabilizer(s, V("+000"), W("c^-1dc^-1d"));
  REQUIRE(cd2.has_value());
  CHECK_FALSE(is_primitive_in_lift(*cd2, e1, false));
}

TEST_CASE("holonomy closure and consistency of block elements") {
  for (const std::string& code : fixtures::random_valid_codes(8)) {
    PairingScheme s = decode_code(code);
    for (const auto& cyc : vertex_cycles(s)) {
      VertexStabilizer st = vertex_stabilizer(s, cyc.front());
      std::set<Rot3> rots = {kIdentityRot};
      for (const auto& h : st.holonomy) rots.insert(h.rot);
      for (const auto& a : rots)
        for (const auto& b : rots) CHECK(rots.count(rot_mul(a, b)));
      // every member's word re-expands to the same affine data
      for (const AffineIso3& m : st.block) {
        if (!m.fixes_vertex) continue;
        auto again = expand_in_stabilizer(s, cyc.front(), m.word);
        REQUIRE(again.has_value());
        CHECK(again->rot == m.rot);
        CHECK(again->trans == m.trans);
      }
      // reference translations vanish under phi
      for (const auto& t : st.tv) CHECK(phi_map(t.word) == 0);
    }
  }
}

TEST_CASE("double cover boundary structure") {
  Analysis a = analyze("13D935");
  std::string types;
  for (const Cusp& c : a.cusps) types += flat_type_letter(c.type);
  CHECK(types == "IBHGA");
  std::string lifted;
  for (const LiftInfo& l : a.lifts) lifted += flat_type_letter(l.type);
  CHECK(lifted == "BBBAAAA");
  CHECK(a.tori == 4);
  CHECK(a.klein_bottles == 3);
  // all-A input of size n lifts to 2n tori
  Analysis b = analyze("53RR35");
  CHECK(b.tori == 9);
  CHECK(b.klein_bottles == 0);
  CHECK(b.lifts.size() == 9);
}

TEST_CASE("self-conjugacy diagnostics from example 4.5") {
  PairingScheme s = decode_code("13D935");
  FPresentation g = ridge_cycle_relators(s);
  std::vector<Word> reversing;
  for (int gen = 0; gen < kNumGenerators; ++gen)
    if (s.reversing[gen]) reversing.push_back({static_cast<Letter>(gen + 1)});
  ProverOptions opt;
  opt.max_states = 400000;
  opt.max_word_length = 16;

  SUBCASE("identity is self-conjugate with any witness") {
    SelfConjugacy sc = check_self_conjugate({}, g, reversing, opt);
    CHECK(sc.status == SelfConjugacy::Status::witness);
  }
  SUBCASE("t5 = c^-1i is self-conjugate in G/<<t1,t2,t4>> with witness c") {
    FPresentation q = quotient(g, {W("c^-1d"), W("a"), W("i^-1k^-1")});
    SelfConjugacy sc = check_self_conjugate(W("c^-1i"), q, reversing, opt);
    REQUIRE(sc.status == SelfConjugacy::Status::witness);
    CHECK(sc.x == W("c"));
    CHECK(sc.exponent == 1);
  }
  SUBCASE("t3 = e^-1dl conjugates to its inverse in the deeper quotient") {
    FPresentation q =
        quotient(g, {W("c^-1d"), W("a"), W("i^-1k^-1"), W("c^-1i")});
    SelfConjugacy sc = check_self_conjugate(W("e^-1dl"), q, reversing, opt);
    REQUIRE(sc.status == SelfConjugacy::Status::witness);
    CHECK(sc.x == W("c"));
    CHECK(sc.exponent == -1);
  }
  SUBCASE("t4 = i^-1k^-1 is self-conjugate already in G") {
    SelfConjugacy sc = check_self_conjugate(W("i^-1k^-1"), g, reversing, opt);
    CHECK(sc.status == SelfConjugacy::Status::witness);
  }
}

TEST_CASE("G and H differ by the secondary normality check") {
  // in type H some generator of the translation subgroup is not a normal
  // translation; in type G all of them are
  PairingScheme s = decode_code("13D935");
  auto any_non_normal = [&](const VertexStabilizer& st) {
    bool found = false;
    for (const auto& t : st.tv) found |= !is_normal_translation(t, st.holonomy);
    for (const auto& t : st.translations)
      found |= !is_normal_translation(t, st.holonomy);
    return found;
  };
  CHECK(any_non_normal(vertex_stabilizer(s, V("00+0"))));        // type H
  CHECK_FALSE(any_non_normal(vertex_stabilizer(s, V("000+"))));  // type G
}
