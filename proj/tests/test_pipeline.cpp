#include <doctest.h>

#include <random>
#include <sstream>

#include "cell24/pipeline.hpp"
#include "fixtures.hpp"

using namespace cell24;

namespace {
Word W(const std::string& s) { return parse_word(s, letter_names()); }
}

TEST_CASE("phi map") {
  CHECK(phi_map(W("a")) == 0b000001);
  CHECK(phi_map(W("a^-1b")) == 0);
  CHECK(phi_map(W("c^-1i")) == 0b010010);
  CHECK(gf2_dimension({0b1, 0b10, 0b11}) == 2);
}

TEST_CASE("phi criterion for 13D935") {
  Analysis a = analyze("13D935");
  CHECK(a.phi.dim >= 5);
  CHECK(a.phi.pass);
}

TEST_CASE("the anomalous census code resolves to the reconstruction") {
  bool rec = false;
  PairingScheme s = resolve_code("53rr35", &rec);
  CHECK(rec);
  CHECK(s.code == "53FF35");
  CHECK(match_relators(ridge_cycle_relators(s).relators, m1091_expected_relators()) ==
        24);
  for (int g = 0; g < kNumGenerators; ++g) CHECK(s.reversing[g]);
}

TEST_CASE("homology criterion matches the link structure") {
  Analysis a = analyze("13D935");
  CHECK(a.tori == 4);
  CHECK(a.klein_bottles == 3);
  CHECK(a.cover_h1 == AbelianInvariants{4, {2, 2, 2}});
  CHECK(a.h1_pass);
}

TEST_CASE("verification verdict is stable under fiber relator permutations") {
  auto row = fixtures::table_rows()[7];  // no. 56
  REQUIRE(row.id == "56");
  VerificationPlan plan = fixtures::plan_for(row);
  VerifyResult base = verify_sphere(plan);
  REQUIRE(base.verdict == Verdict::sphere);
  std::vector<Word> extra;
  for (const Fiber& f : base.fibers)
    extra.push_back(rewrite_word(f.word, base.analysis.cover, base.analysis.rs));
  std::mt19937 rng(23);
  for (int t = 0; t < 3; ++t) {
    std::shuffle(extra.begin(), extra.end(), rng);
    FPresentation filled = quotient(base.analysis.rs.pres, extra);
    CHECK(order_of_quotient(filled) == 1);
  }
}

TEST_CASE("fiber validation errors") {
  VerificationPlan plan;
  plan.code = "13D935";
  plan.fibers = {{"E4", "g^-1h"}};  // a slide-rotation power, not primitive
  CHECK_THROWS_AS(verify_sphere(plan), FiberRejected);
  plan.fibers = {{"E9", "a"}};
  CHECK_THROWS_AS(verify_sphere(plan), FiberRejected);
  plan.fibers = {{"E2", "c"}};  // not a stabilizer element of E2
  CHECK_THROWS_AS(verify_sphere(plan), FiberRejected);
  plan.fibers = {{"E2'", "a"}};  // lies in the unprimed lift
  CHECK_THROWS_AS(verify_sphere(plan), FiberRejected);
}

TEST_CASE("sphere verdicts imply trivial abelianization en route") {
  auto row = fixtures::table_rows()[0];  // no. 1011
  VerifyResult r = verify_sphere(fixtures::plan_for(row));
  CHECK(r.verdict == Verdict::sphere);
  CHECK(r.final_h1.trivial());
  CHECK(r.quotient_order == 1);
  CHECK(r.fiber_phi_dim >= 5);
}

TEST_CASE("finite covers of the double cover of no. 56") {
  auto row = fixtures::table_rows()[7];
  VerificationPlan plan = fixtures::plan_for(row);
  plan.powers = {{"E5'", 2}};
  CoverResult r = analyze_cover(plan);
  CHECK(r.deck_order == 2);
  CHECK(r.chi == 4);
  CHECK(r.tori == 7);
  CHECK(r.klein_bottles == 4);
  std::vector<long long> mult;
  for (const auto& c : r.components) mult.push_back(c.multiplicity);
  CHECK(mult == std::vector<long long>{1, 2, 2, 2, 2, 1, 1});
}

TEST_CASE("census parsing") {
  std::istringstream in(
      "# comment line\n"
      "56 13D935\n"
      "\n"
      "36\t1468AF  # trailing comment\n"
      "badline\n"
      "1091 53RR35\n");
  std::vector<std::string> diags;
  auto entries = parse_census(in, &diags);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "56");
  CHECK(entries[1].code == "1468AF");
  CHECK(entries[2].code == "53RR35");
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].find("line 5") != std::string::npos);
}

TEST_CASE("batch criteria over a small census") {
  std::vector<CensusEntry> entries = {
      {"56", "13D935", 1}, {"36", "1468AF", 2}, {"1091", "53RR35", 3},
      {"bad", "13X935", 4},
  };
  BatchOptions opt;
  opt.command = BatchOptions::Command::criteria;
  opt.jobs = 2;
  BatchResult res = run_batch(entries, opt);
  CHECK(res.decoded == 3);
  CHECK(res.failed == 1);
  CHECK(res.criteria_pass == 3);
  // collector sorts by numeric id
  CHECK(res.items[0].entry.id == "36");
  CHECK(res.items[1].entry.id == "56");
  CHECK(res.items[2].entry.id == "1091");

  BatchResult empty = run_batch({}, opt);
  CHECK(empty.items.empty());
  CHECK(empty.summary()["entries"] == 0);
}

TEST_CASE("json reports carry the recomputable artifacts") {
  auto row = fixtures::table_rows()[7];
  VerifyResult r = verify_sphere(fixtures::plan_for(row));
  Json j = verify_json(r);
  CHECK(j["verdict"] == "SPHERE");
  CHECK(j["presentation"]["relators"].size() == 24);
  CHECK(j["boundary"] == "IBHGA");
  CHECK(j["criteria"]["double_cover_h1"] == "Z^4 + Z_2^3");
  CHECK(j["fibers"].size() == 7);
  CHECK(j["quotient_order"] == 1);
}
