#pragma once

// Orchestration: the two filtering criteria, sphere verification for a
// side-pairing code, finite-cover boundary analysis, and batch census runs.

#include <json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cell24/cusp.hpp"
#include "cell24/subgroup.hpp"

namespace cell24 {

using Json = nlohmann::ordered_json;

// phi: G -> Z_2^6 sending both letters of group i to e_i; returned as a
// 6-bit mask.
uint8_t phi_map(const Word& w);
int gf2_dimension(std::vector<uint8_t> vecs);

struct PhiCriterion {
  int dim = 0;
  bool pass = false;  // dim >= 5
};

// Span of phi over every translation the cusp analysis found (block
// translations and reference generators alike; the latter contribute 0).
PhiCriterion phi_criterion(const std::vector<Cusp>& cusps);

// The code "53RR35" appears in the census with characters outside the
// alphabet; it resolves to a reconstructed scheme found by matching ridge
// cycle relators (see m1091_scheme).  Other codes decode normally.
PairingScheme resolve_code(std::string_view code, bool* reconstructed = nullptr);
const PairingScheme& m1091_scheme();
const std::vector<Word>& m1091_expected_relators();

struct Analysis {
  PairingScheme scheme;
  bool reconstructed = false;
  FPresentation pres;
  std::vector<Cusp> cusps;
  std::vector<LiftInfo> lifts;
  int tori = 0;           // lifts of type A
  int klein_bottles = 0;  // lifts of type B
  PhiCriterion phi;
  int transversal_rep = -1;
  SubgroupScheme cover;
  RSResult rs;
  AbelianInvariants cover_h1;
  bool h1_pass = false;  // H_1 of the double cover equals Z^r + Z_2^s
};

Analysis analyze(std::string_view code, int transversal_pin = -1);

// Human-readable holonomy element: ambient coordinate planes for unit-type
// vertices (x2x3), cube axes for half-type ones (u1u2).
std::string holonomy_name(const VertexStabilizer& st, const Rot3& rot);

struct VerificationPlan {
  std::string code;
  std::string id;          // census number, informational
  int transversal = -1;    // pinned transversal generator, -1 = first reversing
  std::vector<std::pair<std::string, std::string>> fibers;  // lift name -> word
  std::vector<std::pair<std::string, long long>> powers;    // lift name -> m
  EnumerateOptions limits;
};

struct FiberRejected : std::runtime_error {
  std::string lift, check;
  FiberRejected(const std::string& lift_, const std::string& check_)
      : std::runtime_error("fiber for " + lift_ + " rejected: " + check_),
        lift(lift_),
        check(check_) {}
};

struct Fiber {
  LiftInfo lift;
  Word word;  // the full word handed to the quotient
  Word core;  // word with outer conjugators stripped
  Word conjugator;
  Vertex at;  // cycle vertex where the core expands
  AffineIso3 iso;
  bool overridden = false;
  long long exponent = 1;  // cover relators use word^exponent
};

enum class Verdict { sphere, not_sphere, undecided };
std::string verdict_str(Verdict v);

struct VerifyResult {
  Analysis analysis;
  std::vector<Fiber> fibers;
  int fiber_phi_dim = 0;
  AbelianInvariants final_h1;
  Verdict verdict = Verdict::undecided;
  long long quotient_order = -1;  // filled when enumeration completes
  std::vector<std::string> warnings;
  double seconds = 0;
};

VerifyResult verify_sphere(const VerificationPlan& plan);

struct CoverComponent {
  std::string lift_name;
  long long multiplicity = 0;
  FlatType lifted_type = FlatType::A;
};

struct CoverResult {
  Analysis analysis;
  std::vector<Fiber> fibers;
  long long deck_order = 0;
  long long chi = 0;
  std::vector<CoverComponent> components;
  long long tori = 0, klein_bottles = 0;
  Verdict verdict = Verdict::undecided;  // undecided when enumeration overflows
  std::vector<std::string> warnings;
  double seconds = 0;
};

CoverResult analyze_cover(const VerificationPlan& plan);

// -------- census files and batch runs --------

struct CensusEntry {
  std::string id, code;
  int line = 0;
};

// one entry per line, `<id> <code>`, '#' starts a comment
std::vector<CensusEntry> parse_census(std::istream& in,
                                      std::vector<std::string>* diagnostics);

struct BatchOptions {
  enum class Command { criteria, verify };
  Command command = Command::criteria;
  int jobs = 1;
  EnumerateOptions limits;
};

struct BatchItem {
  CensusEntry entry;
  bool ok = false;
  std::string error;
  Json report;
};

struct BatchResult {
  std::vector<BatchItem> items;  // sorted by census id
  int decoded = 0, failed = 0;
  int criteria_pass = 0;
  int spheres = 0, non_spheres = 0, undecided = 0;
  Json summary() const;
};

BatchResult run_batch(const std::vector<CensusEntry>& entries, const BatchOptions& opt);

// -------- structured reports --------

Json scheme_json(const PairingScheme& scheme);
Json presentation_json(const FPresentation& p);
Json cusp_json(const Cusp& c);
Json analysis_json(const Analysis& a);
Json verify_json(const VerifyResult& r);
Json cover_json(const CoverResult& r);

std::string summary_line(const VerifyResult& r);

}  // namespace cell24
