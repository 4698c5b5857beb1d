// Command-line front end: decode a side-pairing code, print its fundamental
// group presentation and cusp analysis, run the filtering criteria, verify
// the 4-sphere property, analyze finite covers, and process census files.
//
// Exit status: 0 when every requested verdict was decided, 2 when a coset
// enumeration overflowed (undecided), 1 on usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cell24/pipeline.hpp"

using namespace cell24;

namespace {

int parse_transversal(const std::string& s) {
  if (s.empty()) return -1;
  if (s.size() != 1 || s[0] < 'a' || s[0] > 'l')
    throw CLI::ValidationError("--transversal expects a generator letter a..l");
  return s[0] - 'a';
}

std::pair<std::string, std::string> split_assignment(const std::string& s,
                                                     const char* what) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= s.size())
    throw CLI::ValidationError(std::string(what) + " expects NAME=VALUE, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

void print_scheme(const PairingScheme& scheme) {
  std::cout << "code " << scheme.code << "\n";
  for (int g = 0; g < kNumGenerators; ++g) {
    Side src{scheme.source_of_generator[g]};
    std::cout << "  S_" << label(src).str() << " --" << generator_name(g) << "("
              << scheme.kpart_of_generator(g).label().str() << ")--> S_"
              << label(scheme.pair_target(src)).str() << "\n";
  }
  std::cout << "orientation-reversing:";
  for (int g = 0; g < kNumGenerators; ++g)
    if (scheme.reversing[g]) std::cout << " " << generator_name(g);
  std::cout << "\n";
}

void print_cusps(const Analysis& a, bool self_conj) {
  for (const Cusp& c : a.cusps) {
    std::cout << "E" << c.index << "  type " << flat_type_letter(c.type) << "  h1 "
              << c.h1.str() << (c.orientable ? "  orientable" : "  nonorientable")
              << "\n  vertices:";
    for (Vertex v : c.cycle) std::cout << " " << label(v).str();
    std::cout << "\n  holonomy:";
    if (c.stab.holonomy.empty()) std::cout << " trivial";
    for (const HolonomyClass& h : c.stab.holonomy)
      std::cout << " " << holonomy_name(c.stab, h.rot);
    std::cout << "\n  translations in the block:";
    if (c.stab.translations.empty()) std::cout << " none";
    std::cout << "\n";
    std::vector<Word> candidates;
    for (int g = 0; g < kNumGenerators; ++g)
      if (a.scheme.reversing[g]) candidates.push_back({static_cast<Letter>(g + 1)});
    for (const AffineIso3& t : c.stab.translations) {
      std::cout << "    " << word_str(t.word, letter_names()) << "  offset ["
                << t.trans[0] << "," << t.trans[1] << "," << t.trans[2] << "]";
      if (self_conj) {
        ProverOptions popt;
        popt.max_cosets = 2000;
        popt.max_states = 20000;
        popt.max_word_length = 14;
        SelfConjugacy sc = check_self_conjugate(t.word, a.pres, candidates, popt);
        if (sc.status == SelfConjugacy::Status::witness)
          std::cout << "  self-conjugate (x=" << word_str(sc.x, letter_names())
                    << ", exponent " << sc.exponent << ")";
        else
          std::cout << "  self-conjugacy not found";
      }
      std::cout << "\n";
    }
    std::cout << "  T_v:";
    for (const AffineIso3& t : c.stab.tv)
      std::cout << " " << word_str(t.word, letter_names());
    std::cout << "\n";
  }
  std::string boundary;
  for (const Cusp& c : a.cusps) boundary += flat_type_letter(c.type);
  std::cout << "boundary " << boundary << "; double cover:";
  for (const LiftInfo& l : a.lifts)
    std::cout << " " << l.name() << "=" << flat_type_letter(l.type);
  std::cout << "\n";
}

void print_criteria(const Analysis& a) {
  std::cout << "phi criterion: dim " << a.phi.dim << " -> "
            << (a.phi.pass ? "pass" : "FAIL") << "\n";
  std::cout << "link structure: " << a.tori << " tori, " << a.klein_bottles
            << " Klein bottles\n";
  std::cout << "H_1 of double cover: " << a.cover_h1.str() << " -> "
            << (a.h1_pass ? "pass" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"side-pairing codes of the ideal 24-cell: fundamental groups, "
               "cusps, and 4-sphere complement verification"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "emit a JSON report instead of text");

  std::string code, transversal, census_path, out_dir, batch_command = "criteria";
  std::vector<std::string> fiber_args, power_args;
  long long max_cosets = 1'000'000;
  bool felsch = false, self_conj = false;

  auto add_code = [&](CLI::App* cmd) {
    cmd->add_option("code", code, "6-character side-pairing code")->required();
  };
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-cosets", max_cosets, "coset enumeration limit");
    cmd->add_flag("--felsch", felsch, "use the Felsch strategy");
  };
  auto add_plan_opts = [&](CLI::App* cmd) {
    cmd->add_option("--fiber", fiber_args,
                    "pin a fiber translation, e.g. --fiber E5=c^-1i or E5'=c(a^-1k^-1eg)c^-1");
    cmd->add_option("--transversal", transversal,
                    "orientation-reversing generator for the double cover transversal");
    add_limits(cmd);
  };

  auto* cmd_decode = app.add_subcommand("decode", "decode a code into its side pairings");
  add_code(cmd_decode);
  auto* cmd_present = app.add_subcommand("present", "fundamental group presentation");
  add_code(cmd_present);
  bool simplify = false;
  cmd_present->add_flag("--simplify", simplify, "Tietze-simplify the presentation");
  auto* cmd_cusps = app.add_subcommand("cusps", "cusp cross-sections and translations");
  add_code(cmd_cusps);
  cmd_cusps->add_flag("--self-conjugacy", self_conj,
                      "attempt the self-conjugacy diagnostic per translation");
  auto* cmd_criteria = app.add_subcommand("criteria", "run both filtering criteria");
  add_code(cmd_criteria);
  auto* cmd_verify = app.add_subcommand("verify", "verify the double cover closes to S^4");
  add_code(cmd_verify);
  add_plan_opts(cmd_verify);
  auto* cmd_cover = app.add_subcommand("cover", "boundary structure of a finite cover");
  add_code(cmd_cover);
  cmd_cover->add_option("--power", power_args,
                        "replace a fiber by a power, e.g. --power E5'=3")
      ->required();
  add_plan_opts(cmd_cover);
  auto* cmd_batch = app.add_subcommand("batch", "process a census file");
  cmd_batch->add_option("file", census_path, "census file: `<id> <code>` per line")
      ->required();
  cmd_batch->add_option("--command", batch_command, "criteria (default) or verify");
  int jobs = 1;
  cmd_batch->add_option("--jobs", jobs, "parallel workers");
  cmd_batch->add_option("--out", out_dir, "directory for per-code JSON reports");
  add_limits(cmd_batch);

  CLI11_PARSE(app, argc, argv);

  EnumerateOptions limits;
  limits.max_cosets = max_cosets;
  limits.strategy = felsch ? Strategy::felsch : Strategy::hlt;

  try {
    if (cmd_decode->parsed()) {
      PairingScheme scheme = resolve_code(code);
      if (json_out)
        std::cout << scheme_json(scheme).dump(2) << "\n";
      else
        print_scheme(scheme);
      return 0;
    }
    if (cmd_present->parsed()) {
      FPresentation p = ridge_cycle_relators(resolve_code(code));
      if (simplify) p = tietze_simplify(p).pres;
      if (json_out)
        std::cout << presentation_json(p).dump(2) << "\n";
      else
        std::cout << p.str();
      return 0;
    }
    if (cmd_cusps->parsed() || cmd_criteria->parsed()) {
      Analysis a = analyze(code);
      if (json_out) {
        std::cout << analysis_json(a).dump(2) << "\n";
      } else if (cmd_cusps->parsed()) {
        print_cusps(a, self_conj);
      } else {
        print_criteria(a);
      }
      return 0;
    }

    VerificationPlan plan;
    plan.code = code;
    plan.limits = limits;
    plan.transversal = parse_transversal(transversal);
    for (const std::string& f : fiber_args)
      plan.fibers.push_back(split_assignment(f, "--fiber"));
    for (const std::string& p : power_args) {
      auto [name, val] = split_assignment(p, "--power");
      plan.powers.emplace_back(name, std::stoll(val));
    }

    if (cmd_verify->parsed()) {
      VerifyResult r = verify_sphere(plan);
      if (json_out) {
        std::cout << verify_json(r).dump(2) << "\n";
      } else {
        for (const Fiber& f : r.fibers)
          std::cout << f.lift.name() << " = " << word_str(f.word, letter_names())
                    << (f.overridden ? "" : " (auto)") << "\n";
        for (const std::string& w : r.warnings) std::cout << "warning: " << w << "\n";
        std::cout << summary_line(r) << "\n";
      }
      return r.verdict == Verdict::undecided ? 2 : 0;
    }
    if (cmd_cover->parsed()) {
      CoverResult r = analyze_cover(plan);
      if (json_out) {
        std::cout << cover_json(r).dump(2) << "\n";
      } else if (r.verdict == Verdict::undecided) {
        std::cout << "UNDECIDED (enumeration overflow)\n";
      } else {
        std::cout << "deck group order " << r.deck_order << ", chi = " << r.chi << "\n";
        for (const CoverComponent& c : r.components)
          std::cout << "  " << c.lift_name << ": " << c.multiplicity
                    << " component(s) of type " << flat_type_letter(c.lifted_type)
                    << "\n";
        std::cout << r.tori << " tori, " << r.klein_bottles << " Klein bottles\n";
      }
      return r.verdict == Verdict::undecided ? 2 : 0;
    }
    if (cmd_batch->parsed()) {
      std::ifstream in(census_path);
      if (!in) {
        std::cerr << "cannot open " << census_path << "\n";
        return 1;
      }
      std::vector<std::string> diagnostics;
      auto entries = parse_census(in, &diagnostics);
      for (const std::string& d : diagnostics) std::cerr << census_path << ": " << d << "\n";
      BatchOptions bopt;
      bopt.jobs = jobs;
      bopt.limits = limits;
      if (batch_command == "criteria")
        bopt.command = BatchOptions::Command::criteria;
      else if (batch_command == "verify")
        bopt.command = BatchOptions::Command::verify;
      else {
        std::cerr << "unknown batch command " << batch_command << "\n";
        return 1;
      }
      BatchResult res = run_batch(entries, bopt);
      if (!out_dir.empty()) {
        for (const BatchItem& it : res.items) {
          if (!it.ok) continue;
          std::ofstream out(out_dir + "/" + it.entry.id + ".json");
          out << it.report.dump(2) << "\n";
        }
      }
      for (const BatchItem& it : res.items) {
        if (!it.ok) {
          std::cout << it.entry.id << " " << it.entry.code << "  ERROR: " << it.error
                    << "\n";
          continue;
        }
        if (bopt.command == BatchOptions::Command::criteria) {
          const Json& c = it.report["criteria"];
          std::cout << it.entry.id << " " << it.entry.code << "  boundary "
                    << it.report["boundary"].get<std::string>() << "  phi "
                    << c["phi_dim"] << (c["phi_pass"].get<bool>() ? " pass" : " FAIL")
                    << "  H1 " << c["double_cover_h1"].get<std::string>()
                    << (c["h1_pass"].get<bool>() ? " pass" : " FAIL") << "\n";
        } else {
          std::cout << it.entry.id << " " << it.entry.code << "  "
                    << it.report["verdict"].get<std::string>() << "\n";
        }
      }
      std::cout << res.summary().dump() << "\n";
      return res.undecided > 0 ? 2 : 0;
    }
  } catch (const DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return 1;
  } catch (const FiberRejected& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
