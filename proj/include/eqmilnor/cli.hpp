#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests drive it in-process.
//
// Exit codes: 0 success, 1 malformed input, 2 no certificate within the
// degree bound, 3 identity violation (failed check, no (a,b) decomposition).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "repn.hpp"
#include "report.hpp"
#include "theorem.hpp"

namespace eqm {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitMalformed = 1, kExitNotIsolated = 2, kExitViolation = 3 };

namespace detail {

inline std::vector<unsigned> parse_weights(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty() || item.size() > 9 ||
        !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw PreconditionError("malformed weight list '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(item)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A non-invariant input is malformed, but isolation is decided first so a
// degenerate germ reports exit 2 whatever the action.
inline void require_invariant_after_isolation(const Polynomial& f, const CyclicAction& tau,
                                              unsigned d_max) {
  if (is_invariant(f, tau)) return;
  milnor_basis(f, d_max);
  require_invariant(f, tau);
}

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

struct CommonArgs {
  unsigned p = 0;
  std::string weights;
  std::string polynomial;
  unsigned dmax = kDefaultDegreeBound;
  bool json = false;
};

inline int cmd_analyze(const CommonArgs& a, std::ostream& out) {
  CyclicAction tau(a.p, parse_weights(a.weights));
  Polynomial f = parse_polynomial(a.polynomial, tau.nvars());
  require_invariant_after_isolation(f, tau, a.dmax);
  AnalysisReport r = analyze(f, tau, a.dmax);
  if (a.json) {
    emit(out, to_json(r));
  } else {
    out << to_text(r);
  }
  return r.checks.passes() ? kExitOk : kExitViolation;
}

inline int cmd_screen(const CommonArgs& a, std::ostream& out) {
  CyclicAction tau(a.p, parse_weights(a.weights));
  auto v = screen_representation(tau);
  if (a.json) {
    emit(out, {{"schema_version", kSchemaVersion},
               {"p", tau.p()},
               {"weights", tau.weights()},
               {"screening", to_json(v)}});
  } else {
    out << "p: " << tau.p() << "\nweights: " << join_ints(tau.weights())
        << "\nscreening: " << screening_line(v) << "\n";
  }
  return kExitOk;
}

inline int cmd_enumerate(unsigned p, std::size_t n, bool json, std::ostream& out) {
  auto rows = nlohmann::json::array();
  std::ostringstream text;
  text << "weights        rk  det  verdict\n";
  for (const auto& tau : enumerate_actions(p, n)) {
    auto v = screen_representation(tau);
    rows.push_back({{"weights", tau.weights()},
                    {"rank", v.rank},
                    {"det_weight", v.det_weight},
                    {"screening", to_json(v)}});
    std::string w = "(" + join_ints(tau.weights()) + ")";
    w.resize(std::max<std::size_t>(w.size(), 14), ' ');
    text << w << " " << v.rank << "   " << v.det_weight << "    "
         << (v.passes ? "pass" : "fail") << " (2^" << v.corank << "=" << v.power
         << (v.passes ? " <= " : " > ") << v.threshold << ")\n";
  }
  if (json) {
    emit(out, {{"schema_version", kSchemaVersion}, {"p", p}, {"n", n}, {"rows", rows}});
  } else {
    out << text.str();
  }
  return kExitOk;
}

inline int cmd_verify(const CommonArgs& a, const std::string& suite, std::ostream& out) {
  CyclicAction tau(a.p, parse_weights(a.weights));
  Polynomial f = parse_polynomial(a.polynomial, tau.nvars());
  require_invariant_after_isolation(f, tau, a.dmax);
  VerificationReport all;
  auto run = [&](const char* name, auto&& fn) {
    if (suite != "all" && suite != name) return;
    try {
      all.append(fn());
    } catch (const PreconditionNotReal& e) {
      all.skip(std::string(name) + "_equality", e.what());
    } catch (const PreconditionFixedPoints& e) {
      all.skip(std::string(name) + "_equality", e.what());
    }
  };
  run("roberts", [&] { return verify_roberts(f, tau, a.dmax); });
  run("double", [&] { return verify_double_identities(f, tau, a.dmax); });
  run("corank", [&] { return corank_bound_check(f, tau, a.dmax); });
  if (a.json) {
    emit(out, {{"schema_version", kSchemaVersion},
               {"p", tau.p()},
               {"weights", tau.weights()},
               {"polynomial", to_string(f)},
               {"suite", suite},
               {"checks", to_json(all)},
               {"passes", all.passes()}});
  } else {
    for (const auto& c : all.checks) out << check_line(c) << "\n";
    out << (all.passes() ? "all applicable checks pass" : "some checks FAILED") << "\n";
  }
  return all.passes() ? kExitOk : kExitViolation;
}

inline int cmd_search(const CommonArgs& a, SearchOptions opts, std::ostream& out) {
  CyclicAction tau(a.p, parse_weights(a.weights));
  opts.d_max = a.dmax;
  auto r = search_stable_germs(tau, opts);
  VerificationReport consistency;
  const auto allowed = stable_mu_values(tau);
  auto germs = nlohmann::json::array();
  for (const auto& g : r.germs) {
    const bool ok = std::find(allowed.begin(), allowed.end(), g.milnor.mu()) != allowed.end();
    if (!ok)
      consistency.add("stable_mu_allowed", 1, 0, false, to_string(g.germ));
    germs.push_back({{"polynomial", to_string(g.germ)},
                     {"mu", g.milnor.mu()},
                     {"character", g.character.multiplicities}});
  }
  nlohmann::json counts = {{"supports", r.supports},
                           {"symmetric_duplicates", r.symmetric_duplicates},
                           {"skipped_non_isolated", r.skipped_non_isolated},
                           {"skipped_bound", r.skipped_bound},
                           {"rejected_by_count", r.rejected_by_count},
                           {"rejected_unstable", r.rejected_unstable}};
  if (a.json) {
    emit(out, {{"schema_version", kSchemaVersion},
               {"p", tau.p()},
               {"weights", tau.weights()},
               {"options",
                {{"degree_bound", opts.degree_bound},
                 {"coefficient_mode", to_string(opts.mode)},
                 {"seed", opts.seed},
                 {"max_terms", opts.max_terms},
                 {"d_max", opts.d_max},
                 {"dedupe_permutations", opts.dedupe_permutations}}},
               {"counts", counts},
               {"label", r.label()},
               {"germs", germs},
               {"checks", to_json(consistency)}});
  } else {
    out << "p: " << tau.p() << "\nweights: " << join_ints(tau.weights())
        << "\ndegree_bound: " << opts.degree_bound << "\ncoefficient_mode: " << to_string(opts.mode)
        << "\nseed: " << opts.seed << "\nmax_terms: " << opts.max_terms
        << "\nsupports: " << r.supports << "\nskipped_non_isolated: " << r.skipped_non_isolated
        << "\nskipped_bound: " << r.skipped_bound << "\n"
        << r.label() << ": " << r.germs.size() << "\n";
    for (const auto& g : r.germs)
      out << "  " << to_string(g.germ) << "  mu=" << g.milnor.mu() << " character=["
          << join_ints(g.character.multiplicities) << "]\n";
    for (const auto& c : consistency.checks) out << check_line(c) << "\n";
  }
  return consistency.passes() ? kExitOk : kExitViolation;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor numbers and equivariant invariants of Z_p-invariant germs", "eqmilnor"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  detail::CommonArgs common;
  std::string suite = "all";
  std::size_t dim = 0;
  SearchOptions search_opts;
  std::string coeff = "unit";

  auto* analyze_cmd = app.add_subcommand("analyze", "Milnor data, character, (a,b) and screening of one germ");
  auto* screen_cmd = app.add_subcommand("screen", "Screen a representation for simple germs");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Screen every weight vector up to permutation");
  auto* verify_cmd = app.add_subcommand("verify", "Check Roberts' equality, doubling identities, corank bound");
  auto* search_cmd = app.add_subcommand("search", "Bounded search for stable (nu = 1) germs");

  for (auto* c : {analyze_cmd, screen_cmd, verify_cmd, search_cmd}) {
    c->add_option("-p", common.p, "Prime group order")->required();
    c->add_option("-w", common.weights, "Comma-separated weights a1,...,an")->required();
    c->add_flag("--json", common.json, "Emit one JSON object");
  }
  for (auto* c : {analyze_cmd, verify_cmd}) {
    c->add_option("-f", common.polynomial, "Polynomial in x1..xn")->required();
  }
  for (auto* c : {analyze_cmd, verify_cmd, search_cmd}) {
    c->add_option("--dmax", common.dmax, "Degree bound for the certificate")
        ->check(CLI::Range(2u, 1000u));
  }
  verify_cmd->add_option("--suite", suite, "roberts|double|corank|all")
      ->check(CLI::IsMember({"roberts", "double", "corank", "all"}));
  enumerate_cmd->add_option("-p", common.p, "Prime group order")->required();
  enumerate_cmd->add_option("-n", dim, "Number of variables")->required()->check(CLI::Range(1, 16));
  enumerate_cmd->add_flag("--json", common.json, "Emit one JSON object");
  search_cmd->add_option("--degree", search_opts.degree_bound, "Largest monomial degree")
      ->required()
      ->check(CLI::Range(2u, 64u));
  search_cmd->add_option("--coeff", coeff, "unit|random")->check(CLI::IsMember({"unit", "random"}));
  search_cmd->add_option("--seed", search_opts.seed, "Seed for random coefficients");
  search_cmd->add_option("--max-terms", search_opts.max_terms, "Largest support size (0 = all)");
  bool no_dedupe = false;
  search_cmd->add_flag("--no-dedupe", no_dedupe, "Visit permutation-equivalent supports too");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*analyze_cmd) return detail::cmd_analyze(common, out);
    if (*screen_cmd) return detail::cmd_screen(common, out);
    if (*enumerate_cmd) {
      return detail::cmd_enumerate(common.p, dim, common.json, out);
    }
    if (*verify_cmd) return detail::cmd_verify(common, suite, out);
    if (*search_cmd) {
      search_opts.mode = coeff == "random" ? CoefficientMode::random : CoefficientMode::unit;
      search_opts.dedupe_permutations = !no_dedupe;
      return detail::cmd_search(common, search_opts, out);
    }
  } catch (const NotIsolatedWithinBound& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotIsolated;
  } catch (const NoDecomposition& e) {
    err << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace eqm
