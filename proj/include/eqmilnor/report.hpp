#pragma once

// Machine-readable (JSON) and plain-text renderings of analysis results.
// Every number is an integer; rationals appear only inside polynomial strings.

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "repn.hpp"
#include "theorem.hpp"

namespace eqm {

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
  unsigned p = 0;
  std::vector<unsigned> weights;
  std::string polynomial;
  std::size_t mu = 0;
  unsigned long nu = 0;
  unsigned certificate_degree = 0;
  std::vector<std::string> basis;
  std::vector<unsigned long> character;
  ABDecomposition ab;
  bool stable = false;
  ScreeningVerdict screening;
  VerificationReport checks;
};

/// Runs the whole single-germ pipeline. NoDecomposition and engine errors propagate.
inline AnalysisReport analyze(const Polynomial& f, const CyclicAction& tau,
                              unsigned d_max = kDefaultDegreeBound) {
  const auto eq = analyze_equivariant(f, tau, d_max);
  AnalysisReport r;
  r.p = tau.p();
  r.weights = tau.weights();
  r.polynomial = to_string(f);
  r.mu = eq.milnor.mu();
  r.nu = eq.nu();
  r.certificate_degree = eq.milnor.certificate_degree();
  for (const auto& m : eq.milnor.basis()) r.basis.push_back(to_string(m));
  r.character = eq.character.multiplicities;
  r.ab = ab_decomposition(eq.character, tau);
  r.stable = r.nu == 1;
  r.screening = screen_representation(tau);

  const auto mu = static_cast<long long>(r.mu);
  r.checks.add("character_sum", mu, static_cast<long long>(eq.character.total()),
               eq.character.total() == r.mu);
  const auto from_ab = static_cast<long long>(mu_from_ab(r.ab.a, r.ab.b, tau.p()));
  r.checks.add("ab_mu", mu, from_ab, from_ab == mu);
  if (r.stable) {
    const auto allowed = stable_mu_values(tau);
    bool ok = std::find(allowed.begin(), allowed.end(), r.mu) != allowed.end();
    r.checks.add("stable_mu_allowed", 1, ok ? 1 : 0, ok,
                 "mu=" + std::to_string(r.mu) + " in {" + std::to_string(allowed[0]) + "," +
                     std::to_string(allowed[1]) + "}");
  }
  return r;
}

inline nlohmann::json to_json(const ScreeningVerdict& v) {
  return {{"case_tag", to_string(v.case_tag)}, {"det_weight", v.det_weight},
          {"rank", v.rank},                    {"corank", v.corank},
          {"power", v.power},                  {"threshold", v.threshold},
          {"passes", v.passes},
          {"verdict", v.passes ? "may_admit" : "cannot_admit_simple"}};
}

inline nlohmann::json to_json(const Check& c) {
  return {{"name", c.name},         {"status", to_string(c.status)}, {"expected", c.expected},
          {"computed", c.computed}, {"detail", c.detail}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  auto arr = nlohmann::json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c));
  return arr;
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  return {{"schema_version", kSchemaVersion},
          {"p", r.p},
          {"weights", r.weights},
          {"polynomial", r.polynomial},
          {"mu", r.mu},
          {"nu", r.nu},
          {"certificate_degree", r.certificate_degree},
          {"basis", r.basis},
          {"character", r.character},
          {"ab",
           {{"a", r.ab.a},
            {"b", r.ab.b},
            {"w0", r.ab.w0},
            {"convention_flip", r.ab.convention_flip},
            {"convention_determined", r.ab.convention_determined}}},
          {"stable", r.stable},
          {"screening", to_json(r.screening)},
          {"checks", to_json(r.checks)}};
}

namespace detail {

inline std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <class Int>
std::string join_ints(const std::vector<Int>& items, const char* sep = ",") {
  std::vector<std::string> s;
  for (auto v : items) s.push_back(std::to_string(v));
  return join(s, sep);
}

}  // namespace detail

inline std::string screening_line(const ScreeningVerdict& v) {
  std::ostringstream os;
  os << to_string(v.case_tag) << " rank=" << v.rank << " corank=" << v.corank << " 2^" << v.corank
     << "=" << v.power << (v.passes ? " <= " : " > ") << v.threshold << " "
     << (v.passes ? "passes (may admit simple germs)" : "fails (cannot admit simple germs)");
  return os.str();
}

inline std::string check_line(const Check& c) {
  std::ostringstream os;
  os << c.name << ": ";
  if (c.status == CheckStatus::skipped) {
    os << "skipped (precondition)";
  } else {
    os << to_string(c.status) << " (expected " << c.expected << ", computed " << c.computed << ")";
  }
  if (!c.detail.empty()) os << " " << c.detail;
  return os.str();
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "p: " << r.p << "\n"
     << "weights: " << detail::join_ints(r.weights) << "\n"
     << "polynomial: " << r.polynomial << "\n"
     << "mu: " << r.mu << "\n"
     << "nu: " << r.nu << "\n"
     << "certificate_degree: " << r.certificate_degree << "\n"
     << "basis: " << detail::join(r.basis, ", ") << "\n"
     << "character: [" << detail::join_ints(r.character) << "]\n"
     << "ab: a=" << r.ab.a << " b=" << r.ab.b << " w0=" << r.ab.w0
     << " convention_flip=" << (r.ab.convention_flip ? "true" : "false") << "\n"
     << "stable: " << (r.stable ? "true" : "false") << "\n"
     << "screening: " << screening_line(r.screening) << "\n";
  for (const auto& c : r.checks.checks) os << "check " << check_line(c) << "\n";
  return os.str();
}

}  // namespace eqm
