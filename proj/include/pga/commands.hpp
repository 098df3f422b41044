#pragma once

// Command dispatcher behind the pga tool. Every command turns a scenario into
// a report with text lines, a JSON body and an exit code: 0 when the query
// ran and nothing failed, 1 on a mathematical failure, 2 on bad input.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pga/claims.hpp"
#include "pga/datum.hpp"
#include "pga/enumerate.hpp"
#include "pga/error.hpp"
#include "pga/galois.hpp"
#include "pga/globalization.hpp"
#include "pga/partial_action.hpp"
#include "pga/scenario.hpp"
#include "pga/skew_algebra.hpp"

namespace pga {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "pga-report/1";

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify",     "res",    "ext",    "recoverable", "globalize",
                                              "skew",       "invariants", "trace", "galois",   "morita",
                                              "equivalence", "census", "all-fixtures"};
  return names;
}

struct RunOptions {
  bool all_transversals = false;
  std::size_t max_census = kDefaultCensusCap;
  std::optional<std::size_t> census_atoms;  // replaces the scenario ring for census
};

struct Outcome {
  std::string command;
  std::string input;
  int exit_code = 0;
  std::vector<std::string> lines;
  Json result = Json::object();

  std::string status() const { return exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "error"; }
};

/// Input that the command cannot use; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json atoms_json(const SplitRing& A, Ideal I) {
  Json j = Json::array();
  I.for_each([&](std::size_t a) { j.push_back(A.atom_name(a)); });
  return j;
}

inline Json map_json(const SplitRing& A, const PartialRingIso& f) {
  Json j = Json::object();
  for (const auto& [a, b] : f.pairs()) j[A.atom_name(a)] = A.atom_name(b);
  return j;
}

inline Json action_json(const PartialAction& a) {
  Json j = Json::object();
  for (Arrow g = 0; g < a.G().size(); ++g) {
    j[a.G().name(g)] = Json{{"ideal", atoms_json(a.A(), a.ideal[g])}, {"map", map_json(a.A(), a.iso[g])}};
  }
  return j;
}

inline Json datum_json(const Datum& d) {
  const Groupoid& G = d.G();
  Json tau = Json::object(), ideals = Json::object(), gamma = Json::object(), loops = Json::object();
  for (const Arrow y : G.objects()) {
    tau[G.name(y)] = G.name(d.tau.at(y));
    ideals[G.name(y)] = atoms_json(d.A(), d.ideal(y));
    gamma[G.name(y)] = map_json(d.A(), d.gamma(y));
  }
  for (Arrow j = 0; j < d.loops->groupoid.size(); ++j) {
    loops[G.name(d.loops->to_parent[j])] = map_json(d.A(), d.gamma_x.iso[j]);
  }
  return Json{{"base", G.name(d.base())}, {"tau", tau}, {"ideals", ideals}, {"gamma", gamma}, {"loops", loops}};
}

inline Json report_json(const Report& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"rule", x.rule}, {"witness", x.witness}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", v}};
}

inline std::string tau_text(const Groupoid& G, const Transversal& t) {
  std::string s = "base " + G.name(t.base);
  for (const Arrow y : G.objects()) {
    if (y != t.base) s += ", tau_" + G.name(y) + " = " + G.name(t.at(y));
  }
  return s;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline void add_stanza(Outcome& o, const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    o.lines.push_back("  " + text.substr(pos, eol - pos));
    pos = eol + 1;
  }
}

inline const PartialAction& action_of(const Scenario& s, std::optional<PartialAction>& holder) {
  if (s.action) return *s.action;
  if (s.datum) {
    holder = ext(*s.datum);
    return *holder;
  }
  throw UsageError("needs an action or datum stanza");
}

/// The datum of the scenario, or Res of its action at the first transversal
/// of the first object; with all_transversals, Res at every base and
/// transversal.
inline std::vector<Datum> datums_of(const Scenario& s, const RunOptions& opt) {
  if (s.datum && !opt.all_transversals) return {*s.datum};
  std::optional<PartialAction> holder;
  const PartialAction& a = action_of(s, holder);
  const Groupoid& G = a.G();
  if (!G.connected()) throw UsageError("needs a connected groupoid");
  std::vector<Datum> out;
  for (const Arrow x : G.objects()) {
    for (const Transversal& t : transversals(G, x)) {
      out.push_back(res(a, t));
      if (!opt.all_transversals) return out;
    }
  }
  return out;
}

inline void cmd_verify(const Scenario& s, Outcome& o) {
  const Groupoid& G = *s.groupoid;
  bool ok = true;
  o.lines.push_back("groupoid: pass (" + std::to_string(G.objects().size()) + " objects, " + std::to_string(G.size()) +
                    " arrows)");
  o.result["groupoid"] = Json{{"ok", true}, {"objects", G.objects().size()}, {"arrows", G.size()}};
  if (s.action) {
    const Report r = verify_partial_action(*s.action, VerifyMode::All);
    ok = ok && r.ok();
    o.lines.push_back("action: " + r.describe());
    o.result["action"] = report_json(r);
  }
  if (s.datum) {
    const Report r = verify_datum(*s.datum, VerifyMode::All);
    ok = ok && r.ok();
    o.lines.push_back("datum: " + r.describe());
    o.result["datum"] = report_json(r);
  }
  if (s.globalization) {
    const GlobalizationData& gd = *s.globalization;
    try {
      const PartialAction beta = build_globalization(gd);
      const Report r = verify_globalization(ext(gd.datum), gd.embed, beta, VerifyMode::All);
      ok = ok && r.ok();
      o.lines.push_back("globalization: " + r.describe());
      o.result["globalization"] = report_json(r);
    } catch (const Error& e) {
      ok = false;
      o.lines.push_back(std::string("globalization: ") + e.what());
      o.result["globalization"] = Json{{"ok", false}, {"error", e.what()}};
    }
  }
  o.exit_code = ok ? 0 : 1;
}

inline void cmd_res(const Scenario& s, const RunOptions& opt, Outcome& o) {
  if (!s.action) throw UsageError("res needs an action stanza");
  bool ok = true;
  Json list = Json::array();
  for (const Datum& d : datums_of(Scenario{s.groupoid, s.ring, s.action, {}, {}, {}}, opt)) {
    const Report r = verify_datum(d);
    ok = ok && r.ok();
    o.lines.push_back(tau_text(d.G(), d.tau) + ": datum " + r.describe());
    add_stanza(o, datum_stanza(d));
    list.push_back(Json{{"datum", datum_json(d)}, {"verify", report_json(r)}});
  }
  o.result["datums"] = list;
  o.exit_code = ok ? 0 : 1;
}

inline void cmd_ext(const Scenario& s, Outcome& o) {
  if (!s.datum) throw UsageError("ext needs a datum stanza");
  const PartialAction theta = ext(*s.datum);
  const Report r = verify_partial_action(theta, VerifyMode::All);
  const bool back = res(theta, s.datum->tau, s.datum->loops) == *s.datum;
  o.lines.push_back("ext: (P1)-(P4) " + r.describe());
  o.lines.push_back("res(ext(d)) = d: " + yes(back));
  add_stanza(o, action_stanza(theta));
  o.result["action"] = action_json(theta);
  o.result["verify"] = report_json(r);
  o.result["res_ext_identity"] = back;
  o.exit_code = r.ok() && back ? 0 : 1;
}

inline void cmd_recoverable(const Scenario& s, Outcome& o) {
  std::optional<PartialAction> holder;
  const RecoverableSearch r = recoverable_witness(action_of(s, holder));
  const std::string tally =
      std::to_string(r.failing) + "/" + std::to_string(r.pairs) + " (base,transversal) pairs fail";
  if (r.witness) {
    o.lines.push_back("recoverable at " + tau_text(*s.groupoid, *r.witness) + "; " + tally);
  } else {
    o.lines.push_back("not recoverable; " + tally);
  }
  o.result["recoverable"] = r.witness.has_value();
  o.result["pairs"] = r.pairs;
  o.result["failing"] = r.failing;
  o.result["witness"] = r.witness ? Json(tau_text(*s.groupoid, *r.witness)) : Json(nullptr);
}

inline void cmd_globalize(const Scenario& s, const RunOptions& opt, Outcome& o) {
  std::vector<GlobalizationData> packages;
  if (s.globalization) {
    packages.push_back(*s.globalization);
  } else {
    for (const Datum& d : datums_of(s, opt)) packages.push_back(synthesize_globalization(d));
  }
  bool ok = true;
  Json list = Json::array();
  for (const GlobalizationData& gd : packages) {
    const std::string where = tau_text(gd.datum.G(), gd.datum.tau);
    try {
      const PartialAction beta = build_globalization(gd);
      const Report r = verify_globalization(ext(gd.datum), gd.embed, beta, VerifyMode::All);
      ok = ok && r.ok();
      o.lines.push_back(where + ": (G1)-(G4) " + r.describe() + ", B has " + std::to_string(gd.B->size()) + " atoms");
      add_stanza(o, action_stanza(beta));
      list.push_back(Json{{"datum", where}, {"B", gd.B->atoms()}, {"beta", action_json(beta)}, {"verify", report_json(r)}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::C1Violation && e.kind() != ErrorKind::C2Violation &&
          e.kind() != ErrorKind::C3Violation) {
        throw;
      }
      ok = false;
      o.lines.push_back(where + ": " + e.what());
      list.push_back(Json{{"datum", where}, {"error", e.what()}});
    }
  }
  o.result["globalizations"] = list;
  o.exit_code = ok ? 0 : 1;
}

inline void cmd_skew(const Scenario& s, Outcome& o) {
  std::optional<PartialAction> holder;
  const PartialAction& theta = action_of(s, holder);
  const SkewAlgebra R = build_skew(theta);
  const Report unit = unit_check(R);
  const Report assoc = assoc_check(R);
  o.lines.push_back("dim " + std::to_string(R.dim()));
  o.lines.push_back("unit: " + unit.describe());
  o.lines.push_back("associativity: " + assoc.describe());
  Json objects = Json::object();
  bool ok = unit.ok() && assoc.ok();
  for (const Arrow x : theta.G().objects()) {
    const Corners c = corners(R, x);
    const MoritaContextReport m = skew_morita_check(R, c);
    ok = ok && m.associativity.ok();
    o.lines.push_back("object " + theta.G().name(x) + ": dim U " + std::to_string(c.U.basis.size()) + ", dim V " +
                      std::to_string(c.V.basis.size()) + ", dim S' " + std::to_string(c.S.basis.size()) +
                      ", mu image " + std::to_string(m.mu_image) + "/" + std::to_string(m.dim_R) + ", nu image " +
                      std::to_string(m.nu_image) + "/" + std::to_string(m.dim_S) +
                      ", strict: " + yes(m.strict()));
    objects[theta.G().name(x)] = Json{{"U", c.U.basis.size()},
                                      {"V", c.V.basis.size()},
                                      {"S", c.S.basis.size()},
                                      {"closed_forms", c.U_closed_form && c.V_closed_form && c.S_closed_form},
                                      {"R1SR_is_R", c.R1SR_is_R},
                                      {"mu_image", m.mu_image},
                                      {"nu_image", m.nu_image},
                                      {"context_associative", m.associativity.ok()},
                                      {"strict", m.strict()}};
  }
  o.result["dim"] = R.dim();
  o.result["unit"] = report_json(unit);
  o.result["associativity"] = report_json(assoc);
  o.result["corners"] = objects;
  o.exit_code = ok ? 0 : 1;
}

inline void cmd_invariants(const Scenario& s, Outcome& o) {
  std::optional<PartialAction> holder;
  const PartialAction& theta = action_of(s, holder);
  const auto basis = invariants(theta);
  Json b = Json::array();
  o.lines.push_back("dim " + std::to_string(basis.size()));
  for (const RingElement& e : basis) {
    o.lines.push_back("  " + theta.A().format(e));
    b.push_back(theta.A().format(e));
  }
  o.result["dim"] = basis.size();
  o.result["basis"] = b;
}

inline void cmd_trace(const Scenario& s, Outcome& o) {
  std::optional<PartialAction> holder;
  const PartialAction& theta = action_of(s, holder);
  const SplitRing& A = theta.A();
  Json values = Json::object();
  bool invariant = true;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const RingElement t = trace(theta, A.basis(a));
    invariant = invariant && is_invariant(theta, t);
    o.lines.push_back("t(" + A.atom_name(a) + ") = " + A.format(t));
    values[A.atom_name(a)] = A.format(t);
  }
  const bool onto = trace_onto(theta);
  o.lines.push_back("onto the invariants: " + yes(onto));
  o.result["trace"] = values;
  o.result["onto"] = onto;
  o.result["lands_in_invariants"] = invariant;
  o.exit_code = invariant ? 0 : 1;
}

inline void cmd_galois(const Scenario& s, Outcome& o) {
  std::optional<PartialAction> holder;
  const PartialAction& theta = action_of(s, holder);
  const SkewAlgebra R = build_skew(theta);
  const auto cert = galois_coordinates(R);
  const bool onto = trace_onto(theta);
  if (!cert) {
    o.lines.push_back("no Galois coordinates: 1_R is outside the image of Gamma'");
    o.lines.push_back("trace onto: " + yes(onto));
    o.result["galois"] = false;
    o.result["trace_onto"] = onto;
    return;
  }
  const auto bad = verify_certificate(theta, *cert);
  const SplitRing& A = theta.A();
  Json pairs = Json::array();
  o.lines.push_back("Galois coordinates (" + std::to_string(cert->pairs.size()) + " pairs):");
  for (const auto& [a, b] : cert->pairs) {
    o.lines.push_back("  (" + A.format(a) + ", " + A.format(b) + ")");
    pairs.push_back(Json::array({A.format(a), A.format(b)}));
  }
  o.lines.push_back("checked at " + std::to_string(theta.G().size()) + " arrows: " +
                    (bad.empty() ? std::string("pass") : "fail at " + bad.front()));
  o.lines.push_back("trace onto: " + yes(onto));
  o.result["galois"] = bad.empty();
  o.result["certificate"] = pairs;
  o.result["failing_arrows"] = bad;
  o.result["trace_onto"] = onto;
  o.exit_code = bad.empty() ? 0 : 1;
}

inline Json strictness_json(const ContextStrictness& c) {
  return Json{{"invariant_dim", c.invariant_dim}, {"gamma_image", c.gamma_image},
              {"skew_dim", c.skew_dim},           {"gamma_prime_image", c.gamma_prime_image},
              {"strict", c.strict()}};
}

inline std::string strictness_text(const ContextStrictness& c) {
  return "Gamma " + std::to_string(c.gamma_image) + "/" + std::to_string(c.invariant_dim) + ", Gamma' " +
         std::to_string(c.gamma_prime_image) + "/" + std::to_string(c.skew_dim) + ", strict: " + yes(c.strict());
}

inline void cmd_morita(const Scenario& s, const RunOptions& opt, Outcome& o) {
  bool ok = true;
  Json list = Json::array();
  for (const Datum& d : datums_of(s, opt)) {
    const MoritaStrictness m = morita_strictness(d);
    ok = ok && m.agree();
    o.lines.push_back(tau_text(d.G(), d.tau) + ":");
    o.lines.push_back("  groupoid context: " + strictness_text(m.groupoid));
    o.lines.push_back("  group context:    " + strictness_text(m.group));
    o.lines.push_back("  agree: " + yes(m.agree()));
    list.push_back(Json{{"datum", tau_text(d.G(), d.tau)},
                        {"groupoid", strictness_json(m.groupoid)},
                        {"group", strictness_json(m.group)},
                        {"agree", m.agree()}});
  }
  o.result["contexts"] = list;
  o.exit_code = ok ? 0 : 1;
}

inline std::string four_way(const EquivalenceReport& e) {
  const auto b = [](bool v) { return v ? "T" : "F"; };
  return std::string("(") + b(e.galois_and_trace) + "," + b(e.groupoid_context_strict) + "," +
         b(e.group_context_strict) + "," + b(e.group_galois_and_trace) + ")";
}

inline void cmd_equivalence(const Scenario& s, const RunOptions& opt, Outcome& o) {
  bool ok = true;
  Json list = Json::array();
  for (const Datum& d : datums_of(s, opt)) {
    const EquivalenceReport e = compute_equivalence(d);
    ok = ok && e.agree();
    o.lines.push_back(tau_text(d.G(), d.tau) + ": " + four_way(e) + (e.agree() ? " agree" : " DISAGREE"));
    list.push_back(Json{{"datum", tau_text(d.G(), d.tau)},
                        {"galois_and_trace", e.galois_and_trace},
                        {"groupoid_context_strict", e.groupoid_context_strict},
                        {"group_context_strict", e.group_context_strict},
                        {"group_galois_and_trace", e.group_galois_and_trace},
                        {"agree", e.agree()}});
  }
  o.result["reports"] = list;
  o.exit_code = ok ? 0 : 1;
}

inline bool meets_hypotheses(const Datum& d) {
  try {
    check_hypotheses(d);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HypothesesNotMet) return false;
    throw;
  }
  return true;
}

struct CensusTally {
  std::size_t candidates = 0;
  std::size_t datums = 0;
  bool truncated = false;
  std::size_t ext_fail = 0;       // ext(d) fails (P1)-(P4)
  std::size_t roundtrip_fail = 0;  // res(ext(d)) != d
  std::size_t gd = 0;
  std::size_t hypotheses = 0;
  std::map<std::string, std::size_t> patterns;  // four-way report -> count
  std::size_t disagreements = 0;
};

inline void cmd_census(const Scenario& s, const RunOptions& opt, Outcome& o) {
  const Groupoid& G = *s.groupoid;
  if (!G.connected()) throw UsageError("census needs a connected groupoid");
  RingPtr A = s.ring;
  if (opt.census_atoms) A = std::make_shared<const SplitRing>(SplitRing::numbered(s.ring->p(), *opt.census_atoms));
  std::vector<Transversal> taus;
  for (const Arrow x : G.objects()) {
    for (const Transversal& t : transversals(G, x)) {
      taus.push_back(t);
      if (!opt.all_transversals) break;
    }
    if (!opt.all_transversals) break;
  }
  CensusTally c;
  Json per = Json::array();
  for (const Transversal& t : taus) {
    if (c.candidates >= opt.max_census) {
      c.truncated = true;
      break;
    }
    const EnumStats st = for_each_datum(s.groupoid, A, t, opt.max_census - c.candidates, [&](const Datum& d) {
      const PartialAction theta = ext(d);
      if (!verify_partial_action(theta).ok()) ++c.ext_fail;
      if (!(res(theta, d.tau, d.loops) == d)) ++c.roundtrip_fail;
      if (is_gd(d)) ++c.gd;
      if (!meets_hypotheses(d)) return;
      ++c.hypotheses;
      const EquivalenceReport e = compute_equivalence(d);
      ++c.patterns[four_way(e)];
      if (!e.agree()) ++c.disagreements;
    });
    c.candidates += st.candidates;
    c.datums += st.emitted;
    c.truncated = c.truncated || st.truncated;
    per.push_back(Json{{"transversal", tau_text(G, t)}, {"candidates", st.candidates}, {"datums", st.emitted}});
  }
  o.lines.push_back("ring F_" + std::to_string(A->p()) + "^" + std::to_string(A->size()) + ", " +
                    std::to_string(taus.size()) + " transversal(s), cap " + std::to_string(opt.max_census));
  o.lines.push_back("candidates " + std::to_string(c.candidates) + ", datums " + std::to_string(c.datums) +
                    (c.truncated ? ", TRUNCATED at the cap" : ", complete"));
  o.lines.push_back("ext fails (P1)-(P4): " + std::to_string(c.ext_fail));
  o.lines.push_back("res(ext(d)) != d: " + std::to_string(c.roundtrip_fail));
  o.lines.push_back("in GD: " + std::to_string(c.gd));
  o.lines.push_back("meeting the Galois hypotheses: " + std::to_string(c.hypotheses));
  Json patterns = Json::object();
  for (const auto& [k, v] : c.patterns) {
    o.lines.push_back("  " + k + ": " + std::to_string(v));
    patterns[k] = v;
  }
  o.lines.push_back("four-way disagreements: " + std::to_string(c.disagreements));
  o.result = Json{{"p", A->p()},
                  {"atoms", A->size()},
                  {"cap", opt.max_census},
                  {"per_transversal", per},
                  {"candidates", c.candidates},
                  {"datums", c.datums},
                  {"truncated", c.truncated},
                  {"ext_failures", c.ext_fail},
                  {"roundtrip_failures", c.roundtrip_fail},
                  {"gd", c.gd},
                  {"hypotheses", c.hypotheses},
                  {"four_way", patterns},
                  {"disagreements", c.disagreements}};
  o.exit_code = c.ext_fail == 0 && c.roundtrip_fail == 0 && c.disagreements == 0 ? 0 : 1;
}

inline void cmd_all_fixtures(Outcome& o) {
  const auto results = run_claims(fixture_claims());
  std::size_t passed = 0;
  Json list = Json::array();
  for (const ClaimResult& r : results) {
    passed += r.passed;
    std::string line = std::string(r.passed ? "[pass] " : "[FAIL] ") + r.fixture + ": " + r.statement;
    if (r.corrected) line += " (corrected: " + r.note + ")";
    if (!r.error.empty()) line += " [" + r.error + "]";
    o.lines.push_back(line);
    list.push_back(Json{{"fixture", r.fixture},
                        {"statement", r.statement},
                        {"passed", r.passed},
                        {"corrected", r.corrected},
                        {"note", r.note},
                        {"error", r.error}});
  }
  o.lines.push_back(std::to_string(passed) + "/" + std::to_string(results.size()) + " claims hold");
  o.result["claims"] = list;
  o.result["passed"] = passed;
  o.result["total"] = results.size();
  o.exit_code = passed == results.size() ? 0 : 1;
}

inline bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnresolvedReference:
    case ErrorKind::UnknownObject:
    case ErrorKind::EmptyObjectSet:
    case ErrorKind::NotConnected:
    case ErrorKind::InvalidRing:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::HypothesesNotMet:
    case ErrorKind::RingNotDirectSum:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Runs `command` on the scenario; `s` may be null only for all-fixtures.
inline Outcome run_command(const std::string& command, const Scenario* s, const std::string& input,
                           const RunOptions& opt = {}) {
  Outcome o{command, input, 0, {}, Json::object()};
  try {
    if (command == "all-fixtures") {
      detail::cmd_all_fixtures(o);
      return o;
    }
    if (!s) throw UsageError("command '" + command + "' needs --fixture or --file");
    if (command == "verify") {
      detail::cmd_verify(*s, o);
    } else if (command == "res") {
      detail::cmd_res(*s, opt, o);
    } else if (command == "ext") {
      detail::cmd_ext(*s, o);
    } else if (command == "recoverable") {
      detail::cmd_recoverable(*s, o);
    } else if (command == "globalize") {
      detail::cmd_globalize(*s, opt, o);
    } else if (command == "skew") {
      detail::cmd_skew(*s, o);
    } else if (command == "invariants") {
      detail::cmd_invariants(*s, o);
    } else if (command == "trace") {
      detail::cmd_trace(*s, o);
    } else if (command == "galois") {
      detail::cmd_galois(*s, o);
    } else if (command == "morita") {
      detail::cmd_morita(*s, opt, o);
    } else if (command == "equivalence") {
      detail::cmd_equivalence(*s, opt, o);
    } else if (command == "census") {
      detail::cmd_census(*s, opt, o);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  } catch (const UsageError& e) {
    o = Outcome{command, input, 2, {std::string("error: ") + e.what()}, Json{{"error", e.what()}}};
  } catch (const Error& e) {
    const int code = detail::input_error(e.kind()) ? 2 : 1;
    o = Outcome{command, input, code, {std::string("error: ") + e.what()},
                Json{{"error", e.what()}, {"kind", std::string(to_string(e.kind()))}, {"witness", e.witness()}}};
  }
  return o;
}

/// Runs each command listed in the scenario's `check` lines, in order.
inline std::vector<Outcome> run_checks(const Scenario& s, const std::string& input, const RunOptions& opt = {}) {
  std::vector<Outcome> out;
  for (const auto& c : s.checks) out.push_back(run_command(c, &s, input, opt));
  return out;
}

inline std::string render_text(const Outcome& o) {
  std::string out = o.command + " " + o.input + "\n";
  for (const auto& l : o.lines) out += l + "\n";
  return out + "status: " + o.status() + "\n";
}

inline std::string render_json(const Outcome& o) {
  const Json j{{"schema", kReportSchema},
               {"command", o.command},
               {"input", o.input},
               {"status", o.status()},
               {"exit_code", o.exit_code},
               {"result", o.result}};
  return j.dump(2) + "\n";
}

}  // namespace pga
