// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pga/pga.hpp"

using namespace pga;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::size_t internal_inconsistencies = 0;

std::vector<std::size_t> compose(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::vector<std::size_t> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& f) {
  std::vector<std::size_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = i;
  return out;
}

Datum gamma2_datum(const PartialAction& a) { return res(a, first_transversal(a.G(), a.G().objects().front())); }

Verdict criterion1() {
  const PartialAction a = fx_b2();
  const Report p = verify_partial_action(a, VerifyMode::All);
  const PartialAction theta = ext(res(a, hex_tau("l")));
  const auto w = leq_witness(a, theta);
  const bool below = leq(theta, a) && w && a.G().name(*w) == "h";
  const RecoverableSearch r = recoverable_witness(a);
  const bool none = !r.witness && r.pairs == 4 && r.failing == 4;
  return {p.ok() && below && none, "(P1)-(P4) " + p.describe() + "; Ext(Res) < alpha strictly at " +
                                       (w ? a.G().name(*w) : std::string("-")) + "; witness search " +
                                       std::to_string(r.failing) + "/" + std::to_string(r.pairs) + " pairs fail"};
}

Verdict criterion2() {
  const Datum d = fx_dat();
  const PartialAction theta = ext(d);
  const Groupoid& G = theta.G();
  const auto s = dat_sigma();
  const auto g = dat_gamma();
  const auto gi = inverse(g);
  const SplitRing& A = theta.A();
  // e = e1 + e3, sigma(e) = e2 + e3, e sigma(e) = e3.
  const Ideal e = A.ideal({"e1", "e3"});
  const Ideal es = e & PartialRingIso::from_permutation(s, A.all()).image(e);
  const Ideal ge = PartialRingIso::from_permutation(g, A.all()).image(e);
  const Ideal ges = PartialRingIso::from_permutation(g, A.all()).image(es);
  const std::vector<std::size_t> id{0, 1, 2, 3};
  const std::vector<std::pair<const char*, PartialRingIso>> expect{
      {"x", PartialRingIso::from_permutation(id, e)},
      {"y", PartialRingIso::from_permutation(id, ge)},
      {"g", PartialRingIso::from_permutation(s, es)},
      {"l", PartialRingIso::from_permutation(g, e)},
      {"m", PartialRingIso::from_permutation(compose(g, s), es)},
      {"h", PartialRingIso::from_permutation(compose(compose(g, s), gi), ges)},
      {"l^-1", PartialRingIso::from_permutation(gi, ge)},
      {"m^-1", PartialRingIso::from_permutation(compose(s, gi), ges)},
  };
  std::string bad;
  for (const auto& [name, f] : expect) {
    const Arrow a = G.at(name);
    if (theta.iso[a] != f || theta.ideal[a] != f.cod()) bad += std::string(bad.empty() ? "" : ",") + name;
  }
  return {bad.empty(), bad.empty() ? "all 8 arrows match the closed form as atom maps" : "mismatch at " + bad};
}

Verdict criterion3() {
  // As stated: J_x = J_y = A, so every beta_g is a total permutation of A.
  std::string literal;
  bool literal_ok = false;
  try {
    const GlobalizationData whole = fx_glob_whole_ring();
    const PartialAction beta = build_globalization(whole);
    literal_ok = verify_globalization(ext(whole.datum), whole.embed, beta).ok();
    literal = literal_ok ? "total-permutation package passes" : "total-permutation package fails (G1)-(G4)";
  } catch (const Error& e) {
    literal = std::string("total-permutation package rejected: ") + e.what();
  }
  // The package with J_x = <e1,e2,e3>, J_y = gamma(J_x).
  const GlobalizationData gd = fx_glob();
  const PartialAction beta = build_globalization(gd);
  const Groupoid& G = gd.datum.G();
  const auto s = dat_sigma();
  const auto g = dat_gamma();
  const Ideal Jx = gd.J[gd.datum.pos(G.at("x"))];
  const Ideal Jy = gd.J[gd.datum.pos(G.at("y"))];
  const bool maps = beta.iso[G.at("h")] == PartialRingIso::from_permutation(compose(compose(g, s), inverse(g)), Jy) &&
                    beta.iso[G.at("m")] == PartialRingIso::from_permutation(compose(g, s), Jx) &&
                    beta.iso[G.at("l")] == PartialRingIso::from_permutation(g, Jx);
  const bool verified = verify_globalization(ext(gd.datum), gd.embed, beta).ok();
  return {literal_ok, literal + "; with J_x = <e1,e2,e3>: beta_h, beta_m, beta_l " +
                          (maps ? "match on J" : "DIFFER") + ", (G1)-(G4) " + (verified ? "pass" : "fail")};
}

Verdict criterion4() {
  std::size_t count = 0, ext_bad = 0, round_bad = 0;
  for (const auto& G : {fx_hex(), fx_gamma2()}) {
    const Transversal t = first_transversal(*G, G->objects().front());
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, n));
      for (const DatumFilter f : {DatumFilter{}, DatumFilter{true, false}}) {
        for_each_datum(G, A, t, 400, [&](const Datum& d) {
          ++count;
          const PartialAction theta = ext(d);
          if (!verify_partial_action(theta).ok()) ++ext_bad;
          if (!(res(theta, d.tau, d.loops) == d)) ++round_bad;
        }, f);
      }
    }
  }
  return {count >= 500 && ext_bad == 0 && round_bad == 0,
          std::to_string(count) + " datums, ext failures " + std::to_string(ext_bad) + ", res(ext(d)) != d " +
              std::to_string(round_bad)};
}

Verdict criterion5() {
  const auto G = fx_hex();
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 4));
  std::vector<std::pair<Transversal, std::shared_ptr<const Subgroupoid>>> pairs;
  for (const Arrow x : G->objects()) {
    for (const Transversal& t : transversals(*G, x)) pairs.emplace_back(t, isotropy_ptr(*G, x));
  }
  std::size_t actions = 0, checks = 0, disagree = 0;
  const EnumStats st = for_each_partial_action(G, A, kDefaultCensusCap, [&](const PartialAction& a) {
    ++actions;
    for (const auto& [t, loops] : pairs) {
      const bool fixed = ext(res(a, t, loops)) == a;
      const bool strong = recover_condition_strong(a, t);
      const bool weak = recover_condition(a, t);
      ++checks;
      if (fixed != strong || strong != weak) ++disagree;
    }
  });
  return {disagree == 0, std::to_string(actions) + " actions" + (st.truncated ? " (truncated at cap)" : " (complete)") +
                             ", " + std::to_string(checks) + " (action, transversal) checks, " +
                             std::to_string(disagree) + " disagreements"};
}

Verdict criterion6() {
  const Datum d = fx_dat();
  const PartialAction theta = ext(d);
  const SkewAlgebra R = build_skew(theta);
  const Report assoc = assoc_check(R, VerifyMode::All);
  const Corners c = corners(R, d.base());
  const bool match = corner_matches_group_skew(R, c, build_skew(d.gamma_x), *d.loops);
  const MoritaContextReport m = skew_morita_check(R, c, VerifyMode::All);
  const bool pass = R.dim() == 12 && assoc.ok() && c.S.basis.size() == 3 && match && m.strict();
  return {pass, "dim " + std::to_string(R.dim()) + ", associativity on " + std::to_string(R.dim() * R.dim() * R.dim()) +
                    " triples " + assoc.describe() + ", dim 1_S R 1_S = " + std::to_string(c.S.basis.size()) +
                    (match ? " matching" : " NOT matching") + " the group skew ring, Morita " +
                    (m.strict() ? "strict" : "not strict")};
}

bool decomposition_identities(const Datum& d, std::string& why) {
  const TraceEquivalence t = prop_trace_equiv(d);
  if (!t.trace_transport || !t.trace_split || !t.iff_holds()) {
    why = t.failures.empty() ? "trace surjectivity differs" : t.failures.front();
    return false;
  }
  const PartialAction theta = ext(d);
  for (const RingElement& b : invariants(theta)) {
    if (reconstruct_invariant(d, invariant_decompose(d, b)) != b) {
      why = "decomposition of " + d.A().format(b);
      return false;
    }
  }
  for (const RingElement& bx : invariants(d.gamma_x, d.ideal(d.base()))) {
    if (invariant_decompose(d, reconstruct_invariant(d, bx)) != bx) {
      why = "reconstruction of " + d.A().format(bx);
      return false;
    }
  }
  return true;
}

Verdict criterion7() {
  const PartialAction a = fx_b2();
  const SplitRing& A = a.A();
  const auto el = [&](std::initializer_list<std::pair<const char*, std::uint32_t>> t) {
    RingElement r = A.zero();
    for (const auto& [n, c] : t) r.coeffs[A.atom(n)] = c;
    return r;
  };
  const auto inv = invariants(a);
  const bool basis = inv.size() == 4 && detail::spans_equal(A, inv, {el({{"e1", 1}}), el({{"e2", 1}, {"e4", 1}}),
                                                                    el({{"e3", 1}, {"e5", 1}}), el({{"e6", 1}})});
  const bool traces = trace(a, el({{"e1", 1}})) == el({{"e1", 2}}) &&
                      trace(a, el({{"e2", 1}})) == el({{"e2", 1}, {"e4", 1}});
  const bool onto = trace_onto(a);
  std::string why;
  const bool dec_dat = decomposition_identities(fx_dat(), why);
  const bool dec_gam = dec_dat && decomposition_identities(gamma2_datum(fx_gamma()), why);
  return {basis && traces && onto && dec_dat && dec_gam,
          std::string("invariants dim ") + std::to_string(inv.size()) + (basis ? " with the stated basis" : " WRONG basis") +
              ", t(e1), t(e2) " + (traces ? "as stated" : "WRONG") + ", trace " + (onto ? "onto" : "not onto") +
              ", trace and decomposition identities " + (dec_dat && dec_gam ? "hold" : "fail: " + why)};
}

Verdict criterion8() {
  std::size_t reports = 0, disagree = 0;
  const auto check = [&](const Datum& d) {
    try {
      equivalence_report(d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalInconsistency) throw;
      ++internal_inconsistencies;
      ++disagree;
    }
    ++reports;
  };
  check(gamma2_datum(fx_gamma()));
  check(fx_dat());
  const Groupoid& G = *fx_hex();
  for (const std::uint32_t p : {2U, 3U}) {
    for (const std::size_t n : {2U, 4U}) {
      const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, n));
      for (const Transversal& t : transversals(G, G.at("x"))) {
        for_each_datum(fx_hex(), A, t, kDefaultCensusCap, [&](const Datum& d) { check(d); },
                       DatumFilter{true, true});
      }
    }
  }
  const PartialAction gam = fx_gamma();
  GaloisCertificate stated;
  for (std::size_t t = 0; t < gam.A().size(); ++t) stated.pairs.emplace_back(gam.A().basis(t), gam.A().basis(t));
  const auto solved = galois_coordinates(build_skew(gam));
  const bool cert = gam.G().size() == 8 && verify_certificate(gam, stated).empty() && solved &&
                    verify_certificate(gam, *solved).empty();
  return {disagree == 0 && cert && internal_inconsistencies == 0,
          std::to_string(reports) + " four-way reports, " + std::to_string(disagree) +
              " disagreements; FX-GAMMA certificate " + (cert ? "verified at all 8 arrows" : "NOT verified") +
              "; InternalInconsistency count " + std::to_string(internal_inconsistencies)};
}

Verdict criterion9() {
  std::vector<Datum> ds{fx_dat(), res(fx_b2(), hex_tau("l")), res(fx_b2(), hex_tau("m")),
                        gamma2_datum(fx_gamma()), fx_glob().datum, full_identity_datum()};
  const std::size_t fixtures = ds.size();
  const auto A3 = std::make_shared<const SplitRing>(SplitRing::numbered(3, 3));
  for (const Datum& d : sample_datums(fx_hex(), A3, hex_tau("l"), 50, 7)) ds.push_back(d);
  const auto G2 = fx_gamma2();
  for (const Datum& d : sample_datums(G2, A3, first_transversal(*G2, G2->objects().front()), 50, 11)) ds.push_back(d);
  std::size_t trips = 0, bad = 0;
  for (const Datum& d : ds) {
    const Groupoid& G = d.G();
    for (const Arrow y : G.objects()) {
      if (y == d.base()) continue;
      const Datum there = transport_datum(d, first_transversal(G, y));
      ++trips;
      if (!verify_datum(there).ok() || !(transport_datum(there, d.tau) == d)) ++bad;
    }
  }
  return {bad == 0 && ds.size() == fixtures + 100,
          std::to_string(fixtures) + " fixtures + " + std::to_string(ds.size() - fixtures) + " random datums, " +
              std::to_string(trips) + " round trips, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"non-recoverable action", criterion1}, {"closed form of Ext", criterion2},
      {"globalization package", criterion3},  {"Ext/Res property suite", criterion4},
      {"recoverability conditions", criterion5}, {"skew ring and corners", criterion6},
      {"trace and invariants", criterion7},   {"four-way equivalence", criterion8},
      {"datum transport", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      if (const auto* err = dynamic_cast<const Error*>(&e); err && err->kind() == ErrorKind::InternalInconsistency) {
        ++internal_inconsistencies;
      }
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %s [%s] %s (%.2fs)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str(), secs);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
