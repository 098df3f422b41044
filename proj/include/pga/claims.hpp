#pragma once

// Documented properties of the built-in fixtures as executable predicates.
// A claim marked `corrected` replaces a documented statement that does not
// hold; `note` says what was claimed and what holds instead.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pga/datum.hpp"
#include "pga/error.hpp"
#include "pga/fixtures.hpp"
#include "pga/galois.hpp"
#include "pga/globalization.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/skew_algebra.hpp"

namespace pga {

struct Claim {
  std::string fixture;
  std::string statement;
  std::function<bool()> holds;
  bool corrected = false;
  std::string note;
};

struct ClaimResult {
  std::string fixture;
  std::string statement;
  bool passed = false;
  bool corrected = false;
  std::string note;
  std::string error;  // exception text when evaluation threw
};

namespace detail {

inline RingElement combo(const SplitRing& A, std::initializer_list<std::pair<const char*, std::uint32_t>> terms) {
  RingElement r = A.zero();
  for (const auto& [atom, c] : terms) r += A.basis(A.atom(atom)).scaled(c);
  return r;
}

template <class F>
bool throws_kind(ErrorKind kind, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace detail

/// Claims over the p = 3 fixtures.
inline std::vector<Claim> fixture_claims() {
  using detail::combo;
  using detail::pairs_by_name;
  std::vector<Claim> c;
  const auto add = [&](std::string fx, std::string st, std::function<bool()> f) {
    c.push_back({std::move(fx), std::move(st), std::move(f), false, {}});
  };
  const auto fixed = [&](std::string fx, std::string st, std::string note, std::function<bool()> f) {
    c.push_back({std::move(fx), std::move(st), std::move(f), true, std::move(note)});
  };

  // FX-HEX
  add("FX-HEX", "valid groupoid with 2 objects and 8 arrows", [] {
    return fx_hex()->objects().size() == 2 && fx_hex()->size() == 8;
  });
  add("FX-HEX", "lg = m = hl, g^2 = x, h^2 = y", [] {
    const Groupoid& G = *fx_hex();
    return G.compose(G.at("l"), G.at("g")) == G.at("m") && G.compose(G.at("h"), G.at("l")) == G.at("m") &&
           G.compose(G.at("g"), G.at("g")) == G.at("x") && G.compose(G.at("h"), G.at("h")) == G.at("y");
  });
  add("FX-HEX", "redefining lg as l gives NonAssociative", [] {
    RawGroupoid raw = hex_raw();
    for (auto& p : raw.products) {
      if (p.left == "l" && p.right == "g") p.result = "l";
    }
    return detail::throws_kind(ErrorKind::NonAssociative, [&] { validate_groupoid(raw); });
  });
  add("FX-HEX", "one connected component {x, y}", [] {
    const auto comps = connected_components(*fx_hex());
    return comps.size() == 1 && comps[0].objects.size() == 2;
  });
  add("FX-HEX", "isotropy at x is {x, g}", [] {
    const Groupoid& G = *fx_hex();
    return isotropy(G, G.at("x")).to_parent == std::vector<Arrow>{G.at("x"), G.at("g")};
  });
  add("FX-HEX", "two transversals at x: tau_y = l and tau_y = m", [] {
    const Groupoid& G = *fx_hex();
    const auto ts = transversals(G, G.at("x"));
    return ts.size() == 2 && ts[0] == hex_tau("l") && ts[1] == hex_tau("m");
  });
  add("FX-HEX", "under tau_y = l: h_x = m_x = m^-1_x = g and l_x = l^-1_x = x_x = y_x = x", [] {
    const Groupoid& G = *fx_hex();
    const Transversal t = hex_tau("l");
    for (const char* n : {"g", "h", "m", "m^-1"}) {
      if (corner(G, G.at(n), t) != G.at("g")) return false;
    }
    for (const char* n : {"l", "l^-1", "x", "y"}) {
      if (corner(G, G.at(n), t) != G.at("x")) return false;
    }
    return true;
  });
  add("FX-HEX", "psi split and merge round-trip on all 8 arrows", [] {
    const Groupoid& G = *fx_hex();
    const Transversal t = hex_tau("l");
    for (Arrow g = 0; g < G.size(); ++g) {
      if (psi_merge(G, psi_split(G, g, t), t) != g) return false;
    }
    return true;
  });

  // FX-B2
  add("FX-B2", "passes (P1)-(P4)", [] { return verify_partial_action(fx_b2()).ok(); });
  add("FX-B2", "is not global (A_g = ke1 is smaller than A_x)", [] { return !is_global(fx_b2()); });
  add("FX-B2", "alpha_l(e2) = e4", [] {
    const PartialAction a = fx_b2();
    return apply(a.iso[a.G().at("l")], a.A().basis(a.A().atom("e2"))) == a.A().basis(a.A().atom("e4"));
  });
  fixed("FX-B2", "alpha_l redirected to ke5 fails (P3) at (m^-1, l)",
        "documented as a (P4) failure at (h, l); (h, l) is fine since ke6 and ke5 meet in 0", [] {
          PartialAction a = fx_b2();
          detail::set_arrow(a, "l", pairs_by_name(a.A(), {{"e2", "e5"}}));
          const Report r = verify_partial_action(a, VerifyMode::All);
          bool p3 = false;
          for (const auto& v : r.violations) {
            if (v.rule == "P4" && v.witness.size() >= 2 && v.witness[0] == "h" && v.witness[1] == "l") return false;
            if (v.rule == "P3" && v.witness.size() >= 2 && v.witness[0] == "m^-1" && v.witness[1] == "l") p3 = true;
          }
          return p3;
        });
  add("FX-B2", "restriction to G(x) has A_g = ke1", [] {
    const PartialAction a = fx_b2();
    const PartialAction gx = restrict_to_isotropy(a, a.G().at("x"));
    return gx.ideal[*gx.G().find("g")] == a.A().ideal({"e1"});
  });
  add("FX-B2", "Ext(Res(alpha)) <= alpha, strictly, first at h", [] {
    const PartialAction a = fx_b2();
    const PartialAction theta = ext(res(a, hex_tau("l")));
    const auto w = leq_witness(a, theta);
    return leq(theta, a) && w && a.G().name(*w) == "h";
  });
  add("FX-B2", "not recoverable: 4/4 (base, transversal) pairs fail", [] {
    const RecoverableSearch s = recoverable_witness(fx_b2());
    return !s.witness && s.pairs == 4 && s.failing == 4;
  });
  add("FX-B2", "res at (x, tau_y = l) has I_{tau_y^-1} = ke2", [] {
    const Datum d = res(fx_b2(), hex_tau("l"));
    return d.ideal_tau_inv(d.G().at("y")) == d.A().ideal({"e2"});
  });
  add("FX-B2", "unit and counit pass, counit is not an isomorphism", [] {
    const AdjunctionReport r = check_adjunction(fx_b2(), hex_tau("l"));
    return r.ok() && !r.counit_iso;
  });
  add("FX-B2", "the inclusion Ext(Res(alpha)) -> alpha is a morphism", [] {
    const PartialAction a = fx_b2();
    const PartialAction theta = ext(res(a, hex_tau("l")));
    return verify_par_morphism(inclusion_family(theta), theta, a).ok();
  });
  add("FX-B2", "t(e1) = 2e1, t(e2) = e2 + e4, t(0) = 0", [] {
    const PartialAction a = fx_b2();
    const SplitRing& A = a.A();
    return trace(a, combo(A, {{"e1", 1}})) == combo(A, {{"e1", 2}}) &&
           trace(a, combo(A, {{"e2", 1}})) == combo(A, {{"e2", 1}, {"e4", 1}}) && trace(a, A.zero()) == A.zero();
  });
  add("FX-B2", "invariants have basis {e1, e2+e4, e3+e5, e6}", [] {
    const PartialAction a = fx_b2();
    const SplitRing& A = a.A();
    const auto inv = invariants(a);
    return inv.size() == 4 &&
           detail::spans_equal(A, inv,
                               {combo(A, {{"e1", 1}}), combo(A, {{"e2", 1}, {"e4", 1}}),
                                combo(A, {{"e3", 1}, {"e5", 1}}), combo(A, {{"e6", 1}})});
  });
  add("FX-B2", "trace is onto the invariants", [] { return trace_onto(fx_b2()); });
  add("FX-B2", "Gamma(e2, e2) = e2 + e4", [] {
    const PartialAction a = fx_b2();
    const SplitRing& A = a.A();
    return gamma_map(a, combo(A, {{"e2", 1}}), combo(A, {{"e2", 1}})) == combo(A, {{"e2", 1}, {"e4", 1}});
  });
  add("FX-B2", "Res(alpha) is globalizable", [] { return is_globalizable(res(fx_b2(), hex_tau("l"))).globalizable; });
  fixed("FX-B2", "Morita context of Ext(Res(alpha)) at x is not strict",
        "documented as strict; Res(alpha) is outside the GD subcategory and e5, e6 at y are not reached", [] {
          const PartialAction theta = ext(res(fx_b2(), hex_tau("l")));
          const SkewAlgebra R = build_skew(theta);
          const MoritaContextReport m = skew_morita_check(R, corners(R, theta.G().at("x")));
          return m.associativity.ok() && !m.mu_onto() && m.nu_onto();
        });

  // FX-GAMMA
  add("FX-GAMMA", "passes (P1)-(P4) and is global", [] {
    const PartialAction a = fx_gamma();
    return verify_partial_action(a).ok() && is_global(a);
  });
  add("FX-GAMMA", "group-type at its first transversal, hence recoverable", [] {
    const PartialAction a = fx_gamma();
    const Transversal t = first_transversal(a.G(), a.G().objects().front());
    return is_group_type(a, t) && recoverable_witness(a).witness.has_value();
  });
  add("FX-GAMMA", "Ext(Res(alpha)) = alpha", [] {
    const PartialAction a = fx_gamma();
    return ext(res(a, first_transversal(a.G(), a.G().objects().front()))) == a;
  });
  add("FX-GAMMA", "its datum with J = I and the datum maps globalizes to itself", [] {
    const PartialAction a = fx_gamma();
    const Datum d = res(a, first_transversal(a.G(), a.G().objects().front()));
    const GlobalizationData gd{d, d.ring, identity_embedding(d.A().size()), d.I, d.gamma_x, d.gamma_tau};
    return build_globalization(gd) == a;
  });
  add("FX-GAMMA", "invariants are spanned by the orbit sum", [] {
    const PartialAction a = fx_gamma();
    const SplitRing& A = a.A();
    return detail::spans_equal(A, invariants(a), {A.one()});
  });
  add("FX-GAMMA", "orbit sum decomposes with b_x = a1 + a2", [] {
    const PartialAction a = fx_gamma();
    const Datum d = datum_of(a, first_transversal(a.G(), a.G().objects().front()));
    return invariant_decompose(d, a.A().one()) == combo(a.A(), {{"a1", 1}, {"a2", 1}});
  });
  add("FX-GAMMA", "Gamma'(a1, a1) = a1 d_1, the identity arrow at object 1", [] {
    const PartialAction a = fx_gamma();
    const SkewAlgebra R = build_skew(a);
    const RingElement a1 = combo(a.A(), {{"a1", 1}});
    return gamma_prime(R, a1, a1) == R.element(a1, a.G().at("1"));
  });
  add("FX-GAMMA", "certificate {(e_t, e_t)} verifies at all 8 arrows", [] {
    const PartialAction a = fx_gamma();
    GaloisCertificate cert;
    for (std::size_t t = 0; t < a.A().size(); ++t) cert.pairs.emplace_back(a.A().basis(t), a.A().basis(t));
    return a.G().size() == 8 && verify_certificate(a, cert).empty();
  });
  add("FX-GAMMA", "groupoid and group Morita contexts are strict", [] {
    const PartialAction a = fx_gamma();
    const MoritaStrictness m = morita_strictness(a, first_transversal(a.G(), a.G().objects().front()));
    return m.groupoid.strict() && m.group.strict();
  });
  add("FX-GAMMA", "four-way report is (T,T,T,T)", [] {
    const PartialAction a = fx_gamma();
    const EquivalenceReport e = compute_equivalence(datum_of(a, first_transversal(a.G(), a.G().objects().front())));
    return e.galois_and_trace && e.groupoid_context_strict && e.group_context_strict && e.group_galois_and_trace;
  });

  // FX-DAT
  add("FX-DAT", "passes the datum verifier", [] { return verify_datum(fx_dat()).ok(); });
  add("FX-DAT", "gamma_{tau_x} other than the identity is rejected", [] {
    Datum d = fx_dat();
    const Arrow x = d.base();
    d.gamma_tau[d.pos(x)] = pairs_by_name(d.A(), {{"e1", "e3"}, {"e3", "e1"}});
    return !verify_datum(d).ok();
  });
  add("FX-DAT", "gamma(ke3) = ke2", [] {
    const SplitRing A = SplitRing::numbered(3, 4);
    return image(PartialRingIso::from_permutation(dat_gamma(), A.all()), A.ideal({"e3"})) == A.ideal({"e2"});
  });
  add("FX-DAT", "Ext: theta_g = id on ke3, theta_m: e3 -> e2, theta_h = id on ke2, theta_l: e1 -> e4, e3 -> e2",
      [] {
        const PartialAction t = ext(fx_dat());
        const SplitRing& A = t.A();
        const Groupoid& G = t.G();
        return t.iso[G.at("g")] == pairs_by_name(A, {{"e3", "e3"}}) &&
               t.iso[G.at("m")] == pairs_by_name(A, {{"e3", "e2"}}) &&
               t.iso[G.at("h")] == pairs_by_name(A, {{"e2", "e2"}}) &&
               t.iso[G.at("l")] == pairs_by_name(A, {{"e1", "e4"}, {"e3", "e2"}});
      });
  add("FX-DAT", "Ext passes (P1)-(P4) and Res(Ext) = datum", [] {
    const Datum d = fx_dat();
    const PartialAction t = ext(d);
    return verify_partial_action(t).ok() && res(t, d.tau) == d;
  });
  add("FX-DAT", "restriction of Ext to G(x) is the group part", [] {
    const Datum d = fx_dat();
    const PartialAction gx = restrict_to_isotropy(ext(d), d.base());
    return gx.ideal == d.gamma_x.ideal && gx.iso == d.gamma_x.iso;
  });
  add("FX-DAT", "transport x -> y -> x returns the datum", [] {
    const Datum d = fx_dat();
    const Groupoid& G = d.G();
    const Datum there = transport_datum(d, first_transversal(G, G.at("y")));
    return verify_datum(there).ok() && transport_datum(there, d.tau) == d;
  });
  add("FX-DAT", "adjunction: all four checks pass", [] { return check_adjunction(fx_dat()).ok(); });
  add("FX-DAT", "is globalizable", [] { return is_globalizable(fx_dat()).globalizable; });
  add("FX-DAT", "group globalization of gamma_x has 3 atoms", [] {
    return globalize_group(fx_dat().gamma_x).J->size() == 3;
  });
  add("FX-DAT", "skew ring of Ext has dim 12 with unit and associativity", [] {
    const SkewAlgebra R = build_skew(ext(fx_dat()));
    return R.dim() == 12 && unit_check(R).ok() && assoc_check(R).ok();
  });
  add("FX-DAT", "(e3 d_g)(e3 d_g) = e3 d_x", [] {
    const PartialAction t = ext(fx_dat());
    const SkewAlgebra R = build_skew(t);
    const RingElement e3 = combo(t.A(), {{"e3", 1}});
    const SkewElement u = R.element(e3, t.G().at("g"));
    return R.mul(u, u) == R.element(e3, t.G().at("x"));
  });
  add("FX-DAT", "corners at x: dim U = 6, dim S' = 3 matching the group skew ring, strict", [] {
    const Datum d = fx_dat();
    const PartialAction t = ext(d);
    const SkewAlgebra R = build_skew(t);
    const Corners k = corners(R, d.base());
    return k.U.basis.size() == 6 && k.S.basis.size() == 3 &&
           corner_matches_group_skew(R, k, build_skew(d.gamma_x), *d.loops) && skew_morita_check(R, k).strict();
  });
  add("FX-DAT", "b = (e1+e3) + gamma(e1+e3) has b_x = e1 + e3", [] {
    const Datum d = fx_dat();
    const RingElement b = combo(d.A(), {{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}});
    return invariant_decompose(d, b) == combo(d.A(), {{"e1", 1}, {"e3", 1}});
  });
  add("FX-DAT", "both trace maps onto and the trace identities hold", [] {
    const TraceEquivalence r = prop_trace_equiv(fx_dat());
    return r.groupoid_onto && r.group_onto && r.iff_holds() && r.trace_transport && r.trace_split;
  });
  fixed("FX-DAT", "Ext has no Galois certificate",
        "documented as having one; g fixes ke3, so the display at x and at g cannot both hold", [] {
          const SkewAlgebra R = build_skew(ext(fx_dat()));
          return !galois_coordinates(R).has_value();
        });
  add("FX-DAT", "Morita strictness verdicts agree", [] { return morita_strictness(fx_dat()).agree(); });
  add("FX-DAT", "four-way report agrees", [] { return compute_equivalence(fx_dat()).agree(); });

  // FX-GLOB
  add("FX-GLOB", "beta_h = gamma sigma gamma^-1, beta_m = gamma sigma, beta_l = gamma on J_x", [] {
    const GlobalizationData gd = fx_glob();
    const PartialAction beta = build_globalization(gd);
    const Groupoid& G = gd.datum.G();
    std::vector<std::size_t> gs(4), gsg(4);
    const auto s = dat_sigma();
    const auto g = dat_gamma();
    for (std::size_t i = 0; i < 4; ++i) {
      gs[i] = g[s[i]];
      gsg[i] = g[s[g[i]]];
    }
    const Ideal Jx = gd.J[gd.datum.pos(G.at("x"))];
    const Ideal Jy = gd.J[gd.datum.pos(G.at("y"))];
    return beta.iso[G.at("h")] == PartialRingIso::from_permutation(gsg, Jy) &&
           beta.iso[G.at("m")] == PartialRingIso::from_permutation(gs, Jx) &&
           beta.iso[G.at("l")] == PartialRingIso::from_permutation(g, Jx);
  });
  add("FX-GLOB", "beta globalizes Ext(FX-DAT): (G1)-(G4) pass", [] {
    const GlobalizationData gd = fx_glob();
    return verify_globalization(ext(gd.datum), gd.embed, build_globalization(gd)).ok();
  });
  fixed("FX-GLOB", "J_x = J_y = A with sigma and gamma on all of A fails (G4)",
        "documented as a globalization; I_x + sigma(I_x) misses e4", [] {
          try {
            build_globalization(fx_glob_whole_ring());
          } catch (const Error& e) {
            return e.kind() == ErrorKind::C2Violation && !e.witness().empty() && e.witness().front() == "G4";
          }
          return false;
        });
  fixed("FX-GLOB", "beta_h replaced by the identity fails (G2) at h",
        "documented as a (G3) failure; theta_h is the identity on ke2, so (G3) still holds", [] {
          const GlobalizationData gd = fx_glob();
          PartialAction beta = build_globalization(gd);
          const Arrow h = beta.G().at("h");
          beta.iso[h] = PartialRingIso::identity(beta.ideal[h]);
          const Report r = verify_globalization(ext(gd.datum), beta, VerifyMode::All);
          return r.has("G2") && !r.has("G3");
        });
  return c;
}

inline std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims) {
  std::vector<ClaimResult> out;
  for (const Claim& c : claims) {
    ClaimResult r{c.fixture, c.statement, false, c.corrected, c.note, {}};
    try {
      r.passed = c.holds();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pga
