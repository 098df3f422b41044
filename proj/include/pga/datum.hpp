#pragma once

// Triples (I, gamma_tau, gamma_(x)) based at an object x with transversal
// tau, the restriction and extension functors between them and partial
// actions, change of base point, and instance-level adjunction checks.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/error.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/report.hpp"
#include "pga/split_ring.hpp"

namespace pga {

struct Datum {
  GroupoidPtr groupoid;
  RingPtr ring;
  Transversal tau;
  std::shared_ptr<const Subgroupoid> loops;  // G(x) and its embedding into G
  std::vector<Ideal> I;                      // I_y, by object position
  std::vector<PartialRingIso> gamma_tau;     // gamma_{tau_y}, by object position
  PartialAction gamma_x;                     // partial action of G(x) on I_x

  const Groupoid& G() const { return *groupoid; }
  const SplitRing& A() const { return *ring; }
  Arrow base() const { return tau.base; }

  std::size_t pos(Arrow y) const { return G().object_index(y); }
  Ideal ideal(Arrow y) const { return I[pos(y)]; }
  const PartialRingIso& gamma(Arrow y) const { return gamma_tau[pos(y)]; }
  /// I_{tau_y}
  Ideal ideal_tau(Arrow y) const { return gamma(y).cod(); }
  /// I_{tau_y^-1}
  Ideal ideal_tau_inv(Arrow y) const { return gamma(y).dom(); }
  /// gamma_h and I_h for a loop h at x, given by its id in G.
  const PartialRingIso& loop_iso(Arrow h) const { return gamma_x.iso[loops->from_parent.at(h)]; }
  Ideal loop_ideal(Arrow h) const { return gamma_x.ideal[loops->from_parent.at(h)]; }

  friend bool operator==(const Datum& a, const Datum& b) {
    return (a.groupoid == b.groupoid || *a.groupoid == *b.groupoid) &&
           (a.ring == b.ring || *a.ring == *b.ring) && a.tau == b.tau && a.I == b.I &&
           a.gamma_tau == b.gamma_tau && a.gamma_x.ideal == b.gamma_x.ideal &&
           a.gamma_x.iso == b.gamma_x.iso;
  }
};

/// Empty datum skeleton at tau; ideals and maps still to be filled in.
inline Datum make_datum(GroupoidPtr G, RingPtr A, Transversal tau,
                        std::shared_ptr<const Subgroupoid> loops = nullptr) {
  if (!loops) loops = isotropy_ptr(*G, tau.base);
  Datum d{std::move(G), std::move(A), std::move(tau), std::move(loops), {}, {}, {}};
  const std::size_t n = d.G().objects().size();
  d.I.assign(n, Ideal{});
  d.gamma_tau.assign(n, PartialRingIso{});
  d.gamma_x = PartialAction{GroupoidPtr(d.loops, &d.loops->groupoid), d.ring, {}, {}};
  d.gamma_x.ideal.assign(d.loops->groupoid.size(), Ideal{});
  d.gamma_x.iso.assign(d.loops->groupoid.size(), PartialRingIso{});
  return d;
}

inline Report check_transversal(const Groupoid& G, const Transversal& tau) {
  Report r;
  if (tau.base >= G.size() || !G.is_object(tau.base) || tau.pick.size() != G.size()) {
    r.add("transversal", {}, "transversal is not based at an object");
    return r;
  }
  for (const Arrow y : G.objects()) {
    const Arrow t = tau.pick[y];
    if (t >= G.size() || G.src(t) != tau.base || G.tgt(t) != y) {
      r.add("transversal", {G.name(y)}, "tau_y is not an arrow from the base to y");
      return r;
    }
  }
  if (tau.pick[tau.base] != tau.base) r.add("transversal", {G.name(tau.base)}, "tau_x is not x");
  return r;
}

/// gamma_{tau_t} gamma_{g_x} gamma_{tau_s}^-1 composed as partial bijections.
inline PartialRingIso ext_map(const Datum& d, Arrow g) {
  const Groupoid& G = d.G();
  if (G.is_object(g)) return PartialRingIso::identity(d.ideal(g));
  const Arrow gx = corner(G, g, d.tau);
  return compose_partial(d.gamma(G.tgt(g)), d.loop_iso(gx), d.gamma(G.src(g)).inverse());
}

/// gamma_{tau_t}(I_{tau_t^-1} & gamma_{g_x}(I_{tau_s^-1} & I_{g_x^-1})), the
/// closed form of the range of ext_map for non-identity g.
inline Ideal ext_range_closed_form(const Datum& d, Arrow g) {
  const Groupoid& G = d.G();
  if (G.is_object(g)) return d.ideal(g);
  const Arrow gx = corner(G, g, d.tau);
  const Ideal inner = d.ideal_tau_inv(G.src(g)) & d.loop_ideal(G.inv(gx));
  return d.gamma(G.tgt(g)).image(d.ideal_tau_inv(G.tgt(g)) & d.loop_iso(gx).image(inner));
}

inline Report verify_datum(const Datum& d, VerifyMode mode = VerifyMode::First) {
  const Groupoid& G = d.G();
  Report r = check_transversal(G, d.tau);
  r.mode = mode;
  if (!r.ok()) return r;
  if (d.I.size() != G.objects().size() || d.gamma_tau.size() != G.objects().size() ||
      d.gamma_x.ideal.size() != d.loops->groupoid.size() ||
      d.gamma_x.iso.size() != d.loops->groupoid.size()) {
    throw Error(ErrorKind::ShapeMismatch, "datum families do not match the groupoid");
  }
  const Arrow x = d.base();
  const Ideal all = d.A().all();
  for (const Arrow y : G.objects()) {
    if (r.done()) break;
    if (!d.ideal(y).subset_of(all)) r.add("ideal", {G.name(y)}, "I_y uses unknown atoms");
    if (!d.ideal_tau_inv(y).subset_of(d.ideal(x))) {
      r.add("tau-domain", {G.name(y)}, "I_{tau_y^-1} is not an ideal of I_x");
    }
    if (!d.ideal_tau(y).subset_of(d.ideal(y))) {
      r.add("tau-range", {G.name(y)}, "I_{tau_y} is not an ideal of I_y");
    }
  }
  if (d.gamma(x) != PartialRingIso::identity(d.ideal(x))) {
    r.add("tau-identity", {G.name(x)}, "gamma_{tau_x} is not the identity of I_x");
  }
  const Arrow e = d.loops->from_parent[x];
  if (d.gamma_x.ideal[e] != d.ideal(x)) {
    r.add("group-carrier", {G.name(x)}, "the group action does not live on I_x");
  }
  for (const auto& v : verify_partial_action(d.gamma_x, mode).violations) {
    r.add("group-" + v.rule, v.witness, v.detail);
  }
  if (!r.ok()) return r;
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    if (!ext_range_closed_form(d, g).subset_of(d.ideal(G.tgt(g)))) {
      r.add("ideal-condition", {G.name(g)}, "extended range is not an ideal of I_t(g)");
    }
  }
  return r;
}

/// Res(alpha) at tau: I_y = A_y, gamma_{tau_y} = alpha_{tau_y}, loops restricted.
inline Datum res(const PartialAction& a, const Transversal& tau,
                 std::shared_ptr<const Subgroupoid> loops = nullptr) {
  if (!a.G().connected()) throw Error(ErrorKind::NotConnected, "Res needs a connected groupoid");
  Datum d = make_datum(a.groupoid, a.ring, tau, std::move(loops));
  for (const Arrow y : a.G().objects()) {
    d.I[d.pos(y)] = a.ideal[y];
    d.gamma_tau[d.pos(y)] = a.iso[tau.at(y)];
  }
  d.gamma_x = restrict_along(a, d.loops);
  return d;
}

/// Ext(d): theta_g = gamma_{tau_t(g)} gamma_{g_x} gamma_{tau_s(g)}^-1 with
/// B_g the range of theta_g.
inline PartialAction ext(const Datum& d) {
  PartialAction theta{d.groupoid, d.ring, {}, {}};
  for (Arrow g = 0; g < d.G().size(); ++g) {
    theta.iso.push_back(ext_map(d, g));
    theta.ideal.push_back(theta.iso.back().cod());
  }
  return theta;
}

/// Moves d to base z with transversal lambda: the ideals at x and z trade
/// places, gamma'_{lambda_x} = gamma_{tau_z}, and the group action is pulled
/// back along l -> tau_z^-1 l tau_z.
inline Datum transport_datum(const Datum& d, const Transversal& lambda) {
  const Groupoid& G = d.G();
  if (!G.connected()) throw Error(ErrorKind::NotConnected, "transport needs a connected groupoid");
  if (!check_transversal(G, lambda).ok()) {
    throw Error(ErrorKind::ShapeMismatch, "lambda is not a transversal");
  }
  const Arrow x = d.base();
  const Arrow z = lambda.base;
  Datum out = make_datum(d.groupoid, d.ring, lambda);
  for (const Arrow y : G.objects()) {
    const Arrow from = y == z ? x : y == x ? z : y;
    out.I[out.pos(y)] = d.ideal(from);
    out.gamma_tau[out.pos(y)] = d.gamma(from);
  }
  out.gamma_tau[out.pos(z)] = PartialRingIso::identity(d.ideal(x));
  const Arrow tz = d.tau.at(z);
  for (Arrow i = 0; i < out.loops->groupoid.size(); ++i) {
    const Arrow l = out.loops->to_parent[i];
    const Arrow phi = G.compose(G.inv(tz), l, tz);
    out.gamma_x.ideal[i] = d.loop_ideal(phi);
    out.gamma_x.iso[i] = d.loop_iso(phi);
  }
  return out;
}

/// f_y : I_y -> I'_y by object position.
struct DatumMorphism {
  std::vector<RingHom> f;
};

inline Report verify_datum_morphism(const DatumMorphism& m, const Datum& a, const Datum& b,
                                    VerifyMode mode = VerifyMode::First) {
  const Groupoid& G = a.G();
  if (m.f.size() != G.objects().size()) {
    throw Error(ErrorKind::ShapeMismatch, "morphism family does not match the objects");
  }
  Report r{{}, mode};
  const Arrow x = a.base();
  const RingHom& fx = m.f[a.pos(x)];
  for (const Arrow y : G.objects()) {
    if (r.done()) break;
    const RingHom& fy = m.f[a.pos(y)];
    if (fy.dom() != a.ideal(y) || !fy.well_defined() || !fy.image(fy.dom()).subset_of(b.ideal(y))) {
      r.add("ring-map", {G.name(y)}, "f_y is not a ring map I_y -> I'_y");
      continue;
    }
    if (y != x && !fy.image(a.ideal_tau(y)).subset_of(b.ideal_tau(y))) {
      r.add("tau-range", {G.name(y)}, "f_y(I_{tau_y}) is not inside I'_{tau_y}");
    }
    if (!fx.image(a.ideal_tau_inv(y)).subset_of(b.ideal_tau_inv(y))) {
      r.add("tau-domain", {G.name(y)}, "f_x(I_{tau_y^-1}) is not inside I'_{tau_y^-1}");
      continue;
    }
    a.ideal_tau_inv(y).for_each([&](std::size_t atom) {
      if (b.gamma(y).image(fx.image_of_atom(atom)) != fy.image_of_atom(a.gamma(y)(atom))) {
        r.add("tau-intertwining", {G.name(y), a.A().atom_name(atom)});
      }
    });
  }
  ParMorphism loop_part{{fx}};
  for (const auto& v : verify_par_morphism(loop_part, a.gamma_x, b.gamma_x, mode).violations) {
    r.add("group-" + v.rule, v.witness, v.detail);
  }
  return r;
}

/// The counit at alpha: inclusions B_y -> A_y of Ext(Res(alpha)) into alpha.
inline ParMorphism inclusion_family(const PartialAction& from) {
  ParMorphism m;
  for (const Arrow y : from.G().objects()) m.psi.push_back(RingHom::identity(from.ideal[y]));
  return m;
}

struct AdjunctionReport {
  bool unit = false;          // Res(Ext(gamma)) = gamma, so eta is the identity
  bool counit = false;        // the inclusion family is a morphism Ext(Res(alpha)) -> alpha
  bool triangle_ext = false;  // eps_{Ext(gamma)} o Ext(eta_gamma) = id
  bool triangle_res = false;  // Res(eps_alpha) o eta_{Res(alpha)} = id
  bool below = false;         // Ext(Res(alpha)) <= alpha
  bool counit_iso = false;    // Ext(Res(alpha)) = alpha

  bool ok() const { return unit && counit && triangle_ext && triangle_res && below; }
};

/// Instance-level adjunction check around alpha at transversal tau.
inline AdjunctionReport check_adjunction(const PartialAction& alpha, const Transversal& tau) {
  AdjunctionReport r;
  const Datum gamma = res(alpha, tau);
  const PartialAction theta = ext(gamma);
  r.unit = res(theta, tau, gamma.loops) == gamma;
  r.counit = verify_par_morphism(inclusion_family(theta), theta, alpha).ok();
  const PartialAction theta2 = ext(res(theta, tau, gamma.loops));
  r.triangle_ext = theta2 == theta && inclusion_family(theta2) == identity_morphism(theta);
  // Res(eps_alpha) restricted to Res(Ext(Res(alpha))) = Res(alpha): B_y = A_y.
  ParMorphism res_eps = inclusion_family(theta);
  r.triangle_res = res_eps == identity_morphism(alpha) &&
                   verify_par_morphism(res_eps, alpha, alpha).ok();
  r.below = leq(theta, alpha);
  r.counit_iso = theta == alpha;
  return r;
}

/// Instance-level adjunction check around a datum.
inline AdjunctionReport check_adjunction(const Datum& d) {
  AdjunctionReport r = check_adjunction(ext(d), d.tau);
  r.unit = r.unit && res(ext(d), d.tau, d.loops) == d;
  return r;
}

struct RecoverableSearch {
  std::optional<Transversal> witness;
  std::size_t pairs = 0;
  std::size_t failing = 0;
};

/// Tries every (base, transversal) pair in lexicographic order. At each pair
/// the two subset conditions and Ext(Res(alpha)) = alpha are evaluated
/// separately; a disagreement between them is an internal error.
inline RecoverableSearch recoverable_witness(const PartialAction& a) {
  const Groupoid& G = a.G();
  if (!G.connected()) throw Error(ErrorKind::NotConnected, "recoverability needs a connected groupoid");
  RecoverableSearch s;
  for (const Arrow x : G.objects()) {
    const auto loops = isotropy_ptr(G, x);
    for (const auto& tau : transversals(G, x)) {
      const bool weak = recover_condition(a, tau);
      const bool strong = recover_condition_strong(a, tau);
      const bool fixed = ext(res(a, tau, loops)) == a;
      if (weak != strong || weak != fixed) {
        throw Error(ErrorKind::InternalInconsistency,
                    "recoverability conditions disagree at base " + G.name(x), {G.name(x)});
      }
      ++s.pairs;
      if (weak) {
        if (!s.witness) s.witness = tau;
      } else {
        ++s.failing;
      }
    }
  }
  return s;
}

/// Datum lies in the subcategory with I_{tau_y^-1} = I_x and I_{tau_y} = I_y.
inline bool is_gd(const Datum& d) {
  for (const Arrow y : d.G().objects()) {
    if (d.ideal_tau_inv(y) != d.ideal(d.base()) || d.ideal_tau(y) != d.ideal(y)) return false;
  }
  return true;
}

}  // namespace pga
