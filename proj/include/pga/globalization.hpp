#pragma once

// Globalizations: the enveloping action of a partial group action, the
// (G1)-(G4) verifier, the (C1)-(C3) package for Ext of a datum and the
// global action it determines.

#include <algorithm>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pga/datum.hpp"
#include "pga/error.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/report.hpp"
#include "pga/split_ring.hpp"
#include "pga/union_find.hpp"

namespace pga {

inline constexpr std::size_t kNoAtom = std::numeric_limits<std::size_t>::max();

/// Image of an ideal under an atom map; atoms mapped to kNoAtom are dropped.
inline Ideal embed_ideal(const std::vector<std::size_t>& embed, Ideal I) {
  Ideal out;
  I.for_each([&](std::size_t a) {
    if (a < embed.size() && embed[a] != kNoAtom) out.mask |= std::uint64_t{1} << embed[a];
  });
  return out;
}

inline std::vector<std::size_t> identity_embedding(std::size_t n) {
  std::vector<std::size_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = i;
  return e;
}

/// (G1)-(G4) for beta over B against alpha over A, where `embed` sends the
/// atoms of A into B, followed by rule "global" if beta is not a global
/// action.
inline Report verify_globalization(const PartialAction& alpha, const std::vector<std::size_t>& embed,
                                   const PartialAction& beta, VerifyMode mode = VerifyMode::First) {
  const Groupoid& G = alpha.G();
  if (beta.G().size() != G.size() || embed.size() != alpha.A().size()) {
    throw Error(ErrorKind::ShapeMismatch, "globalization does not match the action");
  }
  check_shape(beta);
  Report r{{}, mode};
  const auto E = [&](Ideal I) { return embed_ideal(embed, I); };
  for (std::size_t a = 0; a < embed.size(); ++a) {
    for (std::size_t b = a + 1; b < embed.size(); ++b) {
      if (embed[a] != kNoAtom && embed[a] == embed[b]) {
        r.add("embedding", {alpha.A().atom_name(a), alpha.A().atom_name(b)}, "atoms share an image");
        return r;
      }
    }
  }
  for (const Arrow x : G.objects()) {
    if (!E(alpha.ideal[x]).subset_of(beta.ideal[x])) {
      r.add("G1", {G.name(x)}, "A_x is not an ideal of B_x");
    }
  }
  if (!r.ok()) return r;
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    const Ideal expect = E(alpha.ideal[G.tgt(g)]) & beta.iso[g].image(E(alpha.ideal[G.src(g)]));
    if (E(alpha.ideal[g]) != expect) {
      r.add("G2", {G.name(g)}, "A_g differs from A_t(g) & beta_g(A_s(g))");
    }
    alpha.ideal[G.inv(g)].for_each([&](std::size_t a) {
      if (r.done()) return;
      const bool defined = embed[a] != kNoAtom && beta.iso[g].dom().contains(embed[a]);
      if (!defined || beta.iso[g](embed[a]) != embed[alpha.iso[g](a)]) {
        r.add("G3", {G.name(g), alpha.A().atom_name(a)}, "beta_g differs from alpha_g");
      }
    });
    Ideal sum;
    for (Arrow h = 0; h < G.size(); ++h) {
      if (G.tgt(h) == G.tgt(g)) sum = sum | beta.iso[h].image(E(alpha.ideal[G.src(h)]));
    }
    if (!r.done() && beta.ideal[g] != sum) {
      r.add("G4", {G.name(g)}, "B_g is not the sum of beta_h(A_s(h)) over t(h) = t(g)");
    }
  }
  if (r.done()) return r;
  const Report pa = verify_partial_action(beta);
  if (!pa.ok() || !is_global(beta)) {
    r.add("global", pa.ok() ? std::vector<std::string>{} : pa.violations[0].witness,
          "beta is not a global action");
  }
  return r;
}

inline Report verify_globalization(const PartialAction& alpha, const PartialAction& beta,
                                   VerifyMode mode = VerifyMode::First) {
  return verify_globalization(alpha, identity_embedding(alpha.A().size()), beta, mode);
}

/// Enveloping action of a partial action of a group (one-object groupoid).
struct GroupGlobalization {
  RingPtr J;
  PartialAction action;                                       // global, over J
  std::vector<std::size_t> embed;                             // atoms of A -> atoms of J
  std::vector<std::vector<std::pair<Arrow, std::size_t>>> classes;  // (h, a) pairs per atom of J
};

namespace detail {

inline std::string clean_name(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c != '(' && c != ')' && c != ',' && c != ' ') out += c;
  }
  return out;
}

}  // namespace detail

/// Atoms of J are the classes of pairs (h, a), a an atom of A_e, under
/// (h, a) ~ (h l^-1, gamma_l(a)) for a in dom gamma_l; k acts by
/// [(h, a)] -> [(kh, a)] and a embeds as [(e, a)].
inline GroupGlobalization globalize_group(const PartialAction& pa) {
  const Groupoid& H = pa.G();
  if (H.objects().size() != 1) throw Error(ErrorKind::ShapeMismatch, "expected a group");
  const Arrow e = H.objects().front();
  const std::vector<std::size_t> atoms = pa.ideal[e].atoms();
  const std::size_t n = atoms.size();
  std::vector<std::size_t> slot(pa.A().size(), kNoAtom);
  for (std::size_t i = 0; i < n; ++i) slot[atoms[i]] = i;
  const auto id = [&](Arrow h, std::size_t a) { return h * n + slot[a]; };

  UnionFind uf(H.size() * n);
  for (Arrow h = 0; h < H.size(); ++h) {
    for (Arrow l = 0; l < H.size(); ++l) {
      const Arrow hl = H.compose(h, H.inv(l));
      pa.iso[l].dom().for_each([&](std::size_t a) { uf.unite(id(h, a), id(hl, pa.iso[l](a))); });
    }
  }
  const std::vector<std::size_t> label = uf.labels();
  const std::size_t classes = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;

  GroupGlobalization out;
  out.classes.assign(classes, {});
  for (Arrow h = 0; h < H.size(); ++h) {
    for (const std::size_t a : atoms) out.classes[label[id(h, a)]].emplace_back(h, a);
  }
  std::vector<std::string> names(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    const auto& [h, a] = out.classes[c].front();
    names[c] = h == e ? pa.A().atom_name(a)
                      : detail::clean_name(H.name(h)) + "." + pa.A().atom_name(a);
  }
  if (classes == 0) names.push_back("0");
  out.J = std::make_shared<const SplitRing>(pa.A().p(), names);
  out.embed.assign(pa.A().size(), kNoAtom);
  for (const std::size_t a : atoms) out.embed[a] = label[id(e, a)];
  const Ideal all = classes == 0 ? Ideal{} : Ideal::first(classes);

  out.action = PartialAction{pa.groupoid, out.J, {}, {}};
  for (Arrow k = 0; k < H.size(); ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < classes; ++c) {
      const auto& [h, a] = out.classes[c].front();
      pairs.emplace_back(c, label[id(H.compose(k, h), a)]);
    }
    out.action.iso.push_back(PartialRingIso::from_pairs(pairs));
    out.action.ideal.push_back(all);
  }
  return out;
}

/// Every split-ring ideal is unital, so the structural checks reduce to the
/// datum being valid and the group part having a verified globalization.
struct GlobalizabilityReport {
  bool globalizable = false;
  std::vector<std::string> reasons;
};

inline GlobalizabilityReport is_globalizable(const Datum& d) {
  GlobalizabilityReport r;
  const Report v = verify_datum(d);
  if (!v.ok()) {
    r.reasons.push_back("datum does not verify: " + v.describe());
    return r;
  }
  r.reasons.push_back("I_x and every I_{tau_y^-1} are unital (split model)");
  const GroupGlobalization gg = globalize_group(d.gamma_x);
  const Report g = verify_globalization(d.gamma_x, gg.embed, gg.action);
  if (!g.ok()) {
    r.reasons.push_back("group part has no globalization: " + g.describe());
    return r;
  }
  r.reasons.push_back("group part globalizes to " + std::to_string(gg.J->size()) + " atoms");
  r.globalizable = true;
  return r;
}

/// Data for the global action of a datum: ring B, atom embedding of A into
/// B, ideals J_y of B, the global action of G(x) on J_x and the isos
/// J_x -> J_y, all by object position where indexed by objects.
struct GlobalizationData {
  Datum datum;
  RingPtr B;
  std::vector<std::size_t> embed;
  std::vector<Ideal> J;
  PartialAction tilde_x;
  std::vector<PartialRingIso> tilde_tau;
};

/// Checks (C1)-(C3) and returns beta_g = tilde_{tau_t} tilde_{g_x}
/// tilde_{tau_s}^-1 on C_g = J_t(g).
inline PartialAction build_globalization(const GlobalizationData& gd) {
  const Datum& d = gd.datum;
  const Groupoid& G = d.G();
  const Arrow x = d.base();
  const std::size_t nobj = G.objects().size();
  if (gd.J.size() != nobj || gd.tilde_tau.size() != nobj || gd.embed.size() != d.A().size()) {
    throw Error(ErrorKind::ShapeMismatch, "globalization data does not match the datum");
  }
  for (const Arrow y : G.objects()) {
    if (d.ideal_tau_inv(y) != d.ideal(x) || d.ideal_tau(y) != d.ideal(y)) {
      throw Error(ErrorKind::C1Violation, "I_{tau_y^-1} = I_x and I_{tau_y} = I_y fail", {G.name(y)});
    }
  }
  const Ideal Jx = gd.J[d.pos(x)];
  if (gd.tilde_x.G().size() != d.loops->groupoid.size() ||
      gd.tilde_x.ideal[d.loops->from_parent[x]] != Jx) {
    throw Error(ErrorKind::C2Violation, "tilde gamma does not act on J_x", {G.name(x)});
  }
  const Report c2 = verify_globalization(d.gamma_x, gd.embed, gd.tilde_x);
  if (!c2.ok()) {
    std::vector<std::string> w{c2.first()->rule};
    w.insert(w.end(), c2.first()->witness.begin(), c2.first()->witness.end());
    throw Error(ErrorKind::C2Violation, "group part is not a globalization: " + c2.describe(), w);
  }
  for (const Arrow y : G.objects()) {
    const PartialRingIso& t = gd.tilde_tau[d.pos(y)];
    const Ideal Jy = gd.J[d.pos(y)];
    if (t.dom() != Jx || t.cod() != Jy) {
      throw Error(ErrorKind::C3Violation, "tilde gamma_{tau_y} is not J_x -> J_y", {G.name(y)});
    }
    if (!embed_ideal(gd.embed, d.ideal(y)).subset_of(Jy)) {
      throw Error(ErrorKind::C3Violation, "I_y is not an ideal of J_y", {G.name(y)});
    }
    d.ideal(x).for_each([&](std::size_t a) {
      if (t(gd.embed[a]) != gd.embed[d.gamma(y)(a)]) {
        throw Error(ErrorKind::C3Violation, "tilde gamma_{tau_y} does not extend gamma_{tau_y}",
                    {G.name(y), d.A().atom_name(a)});
      }
    });
  }
  if (!gd.tilde_tau[d.pos(x)].is_identity()) {
    throw Error(ErrorKind::C3Violation, "tilde gamma_{tau_x} is not the identity", {G.name(x)});
  }

  PartialAction beta{d.groupoid, gd.B, {}, {}};
  for (Arrow g = 0; g < G.size(); ++g) {
    const PartialRingIso& tt = gd.tilde_tau[d.pos(G.tgt(g))];
    const PartialRingIso& ts = gd.tilde_tau[d.pos(G.src(g))];
    const PartialRingIso& loop = gd.tilde_x.iso[d.loops->from_parent[corner(G, g, d.tau)]];
    beta.iso.push_back(compose_partial(tt, loop, ts.inverse()));
    beta.ideal.push_back(gd.J[d.pos(G.tgt(g))]);
  }
  return beta;
}

/// Builds (C2)/(C3) data from the datum alone: J_x from globalize_group and
/// J_y a relabelled copy of J_x for each y, B the disjoint union of the J_y
/// plus the atoms of A outside every I_y. Needs (C1) and pairwise disjoint
/// I_y; otherwise I_y cannot sit inside its own copy and C3Violation is
/// raised.
inline GlobalizationData synthesize_globalization(const Datum& d) {
  const Groupoid& G = d.G();
  const Arrow x = d.base();
  for (const Arrow y : G.objects()) {
    if (d.ideal_tau_inv(y) != d.ideal(x) || d.ideal_tau(y) != d.ideal(y)) {
      throw Error(ErrorKind::C1Violation, "I_{tau_y^-1} = I_x and I_{tau_y} = I_y fail", {G.name(y)});
    }
  }
  Ideal seen;
  for (const Arrow y : G.objects()) {
    if (!(seen & d.ideal(y)).empty()) {
      throw Error(ErrorKind::C3Violation, "I_y overlap, so J_y cannot be disjoint copies", {G.name(y)});
    }
    seen = seen | d.ideal(y);
  }
  const GroupGlobalization gg = globalize_group(d.gamma_x);
  const std::size_t k = d.ideal(x).empty() ? 0 : gg.J->size();
  const SplitRing& A = d.A();

  // Atom (object position i, class c) of B sits at i * k + c.
  std::vector<std::string> names;
  std::vector<std::size_t> embed(A.size(), kNoAtom);
  std::vector<std::size_t> j_of(A.size(), kNoAtom);  // A atom in I_x -> class
  for (std::size_t a = 0; a < A.size(); ++a) j_of[a] = gg.embed[a];
  for (const Arrow y : G.objects()) {
    const std::size_t i = d.pos(y);
    std::vector<std::string> copy(k);
    for (std::size_t c = 0; c < k; ++c) copy[c] = gg.J->atom_name(c) + "@" + G.name(y);
    d.ideal(x).for_each([&](std::size_t a) {
      const std::size_t b = d.gamma(y)(a);
      copy[j_of[a]] = A.atom_name(b);
      embed[b] = i * k + j_of[a];
    });
    names.insert(names.end(), copy.begin(), copy.end());
  }
  for (std::size_t a = 0; a < A.size(); ++a) {
    if (!seen.contains(a)) {
      embed[a] = names.size();
      names.push_back(A.atom_name(a));
    }
  }
  if (names.empty()) names.push_back("0");
  GlobalizationData gd{d, std::make_shared<const SplitRing>(A.p(), names), embed, {}, {}, {}};
  const auto shift = [&](std::size_t i) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < k; ++c) pairs.emplace_back(c, i * k + c);
    return PartialRingIso::from_pairs(pairs);
  };
  const PartialRingIso to_x = shift(d.pos(x));
  for (const Arrow y : G.objects()) {
    const std::size_t i = d.pos(y);
    Ideal Jy;
    for (std::size_t c = 0; c < k; ++c) Jy.mask |= std::uint64_t{1} << (i * k + c);
    gd.J.push_back(Jy);
    gd.tilde_tau.push_back(compose_partial(shift(i), to_x.inverse()));
  }
  gd.tilde_x = PartialAction{d.gamma_x.groupoid, gd.B, {}, {}};
  for (Arrow h = 0; h < gg.action.G().size(); ++h) {
    gd.tilde_x.iso.push_back(compose_partial(to_x, gg.action.iso[h], to_x.inverse()));
    gd.tilde_x.ideal.push_back(gd.J[d.pos(x)]);
  }
  return gd;
}

/// For each atom c of B inside some C_y: remove c from every C_y and from
/// every beta_g, and report whether (G1)-(G4) still hold. A minimal
/// globalization breaks under every removal.
inline std::vector<std::pair<std::size_t, Report>> deletion_search(
    const PartialAction& alpha, const std::vector<std::size_t>& embed, const PartialAction& beta) {
  std::vector<std::pair<std::size_t, Report>> out;
  Ideal used;
  for (const Arrow y : beta.G().objects()) used = used | beta.ideal[y];
  used.for_each([&](std::size_t c) {
    PartialAction cut = beta;
    const Ideal keep{~(std::uint64_t{1} << c)};
    for (Arrow g = 0; g < cut.G().size(); ++g) {
      cut.iso[g] = compose_partial(PartialRingIso::identity(keep), cut.iso[g],
                                   PartialRingIso::identity(keep));
      cut.ideal[g] = cut.ideal[g] & keep;
    }
    out.emplace_back(c, verify_globalization(alpha, embed, cut));
  });
  return out;
}

}  // namespace pga
