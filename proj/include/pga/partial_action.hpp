#pragma once

// Partial actions (A_g, alpha_g) of a finite groupoid on a split ring, their
// axioms, classification predicates and morphisms.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/error.hpp"
#include "pga/groupoid.hpp"
#include "pga/report.hpp"
#include "pga/split_ring.hpp"

namespace pga {

/// alpha_g : A_{g^-1} -> A_g for every arrow g, indexed by arrow id.
struct PartialAction {
  GroupoidPtr groupoid;
  RingPtr ring;
  std::vector<Ideal> ideal;
  std::vector<PartialRingIso> iso;

  const Groupoid& G() const { return *groupoid; }
  const SplitRing& A() const { return *ring; }

  friend bool operator==(const PartialAction& a, const PartialAction& b) {
    return (a.groupoid == b.groupoid || *a.groupoid == *b.groupoid) &&
           (a.ring == b.ring || *a.ring == *b.ring) && a.ideal == b.ideal && a.iso == b.iso;
  }
};

/// Identity action: A_g = A_x = I for every arrow, alpha_g = id. Global.
inline PartialAction trivial_action(GroupoidPtr G, RingPtr A, Ideal I) {
  PartialAction a{std::move(G), std::move(A), {}, {}};
  a.ideal.assign(a.G().size(), I);
  a.iso.assign(a.G().size(), PartialRingIso::identity(I));
  return a;
}

inline void check_shape(const PartialAction& a) {
  if (!a.groupoid || !a.ring) throw Error(ErrorKind::ShapeMismatch, "action without groupoid or ring");
  if (a.ideal.size() != a.G().size() || a.iso.size() != a.G().size()) {
    throw Error(ErrorKind::ShapeMismatch, "action must give one ideal and one iso per arrow");
  }
  const Ideal all = a.A().all();
  for (Arrow g = 0; g < a.G().size(); ++g) {
    if (!a.ideal[g].subset_of(all) || !a.iso[g].dom().subset_of(all) ||
        !a.iso[g].cod().subset_of(all)) {
      throw Error(ErrorKind::ShapeMismatch, "ideal of '" + a.G().name(g) + "' uses unknown atoms",
                  {a.G().name(g)});
    }
  }
}

/// (P1)-(P4). Witnesses are arrow names followed by an atom name.
inline Report verify_partial_action(const PartialAction& a, VerifyMode mode = VerifyMode::First) {
  check_shape(a);
  const Groupoid& G = a.G();
  const SplitRing& A = a.A();
  Report r{{}, mode};
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    if (!a.ideal[g].subset_of(a.ideal[G.tgt(g)])) {
      r.add("P1", {G.name(g)}, "A_g is not an ideal of A_t(g)");
    }
    if (a.iso[g].dom() != a.ideal[G.inv(g)] || a.iso[g].cod() != a.ideal[g]) {
      r.add("P1", {G.name(g)}, "alpha_g is not an isomorphism A_{g^-1} -> A_g");
    }
  }
  for (const Arrow x : G.objects()) {
    if (r.done()) break;
    if (a.iso[x] != PartialRingIso::identity(a.ideal[x])) {
      r.add("P2", {G.name(x)}, "alpha_x is not the identity of A_x");
    }
  }
  // (P3) and (P4) presuppose the shapes from (P1) and (P2).
  if (!r.ok()) return r;
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    for (Arrow h = 0; h < G.size() && !r.done(); ++h) {
      if (!G.composable(g, h)) continue;
      const Arrow gh = G.compose(g, h);
      const Ideal D = a.iso[h].preimage(a.ideal[G.inv(g)] & a.ideal[h]);
      D.for_each([&](std::size_t atom) {
        if (r.done()) return;
        if (!a.ideal[G.inv(gh)].contains(atom)) {
          r.add("P3", {G.name(g), G.name(h), A.atom_name(atom)},
                "alpha_h^-1(A_{g^-1} & A_h) is not inside A_{(gh)^-1}");
          return;
        }
        if (a.iso[g](a.iso[h](atom)) != a.iso[gh](atom)) {
          r.add("P4", {G.name(g), G.name(h), A.atom_name(atom)},
                "alpha_g alpha_h differs from alpha_gh");
        }
      });
    }
  }
  return r;
}

/// Checks alpha_g^-1 = alpha_{g^-1} and alpha_g(A_{g^-1} & A_h) = A_g & A_gh.
inline Report check_inverse_and_image_rules(const PartialAction& a,
                                            VerifyMode mode = VerifyMode::First) {
  const Groupoid& G = a.G();
  Report r{{}, mode};
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    if (a.iso[g].inverse() != a.iso[G.inv(g)]) r.add("inverse", {G.name(g)});
    for (Arrow h = 0; h < G.size() && !r.done(); ++h) {
      if (!G.composable(g, h)) continue;
      const Arrow gh = G.compose(g, h);
      if (a.iso[g].image(a.ideal[G.inv(g)] & a.ideal[h]) != (a.ideal[g] & a.ideal[gh])) {
        r.add("image", {G.name(g), G.name(h)});
      }
    }
  }
  return r;
}

/// A_g = A_t(g) for every g.
inline bool is_global(const PartialAction& a) {
  for (Arrow g = 0; g < a.G().size(); ++g) {
    if (a.ideal[g] != a.ideal[a.G().tgt(g)]) return false;
  }
  return true;
}

/// alpha_g alpha_h = alpha_gh exactly for every composable pair.
inline bool composition_exact(const PartialAction& a) {
  const Groupoid& G = a.G();
  for (Arrow g = 0; g < G.size(); ++g) {
    for (Arrow h = 0; h < G.size(); ++h) {
      if (G.composable(g, h) && compose_partial(a.iso[g], a.iso[h]) != a.iso[G.compose(g, h)]) {
        return false;
      }
    }
  }
  return true;
}

/// Every A_g has a unit 1_g that is a central idempotent of A. In the split
/// model this reduces to 1_g * e_a = e_a on A_g and 1_g * e_a = 0 off it.
inline bool is_unital(const PartialAction& a) {
  const SplitRing& A = a.A();
  for (Arrow g = 0; g < a.G().size(); ++g) {
    const RingElement one = A.idem(a.ideal[g]);
    for (std::size_t atom = 0; atom < A.size(); ++atom) {
      const RingElement e = A.basis(atom);
      const RingElement expect = a.ideal[g].contains(atom) ? e : A.zero();
      if (one * e != expect || e * one != expect) return false;
    }
  }
  return true;
}

inline std::shared_ptr<const Subgroupoid> isotropy_ptr(const Groupoid& G, Arrow x) {
  return std::make_shared<const Subgroupoid>(isotropy(G, x));
}

/// The same ideals and isos reindexed over a full subgroupoid.
inline PartialAction restrict_along(const PartialAction& a, const std::shared_ptr<const Subgroupoid>& sub) {
  PartialAction out{GroupoidPtr(sub, &sub->groupoid), a.ring, {}, {}};
  for (const Arrow g : sub->to_parent) {
    out.ideal.push_back(a.ideal[g]);
    out.iso.push_back(a.iso[g]);
  }
  return out;
}

/// (A_h, alpha_h) for h in G(x): a partial group action on A_x.
inline PartialAction restrict_to_isotropy(const PartialAction& a, Arrow x) {
  return restrict_along(a, isotropy_ptr(a.G(), x));
}

/// First arrow where theta <= alpha fails, i.e. where B_g is not inside A_g
/// or alpha_g does not extend theta_g.
inline std::optional<Arrow> leq_witness(const PartialAction& theta, const PartialAction& alpha) {
  for (Arrow g = 0; g < theta.G().size(); ++g) {
    if (!theta.ideal[g].subset_of(alpha.ideal[g]) || !extends(alpha.iso[g], theta.iso[g])) {
      return g;
    }
  }
  return std::nullopt;
}

inline bool leq(const PartialAction& theta, const PartialAction& alpha) {
  if (theta.G().size() != alpha.G().size()) {
    throw Error(ErrorKind::ShapeMismatch, "leq compares actions of different groupoids");
  }
  return !leq_witness(theta, alpha).has_value();
}

/// A_{tau_y^-1} = A_x and A_{tau_y} = A_y for every object y.
inline bool is_group_type(const PartialAction& a, const Transversal& tau) {
  const Groupoid& G = a.G();
  for (const Arrow y : G.objects()) {
    const Arrow t = tau.at(y);
    if (a.ideal[G.inv(t)] != a.ideal[tau.base] || a.ideal[t] != a.ideal[y]) return false;
  }
  return true;
}

/// A_g inside A_{tau_t(g)} for every non-identity g.
inline bool recover_condition(const PartialAction& a, const Transversal& tau) {
  const Groupoid& G = a.G();
  for (Arrow g = 0; g < G.size(); ++g) {
    if (G.is_object(g)) continue;
    if (!a.ideal[g].subset_of(a.ideal[tau.at(G.tgt(g))])) return false;
  }
  return true;
}

/// A_g inside A_{tau_t(g)} & A_{g tau_s(g)} for every non-identity g.
inline bool recover_condition_strong(const PartialAction& a, const Transversal& tau) {
  const Groupoid& G = a.G();
  for (Arrow g = 0; g < G.size(); ++g) {
    if (G.is_object(g)) continue;
    const Ideal bound = a.ideal[tau.at(G.tgt(g))] & a.ideal[G.compose(g, tau.at(G.src(g)))];
    if (!a.ideal[g].subset_of(bound)) return false;
  }
  return true;
}

/// psi_y : A_y -> A'_y, indexed by object position in G.objects().
struct ParMorphism {
  std::vector<RingHom> psi;

  friend bool operator==(const ParMorphism&, const ParMorphism&) = default;
};

inline ParMorphism identity_morphism(const PartialAction& a) {
  ParMorphism m;
  for (const Arrow y : a.G().objects()) m.psi.push_back(RingHom::identity(a.ideal[y]));
  return m;
}

inline Report verify_par_morphism(const ParMorphism& m, const PartialAction& a,
                                  const PartialAction& b, VerifyMode mode = VerifyMode::First) {
  const Groupoid& G = a.G();
  if (b.G().size() != G.size() || m.psi.size() != G.objects().size()) {
    throw Error(ErrorKind::ShapeMismatch, "morphism family does not match the groupoid");
  }
  Report r{{}, mode};
  const auto& psi = [&](Arrow y) -> const RingHom& { return m.psi[G.object_index(y)]; };
  for (const Arrow y : G.objects()) {
    if (r.done()) break;
    const RingHom& f = psi(y);
    if (f.dom() != a.ideal[y]) r.add("domain", {G.name(y)}, "psi_y is not defined on A_y");
    if (!f.well_defined()) r.add("ring-map", {G.name(y)}, "atom images overlap");
    if (!f.image(f.dom()).subset_of(b.ideal[y])) r.add("codomain", {G.name(y)}, "psi_y leaves A'_y");
  }
  if (!r.ok() && mode == VerifyMode::First) return r;
  for (Arrow g = 0; g < G.size() && !r.done(); ++g) {
    const RingHom& ft = psi(G.tgt(g));
    const RingHom& fs = psi(G.src(g));
    if (!ft.image(a.ideal[g]).subset_of(b.ideal[g])) {
      r.add("containment", {G.name(g)}, "psi_t(g)(A_g) is not inside A'_g");
      continue;
    }
    a.ideal[G.inv(g)].for_each([&](std::size_t atom) {
      if (r.done()) return;
      const Ideal src_image = fs.image_of_atom(atom);
      const Ideal lhs = src_image.subset_of(b.iso[g].dom()) ? b.iso[g].image(src_image) : Ideal{~0ULL};
      const Ideal rhs = ft.image_of_atom(a.iso[g](atom));
      if (lhs != rhs) {
        r.add("intertwining", {G.name(g), a.A().atom_name(atom)},
              "alpha'_g psi_s(g) differs from psi_t(g) alpha_g");
      }
    });
  }
  return r;
}

}  // namespace pga
