#pragma once

// Built-in instances: the hexagon groupoid, a non-recoverable action on
// F_3^6, a global action of Gamma^2_{Z2}, a datum on F_3^4 built from two
// permutations and an idempotent, and a globalization package for it.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pga/datum.hpp"
#include "pga/globalization.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/split_ring.hpp"

namespace pga {

/// Same table under new arrow names; unlisted names are kept.
inline Groupoid relabel(const Groupoid& G, const std::map<std::string, std::string>& names) {
  const auto rn = [&](const std::string& s) {
    const auto it = names.find(s);
    return it == names.end() ? s : it->second;
  };
  RawGroupoid raw = G.to_raw();
  for (auto& o : raw.objects) o = rn(o);
  for (auto& a : raw.arrows) a = {rn(a.name), rn(a.src), rn(a.tgt)};
  for (auto& p : raw.products) p = {rn(p.left), rn(p.right), rn(p.result)};
  return validate_groupoid(raw);
}

/// Objects x, y; g in G(x), h in G(y), l, m : x -> y with g^2 = x,
/// h^2 = y and lg = m = hl. This is Gamma^2_{Z2} under the names below.
inline RawGroupoid hex_raw() {
  RawGroupoid raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"g", "x", "x"},    {"h", "y", "y"},    {"l", "x", "y"},
                {"m", "x", "y"},    {"l^-1", "y", "x"}, {"m^-1", "y", "x"}};
  raw.products = {
      {"g", "g", "x"},       {"h", "h", "y"},       {"l", "g", "m"},       {"h", "l", "m"},
      {"m", "g", "l"},       {"h", "m", "l"},       {"l^-1", "l", "x"},    {"l", "l^-1", "y"},
      {"m^-1", "m", "x"},    {"m", "m^-1", "y"},    {"l^-1", "m", "g"},    {"m^-1", "l", "g"},
      {"m", "l^-1", "h"},    {"l", "m^-1", "h"},    {"g", "l^-1", "m^-1"}, {"g", "m^-1", "l^-1"},
      {"l^-1", "h", "m^-1"}, {"m^-1", "h", "l^-1"},
  };
  return raw;
}

inline std::shared_ptr<const Groupoid> fx_hex() {
  static const auto G = std::make_shared<const Groupoid>(validate_groupoid(hex_raw()));
  return G;
}

inline std::shared_ptr<const Groupoid> fx_gamma2() {
  static const auto G = std::make_shared<const Groupoid>(build_gamma(2, cyclic_group(2)));
  return G;
}

namespace detail {

inline PartialRingIso pairs_by_name(const SplitRing& A,
                                    std::initializer_list<std::pair<const char*, const char*>> m) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (const auto& [a, b] : m) p.emplace_back(A.atom(a), A.atom(b));
  return PartialRingIso::from_pairs(p);
}

inline void set_arrow(PartialAction& a, const std::string& g, const PartialRingIso& f) {
  const Arrow id = a.G().at(g);
  a.iso[id] = f;
  a.ideal[id] = f.cod();
  a.iso[a.G().inv(id)] = f.inverse();
  a.ideal[a.G().inv(id)] = f.dom();
}

}  // namespace detail

/// Partial action of the hexagon groupoid on F_3^6: A_x = <e1,e2,e3>,
/// A_y = <e4,e5,e6>, A_g = <e1>, A_h = <e6>, alpha_l : e2 -> e4,
/// alpha_m : e3 -> e5, identities elsewhere.
inline PartialAction fx_b2(std::uint32_t p = 3) {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, 6));
  PartialAction a{fx_hex(), A, {}, {}};
  a.ideal.assign(a.G().size(), Ideal{});
  a.iso.assign(a.G().size(), PartialRingIso{});
  using detail::pairs_by_name;
  detail::set_arrow(a, "x", PartialRingIso::identity(A->ideal({"e1", "e2", "e3"})));
  detail::set_arrow(a, "y", PartialRingIso::identity(A->ideal({"e4", "e5", "e6"})));
  detail::set_arrow(a, "g", PartialRingIso::identity(A->ideal({"e1"})));
  detail::set_arrow(a, "h", PartialRingIso::identity(A->ideal({"e6"})));
  detail::set_arrow(a, "l", pairs_by_name(*A, {{"e2", "e4"}}));
  detail::set_arrow(a, "m", pairs_by_name(*A, {{"e3", "e5"}}));
  return a;
}

/// Global action of Gamma^2_{Z2} on F_3^4 with atoms a1, a2 (object 1) and
/// b1, b2 (object 2): the generator of Z2 swaps a1 and a2, tau_2 = (2,e,1)
/// sends a_i to b_i. Each arrow (i,g,j) acts as tau_i g tau_j^-1, computed
/// here as a composite of total maps.
inline PartialAction fx_gamma(std::uint32_t p = 3) {
  const auto A = std::make_shared<const SplitRing>(p, std::vector<std::string>{"a1", "a2", "b1", "b2"});
  const auto G = fx_gamma2();
  PartialAction a{G, A, {}, {}};
  // Atom positions: a1 = 0, a2 = 1, b1 = 2, b2 = 3. Coordinates (object, slot).
  const auto atom = [](std::size_t obj, std::size_t slot) { return 2 * obj + slot; };
  for (Arrow g = 0; g < G->size(); ++g) {
    const std::string& n = G->name(g);
    std::size_t i = 0, j = 0, flip = 0;
    if (G->is_object(g)) {
      i = j = std::stoul(n) - 1;
    } else {
      i = static_cast<std::size_t>(n[1] - '1');
      flip = n[3] == 'c' ? 1 : 0;
      j = static_cast<std::size_t>(n[5] - '1');
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t slot = 0; slot < 2; ++slot) pairs.emplace_back(atom(j, slot), atom(i, slot ^ flip));
    a.iso.push_back(PartialRingIso::from_pairs(pairs));
    a.ideal.push_back(a.iso.back().cod());
  }
  return a;
}

/// Transversal {tau_x = x, tau_y = l} of the hexagon, or tau_y = m.
inline Transversal hex_tau(const std::string& ty = "l") {
  const auto& G = *fx_hex();
  Transversal t{G.at("x"), std::vector<Arrow>(G.size(), kNoArrow)};
  t.pick[G.at("x")] = G.at("x");
  t.pick[G.at("y")] = G.at(ty);
  return t;
}

/// sigma = (1 2), gamma = (1 4)(2 3) on the atoms of F_p^4, zero-based.
inline std::vector<std::size_t> dat_sigma() { return {1, 0, 2, 3}; }
inline std::vector<std::size_t> dat_gamma() { return {3, 2, 1, 0}; }

/// Datum on the hexagon at (x, tau_y = l) over F_3^4, from the central
/// idempotent e = e1 + e3: I_x = Ae = <e1,e3>, I_y = A gamma(e) = <e2,e4>,
/// gamma_l = gamma on I_x, gamma_g = sigma on A e sigma(e) = <e3>.
inline Datum fx_dat(std::uint32_t p = 3) {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, 4));
  Datum d = make_datum(fx_hex(), A, hex_tau("l"));
  const auto& G = d.G();
  const Ideal Ix = A->ideal({"e1", "e3"});
  const Ideal Iy = PartialRingIso::from_permutation(dat_gamma(), Ix).cod();
  const Ideal Ig = Ix & PartialRingIso::from_permutation(dat_sigma(), Ix).cod();
  d.I[d.pos(G.at("x"))] = Ix;
  d.I[d.pos(G.at("y"))] = Iy;
  d.gamma_tau[d.pos(G.at("x"))] = PartialRingIso::identity(Ix);
  d.gamma_tau[d.pos(G.at("y"))] = PartialRingIso::from_permutation(dat_gamma(), Ix);
  const auto& loops = *d.loops;
  d.gamma_x.ideal[loops.from_parent[G.at("x")]] = Ix;
  d.gamma_x.iso[loops.from_parent[G.at("x")]] = PartialRingIso::identity(Ix);
  d.gamma_x.ideal[loops.from_parent[G.at("g")]] = Ig;
  d.gamma_x.iso[loops.from_parent[G.at("g")]] = PartialRingIso::from_permutation(dat_sigma(), Ig);
  return d;
}

/// Globalization package for fx_dat inside B = A: J_x = <e1,e2,e3> =
/// I_x + sigma(I_x), J_y = gamma(J_x) = <e2,e3,e4>, tilde gamma_g = sigma and
/// tilde gamma_{tau_y} = gamma, both restricted to J_x.
inline GlobalizationData fx_glob(std::uint32_t p = 3) {
  const Datum d = fx_dat(p);
  const auto& G = d.G();
  const SplitRing& A = d.A();
  const Ideal Jx = A.ideal({"e1", "e2", "e3"});
  const PartialRingIso ty = PartialRingIso::from_permutation(dat_gamma(), Jx);
  GlobalizationData gd{d, d.ring, identity_embedding(A.size()), {}, {}, {}};
  gd.J = {Jx, ty.cod()};
  if (d.pos(G.at("x")) != 0) std::swap(gd.J[0], gd.J[1]);
  gd.tilde_tau.assign(2, PartialRingIso::identity(Jx));
  gd.tilde_tau[d.pos(G.at("y"))] = ty;
  gd.tilde_x = PartialAction{d.gamma_x.groupoid, d.ring, {}, {}};
  for (const Arrow h : d.loops->to_parent) {
    gd.tilde_x.iso.push_back(h == G.at("g") ? PartialRingIso::from_permutation(dat_sigma(), Jx)
                                            : PartialRingIso::identity(Jx));
    gd.tilde_x.ideal.push_back(Jx);
  }
  return gd;
}

/// The same package with J_x = J_y = A, tilde gamma_g = sigma and tilde
/// gamma_{tau_y} = gamma on all of A. Here I_x + sigma(I_x) misses e4, so
/// the group part fails (G4).
inline GlobalizationData fx_glob_whole_ring(std::uint32_t p = 3) {
  GlobalizationData gd = fx_glob(p);
  const Ideal all = gd.datum.A().all();
  const auto& G = gd.datum.G();
  gd.J = {all, all};
  gd.tilde_tau.assign(2, PartialRingIso::identity(all));
  gd.tilde_tau[gd.datum.pos(G.at("y"))] = PartialRingIso::from_permutation(dat_gamma(), all);
  for (std::size_t i = 0; i < gd.tilde_x.iso.size(); ++i) {
    const bool is_g = gd.datum.loops->to_parent[i] == G.at("g");
    gd.tilde_x.iso[i] = is_g ? PartialRingIso::from_permutation(dat_sigma(), all)
                             : PartialRingIso::identity(all);
    gd.tilde_x.ideal[i] = all;
  }
  return gd;
}

/// Datum with every ideal equal to A and identity maps, on the hexagon.
inline Datum full_identity_datum(std::uint32_t p = 3, std::size_t n = 2) {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, n));
  Datum d = make_datum(fx_hex(), A, hex_tau("l"));
  const Ideal all = A->all();
  for (auto& I : d.I) I = all;
  for (auto& f : d.gamma_tau) f = PartialRingIso::identity(all);
  for (auto& I : d.gamma_x.ideal) I = all;
  for (auto& f : d.gamma_x.iso) f = PartialRingIso::identity(all);
  return d;
}

/// One-object trivial group acting trivially on F_p.
inline PartialAction trivial_instance(std::uint32_t p = 3) {
  RawGroupoid raw;
  raw.objects = {"e"};
  const auto G = std::make_shared<const Groupoid>(validate_groupoid(raw));
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, 1));
  return trivial_action(G, A, A->all());
}

}  // namespace pga
