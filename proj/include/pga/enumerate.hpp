#pragma once

// Exhaustive enumeration of partial actions and datums over small groupoids
// and split rings, with a candidate cap, plus seeded sampling.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "pga/datum.hpp"
#include "pga/groupoid.hpp"
#include "pga/partial_action.hpp"
#include "pga/split_ring.hpp"

namespace pga {

inline constexpr std::size_t kDefaultCensusCap = 1'000'000;

struct EnumStats {
  std::size_t candidates = 0;  // complete assignments examined
  std::size_t emitted = 0;
  bool truncated = false;
};

/// All sub-ideals of I, in increasing mask order.
inline std::vector<Ideal> sub_ideals(Ideal I) {
  std::vector<Ideal> out;
  std::uint64_t s = 0;
  while (true) {
    out.push_back(Ideal{s});
    if (s == I.mask) break;
    s = (s - I.mask) & I.mask;
  }
  return out;
}

/// Every partial bijection with domain inside S and range inside T.
inline std::vector<PartialRingIso> partial_bijections(Ideal S, Ideal T) {
  std::vector<PartialRingIso> out;
  const std::vector<std::size_t> src = S.atoms();
  const std::vector<std::size_t> dst = T.atoms();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::uint64_t used = 0;
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == src.size()) {
      out.push_back(PartialRingIso::from_pairs(pairs));
      return;
    }
    self(self, i + 1);
    for (const std::size_t b : dst) {
      if ((used >> b) & 1U) continue;
      used |= std::uint64_t{1} << b;
      pairs.emplace_back(src[i], b);
      self(self, i + 1);
      pairs.pop_back();
      used &= ~(std::uint64_t{1} << b);
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

// alpha_g(A_{g^-1} & A_h) = A_g & A_gh and alpha_g alpha_h = alpha_gh where
// defined, for one composable pair. Necessary for (P1)-(P4).
inline bool pair_consistent(const PartialAction& a, Arrow g, Arrow h) {
  const Groupoid& G = a.G();
  const Arrow gh = G.compose(g, h);
  const PartialRingIso& ag = a.iso[g];
  const PartialRingIso& ah = a.iso[h];
  const PartialRingIso& agh = a.iso[gh];
  if (ag.image(ag.dom() & ah.cod()) != (ag.cod() & agh.cod())) return false;
  bool ok = true;
  ah.preimage(ag.dom()).for_each([&](std::size_t atom) {
    if (ok && (!agh.dom().contains(atom) || agh(atom) != ag(ah(atom)))) ok = false;
  });
  return ok;
}

}  // namespace detail

/// Calls f(action) for every partial action of G on A whose object ideals
/// are drawn from object_choices[object index]. Arrows are assigned in pairs
/// {g, g^-1}; each partial assignment is pruned by pair_consistent on the
/// triples it completes, and each complete one is checked with
/// verify_partial_action.
template <class F>
EnumStats for_each_partial_action(GroupoidPtr Gp, RingPtr A, const std::vector<std::vector<Ideal>>& object_choices,
                                  std::size_t cap, F&& f) {
  const Groupoid& G = *Gp;
  EnumStats st;
  PartialAction a{Gp, A, std::vector<Ideal>(G.size()), std::vector<PartialRingIso>(G.size())};
  std::vector<Arrow> order;
  for (Arrow g = 0; g < G.size(); ++g) {
    if (!G.is_object(g) && g <= G.inv(g)) order.push_back(g);
  }
  // checks[i]: composable pairs (g, h) whose arrows g, h, gh are all
  // assigned once order[i] and its inverse are, and not before.
  std::vector<Arrow> step(G.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) step[order[i]] = step[G.inv(order[i])] = static_cast<Arrow>(i + 1);
  std::vector<std::vector<std::pair<Arrow, Arrow>>> checks(order.size() + 1);
  for (Arrow g = 0; g < G.size(); ++g) {
    for (Arrow h = 0; h < G.size(); ++h) {
      if (!G.composable(g, h)) continue;
      const Arrow last = std::max({step[g], step[h], step[G.compose(g, h)]});
      if (last > 0) checks[last - 1].emplace_back(g, h);
    }
  }
  // (map, inverse) lists per (S, T), built on first use.
  using MapPair = std::pair<PartialRingIso, PartialRingIso>;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<MapPair>> bijections;
  const auto maps_between = [&](Ideal S, Ideal T) -> const std::vector<MapPair>& {
    auto it = bijections.find({S.mask, T.mask});
    if (it == bijections.end()) {
      std::vector<MapPair> v;
      for (PartialRingIso& m : partial_bijections(S, T)) {
        PartialRingIso mi = m.inverse();
        v.emplace_back(std::move(m), std::move(mi));
      }
      it = bijections.emplace(std::pair{S.mask, T.mask}, std::move(v)).first;
    }
    return it->second;
  };
  const auto consistent_at = [&](std::size_t i) {
    for (const auto& [g, h] : checks[i]) {
      if (!detail::pair_consistent(a, g, h)) return false;
    }
    return true;
  };
  const auto arrows = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) {
      ++st.candidates;
      if (verify_partial_action(a).ok()) {
        ++st.emitted;
        f(static_cast<const PartialAction&>(a));
      }
      if (st.candidates >= cap) {
        st.truncated = true;
        return false;
      }
      return true;
    }
    const Arrow g = order[i];
    const Arrow gi = G.inv(g);
    for (const auto& [m, mi] : maps_between(a.ideal[G.src(g)], a.ideal[G.tgt(g)])) {
      if (g == gi && mi != m) continue;
      a.iso[g] = m;
      a.ideal[g] = m.cod();
      a.iso[gi] = mi;
      a.ideal[gi] = m.dom();
      if (consistent_at(i) && !self(self, i + 1)) return false;
    }
    return true;
  };
  const auto objects = [&](auto&& self, std::size_t k) -> bool {
    if (k == G.objects().size()) return arrows(arrows, 0);
    const Arrow y = G.objects()[k];
    for (const Ideal I : object_choices[k]) {
      a.ideal[y] = I;
      a.iso[y] = PartialRingIso::identity(I);
      if (!self(self, k + 1)) return false;
    }
    return true;
  };
  objects(objects, 0);
  return st;
}

/// Every partial action of G on A.
template <class F>
EnumStats for_each_partial_action(GroupoidPtr G, RingPtr A, std::size_t cap, F&& f) {
  const std::vector<std::vector<Ideal>> choices(G->objects().size(), sub_ideals(A->all()));
  return for_each_partial_action(std::move(G), std::move(A), choices, cap, std::forward<F>(f));
}

struct DatumFilter {
  bool gd_only = false;     // gamma_{tau_y} : I_x -> I_y total
  bool direct_sum = false;  // the I_y are disjoint and cover A
};

/// Calls f(datum) for every datum at tau passing verify_datum (and the
/// filter). The group part ranges over all partial actions of G(x) on I_x.
template <class F>
EnumStats for_each_datum(GroupoidPtr Gp, RingPtr A, const Transversal& tau, std::size_t cap, F&& f,
                         DatumFilter filter = {}) {
  const Groupoid& G = *Gp;
  EnumStats st;
  Datum d = make_datum(Gp, A, tau);
  const Arrow x = tau.base;
  const std::size_t nobj = G.objects().size();
  std::map<std::uint64_t, std::vector<PartialAction>> group_actions;
  const auto actions_on = [&](Ideal Ix) -> const std::vector<PartialAction>& {
    auto it = group_actions.find(Ix.mask);
    if (it != group_actions.end()) return it->second;
    std::vector<PartialAction> acts;
    for_each_partial_action(d.gamma_x.groupoid, A, {{Ix}}, cap,
                            [&](const PartialAction& pa) { acts.push_back(pa); });
    return group_actions.emplace(Ix.mask, std::move(acts)).first->second;
  };
  bool stop = false;
  const auto maps = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == nobj) {
      for (const PartialAction& ga : actions_on(d.ideal(x))) {
        d.gamma_x.ideal = ga.ideal;
        d.gamma_x.iso = ga.iso;
        ++st.candidates;
        if (verify_datum(d).ok()) {
          ++st.emitted;
          f(static_cast<const Datum&>(d));
        }
        if (st.candidates >= cap) {
          st.truncated = true;
          stop = true;
          return;
        }
      }
      return;
    }
    const Arrow y = G.objects()[k];
    if (y == x) {
      d.gamma_tau[k] = PartialRingIso::identity(d.I[k]);
      self(self, k + 1);
      return;
    }
    for (const PartialRingIso& m : partial_bijections(d.ideal(x), d.I[k])) {
      if (filter.gd_only && (m.dom() != d.ideal(x) || m.cod() != d.I[k])) continue;
      d.gamma_tau[k] = m;
      self(self, k + 1);
      if (stop) return;
    }
  };
  const auto ideals = [&](auto&& self, std::size_t k, Ideal used) -> void {
    if (stop) return;
    if (k == nobj) {
      if (filter.direct_sum && used != A->all()) return;
      maps(maps, 0);
      return;
    }
    for (const Ideal I : sub_ideals(A->all())) {
      if (filter.direct_sum && !(I & used).empty()) continue;
      d.I[k] = I;
      self(self, k + 1, used | I);
      if (stop) return;
    }
  };
  ideals(ideals, 0, Ideal{});
  return st;
}

/// All datums from for_each_datum, up to the cap.
inline std::vector<Datum> all_datums(GroupoidPtr G, RingPtr A, const Transversal& tau,
                                     std::size_t cap = kDefaultCensusCap, DatumFilter filter = {}) {
  std::vector<Datum> out;
  for_each_datum(std::move(G), std::move(A), tau, cap, [&](const Datum& d) { out.push_back(d); }, filter);
  return out;
}

/// `count` draws with replacement from the enumerated datums, seeded.
inline std::vector<Datum> sample_datums(GroupoidPtr G, RingPtr A, const Transversal& tau, std::size_t count,
                                        std::uint64_t seed, DatumFilter filter = {}) {
  const std::vector<Datum> pool = all_datums(std::move(G), std::move(A), tau, kDefaultCensusCap, filter);
  std::vector<Datum> out;
  if (pool.empty()) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[rng() % pool.size()]);
  return out;
}

}  // namespace pga
