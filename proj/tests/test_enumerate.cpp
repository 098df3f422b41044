#include <catch_amalgamated.hpp>

#include <set>

#include "pga/enumerate.hpp"
#include "pga/fixtures.hpp"

using namespace pga;

namespace {

// Every assignment of object ideals and partial bijections per arrow, with
// no pruning, kept when verify_partial_action passes.
std::size_t brute_force_actions(GroupoidPtr G, RingPtr A) {
  const Groupoid& H = *G;
  std::vector<Arrow> arrows;
  for (Arrow g = 0; g < H.size(); ++g) {
    if (!H.is_object(g)) arrows.push_back(g);
  }
  PartialAction a{G, A, std::vector<Ideal>(H.size()), std::vector<PartialRingIso>(H.size())};
  std::size_t count = 0;
  const auto rec_arrows = [&](auto&& self, std::size_t i) -> void {
    if (i == arrows.size()) {
      count += verify_partial_action(a).ok() ? 1 : 0;
      return;
    }
    const Arrow g = arrows[i];
    for (const PartialRingIso& m : partial_bijections(A->all(), A->all())) {
      a.iso[g] = m;
      a.ideal[g] = m.cod();
      self(self, i + 1);
    }
  };
  const auto rec_objects = [&](auto&& self, std::size_t k) -> void {
    if (k == H.objects().size()) {
      rec_arrows(rec_arrows, 0);
      return;
    }
    for (const Ideal I : sub_ideals(A->all())) {
      a.ideal[H.objects()[k]] = I;
      a.iso[H.objects()[k]] = PartialRingIso::identity(I);
      self(self, k + 1);
    }
  };
  rec_objects(rec_objects, 0);
  return count;
}

}  // namespace

TEST_CASE("sub-ideals and partial bijections") {
  CHECK(sub_ideals(Ideal::of({0, 2})).size() == 4);
  CHECK(sub_ideals(Ideal{}).size() == 1);
  // Partial injections of an n-set into an m-set: sum_k C(n,k) m!/(m-k)!.
  CHECK(partial_bijections(Ideal::first(2), Ideal::first(2)).size() == 7);
  CHECK(partial_bijections(Ideal::first(3), Ideal::first(3)).size() == 34);
  CHECK(partial_bijections(Ideal::first(4), Ideal::first(4)).size() == 209);
  CHECK(partial_bijections(Ideal::first(2), Ideal::first(3)).size() == 13);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> distinct;
  for (const auto& m : partial_bijections(Ideal::first(3), Ideal::first(3))) distinct.insert(m.pairs());
  CHECK(distinct.size() == 34);
}

TEST_CASE("pruned enumeration matches brute force") {
  SECTION("cyclic group of order 3 on two atoms") {
    const auto G = std::make_shared<const Groupoid>(cyclic_group(3));
    const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(2, 2));
    const EnumStats st = for_each_partial_action(G, A, kDefaultCensusCap, [](const PartialAction&) {});
    CHECK_FALSE(st.truncated);
    CHECK(st.emitted == brute_force_actions(G, A));
  }
  SECTION("hexagon on one atom") {
    const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 1));
    const EnumStats st = for_each_partial_action(fx_hex(), A, kDefaultCensusCap, [](const PartialAction&) {});
    CHECK(st.emitted == brute_force_actions(fx_hex(), A));
  }
  SECTION("coarse groupoid on two objects, two atoms") {
    const auto G = std::make_shared<const Groupoid>(build_coarse({"u", "v"}));
    const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 2));
    const EnumStats st = for_each_partial_action(G, A, kDefaultCensusCap, [](const PartialAction&) {});
    CHECK(st.emitted == brute_force_actions(G, A));
  }
}

TEST_CASE("enumerated actions include the fixtures") {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 4));
  const PartialAction want = ext(fx_dat());
  bool found = false;
  std::size_t n = 0;
  const EnumStats st = for_each_partial_action(fx_hex(), A, kDefaultCensusCap, [&](const PartialAction& a) {
    ++n;
    if (a.ideal == want.ideal && a.iso == want.iso) found = true;
  });
  CHECK(found);
  CHECK(n == st.emitted);
  CHECK_FALSE(st.truncated);
}

TEST_CASE("cap truncates") {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 3));
  const EnumStats st = for_each_partial_action(fx_hex(), A, 10, [](const PartialAction&) {});
  CHECK(st.truncated);
  CHECK(st.candidates == 10);
}

TEST_CASE("datum enumeration") {
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 4));
  const auto all = all_datums(fx_hex(), A, hex_tau("l"));
  CHECK(std::find(all.begin(), all.end(), fx_dat()) != all.end());
  for (const Datum& d : all) REQUIRE(verify_datum(d).ok());
  const auto gd = all_datums(fx_hex(), A, hex_tau("l"), kDefaultCensusCap, DatumFilter{true, true});
  CHECK(std::find(gd.begin(), gd.end(), fx_dat()) != gd.end());
  for (const Datum& d : gd) CHECK(is_gd(d));
  CHECK(gd.size() < all.size());

  const auto s1 = sample_datums(fx_hex(), A, hex_tau("l"), 20, 7);
  const auto s2 = sample_datums(fx_hex(), A, hex_tau("l"), 20, 7);
  CHECK(s1.size() == 20);
  CHECK(s1 == s2);
}
