#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "pga/fixtures.hpp"
#include "pga/globalization.hpp"

using namespace pga;

namespace {

using Pair = std::pair<Arrow, std::size_t>;
using Partition = std::set<std::set<Pair>>;

// Classes of (h, a) by graph search over the generating relation in both
// directions.
Partition closure_oracle(const PartialAction& pa) {
  const Groupoid& H = pa.G();
  const Arrow e = H.objects().front();
  std::set<Pair> todo;
  for (Arrow h = 0; h < H.size(); ++h) {
    pa.ideal[e].for_each([&](std::size_t a) { todo.insert({h, a}); });
  }
  Partition out;
  while (!todo.empty()) {
    std::set<Pair> cls{*todo.begin()};
    std::vector<Pair> stack{*todo.begin()};
    while (!stack.empty()) {
      const auto [h, a] = stack.back();
      stack.pop_back();
      std::vector<Pair> nbrs;
      for (Arrow l = 0; l < H.size(); ++l) {
        if (pa.iso[l].dom().contains(a)) nbrs.push_back({H.compose(h, H.inv(l)), pa.iso[l](a)});
        // (h, a) is the right side of (h l, gamma_l^-1(a)) when a is in the range.
        if (pa.iso[l].cod().contains(a)) nbrs.push_back({H.compose(h, l), pa.iso[l].inverse()(a)});
      }
      for (const Pair& q : nbrs) {
        if (cls.insert(q).second) stack.push_back(q);
      }
    }
    for (const Pair& q : cls) todo.erase(q);
    out.insert(cls);
  }
  return out;
}

Partition library_partition(const GroupGlobalization& gg) {
  Partition out;
  for (const auto& c : gg.classes) out.insert(std::set<Pair>(c.begin(), c.end()));
  return out;
}

PartialAction z2_on(std::uint32_t p, std::size_t n, Ideal carrier, Ideal fixed) {
  const auto H = std::make_shared<const Groupoid>(build_gamma(1, cyclic_group(2)));
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(p, n));
  PartialAction a{H, A, {}, {}};
  for (Arrow k = 0; k < H->size(); ++k) {
    const Ideal I = H->is_object(k) ? carrier : fixed;
    a.iso.push_back(PartialRingIso::identity(I));
    a.ideal.push_back(I);
  }
  return a;
}

}  // namespace

TEST_CASE("group globalization of the datum's group part") {
  const Datum d = fx_dat();
  const GroupGlobalization gg = globalize_group(d.gamma_x);
  CHECK(gg.J->size() == 3);
  CHECK(library_partition(gg) == closure_oracle(d.gamma_x));
  const Arrow e = d.loops->from_parent[d.G().at("x")];
  const Arrow s = d.loops->from_parent[d.G().at("g")];
  CHECK(closure_oracle(d.gamma_x) ==
        Partition{{{e, 0}}, {{s, 0}}, {{e, 2}, {s, 2}}});
  CHECK(verify_globalization(d.gamma_x, gg.embed, gg.action, VerifyMode::All).ok());
  CHECK(is_global(gg.action));
}

TEST_CASE("Z2 fixing one atom of a two-atom carrier") {
  const PartialAction a = z2_on(3, 2, Ideal::of({0, 1}), Ideal::of({0}));
  REQUIRE(verify_partial_action(a).ok());
  const GroupGlobalization gg = globalize_group(a);
  CHECK(gg.J->size() == 3);
  CHECK(library_partition(gg) == closure_oracle(a));
  CHECK(verify_globalization(a, gg.embed, gg.action).ok());
}

TEST_CASE("global group actions globalize to themselves") {
  const PartialAction a = fx_gamma();
  const PartialAction g1 = restrict_to_isotropy(a, a.G().at("1"));
  const GroupGlobalization gg = globalize_group(g1);
  CHECK(gg.J->size() == 2);
  CHECK(gg.J->atom_name(gg.embed[0]) == "a1");
  CHECK(gg.J->atom_name(gg.embed[1]) == "a2");
  for (Arrow k = 0; k < g1.G().size(); ++k) {
    for (const std::size_t atom : {0U, 1U}) CHECK(gg.action.iso[k](gg.embed[atom]) == gg.embed[g1.iso[k](atom)]);
  }
}

TEST_CASE("random partial group actions: closure, (G1)-(G4) and minimality") {
  std::mt19937_64 rng(17);
  const auto H = std::make_shared<const Groupoid>(build_gamma(1, cyclic_group(3)));
  const auto A = std::make_shared<const SplitRing>(SplitRing::numbered(3, 4));
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    // The c-domain is random; c^2 is forced by (P4) to be c^-1.
    PartialAction a = trivial_action(H, A, A->all());
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Ideal dom{rng() & 0xF};
    const Arrow c = H->at("(1,c,1)");
    const Arrow c2 = H->at("(1,c^2,1)");
    a.iso[c] = PartialRingIso::from_permutation(perm, dom);
    a.ideal[c] = a.iso[c].cod();
    a.iso[c2] = a.iso[c].inverse();
    a.ideal[c2] = a.iso[c2].cod();
    if (!verify_partial_action(a).ok()) continue;
    ++checked;
    const GroupGlobalization gg = globalize_group(a);
    CHECK(library_partition(gg) == closure_oracle(a));
    CHECK(verify_globalization(a, gg.embed, gg.action).ok());
    for (const auto& [atom, r] : deletion_search(a, gg.embed, gg.action)) CHECK_FALSE(r.ok());
  }
  CHECK(checked >= 20);
}

TEST_CASE("globalization package of the datum fixture") {
  const GlobalizationData gd = fx_glob();
  const PartialAction beta = build_globalization(gd);
  const PartialAction theta = ext(gd.datum);
  const Report r = verify_globalization(theta, gd.embed, beta, VerifyMode::All);
  INFO(r.describe());
  CHECK(r.ok());
  CHECK(is_global(beta));

  // Each beta_g is a total permutation of A restricted to J_s(g).
  const std::vector<std::size_t> s = dat_sigma();
  const std::vector<std::size_t> g = dat_gamma();
  const std::vector<std::size_t> gi{3, 2, 1, 0};
  std::vector<std::size_t> gs(4), gsg(4), sgi(4);
  for (std::size_t i = 0; i < 4; ++i) {
    gs[i] = g[s[i]];
    gsg[i] = g[s[gi[i]]];
    sgi[i] = s[gi[i]];
  }
  const std::map<std::string, std::vector<std::size_t>> expect{
      {"x", {0, 1, 2, 3}}, {"y", {0, 1, 2, 3}}, {"g", s},       {"h", gsg},
      {"l", g},      {"m", gs},           {"l^-1", gi}, {"m^-1", sgi}};
  const auto& G = gd.datum.G();
  for (const auto& [name, p] : expect) {
    INFO(name);
    const Arrow a = G.at(name);
    const Ideal Js = gd.J[gd.datum.pos(G.src(a))];
    CHECK(beta.iso[a] == PartialRingIso::from_permutation(p, Js));
  }
  // beta_h swaps e3 and e4.
  const Arrow h = G.at("h");
  CHECK(beta.iso[h](2) == 3);
  CHECK(beta.iso[h](3) == 2);
  CHECK(beta.iso[h](1) == 1);
}

TEST_CASE("J = A for the datum fixture breaks the group globalization") {
  const GlobalizationData gd = fx_glob_whole_ring();
  try {
    build_globalization(gd);
    FAIL("expected C2Violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::C2Violation);
    REQUIRE_FALSE(e.witness().empty());
    CHECK(e.witness().front() == "G4");
  }
  // The beta built from the same maps also fails (G4) against Ext.
  const Datum& d = gd.datum;
  const auto& G = d.G();
  PartialAction beta{d.groupoid, d.ring, {}, {}};
  for (Arrow g = 0; g < G.size(); ++g) {
    beta.iso.push_back(compose_partial(gd.tilde_tau[d.pos(G.tgt(g))],
                                       gd.tilde_x.iso[d.loops->from_parent[corner(G, g, d.tau)]],
                                       gd.tilde_tau[d.pos(G.src(g))].inverse()));
    beta.ideal.push_back(d.A().all());
  }
  CHECK(is_global(beta));
  const Report r = verify_globalization(ext(d), beta, VerifyMode::All);
  CHECK(r.has("G4"));
  CHECK_FALSE(r.has("G3"));
}

TEST_CASE("negative globalizations") {
  const GlobalizationData gd = fx_glob();
  const PartialAction theta = ext(gd.datum);
  PartialAction beta = build_globalization(gd);
  const Arrow h = theta.G().at("h");
  beta.iso[h] = PartialRingIso::identity(beta.ideal[h]);
  const Report r = verify_globalization(theta, beta, VerifyMode::All);
  // theta_h is the identity on ke2, so (G3) still holds at h; the identity
  // map fails (G2) there instead, and beta stops being global.
  REQUIRE(r.violations.size() == 2);
  CHECK(r.violations[0] == Violation{"G2", {"h"}, r.violations[0].detail});
  CHECK_FALSE(r.has("G3"));
  CHECK(r.has("global"));

  // A global action is its own globalization.
  for (const PartialAction& a : {fx_gamma(), trivial_instance()}) CHECK(verify_globalization(a, a).ok());

  // (C1), (C3) failures.
  GlobalizationData bad = fx_glob();
  bad.tilde_tau[bad.datum.pos(bad.datum.G().at("y"))] = PartialRingIso::identity(bad.J[0]);
  CHECK_THROWS_MATCHES(build_globalization(bad), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::C3Violation; }));
  GlobalizationData nc1 = fx_glob();
  nc1.datum = res(fx_b2(), hex_tau("l"));
  nc1.embed = identity_embedding(6);
  CHECK_THROWS_MATCHES(build_globalization(nc1), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::C1Violation; }));
}

TEST_CASE("synthesized globalization data") {
  SECTION("datum fixture") {
    const Datum d = fx_dat();
    const GlobalizationData gd = synthesize_globalization(d);
    CHECK(gd.B->size() == 6);
    const PartialAction beta = build_globalization(gd);
    CHECK(verify_globalization(ext(d), gd.embed, beta, VerifyMode::All).ok());
    for (const auto& [atom, r] : deletion_search(ext(d), gd.embed, beta)) CHECK_FALSE(r.ok());
  }
  SECTION("global fixture gives itself back") {
    const PartialAction a = fx_gamma();
    const Datum d = res(a, first_transversal(a.G(), a.G().at("1")));
    const GlobalizationData gd = synthesize_globalization(d);
    const PartialAction beta = build_globalization(gd);
    CHECK(*gd.B == a.A());
    CHECK(gd.embed == identity_embedding(4));
    CHECK(beta.ideal == a.ideal);
    CHECK(beta.iso == a.iso);
  }
  SECTION("not (C1)") {
    CHECK_THROWS_AS(synthesize_globalization(res(fx_b2(), hex_tau("l"))), Error);
  }
  SECTION("overlapping ideals") {
    CHECK_THROWS_MATCHES(synthesize_globalization(full_identity_datum()), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::C3Violation; }));
  }
}

TEST_CASE("globalizability") {
  for (const Datum& d : {fx_dat(), full_identity_datum(), res(fx_b2(), hex_tau("l"))}) {
    const auto r = is_globalizable(d);
    INFO(r.reasons.back());
    CHECK(r.globalizable);
  }
  Datum broken = fx_dat();
  broken.gamma_tau[0] = PartialRingIso{};
  CHECK_FALSE(is_globalizable(broken).globalizable);
}
