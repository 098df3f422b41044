#include <catch_amalgamated.hpp>

#include <set>

#include "pga/fixtures.hpp"
#include "pga/groupoid.hpp"

using namespace pga;

namespace {

// Every composable pair, every composable triple: the category axioms.
void check_axioms(const Groupoid& G) {
  for (Arrow g = 0; g < G.size(); ++g) {
    CHECK(G.compose(G.inv(g), g) == G.src(g));
    CHECK(G.compose(g, G.inv(g)) == G.tgt(g));
    CHECK(G.compose(g, G.src(g)) == g);
    CHECK(G.compose(G.tgt(g), g) == g);
    for (Arrow h = 0; h < G.size(); ++h) {
      if (!G.composable(g, h)) continue;
      const Arrow gh = G.compose(g, h);
      CHECK(G.src(gh) == G.src(h));
      CHECK(G.tgt(gh) == G.tgt(g));
      for (Arrow k = 0; k < G.size(); ++k) {
        if (G.composable(h, k)) CHECK(G.compose(gh, k) == G.compose(g, G.compose(h, k)));
      }
    }
  }
  for (const Arrow x : G.objects()) CHECK(G.inv(x) == x);
}

}  // namespace

TEST_CASE("hexagon table validates with the stated rules") {
  const Groupoid& G = *fx_hex();
  CHECK(G.size() == 8);
  CHECK(G.objects().size() == 2);
  check_axioms(G);
  const auto a = [&](const char* n) { return G.at(n); };
  CHECK(G.compose(a("l"), a("g")) == a("m"));
  CHECK(G.compose(a("h"), a("l")) == a("m"));
  CHECK(G.compose(a("g"), a("g")) == a("x"));
  CHECK(G.compose(a("h"), a("h")) == a("y"));
  CHECK(G.inv(a("l")) == a("l^-1"));
  CHECK(G.src(a("l")) == a("x"));
  CHECK(G.tgt(a("l")) == a("y"));
}

TEST_CASE("hexagon is Gamma^2 over Z2 under the documented relabelling") {
  const Groupoid renamed = relabel(*fx_gamma2(), {{"1", "x"},
                                                  {"2", "y"},
                                                  {"(1,c,1)", "g"},
                                                  {"(2,c,2)", "h"},
                                                  {"(2,e,1)", "l"},
                                                  {"(2,c,1)", "m"},
                                                  {"(1,e,2)", "l^-1"},
                                                  {"(1,c,2)", "m^-1"}});
  const Groupoid& H = *fx_hex();
  for (Arrow g = 0; g < H.size(); ++g) {
    for (Arrow h = 0; h < H.size(); ++h) {
      const Arrow rg = renamed.at(H.name(g));
      const Arrow rh = renamed.at(H.name(h));
      REQUIRE(renamed.composable(rg, rh) == H.composable(g, h));
      if (H.composable(g, h)) CHECK(renamed.name(renamed.compose(rg, rh)) == H.name(H.compose(g, h)));
    }
  }
}

TEST_CASE("trivial group validates") {
  RawGroupoid raw;
  raw.objects = {"e"};
  const Groupoid G = validate_groupoid(raw);
  CHECK(G.size() == 1);
  check_axioms(G);
}

TEST_CASE("redefining lg as l breaks associativity") {
  RawGroupoid raw = hex_raw();
  for (auto& p : raw.products) {
    if (p.left == "l" && p.right == "g") p.result = "l";
  }
  try {
    validate_groupoid(raw);
    FAIL("expected NonAssociative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAssociative);
    REQUIRE(e.witness().size() == 3);
    // The witness triple really is non-associative in the broken table.
    std::map<std::tuple<std::string, std::string>, std::string> prod;
    for (const auto& p : raw.products) prod[{p.left, p.right}] = p.result;
    const auto mul = [&](const std::string& a, const std::string& b) {
      if (a == "x" || a == "y") return b;
      if (b == "x" || b == "y") return a;
      return prod.at({a, b});
    };
    const auto& w = e.witness();
    CHECK(mul(mul(w[0], w[1]), w[2]) != mul(w[0], mul(w[1], w[2])));
  }
}

TEST_CASE("validation errors name the broken axiom") {
  SECTION("missing object set") {
    CHECK_THROWS_MATCHES(validate_groupoid(RawGroupoid{}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.kind() == ErrorKind::EmptyObjectSet; }));
  }
  SECTION("missing product") {
    RawGroupoid raw = hex_raw();
    raw.products.pop_back();
    try {
      validate_groupoid(raw);
      FAIL();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadCompositionDomain);
      CHECK(e.witness().size() == 2);
    }
  }
  SECTION("product with wrong endpoints") {
    RawGroupoid raw = hex_raw();
    raw.products.push_back({"g", "h", "x"});
    try {
      validate_groupoid(raw);
      FAIL();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadCompositionDomain);
    }
  }
  SECTION("identity that is not neutral") {
    RawGroupoid raw = hex_raw();
    raw.products.push_back({"x", "g", "x"});
    try {
      validate_groupoid(raw);
      FAIL();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MissingIdentity);
    }
  }
  SECTION("arrow without inverse") {
    RawGroupoid raw;
    raw.objects = {"e"};
    raw.arrows = {{"a", "e", "e"}};
    raw.products = {{"a", "a", "a"}};
    try {
      validate_groupoid(raw);
      FAIL();
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadInverse);
      CHECK(e.witness() == std::vector<std::string>{"a"});
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(*fx_hex()).size() == 1);
  CHECK(connected_components(*fx_hex()).front().objects.size() == 2);
  CHECK(connected_components(*fx_gamma2()).size() == 1);

  // Two copies of Z2 side by side.
  RawGroupoid raw;
  raw.objects = {"p", "q"};
  raw.arrows = {{"a", "p", "p"}, {"b", "q", "q"}};
  raw.products = {{"a", "a", "p"}, {"b", "b", "q"}};
  const Groupoid G = validate_groupoid(raw);
  CHECK_FALSE(G.connected());
  const auto comps = connected_components(G);
  REQUIRE(comps.size() == 2);
  std::size_t total = 0;
  for (const auto& c : comps) {
    CHECK(c.sub.groupoid.size() == 2);
    CHECK(c.sub.groupoid.connected());
    total += c.sub.groupoid.size();
  }
  CHECK(total == G.size());
  CHECK_THROWS_AS(transversals(G, G.at("p")), Error);
}

TEST_CASE("isotropy groups") {
  const Groupoid& H = *fx_hex();
  const auto Gx = isotropy(H, H.at("x"));
  CHECK(Gx.groupoid.size() == 2);
  CHECK(Gx.groupoid.find("g").has_value());
  check_axioms(Gx.groupoid);

  const Groupoid coarse = build_coarse({"1", "2", "3"});
  for (const Arrow y : coarse.objects()) CHECK(isotropy(coarse, y).groupoid.size() == 1);

  const Groupoid& G2 = *fx_gamma2();
  const auto G1 = isotropy(G2, G2.at("1"));
  std::set<std::string> names(G1.groupoid.names().begin(), G1.groupoid.names().end());
  CHECK(names == std::set<std::string>{"1", "(1,c,1)"});

  CHECK_THROWS_AS(isotropy(H, H.at("g")), Error);
}

TEST_CASE("transversal enumeration") {
  const Groupoid& H = *fx_hex();
  const auto ts = transversals(H, H.at("x"));
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].at(H.at("y")) == H.at("l"));
  CHECK(ts[1].at(H.at("y")) == H.at("m"));
  for (const auto& t : ts) CHECK(t.at(H.at("x")) == H.at("x"));

  RawGroupoid raw;
  raw.objects = {"e"};
  CHECK(transversals(validate_groupoid(raw), 0).size() == 1);
  CHECK(transversals(*fx_gamma2(), fx_gamma2()->at("1")).size() == 2);

  // Count is the product of hom-set sizes.
  const Groupoid G3 = build_gamma(3, symmetric_group(3));
  for (const Arrow x : G3.objects()) {
    std::size_t expect = 1;
    for (const Arrow y : G3.objects()) {
      if (y != x) expect *= G3.hom(x, y).size();
    }
    CHECK(transversals(G3, x).size() == expect);
  }
}

TEST_CASE("corners and the product decomposition") {
  const Groupoid& H = *fx_hex();
  const Transversal tau = hex_tau("l");
  const auto a = [&](const char* n) { return H.at(n); };
  for (const char* n : {"g", "h", "m", "m^-1"}) CHECK(corner(H, a(n), tau) == a("g"));
  for (const char* n : {"l", "l^-1", "x", "y"}) CHECK(corner(H, a(n), tau) == a("x"));
  CHECK(psi_split(H, a("m"), tau) == SplitArrow{a("x"), a("y"), a("g")});
  CHECK(psi_split(H, a("x"), tau) == SplitArrow{a("x"), a("x"), a("x")});

  for (const Groupoid* G : {&H, fx_gamma2().get()}) {
    for (const Arrow x : G->objects()) {
      for (const auto& t : transversals(*G, x)) {
        std::set<std::tuple<Arrow, Arrow, Arrow>> images;
        for (Arrow g = 0; g < G->size(); ++g) {
          const SplitArrow s = psi_split(*G, g, t);
          CHECK(psi_merge(*G, s, t) == g);
          images.insert({s.src, s.tgt, s.loop});
          for (Arrow h = 0; h < G->size(); ++h) {
            if (!G->composable(g, h)) continue;
            CHECK(corner(*G, G->compose(g, h), t) == G->compose(corner(*G, g, t), corner(*G, h, t)));
          }
        }
        CHECK(images.size() == G->size());
      }
    }
  }
}

TEST_CASE("builders") {
  CHECK(build_coarse({"1", "2"}).size() == 4);
  CHECK_THROWS_AS(build_coarse({}), Error);
  const Groupoid G = build_gamma(2, cyclic_group(2));
  CHECK(G.size() == 8);
  const Arrow a = G.at("(1,c,2)");
  CHECK(G.src(a) == G.at("2"));
  CHECK(G.tgt(a) == G.at("1"));
  const Groupoid one = build_gamma(1, cyclic_group(3));
  CHECK(one.size() == 3);
  CHECK(one.objects().size() == 1);
  check_axioms(build_gamma(3, symmetric_group(3)));
  check_axioms(build_coarse({"a", "b", "c", "d"}));
}
