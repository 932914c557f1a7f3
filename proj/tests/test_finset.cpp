#include <catch2/catch_amalgamated.hpp>

#include "spanseg/finset.hpp"

using namespace spanseg;

static FinSet fs(std::vector<std::string> v) { return FinSet(std::move(v)); }

TEST_CASE("FinSet rejects duplicate labels", "[finset]") {
  REQUIRE_THROWS_AS(fs({"a", "b", "a"}), error);
  REQUIRE_NOTHROW(fs({}));
  REQUIRE(fs({"a", "b"}).index_of("b") == 1);
  REQUIRE_THROWS_AS(fs({"a"}).index_of("z"), error);
}

TEST_CASE("FinMap construction and application", "[finset]") {
  FinSet d = fs({"a", "b"}), c = fs({"x", "y"});
  FinMap f = FinMap::from_assignment(d, c, {{"a", "y"}, {"b", "x"}});
  REQUIRE(f.apply("a") == "y");
  REQUIRE(f.apply("b") == "x");

  SECTION("total on the domain") {
    REQUIRE_THROWS_AS(FinMap::from_assignment(d, c, {{"a", "x"}}), error);
    REQUIRE_THROWS_AS(
        FinMap::from_assignment(d, c, {{"a", "x"}, {"b", "x"}, {"z", "x"}}), error);
  }
  SECTION("values must lie in the codomain") {
    REQUIRE_THROWS_AS(FinMap::from_assignment(d, c, {{"a", "q"}, {"b", "x"}}), error);
  }
}

TEST_CASE("product enumerates pairs in lexicographic order", "[finset][limits]") {
  SECTION("{x} x {y,z}") {
    auto p = product(fs({"x"}), fs({"y", "z"}));
    REQUIRE(p.set.elements() == std::vector<std::string>{"(x,y)", "(x,z)"});
  }
  SECTION("empty factor") {
    REQUIRE(product(fs({}), fs({"a", "b"})).set.empty());
    REQUIRE(product(fs({"a"}), fs({})).set.empty());
  }
  SECTION("{a,b} x {c,d}") {
    auto p = product(fs({"a", "b"}), fs({"c", "d"}));
    REQUIRE(p.set.size() == 4);
    REQUIRE(p.set.elements() ==
            std::vector<std::string>{"(a,c)", "(a,d)", "(b,c)", "(b,d)"});
    REQUIRE(p.first.apply("(b,c)") == "b");
    REQUIRE(p.second.apply("(b,c)") == "c");
  }
}

TEST_CASE("label synthesis is collision-free", "[finset]") {
  // Components containing the delimiter characters must not merge.
  REQUIRE(pair_label("x,y", "z") != pair_label("x", "y,z"));
  REQUIRE(tuple_label({"(a,b)"}) != tuple_label({"(a", "b)"}));
  REQUIRE(pair_label("a", "b") == "(a,b)");
  REQUIRE(pair_label("a", "b") == tuple_label({"a", "b"}));
}

TEST_CASE("pullback computes the matching-pairs subset", "[finset][limits]") {
  FinSet A = fs({"a1", "a2"}), B = fs({"b"}), J = fs({"j1", "j2"});
  FinMap f = FinMap::from_assignment(A, J, {{"a1", "j1"}, {"a2", "j2"}});
  FinMap g = FinMap::from_assignment(B, J, {{"b", "j1"}});

  SECTION("one matching pair") {
    auto pb = pullback(f, g);
    REQUIRE(pb.set.elements() == std::vector<std::string>{"(a1,b)"});
    REQUIRE(pb.to_left.apply("(a1,b)") == "a1");
    REQUIRE(pb.to_right.apply("(a1,b)") == "b");
  }
  SECTION("disjoint images give the empty pullback") {
    FinMap g2 = FinMap::from_assignment(B, J, {{"b", "j2"}});
    FinMap f2 = FinMap::from_assignment(A, J, {{"a1", "j1"}, {"a2", "j1"}});
    REQUIRE(pullback(f2, g2).set.empty());
  }
  SECTION("codomain mismatch is rejected") {
    FinMap h = FinMap::from_assignment(B, B, {{"b", "b"}});
    REQUIRE_THROWS_AS(pullback(f, h), error);
  }
}

TEST_CASE("pullback along the identity is a diagonal copy of the domain",
          "[finset][limits]") {
  FinSet A = fs({"a", "b", "c"}), J = fs({"u", "v"});
  FinMap f = FinMap::from_assignment(A, J, {{"a", "u"}, {"b", "v"}, {"c", "u"}});
  auto pb = pullback(f, FinMap::identity(J));
  REQUIRE(pb.set.size() == A.size());
  // canonical witness: a |-> (a, f a), commuting with both projections
  for (const auto& a : A.elements()) {
    std::string p = pair_label(a, f.apply(a));
    REQUIRE(pb.set.contains(p));
    REQUIRE(pb.to_left.apply(p) == a);
    REQUIRE(pb.to_right.apply(p) == f.apply(a));
  }
}

TEST_CASE("pullback label order is deterministic", "[finset][determinism]") {
  FinSet A = fs({"a1", "a2"}), J = fs({"j"});
  FinMap f = FinMap::constant(A, J, "j");
  auto p1 = pullback(f, f), p2 = pullback(f, f);
  REQUIRE(p1.set == p2.set);
  REQUIRE(p1.to_left == p2.to_left);
  REQUIRE(p1.to_right == p2.to_right);
}

TEST_CASE("is_bijection and invert", "[finset]") {
  FinSet ab = fs({"a", "b"});
  REQUIRE(is_bijection(FinMap::identity(ab)));
  REQUIRE(invert(FinMap::identity(ab)) == FinMap::identity(ab));

  FinMap swap = FinMap::from_assignment(ab, ab, {{"a", "b"}, {"b", "a"}});
  REQUIRE(is_bijection(swap));
  REQUIRE(invert(swap) == swap);

  FinMap cst = FinMap::constant(ab, fs({"x"}), "x");
  REQUIRE_FALSE(is_bijection(cst));
  REQUIRE_THROWS_AS(invert(cst), error);
}

TEST_CASE("pullback universal property, exhaustive up to size 3",
          "[finset][limits][exhaustive]") {
  // For every diagram A -> J <- B with |A|,|B|,|J| <= 3 and every commuting
  // cone with |C| <= 3, exactly one map into the pullback commutes with the
  // projections.  Index arithmetic only; FinMaps are spot-checked separately.
  auto names = [](char base, int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, base) + std::to_string(i));
    return v;
  };

  long long cones_checked = 0;
  bool all_ok = true;
  for (int na = 0; na <= 3 && all_ok; ++na)
    for (int nb = 0; nb <= 3 && all_ok; ++nb)
      for (int nj = 0; nj <= 3 && all_ok; ++nj) {
        FinSet A = fs(names('a', na)), B = fs(names('b', nb)), J = fs(names('j', nj));
        auto fmaps = enumerate_maps(A, J), gmaps = enumerate_maps(B, J);
        for (const auto& f : fmaps)
          for (const auto& g : gmaps) {
            auto pb = pullback(f, g);
            // pullback elements as index pairs
            std::vector<std::pair<std::size_t, std::size_t>> pts;
            for (std::size_t k = 0; k < pb.set.size(); ++k)
              pts.push_back({pb.to_left.apply_index(k), pb.to_right.apply_index(k)});
            for (int nc = 0; nc <= 3; ++nc) {
              std::vector<std::size_t> p(nc, 0), q(nc, 0);
              auto advance = [](std::vector<std::size_t>& v, std::size_t bound) {
                for (std::size_t k = v.size(); k-- > 0;) {
                  if (++v[k] < bound) return true;
                  v[k] = 0;
                }
                return false;
              };
              if ((na == 0 || nb == 0) && nc > 0) continue;  // no cone legs exist
              do {
                do {
                  bool commutes = true;
                  for (int c = 0; c < nc && commutes; ++c)
                    commutes = f.apply_index(p[c]) == g.apply_index(q[c]);
                  if (!commutes) continue;
                  ++cones_checked;
                  // count pullback points matching each cone component
                  long long count = 1;
                  for (int c = 0; c < nc; ++c) {
                    int m = 0;
                    for (auto& pt : pts)
                      if (pt.first == p[c] && pt.second == q[c]) ++m;
                    count *= m;
                  }
                  if (count != 1) {
                    all_ok = false;
                    break;
                  }
                } while (advance(q, nb));
              } while (all_ok && advance(p, na));
              if (!all_ok) break;
            }
            if (!all_ok) break;
          }
      }
  INFO("commuting cones checked: " << cones_checked);
  REQUIRE(all_ok);
  REQUIRE(cones_checked > 1000);
}

TEST_CASE("mediating_map builds the canonical comparison", "[finset][limits]") {
  FinSet A = fs({"a1", "a2"}), B = fs({"b1", "b2"}), J = fs({"j"});
  FinMap f = FinMap::constant(A, J, "j"), g = FinMap::constant(B, J, "j");
  auto pb = pullback(f, g);
  FinSet C = fs({"c"});
  FinMap p = FinMap::constant(C, A, "a2"), q = FinMap::constant(C, B, "b1");
  FinMap m = mediating_map(pb, f, g, p, q);
  REQUIRE(m.apply("c") == "(a2,b1)");
  REQUIRE(compose(pb.to_left, m) == p);
  REQUIRE(compose(pb.to_right, m) == q);
}

TEST_CASE("enumerate_maps is exhaustive and deterministic", "[finset]") {
  FinSet d = fs({"a", "b"}), c = fs({"x", "y", "z"});
  auto all = enumerate_maps(d, c);
  REQUIRE(all.size() == 9);
  REQUIRE(all.front().apply("a") == "x");
  REQUIRE(all.back().apply("b") == "z");
  REQUIRE(enumerate_maps(fs({}), c).size() == 1);
  REQUIRE(enumerate_maps(d, fs({})).empty());
}
