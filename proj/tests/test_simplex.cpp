#include <catch2/catch_amalgamated.hpp>

#include "spanseg/simplex.hpp"

using namespace spanseg;

TEST_CASE("SimplexMap validates monotonicity and range", "[simplex]") {
  REQUIRE_NOTHROW(SimplexMap(2, 3, {0, 1, 3}));
  REQUIRE_THROWS_AS(SimplexMap(2, 3, {1, 0, 3}), error);
  REQUIRE_THROWS_AS(SimplexMap(1, 2, {0, 3}), error);
  REQUIRE_THROWS_AS(SimplexMap(1, 2, {0}), error);
}

TEST_CASE("compose_simplex is pointwise composition", "[simplex][compose]") {
  REQUIRE(compose_simplex(SimplexMap::identity(2), SimplexMap::identity(2)) ==
          SimplexMap::identity(2));

  SimplexMap f(1, 2, {0, 2}), g(2, 3, {0, 1, 3});
  REQUIRE(compose_simplex(g, f) == SimplexMap(1, 3, {0, 3}));

  SimplexMap cst(3, 3, {0, 0, 0, 0});
  REQUIRE(compose_simplex(cst, SimplexMap(2, 3, {1, 2, 3})) ==
          SimplexMap(2, 3, {0, 0, 0}));
  REQUIRE_THROWS_AS(compose_simplex(f, g), error);
}

TEST_CASE("is_inert detects subinterval inclusions", "[simplex][inert]") {
  REQUIRE(is_inert(SimplexMap::identity(4)));
  REQUIRE(is_inert(SimplexMap(1, 3, {1, 2})));
  REQUIRE_FALSE(is_inert(SimplexMap(1, 0, {0, 0})));
}

TEST_CASE("rho is the inert map onto {i,...,j}", "[simplex][inert]") {
  REQUIRE(rho(0, 3, 3) == SimplexMap::identity(3));
  REQUIRE(rho(1, 3, 4) == SimplexMap(2, 4, {1, 2, 3}));
  REQUIRE(rho(2, 2, 5) == SimplexMap(0, 5, {2}));
  REQUIRE(is_inert(rho(1, 3, 4)));
  REQUIRE_THROWS_AS(rho(3, 1, 4), error);
  REQUIRE_THROWS_AS(rho(0, 5, 4), error);
}

TEST_CASE("inert maps are closed under composition, sizes <= 5",
          "[simplex][inert][exhaustive]") {
  long long checked = 0;
  bool ok = true;
  for (int a = 0; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = b; c <= 5; ++c)
        for (int i = 0; i + a <= b; ++i)
          for (int j = 0; j + b <= c; ++j) {
            SimplexMap f = rho(i, i + a, b), g = rho(j, j + b, c);
            ok = ok && is_inert(compose_simplex(g, f));
            ++checked;
          }
  INFO("inert pairs composed: " << checked);
  REQUIRE(ok);
}

TEST_CASE("sigma_leq is reverse interval inclusion", "[simplex][sigma]") {
  REQUIRE(sigma_leq(SigmaElement(3, 0, 3), SigmaElement(3, 1, 2)));
  REQUIRE_FALSE(sigma_leq(SigmaElement(3, 1, 2), SigmaElement(3, 0, 3)));
  REQUIRE(sigma_leq(SigmaElement(3, 1, 2), SigmaElement(3, 1, 2)));
  REQUIRE_THROWS_AS(sigma_leq(SigmaElement(3, 0, 1), SigmaElement(2, 0, 1)), error);
}

TEST_CASE("sigma_leq is a partial order, exhaustive n <= 6",
          "[simplex][sigma][exhaustive]") {
  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    auto elems = sigma_elements(n);
    for (const auto& a : elems) {
      ok = ok && sigma_leq(a, a);
      for (const auto& b : elems) {
        if (sigma_leq(a, b) && sigma_leq(b, a)) ok = ok && (a == b);
        for (const auto& c : elems)
          if (sigma_leq(a, b) && sigma_leq(b, c)) ok = ok && sigma_leq(a, c);
      }
    }
  }
  REQUIRE(ok);
  REQUIRE(sigma_elements(2).size() == 6);
}

TEST_CASE("sigma_pushforward applies the map to both endpoints", "[simplex][sigma]") {
  SigmaElement a(3, 1, 2);
  REQUIRE(sigma_pushforward(SimplexMap::identity(3), a) == a);
  REQUIRE(sigma_pushforward(SimplexMap(2, 3, {0, 1, 3}), SigmaElement(2, 1, 2)) ==
          SigmaElement(3, 1, 3));
  REQUIRE(sigma_pushforward(SimplexMap(2, 4, {0, 0, 0}), SigmaElement(2, 0, 2)) ==
          SigmaElement(4, 0, 0));
  REQUIRE_THROWS_AS(sigma_pushforward(SimplexMap::identity(2), a), error);
}

TEST_CASE("ShatMorphism validity and cartesianness", "[simplex][shat]") {
  SigmaElement x(3, 0, 2), y(2, 0, 1);
  SimplexMap phi(2, 3, {0, 1, 3});

  ShatMorphism w(x, y, phi);
  REQUIRE_FALSE(shat_is_cartesian(w));  // (phi 0, phi 1) = (0,1) != (0,2)

  ShatMorphism v(SigmaElement(3, 0, 1), y, phi);
  REQUIRE(shat_is_cartesian(v));

  REQUIRE(shat_is_cartesian(ShatMorphism::identity(x)));
  // target interval must land inside the source interval
  REQUIRE_THROWS_AS(ShatMorphism(SigmaElement(3, 2, 3), y, phi), error);
}

TEST_CASE("pi collapses a pair to its interval", "[simplex][pi]") {
  REQUIRE(pi_object(SigmaElement(5, 1, 4)) == 3);

  ShatMorphism w(SigmaElement(3, 0, 2), SigmaElement(2, 0, 1), SimplexMap(2, 3, {0, 1, 3}));
  REQUIRE(pi_morphism(w) == SimplexMap(1, 2, {0, 1}));

  REQUIRE(pi_morphism(ShatMorphism::identity(SigmaElement(4, 1, 3))) ==
          SimplexMap::identity(2));
}

TEST_CASE("psi section and eta/epsilon components", "[simplex][pi]") {
  REQUIRE(psi(2) == SigmaElement(2, 0, 2));

  ShatMorphism eta = eta_component(SigmaElement(4, 1, 3));
  REQUIRE(eta.target == SigmaElement(2, 0, 2));
  REQUIRE(eta.underlying == rho(1, 3, 4));
  REQUIRE(in_w_class(eta));
  REQUIRE(is_inert(eta.underlying));
  REQUIRE(shat_is_cartesian(eta));

  ShatMorphism eta0 = eta_component(SigmaElement(3, 0, 3));
  REQUIRE(eta0.underlying == SimplexMap::identity(3));
  REQUIRE(eta0.source == eta0.target);

  ShatMorphism eps = epsilon_component(SigmaElement(3, 1, 2));
  REQUIRE(eps.source == SigmaElement(3, 0, 3));
  REQUIRE(eps.target == SigmaElement(3, 1, 2));
  REQUIRE(eps.underlying == SimplexMap::identity(3));
}

TEST_CASE("pi . psi is the identity, n and m <= 5", "[simplex][pi][exhaustive]") {
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    ok = ok && (pi_object(psi(n)) == n);
    for (int m = 0; m <= 5; ++m)
      for (const auto& phi : all_monotone_maps(m, n))
        ok = ok && (pi_morphism(psi_morphism(phi)) == phi);
  }
  REQUIRE(ok);
}

namespace {

// All morphisms of the bundle category with both ambient ordinals <= bound.
std::vector<ShatMorphism> all_shat_morphisms(int bound) {
  std::vector<ShatMorphism> out;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (const auto& phi : all_monotone_maps(m, n))
        for (const auto& src : sigma_elements(n))
          for (const auto& tgt : sigma_elements(m))
            if (sigma_leq(src, sigma_pushforward(phi, tgt)))
              out.push_back(ShatMorphism(src, tgt, phi));
  return out;
}

}  // namespace

TEST_CASE("pi is functorial, ambient sizes <= 4", "[simplex][pi][exhaustive]") {
  auto all = all_shat_morphisms(4);
  INFO("morphisms: " << all.size());

  // group by source object to find composable pairs quickly
  bool ok = true;
  long long pairs = 0;
  for (const auto& w1 : all)
    for (const auto& w2 : all) {
      if (w1.target != w2.source) continue;
      ++pairs;
      ShatMorphism c = compose_shat(w2, w1);
      if (pi_morphism(c) != compose_simplex(pi_morphism(w1), pi_morphism(w2))) {
        ok = false;
        break;
      }
    }
  INFO("composable pairs: " << pairs);
  REQUIRE(ok);
  REQUIRE(pairs > 10000);
}

TEST_CASE("w_triangle_factorization commutes with both legs in I",
          "[simplex][pi][exhaustive]") {
  SECTION("worked instance") {
    ShatMorphism w(SigmaElement(3, 1, 2), SigmaElement(2, 0, 1), SimplexMap(2, 3, {1, 2, 3}));
    REQUIRE(in_w_class(w));
    auto [to_core_src, to_core_tgt] = w_triangle_factorization(w);
    REQUIRE(to_core_src.target == SigmaElement(1, 0, 1));
    REQUIRE(compose_shat(to_core_tgt, w) == to_core_src);
  }

  SECTION("identity factors through its own eta") {
    SigmaElement x(4, 1, 3);
    auto [l, r] = w_triangle_factorization(ShatMorphism::identity(x));
    REQUIRE(l == eta_component(x));
    REQUIRE(r == eta_component(x));
  }

  SECTION("not-in-W input is rejected") {
    ShatMorphism not_w(SigmaElement(2, 0, 2), SigmaElement(2, 0, 1),
                       SimplexMap::identity(2));
    REQUIRE_FALSE(in_w_class(not_w));
    REQUIRE_THROWS_AS(w_triangle_factorization(not_w), error);
  }

  SECTION("exhaustive over ambient sizes <= 4") {
    bool ok = true;
    long long w_count = 0;
    for (const auto& w : all_shat_morphisms(4)) {
      if (!in_w_class(w)) continue;
      ++w_count;
      auto [a, b] = w_triangle_factorization(w);
      ok = ok && shat_is_cartesian(a) && is_inert(a.underlying);
      ok = ok && shat_is_cartesian(b) && is_inert(b.underlying);
      ok = ok && (compose_shat(b, w) == a);
      ok = ok && (a.target == b.target);
    }
    INFO("W-morphisms factored: " << w_count);
    REQUIRE(ok);
    REQUIRE(w_count > 100);
  }
}

TEST_CASE("all_monotone_maps counts match binomials", "[simplex][exhaustive]") {
  // #monotone [m] -> [n] = C(n+m+1, m+1)
  REQUIRE(all_monotone_maps(1, 2).size() == 6);
  REQUIRE(all_monotone_maps(2, 1).size() == 4);
  REQUIRE(all_monotone_maps(0, 4).size() == 5);
  REQUIRE(all_monotone_maps(3, 3).size() == 35);
}
