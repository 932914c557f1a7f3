#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "spanseg/enumerate.hpp"

using namespace spanseg;

namespace {

CatPresentation relabeled_walking_arrow() {
  SemicatPresentation A;
  A.objects = FinSet({"p", "q"});
  A.morphisms = FinSet({"idp", "idq", "k"});
  A.src = FinMap::from_assignment(A.morphisms, A.objects,
                                  {{"idp", "p"}, {"idq", "q"}, {"k", "p"}});
  A.tgt = FinMap::from_assignment(A.morphisms, A.objects,
                                  {{"idp", "p"}, {"idq", "q"}, {"k", "q"}});
  A.comp[{"idp", "idp"}] = "idp";
  A.comp[{"idq", "idq"}] = "idq";
  A.comp[{"k", "idp"}] = "k";
  A.comp[{"idq", "k"}] = "k";
  CatPresentation C{A, FinMap::from_assignment(A.objects, A.morphisms,
                                               {{"p", "idp"}, {"q", "idq"}})};
  validate_cat(C);
  return C;
}

}  // namespace

TEST_CASE("one object and one morphism force a single table") {
  auto all = enumerate_semicats_exact(1, 1);
  REQUIRE(all.size() == 1);
  REQUIRE(all.front().compose_of("f0", "f0") == "f0");
  REQUIRE(enumerate_semicats(UniverseBounds{1, 1}).size() == 1);
}

TEST_CASE("exact counts stay frozen") {
  REQUIRE(enumerate_semicats_exact(1, 2).size() == 8);
  REQUIRE(enumerate_semicats_exact(1, 3).size() == 113);
  REQUIRE(enumerate_semicats_exact(2, 1).size() == 4);
  REQUIRE(enumerate_semicats_exact(2, 2).size() == 28);
  REQUIRE(enumerate_semicats_exact(2, 3).size() == 420);
}

TEST_CASE("universe counts stay frozen") {
  REQUIRE(enumerate_semicats(UniverseBounds{1, 2}).size() == 9);
  REQUIRE(enumerate_semicats(UniverseBounds{2, 2}).size() == 41);
  REQUIRE(enumerate_semicats(UniverseBounds{}).size() == 574);
  REQUIRE(enumerate_cats(UniverseBounds{}).size() == 76);
}

TEST_CASE("every emitted member passes validation") {
  for (const auto& A : enumerate_semicats(UniverseBounds{})) REQUIRE_NOTHROW(validate_semicat(A));
  for (const auto& C : enumerate_cats(UniverseBounds{})) REQUIRE_NOTHROW(validate_cat(C));
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_semicats(UniverseBounds{});
  auto b = enumerate_semicats(UniverseBounds{});
  REQUIRE(a == b);
  REQUIRE(a.front().objects.size() == 1);
  REQUIRE(a.front().morphisms.size() == 1);
}

TEST_CASE("functor enumeration matches hand counts") {
  SECTION("endofunctors of the terminal category") {
    auto t = fixtures::terminal_cat();
    REQUIRE(enumerate_functors(t, t).size() == 1);
  }
  SECTION("walking arrow endofunctors: two constants and the identity") {
    auto wa = fixtures::walking_arrow();
    auto fs = enumerate_functors(wa, wa);
    REQUIRE(fs.size() == 3);
    for (const auto& F : fs) REQUIRE_NOTHROW(validate_functor(F));
  }
  SECTION("no functor into the empty category from a nonempty one") {
    auto none = fixtures::empty_semicat();
    CatPresentation empty{none, FinMap(none.objects, none.morphisms, {})};
    REQUIRE(enumerate_functors(fixtures::terminal_cat(), empty).empty());
    REQUIRE(enumerate_functors(empty, fixtures::terminal_cat()).size() == 1);
  }
  SECTION("semifunctor enumeration validates") {
    auto A = forget_units(fixtures::walking_arrow());
    auto fs = enumerate_semifunctors(A, A);
    REQUIRE(fs.size() == 3);
    for (const auto& F : fs) REQUIRE_NOTHROW(validate_functor(F));
  }
}

TEST_CASE("isomorphism classes deduplicate relabelings only") {
  SECTION("a single item is its own class") {
    auto one = iso_classes(std::vector<CatPresentation>{fixtures::walking_arrow()});
    REQUIRE(one.size() == 1);
    REQUIRE(one.front() == fixtures::walking_arrow());
  }
  SECTION("two relabelings collapse") {
    std::vector<CatPresentation> two{fixtures::walking_arrow(), relabeled_walking_arrow()};
    auto reps = iso_classes(two);
    REQUIRE(reps.size() == 1);
    REQUIRE(reps.front() == fixtures::walking_arrow());
  }
  SECTION("the walking arrow and the discrete pair stay apart") {
    std::vector<CatPresentation> two{fixtures::walking_arrow(),
                                     fixtures::discrete_cat({"a", "b"})};
    REQUIRE(iso_classes(two).size() == 2);
  }
  SECTION("class counts over the universe stay frozen") {
    REQUIRE(iso_classes(enumerate_semicats(UniverseBounds{})).size() == 86);
    REQUIRE(iso_classes(enumerate_cats(UniverseBounds{})).size() == 14);
  }
}

TEST_CASE("single-entry mutants of a nerve never survive") {
  auto wa = fixtures::walking_arrow();
  auto N = algebraic_to_simplicial(wa, 3);
  Presentation original(wa);
  REQUIRE(simplicial_to_algebraic(N) == original);

  auto mutants = single_entry_mutants(N);
  REQUIRE(mutants.size() >= 100);
  for (const auto& Y : mutants) REQUIRE(mutant_killed(Y, original));
}

TEST_CASE("the unmutated nerve is not reported as caught") {
  auto wa = fixtures::walking_arrow();
  auto N = algebraic_to_simplicial(wa, 2);
  REQUIRE_FALSE(mutant_killed(N, Presentation(wa)));
}

TEST_CASE("index sampling is deterministic and bounded") {
  auto s1 = sample_indices(50, 10, 7);
  auto s2 = sample_indices(50, 10, 7);
  REQUIRE(s1 == s2);
  REQUIRE(s1.size() == 10);
  REQUIRE(std::is_sorted(s1.begin(), s1.end()));
  for (auto i : s1) REQUIRE(i < 50);
  REQUIRE(sample_indices(3, 10, 0).size() == 3);
  auto other = sample_indices(50, 10, 8);
  REQUIRE(s1 != other);
}
