#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "spanseg/enumerate.hpp"
#include "spanseg/io.hpp"
#include "spanseg/nfold.hpp"
#include "spanseg/spanalg.hpp"

using namespace spanseg;

namespace {

std::vector<io::StructureFile> one_of_each() {
  auto wa = fixtures::walking_arrow();
  FinSet ab({"a", "b"});
  CatFunctor idf{Presentation(wa), Presentation(wa),
                 FinMap::identity(wa.underlying.objects),
                 FinMap::identity(wa.underlying.morphisms), true};
  auto nerve = algebraic_to_simplicial(wa, 3);
  return {
      {"finset", ab},
      {"finmap", FinMap(ab, FinSet({"x", "y", "z"}), {2, 0})},
      {"span", Span{FinMap(ab, FinSet({"l"}), {0, 0}), FinMap(ab, FinSet({"r", "s"}), {1, 0})}},
      {"span-monoid", cat_to_span_monoid(wa)},
      {"semicat", fixtures::constant_g()},
      {"cat", wa},
      {"functor", idf},
      {"simplicial", nerve},
      {"multisimplicial", fixtures::twofold_universe().front()},
      {"sigma-diagram", catobj_to_sigma_diagram(nerve, 3)},
  };
}

}  // namespace

TEST_CASE("every kind survives serialize, parse, serialize byte-identically") {
  for (const auto& s : one_of_each()) {
    CAPTURE(s.kind);
    std::string once = io::serialize_structure(s);
    io::StructureFile back = io::parse_structure(once);
    REQUIRE(back.kind == s.kind);
    REQUIRE(back.payload == s.payload);
    REQUIRE(io::serialize_structure(back) == once);
    REQUIRE_NOTHROW(io::semantic_validate(back));
  }
}

TEST_CASE("a reordered hand-written file normalizes in one pass") {
  std::string text = R"({"payload": {"elements": ["b", "a"]},
                         "kind": "finset", "format_version": "1"})";
  auto s = io::parse_structure(text);
  std::string once = io::serialize_structure(s);
  REQUIRE(once != text);
  REQUIRE(io::serialize_structure(io::parse_structure(once)) == once);
  REQUIRE(std::get<FinSet>(s.payload) == FinSet({"b", "a"}));
}

TEST_CASE("shape errors are rejected at decode time") {
  auto parse = [](const std::string& t) { return io::parse_structure(t); };
  SECTION("unknown top-level key") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "finset",
                                "payload": {"elements": []}, "extra": 1})"),
                      io::decode_error);
  }
  SECTION("unknown payload key") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "finset",
                                "payload": {"elements": [], "comment": "hi"}})"),
                      io::decode_error);
  }
  SECTION("missing payload key") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "finmap",
                                "payload": {"dom": [], "cod": []}})"),
                      io::decode_error);
  }
  SECTION("unknown kind") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "group",
                                "payload": {}})"),
                      io::decode_error);
  }
  SECTION("wrong format version") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "0", "kind": "finset",
                                "payload": {"elements": []}})"),
                      io::decode_error);
  }
  SECTION("label outside the codomain") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "finmap",
                                "payload": {"dom": ["a"], "cod": ["x"], "map": ["y"]}})"),
                      io::decode_error);
  }
  SECTION("duplicate element labels") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "finset",
                                "payload": {"elements": ["a", "a"]}})"),
                      io::decode_error);
  }
  SECTION("not JSON at all") {
    REQUIRE_THROWS_AS(parse("objects: a, b"), io::decode_error);
  }
  SECTION("level count disagrees with the truncation") {
    REQUIRE_THROWS_AS(parse(R"({"format_version": "1", "kind": "simplicial",
                                "payload": {"truncation": 2, "unital": false,
                                "levels": [["p"]], "faces": [], "degeneracies": []}})"),
                      io::decode_error);
  }
}

TEST_CASE("well-formed files with broken laws pass decode and fail validation") {
  SemicatPresentation magma;
  magma.objects = FinSet({"x"});
  magma.morphisms = FinSet({"a", "b"});
  magma.src = FinMap(magma.morphisms, magma.objects, {0, 0});
  magma.tgt = FinMap(magma.morphisms, magma.objects, {0, 0});
  magma.comp[{"a", "a"}] = "b";
  magma.comp[{"a", "b"}] = "b";
  magma.comp[{"b", "a"}] = "a";
  magma.comp[{"b", "b"}] = "a";

  auto s = io::parse_structure(io::serialize_structure({"semicat", magma}));
  REQUIRE(std::get<SemicatPresentation>(s.payload) == magma);
  REQUIRE_THROWS_AS(io::semantic_validate(s), error);
}

TEST_CASE("file round-trip through disk") {
  auto s = io::StructureFile{"cat", fixtures::walking_arrow()};
  std::string path = "io_roundtrip_tmp.json";
  io::save_structure(path, s);
  auto back = io::load_structure(path);
  REQUIRE(back.payload == s.payload);
  REQUIRE_THROWS_AS(io::load_structure("does_not_exist.json"), io::decode_error);
  std::remove(path.c_str());
}

TEST_CASE("every universe member survives the file format") {
  for (const auto& A : enumerate_semicats(UniverseBounds{})) {
    auto s = io::parse_structure(io::serialize_structure({"semicat", A}));
    REQUIRE(std::get<SemicatPresentation>(s.payload) == A);
  }
}
