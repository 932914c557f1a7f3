#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spanseg/selftest.hpp"

using nlohmann::json;
using namespace spanseg;

namespace {

struct Output {
  bool as_json = false;
  std::optional<std::string> path;  // for commands that emit a structure
};

void emit_structure(const io::StructureFile& file, const Output& out) {
  if (out.path) {
    io::save_structure(*out.path, file);
    if (out.as_json)
      std::cout << json{{"kind", file.kind}, {"output", *out.path}}.dump() << '\n';
    else
      std::cout << "wrote " << file.kind << " to " << *out.path << '\n';
  } else {
    std::cout << io::serialize_structure(file);
  }
}

json witness_json(const std::string& kind, const io::Payload& payload) {
  return io::encode_structure(io::StructureFile{kind, payload});
}

int run_validate(const std::string& path, bool as_json) {
  io::StructureFile file = io::load_structure(path);
  std::string problem;
  try {
    io::semantic_validate(file);
  } catch (const error& e) {
    problem = e.what();
  }
  if (as_json) {
    json r{{"command", "validate"}, {"kind", file.kind}, {"valid", problem.empty()}};
    if (!problem.empty()) r["error"] = problem;
    std::cout << r.dump() << '\n';
  } else if (problem.empty()) {
    std::cout << "valid " << file.kind << '\n';
  } else {
    std::cout << "invalid " << file.kind << ": " << problem << '\n';
  }
  return problem.empty() ? 0 : 1;
}

// composable strings of n arrows, the size the Segal condition demands
long long spine_count(const TruncatedSimplicialObject& X, int n) {
  if (n == 0) return (long long)X.levels[0].size();
  const FinMap& src = X.faces[1][1];
  const FinMap& tgt = X.faces[1][0];
  std::vector<long long> ways(X.levels[1].size(), 1);
  for (int step = 1; step < n; ++step) {
    std::vector<long long> next(X.levels[1].size(), 0);
    for (std::size_t f = 0; f < ways.size(); ++f)
      for (std::size_t g = 0; g < ways.size(); ++g)
        if (tgt.apply_index(f) == src.apply_index(g)) next[f] += ways[g];
    ways = next;
  }
  long long total = 0;
  for (long long w : ways) total += w;
  return total;
}

int run_check_segal(const std::string& path, bool as_json) {
  io::StructureFile file = io::load_structure(path);
  if (const auto* X = std::get_if<TruncatedSimplicialObject>(&file.payload)) {
    validate_simplicial(*X);
    bool segal = check_segal(*X);
    int level = -1;
    if (!segal)
      for (int n = 2; n <= X->truncation && level < 0; ++n)
        if (!check_segal(truncate_simplicial(*X, n))) level = n;
    if (as_json) {
      json r{{"command", "check-segal"}, {"segal", segal}};
      if (!segal)
        r["counterexample"] = {{"level", level},
                               {"cells", X->levels[level].size()},
                               {"spines", spine_count(*X, level)}};
      std::cout << r.dump() << '\n';
    } else if (segal) {
      std::cout << "Segal condition holds up to truncation " << X->truncation << '\n';
    } else {
      std::cout << "Segal condition fails at level " << level << ": "
                << X->levels[level].size() << " cells, " << spine_count(*X, level)
                << " composable spines\n";
    }
    return segal ? 0 : 1;
  }
  if (const auto* M = std::get_if<MultiSimplicialObject>(&file.payload)) {
    validate_multisimplicial(*M);
    bool segal = check_n_uple_segal(*M);
    bool constant = check_constancy(*M);
    if (as_json) {
      std::cout << json{{"command", "check-segal"},
                        {"segal", segal},
                        {"constant", constant},
                        {"nfold", segal && constant}}
                       .dump()
                << '\n';
    } else {
      std::cout << (segal ? "axis-wise Segal condition holds" : "axis-wise Segal condition fails")
                << ", constancy " << (constant ? "holds" : "fails") << '\n';
    }
    return segal ? 0 : 1;
  }
  throw error("check-segal: expected a simplicial or multisimplicial file");
}

int run_quasi_units(const std::string& path, bool as_json) {
  io::StructureFile file = io::load_structure(path);
  io::semantic_validate(file);

  std::optional<FinMap> unit;
  if (const auto* A = std::get_if<SemicatPresentation>(&file.payload)) {
    auto found = find_quasi_units(*A);
    if (!found.empty()) unit = found.front().carrier;
  } else if (const auto* C = std::get_if<CatPresentation>(&file.payload)) {
    auto found = find_quasi_units(C->underlying);
    if (!found.empty()) unit = found.front().carrier;
  } else if (const auto* X = std::get_if<TruncatedSimplicialObject>(&file.payload)) {
    unit = find_quasi_unit_simplicial(*X);
  } else {
    throw error("quasi-units: expected a semicat, cat, or simplicial file");
  }

  if (as_json) {
    json r{{"command", "quasi-units"}, {"quasi_unital", unit.has_value()}};
    if (unit) r["unit"] = witness_json("finmap", *unit);
    std::cout << r.dump() << '\n';
  } else if (unit) {
    for (std::size_t i = 0; i < unit->dom().size(); ++i)
      std::cout << "quasi-unit at " << unit->dom().at(i) << ": "
                << unit->cod().at(unit->apply_index(i)) << '\n';
  } else {
    std::cout << "no quasi-unit\n";
  }
  return unit ? 0 : 1;
}

int run_promote(const std::string& path, const Output& out) {
  io::StructureFile file = io::load_structure(path);
  io::semantic_validate(file);

  if (const auto* A = std::get_if<SemicatPresentation>(&file.payload)) {
    if (!is_quasi_unital(*A)) {
      if (out.as_json)
        std::cout << json{{"command", "promote"}, {"promoted", false},
                          {"error", "no quasi-unit"}}
                         .dump()
                  << '\n';
      else
        std::cout << "no quasi-unit: promotion impossible\n";
      return 1;
    }
    emit_structure(io::StructureFile{"cat", promote_to_unital(*A)}, out);
    return 0;
  }
  if (const auto* C = std::get_if<CatPresentation>(&file.payload)) {
    emit_structure(io::StructureFile{"cat", *C}, out);
    return 0;
  }
  if (const auto* X = std::get_if<TruncatedSimplicialObject>(&file.payload)) {
    if (X->unital) {
      emit_structure(file, out);
      return 0;
    }
    if (!find_quasi_unit_simplicial(*X)) {
      if (out.as_json)
        std::cout << json{{"command", "promote"}, {"promoted", false},
                          {"error", "no quasi-unit"}}
                         .dump()
                  << '\n';
      else
        std::cout << "no quasi-unit: promotion impossible\n";
      return 1;
    }
    emit_structure(io::StructureFile{"simplicial", promote_simplicial(*X)}, out);
    return 0;
  }
  throw error("promote: expected a semicat, cat, or simplicial file");
}

int run_check_functor(const std::string& path, bool as_json) {
  io::StructureFile file = io::load_structure(path);
  const auto* F = std::get_if<CatFunctor>(&file.payload);
  if (!F) throw error("check-functor: expected a functor file");

  std::string problem;
  try {
    io::semantic_validate(file);
  } catch (const error& e) {
    problem = e.what();
  }
  bool endpoints_unital = problem.empty() &&
                          is_quasi_unital(underlying_semicat(F->source)) &&
                          is_quasi_unital(underlying_semicat(F->target));
  bool quasi = problem.empty() && endpoints_unital && is_quasi_unital_functor(*F);

  if (as_json) {
    json r{{"command", "check-functor"},
           {"valid", problem.empty()},
           {"endpoints_quasi_unital", endpoints_unital},
           {"quasi_unital", quasi}};
    if (!problem.empty()) r["error"] = problem;
    std::cout << r.dump() << '\n';
  } else if (!problem.empty()) {
    std::cout << "not a functor: " << problem << '\n';
  } else if (!endpoints_unital) {
    std::cout << "valid functor; endpoints are not quasi-unital\n";
  } else if (quasi) {
    std::cout << "valid quasi-unital functor\n";
  } else {
    std::cout << "valid functor, but it does not carry the quasi-unit to the quasi-unit\n";
  }
  if (!problem.empty()) return 1;
  return (!endpoints_unital || quasi) ? 0 : 1;
}

int run_to_span_alg(const std::string& path, const Output& out) {
  io::StructureFile file = io::load_structure(path);
  io::semantic_validate(file);
  Presentation P = [&]() -> Presentation {
    if (const auto* A = std::get_if<SemicatPresentation>(&file.payload)) return *A;
    if (const auto* C = std::get_if<CatPresentation>(&file.payload)) return *C;
    throw error("to-span-alg: expected a semicat or cat file");
  }();
  emit_structure(io::StructureFile{"span-monoid", cat_to_span_monoid(P)}, out);
  return 0;
}

int run_from_span_alg(const std::string& path, const Output& out) {
  io::StructureFile file = io::load_structure(path);
  io::semantic_validate(file);
  const auto* M = std::get_if<SpanMonoid>(&file.payload);
  if (!M) throw error("from-span-alg: expected a span-monoid file");
  Presentation P = span_monoid_to_cat(*M);
  if (const auto* C = std::get_if<CatPresentation>(&P))
    emit_structure(io::StructureFile{"cat", *C}, out);
  else
    emit_structure(io::StructureFile{"semicat", std::get<SemicatPresentation>(P)}, out);
  return 0;
}

int run_check_complete(const std::string& path, int arity, bool as_json) {
  io::StructureFile file = io::load_structure(path);
  io::semantic_validate(file);

  if (arity == 1) {
    const auto* X = std::get_if<TruncatedSimplicialObject>(&file.payload);
    if (!X) throw error("check-complete: arity 1 expects a simplicial file");
    if (!X->unital || !check_segal(*X))
      throw error("check-complete: input must be a unital Segal object");
    SemicatPresentation A = underlying_semicat(simplicial_to_algebraic(*X));
    bool complete = is_complete(A);
    FinSet eq = equivalences_subset(A, EquivalenceMode::representable);
    std::vector<std::string> witnesses;
    if (!complete) {
      auto u = detail::quasi_unit_candidates(A);
      for (const auto& f : eq.elements())
        if (u.empty() || !std::count(u.front().image_indices().begin(),
                                     u.front().image_indices().end(),
                                     A.morphisms.index_of(f)))
          witnesses.push_back(f);
    }
    if (as_json) {
      json r{{"command", "check-complete"},
             {"complete", complete},
             {"equivalences", eq.elements()}};
      if (!complete) r["non_identity_equivalences"] = witnesses;
      std::cout << r.dump() << '\n';
    } else if (complete) {
      std::cout << "complete: every equivalence is an identity\n";
    } else {
      std::cout << "incomplete:";
      for (const auto& w : witnesses) std::cout << ' ' << w;
      std::cout << " equivalent without being identities\n";
    }
    return complete ? 0 : 1;
  }

  const auto* M = std::get_if<MultiSimplicialObject>(&file.payload);
  if (!M) throw error("check-complete: arity above 1 expects a multisimplicial file");
  if (M->arity != arity) throw error("check-complete: arity does not match the file");
  int failed_axis = -1;
  for (int a = 0; a < M->arity && failed_axis < 0; ++a) {
    std::vector<int> base(M->arity, 0);
    for (int b = 0; b < a; ++b) base[b] = 1;
    auto A = underlying_semicat(simplicial_to_algebraic(slice_line(*M, a, base)));
    if (!is_complete(A)) failed_axis = a;
  }
  bool complete = failed_axis < 0;
  if (is_complete_nfold(*M) != complete)
    throw error("check-complete: designated-line scan disagrees with the library");
  if (as_json) {
    json r{{"command", "check-complete"}, {"complete", complete}};
    if (!complete) r["failed_axis"] = failed_axis;
    std::cout << r.dump() << '\n';
  } else if (complete) {
    std::cout << "complete in every designated line\n";
  } else {
    std::cout << "incomplete: designated line of axis " << failed_axis << " fails\n";
  }
  return complete ? 0 : 1;
}

int run_codiscrete(const std::string& path, int truncation, const Output& out) {
  io::StructureFile file = io::load_structure(path);
  const auto* S = std::get_if<FinSet>(&file.payload);
  if (!S) throw error("codiscrete: expected a finset file");
  if (truncation < 0) throw error("codiscrete: truncation must be nonnegative");
  emit_structure(io::StructureFile{"simplicial", codiscrete(*S, truncation)}, out);
  return 0;
}

int run_restrict(const std::string& simplicial_path, const std::string& map_path,
                 const Output& out) {
  io::StructureFile xfile = io::load_structure(simplicial_path);
  io::semantic_validate(xfile);
  io::StructureFile ffile = io::load_structure(map_path);
  const auto* X = std::get_if<TruncatedSimplicialObject>(&xfile.payload);
  if (!X) throw error("restrict: first argument must be a simplicial file");
  const auto* f = std::get_if<FinMap>(&ffile.payload);
  if (!f) throw error("restrict: second argument must be a finmap file");
  emit_structure(io::StructureFile{"simplicial", restrict_along(*f, *X)}, out);
  return 0;
}

int run_enumerate(std::size_t max_objects, std::size_t max_morphisms, bool cats,
                  bool iso_only) {
  UniverseBounds b;
  b.max_objects = max_objects;
  b.max_morphisms = max_morphisms;
  if (cats) {
    auto all = enumerate_cats(b);
    if (iso_only) all = iso_classes(all);
    for (const auto& C : all)
      std::cout << io::encode_structure(io::StructureFile{"cat", C}).dump() << '\n';
  } else {
    auto all = enumerate_semicats(b);
    if (iso_only) all = iso_classes(all);
    for (const auto& A : all)
      std::cout << io::encode_structure(io::StructureFile{"semicat", A}).dump() << '\n';
  }
  return 0;
}

int run_selftest(const selftest::Options& o, bool as_json) {
  auto results = selftest::run_all(o);
  bool all_pass = true;
  if (as_json) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    std::cout << json{{"command", "selftest"}, {"pass", all_pass}, {"checks", checks}}.dump()
              << '\n';
  } else {
    for (const auto& r : results) all_pass = all_pass && r.pass;
    std::cout << selftest::render_report(results);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite category objects, spans, and quasi-unit promotion"};
  app.require_subcommand(1);

  int rc = 0;
  bool as_json = false;
  std::string in_path, second_path, out_path;
  int arity = 1, truncation = 2;
  std::size_t max_objects = 2, max_morphisms = 3;
  bool cats = false, iso_only = false;
  selftest::Options st;

  auto add_json = [&](CLI::App* sc) { sc->add_flag("--json", as_json, "machine-readable report"); };
  auto add_output = [&](CLI::App* sc) {
    sc->add_option("-o,--output", out_path, "write the result here instead of stdout");
  };
  auto output = [&]() {
    Output o;
    o.as_json = as_json;
    if (!out_path.empty()) o.path = out_path;
    return o;
  };

  auto* validate = app.add_subcommand("validate", "decode a structure file and check its laws");
  validate->add_option("file", in_path)->required();
  add_json(validate);
  validate->callback([&] { rc = run_validate(in_path, as_json); });

  auto* segal = app.add_subcommand("check-segal", "test the Segal condition");
  segal->add_option("file", in_path)->required();
  add_json(segal);
  segal->callback([&] { rc = run_check_segal(in_path, as_json); });

  auto* qunits = app.add_subcommand("quasi-units", "search for the quasi-unit family");
  qunits->add_option("file", in_path)->required();
  add_json(qunits);
  qunits->callback([&] { rc = run_quasi_units(in_path, as_json); });

  auto* promote = app.add_subcommand("promote", "install the quasi-unit as an identity");
  promote->add_option("file", in_path)->required();
  add_json(promote);
  add_output(promote);
  promote->callback([&] { rc = run_promote(in_path, output()); });

  auto* cfunctor = app.add_subcommand("check-functor", "validate a functor and its unit behavior");
  cfunctor->add_option("file", in_path)->required();
  add_json(cfunctor);
  cfunctor->callback([&] { rc = run_check_functor(in_path, as_json); });

  auto* tospan = app.add_subcommand("to-span-alg", "transcribe a presentation to a span monoid");
  tospan->add_option("file", in_path)->required();
  add_json(tospan);
  add_output(tospan);
  tospan->callback([&] { rc = run_to_span_alg(in_path, output()); });

  auto* fromspan = app.add_subcommand("from-span-alg", "transcribe a span monoid back");
  fromspan->add_option("file", in_path)->required();
  add_json(fromspan);
  add_output(fromspan);
  fromspan->callback([&] { rc = run_from_span_alg(in_path, output()); });

  auto* complete = app.add_subcommand("check-complete", "test completeness (gauntness)");
  complete->add_option("file", in_path)->required();
  complete->add_option("--arity", arity, "1 for simplicial, n for n-uple input")
      ->default_val(1);
  add_json(complete);
  complete->callback([&] { rc = run_check_complete(in_path, arity, as_json); });

  auto* codisc = app.add_subcommand("codiscrete", "codiscrete object on a finite set");
  codisc->add_option("file", in_path)->required();
  codisc->add_option("--truncation", truncation, "truncation level")->default_val(2);
  add_json(codisc);
  add_output(codisc);
  codisc->callback([&] { rc = run_codiscrete(in_path, truncation, output()); });

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict a category object along a map");
  restrict_cmd->add_option("simplicial", in_path)->required();
  restrict_cmd->add_option("map", second_path)->required();
  add_json(restrict_cmd);
  add_output(restrict_cmd);
  restrict_cmd->callback([&] { rc = run_restrict(in_path, second_path, output()); });

  auto* enumerate = app.add_subcommand("enumerate", "emit the universe, one record per line");
  enumerate->add_option("--max-objects", max_objects)
      ->envname("SPANSEG_MAX_OBJECTS")
      ->default_val(2);
  enumerate->add_option("--max-morphisms", max_morphisms)
      ->envname("SPANSEG_MAX_MORPHISMS")
      ->default_val(3);
  enumerate->add_flag("--cats", cats, "unital members only");
  enumerate->add_flag("--iso-classes", iso_only, "first representative of each class");
  enumerate->callback([&] { rc = run_enumerate(max_objects, max_morphisms, cats, iso_only); });

  auto* selftest_cmd = app.add_subcommand("selftest", "run every library property check");
  selftest_cmd->add_option("--max-objects", st.max_objects)
      ->envname("SPANSEG_MAX_OBJECTS")
      ->default_val(2);
  selftest_cmd->add_option("--max-morphisms", st.max_morphisms)
      ->envname("SPANSEG_MAX_MORPHISMS")
      ->default_val(3);
  selftest_cmd->add_option("--ambient-bound", st.ambient_bound)->default_val(4);
  selftest_cmd->add_option("--seed", st.seed)->default_val(0);
  add_json(selftest_cmd);
  selftest_cmd->callback([&] { rc = run_selftest(st, as_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const io::decode_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
