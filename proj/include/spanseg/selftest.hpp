#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/enumerate.hpp"
#include "spanseg/io.hpp"
#include "spanseg/nfold.hpp"
#include "spanseg/quasiunit.hpp"
#include "spanseg/samples.hpp"
#include "spanseg/spanalg.hpp"
#include "spanseg/spans.hpp"

namespace spanseg::selftest {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::size_t max_objects = 2;
  std::size_t max_morphisms = 3;
  int ambient_bound = 4;   // ordinal size cap for the interval combinatorics
  unsigned seed = 0;       // sampling seed for the spot checks that subsample
};

namespace detail {

// Everything the checks quantify over, computed once per run.
struct Universe {
  std::vector<SemicatPresentation> semicats;
  std::vector<CatPresentation> cats;
  std::vector<TruncatedSimplicialObject> nerves;      // truncation 3, no degeneracies
  std::vector<TruncatedSimplicialObject> cat_nerves;  // truncation 3, unital
};

inline Universe build_universe(const Options& o) {
  UniverseBounds b;
  b.max_objects = o.max_objects;
  b.max_morphisms = o.max_morphisms;
  Universe u;
  u.semicats = enumerate_semicats(b);
  u.cats = enumerate_cats(b);
  u.nerves.reserve(u.semicats.size());
  for (const auto& A : u.semicats) u.nerves.push_back(algebraic_to_simplicial(A, 3));
  u.cat_nerves.reserve(u.cats.size());
  for (const auto& C : u.cats) u.cat_nerves.push_back(algebraic_to_simplicial(C, 3));
  return u;
}

inline std::string count_detail(std::initializer_list<std::pair<long long, const char*>> parts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, label] : parts) {
    if (!first) out << ", ";
    first = false;
    out << n << ' ' << label;
  }
  return out.str();
}

// All bundle-category morphisms with both ambient ordinals <= bound.
inline std::vector<ShatMorphism> all_shat_morphisms(int bound) {
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

// Index tables for the hom-set walks: src/tgt per morphism, composition as
// comp[g * n + f] = g after f (SIZE_MAX when not composable), the monoid
// transcription with its composable-pair lookup pairidx[first * n + second].
struct IndexedSemicat {
  std::size_t nobj = 0, nmor = 0;
  std::vector<std::size_t> src, tgt, comp;
  SpanMonoid monoid;
  std::vector<std::size_t> pair_first, pair_second, mult, pairidx;
};

inline IndexedSemicat index_semicat(const SemicatPresentation& A) {
  IndexedSemicat t;
  t.nobj = A.objects.size();
  t.nmor = A.morphisms.size();
  t.src = A.src.image_indices();
  t.tgt = A.tgt.image_indices();
  t.comp.assign(t.nmor * t.nmor, SIZE_MAX);
  for (std::size_t g = 0; g < t.nmor; ++g)
    for (std::size_t f = 0; f < t.nmor; ++f)
      if (t.tgt[f] == t.src[g])
        t.comp[g * t.nmor + f] =
            A.morphisms.index_of(A.compose_of(A.morphisms.at(g), A.morphisms.at(f)));
  t.monoid = cat_to_span_monoid(Presentation(A));
  auto pb = monoid_pairs(t.monoid.carrier);
  t.pair_first = pb.to_left.image_indices();
  t.pair_second = pb.to_right.image_indices();
  t.mult = t.monoid.mult.image_indices();
  t.pairidx.assign(t.nmor * t.nmor, SIZE_MAX);
  for (std::size_t q = 0; q < pb.set.size(); ++q)
    t.pairidx[t.pair_first[q] * t.nmor + t.pair_second[q]] = q;
  return t;
}

using MapPair = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

inline bool legs_preserved(const IndexedSemicat& a, const IndexedSemicat& b,
                           const std::vector<std::size_t>& obase,
                           const std::vector<std::size_t>& oapex) {
  for (std::size_t e = 0; e < a.nmor; ++e)
    if (b.src[oapex[e]] != obase[a.src[e]] || b.tgt[oapex[e]] != obase[a.tgt[e]])
      return false;
  return true;
}

// Hom-set through the presentation: leg preservation plus the composition
// table square.
inline std::vector<MapPair> hom_via_comp(const IndexedSemicat& a, const IndexedSemicat& b) {
  std::vector<MapPair> out;
  std::vector<std::size_t> obase(a.nobj, 0);
  do {
    std::vector<std::size_t> oapex(a.nmor, 0);
    do {
      if (!legs_preserved(a, b, obase, oapex)) continue;
      bool ok = true;
      for (std::size_t g = 0; g < a.nmor && ok; ++g)
        for (std::size_t f = 0; f < a.nmor && ok; ++f) {
          std::size_t c = a.comp[g * a.nmor + f];
          if (c == SIZE_MAX) continue;
          ok = oapex[c] == b.comp[oapex[g] * b.nmor + oapex[f]];
        }
      if (ok) out.emplace_back(obase, oapex);
    } while (spanseg::detail::bump_odometer(oapex, b.nmor));
  } while (spanseg::detail::bump_odometer(obase, b.nobj));
  return out;
}

// Hom-set through the span transcription: the same legs, with the square
// against the monoid multiplication on composable pairs.
inline std::vector<MapPair> hom_via_monoid(const IndexedSemicat& a, const IndexedSemicat& b) {
  std::vector<MapPair> out;
  std::vector<std::size_t> obase(a.nobj, 0);
  do {
    std::vector<std::size_t> oapex(a.nmor, 0);
    do {
      if (!legs_preserved(a, b, obase, oapex)) continue;
      bool ok = true;
      for (std::size_t q = 0; q < a.mult.size() && ok; ++q) {
        std::size_t image =
            b.pairidx[oapex[a.pair_first[q]] * b.nmor + oapex[a.pair_second[q]]];
        ok = image != SIZE_MAX && oapex[a.mult[q]] == b.mult[image];
      }
      if (ok) out.emplace_back(obase, oapex);
    } while (spanseg::detail::bump_odometer(oapex, b.nmor));
  } while (spanseg::detail::bump_odometer(obase, b.nobj));
  return out;
}

// Valid but non-Segal objects for the negative side of the cover check:
// a missing composite cell and a doubled one.
inline std::vector<TruncatedSimplicialObject> non_segal_fixtures() {
  FinSet pt({"a"});
  FinSet loop({"f"});
  FinMap to_pt(loop, pt, {0});

  TruncatedSimplicialObject missing;
  missing.truncation = 2;
  missing.levels = {pt, loop, FinSet(std::vector<std::string>{})};
  missing.faces.resize(3);
  missing.faces[1] = {to_pt, to_pt};
  FinMap none(missing.levels[2], loop, {});
  missing.faces[2] = {none, none, none};

  TruncatedSimplicialObject doubled;
  doubled.truncation = 2;
  doubled.levels = {pt, loop, FinSet({"p", "q"})};
  doubled.faces.resize(3);
  doubled.faces[1] = {to_pt, to_pt};
  FinMap collapse(doubled.levels[2], loop, {0, 0});
  doubled.faces[2] = {collapse, collapse, collapse};

  return {missing, doubled};
}

}  // namespace detail

inline CheckResult check_quasi_unit_uniqueness(const detail::Universe& u) {
  long long unital = 0;
  bool at_most_one = true, agree = true;
  for (const auto& A : u.semicats) {
    auto brute = find_quasi_units(A);
    if (brute.size() > 1) at_most_one = false;
    if (!brute.empty()) ++unital;
    auto fast = find_quasi_unit(A);
    if (brute.empty() != !fast.has_value() ||
        (!brute.empty() && brute.front().carrier != fast->carrier))
      agree = false;
  }
  return {"quasi-unit-uniqueness", at_most_one && agree,
          detail::count_detail({{(long long)u.semicats.size(), "semicategories"},
                                {unital, "quasi-unital, never more than one unit"}})};
}

inline CheckResult check_promote_forget_roundtrip(const detail::Universe& u) {
  long long promoted = 0;
  bool ok = true;
  for (const auto& A : u.semicats) {
    if (!is_quasi_unital(A)) continue;
    ++promoted;
    if (forget_units(promote_to_unital(A)) != A) ok = false;
  }
  for (const auto& C : u.cats)
    if (promote_to_unital(forget_units(C)) != C) ok = false;
  return {"promote-forget-roundtrip", ok,
          detail::count_detail({{promoted, "semicategories promoted"},
                                {(long long)u.cats.size(), "categories round-tripped"}})};
}

inline CheckResult check_unital_functor_bijection(const detail::Universe& u) {
  long long pairs = 0, functors = 0;
  bool ok = true;
  for (const auto& C : u.cats)
    for (const auto& D : u.cats) {
      ++pairs;
      std::vector<detail::MapPair> unital, quasi;
      for (const auto& F : enumerate_functors(C, D))
        unital.emplace_back(F.on_objects.image_indices(), F.on_morphisms.image_indices());
      for (const auto& F : enumerate_semifunctors(C.underlying, D.underlying)) {
        if (!is_quasi_unital_functor(F)) continue;
        if (is_quasi_unital_functor_existential(F) != true) ok = false;
        quasi.emplace_back(F.on_objects.image_indices(), F.on_morphisms.image_indices());
      }
      std::sort(unital.begin(), unital.end());
      std::sort(quasi.begin(), quasi.end());
      if (unital != quasi) ok = false;
      functors += (long long)unital.size();
    }
  return {"unital-functor-bijection", ok,
          detail::count_detail({{pairs, "category pairs"},
                                {functors, "unital functors matched to quasi-unital ones"}})};
}

inline CheckResult check_constant_composition_counterexample() {
  auto A = samples::constant_g();
  bool ok = true;
  try {
    validate_semicat(A);
  } catch (const error&) {
    ok = false;
  }
  ok = ok && !is_quasi_unital(A) && !is_weakly_quasi_unital(A) && find_quasi_units(A).empty();
  bool threw = false;
  try {
    promote_to_unital(A);
  } catch (const error&) {
    threw = true;
  }
  return {"constant-composition-counterexample", ok && threw,
          "associative, no quasi-unit, no weak quasi-unit, promotion refused"};
}

inline CheckResult check_span_monoid_roundtrip(const detail::Universe& u) {
  bool ok = true;
  for (const auto& A : u.semicats) {
    SpanMonoid M = cat_to_span_monoid(Presentation(A));
    if (M.unit) ok = false;
    Presentation back = span_monoid_to_cat(M);
    const auto* S = std::get_if<SemicatPresentation>(&back);
    if (!S || *S != A) ok = false;
  }
  for (const auto& C : u.cats) {
    SpanMonoid M = cat_to_span_monoid(Presentation(C));
    if (!M.unit) ok = false;
    Presentation back = span_monoid_to_cat(M);
    const auto* K = std::get_if<CatPresentation>(&back);
    if (!K || *K != C) ok = false;
  }
  return {"span-monoid-roundtrip", ok,
          detail::count_detail(
              {{(long long)u.semicats.size(), "semicategory transcriptions inverted"},
               {(long long)u.cats.size(), "unital ones keep their unit"}})};
}

inline CheckResult check_functor_monoid_morphism_bijection(const detail::Universe& u,
                                                           const Options& o) {
  std::vector<detail::IndexedSemicat> idx;
  idx.reserve(u.semicats.size());
  for (const auto& A : u.semicats) idx.push_back(detail::index_semicat(A));

  bool ok = true;
  long long morphisms = 0;
  for (const auto& a : idx)
    for (const auto& b : idx) {
      auto via_comp = detail::hom_via_comp(a, b);
      auto via_monoid = detail::hom_via_monoid(a, b);
      std::sort(via_comp.begin(), via_comp.end());
      std::sort(via_monoid.begin(), via_monoid.end());
      if (via_comp != via_monoid) ok = false;
      morphisms += (long long)via_comp.size();
    }

  // tie the fast walks to the named transcription maps on a seeded sample
  auto sample = sample_indices(u.semicats.size(), std::min<std::size_t>(u.semicats.size(), 24),
                               o.seed);
  long long round_trips = 0;
  for (std::size_t i : sample)
    for (std::size_t j : sample) {
      auto fs = enumerate_semifunctors(u.semicats[i], u.semicats[j]);
      auto fast = detail::hom_via_comp(idx[i], idx[j]);
      if (fs.size() != fast.size()) ok = false;
      for (const auto& F : fs) {
        SpanMonoidMorphism m = functor_to_monoid_morphism(F);
        CatFunctor back = monoid_morphism_to_functor(idx[i].monoid, idx[j].monoid, m);
        if (back.on_objects != F.on_objects || back.on_morphisms != F.on_morphisms) ok = false;
        ++round_trips;
      }
    }
  return {"functor-monoid-morphism-bijection", ok,
          detail::count_detail({{(long long)(idx.size() * idx.size()), "pairs"},
                                {morphisms, "hom elements agree"},
                                {round_trips, "transcription round trips"}})};
}

inline CheckResult check_nerve_segal(const detail::Universe& u) {
  bool ok = true;
  for (std::size_t i = 0; i < u.semicats.size(); ++i) {
    const auto& X = u.nerves[i];
    try {
      validate_simplicial(X);
    } catch (const error&) {
      ok = false;
    }
    if (!check_segal(X)) ok = false;
    Presentation back = simplicial_to_algebraic(X);
    const auto* S = std::get_if<SemicatPresentation>(&back);
    if (!S || *S != u.semicats[i]) ok = false;
  }
  for (std::size_t i = 0; i < u.cats.size(); ++i) {
    const auto& X = u.cat_nerves[i];
    try {
      validate_simplicial(X);
    } catch (const error&) {
      ok = false;
    }
    if (!check_segal(X)) ok = false;
    Presentation back = simplicial_to_algebraic(X);
    const auto* K = std::get_if<CatPresentation>(&back);
    if (!K || *K != u.cats[i]) ok = false;
  }
  return {"nerve-segal", ok,
          detail::count_detail(
              {{(long long)(u.semicats.size() + u.cats.size()), "nerves validated and extracted"}})};
}

inline CheckResult check_mutation_kill(const detail::Universe& u) {
  long long total = 0, killed = 0;

  for (const auto& C : u.cats) {
    auto Y0 = algebraic_to_simplicial(C, 2);
    for (const auto& m : single_entry_mutants(Y0)) {
      ++total;
      if (mutant_killed(m, Presentation(C))) ++killed;
    }
  }
  auto deep = algebraic_to_simplicial(samples::walking_arrow(), 3);
  for (const auto& m : single_entry_mutants(deep)) {
    ++total;
    if (mutant_killed(m, Presentation(samples::walking_arrow()))) ++killed;
  }

  // composition-table mutants: swap one entry for a parallel morphism and
  // demand that validation or the nerve notices
  long long table_mutants = 0;
  for (const auto& A : u.semicats) {
    auto reference = algebraic_to_simplicial(A, 2);
    for (const auto& [key, value] : A.comp)
      for (std::size_t h = 0; h < A.morphisms.size(); ++h) {
        const std::string& alt = A.morphisms.at(h);
        if (alt == value) continue;
        if (A.src.apply(alt) != A.src.apply(value) || A.tgt.apply(alt) != A.tgt.apply(value))
          continue;
        SemicatPresentation mut = A;
        mut.comp[key] = alt;
        ++total;
        ++table_mutants;
        bool caught = false;
        try {
          validate_semicat(mut);
          caught = algebraic_to_simplicial(mut, 2) != reference;
        } catch (const error&) {
          caught = true;
        }
        if (caught) ++killed;
      }
  }

  bool ok = total >= 100 && killed == total;
  return {"mutation-kill", ok,
          detail::count_detail({{total, "mutants"},
                                {table_mutants, "of them composition entries"},
                                {killed, "killed"}})};
}

inline CheckResult check_interval_projection_functorial(const Options& o) {
  auto all = detail::all_shat_morphisms(o.ambient_bound);
  bool ok = true;
  long long pairs = 0;
  for (const auto& w1 : all)
    for (const auto& w2 : all) {
      if (w1.target != w2.source) continue;
      ++pairs;
      if (pi_morphism(compose_shat(w2, w1)) !=
          compose_simplex(pi_morphism(w1), pi_morphism(w2)))
        ok = false;
    }
  return {"interval-projection-functorial", ok && pairs > 0,
          detail::count_detail({{(long long)all.size(), "bundle morphisms"},
                                {pairs, "composable pairs"}})};
}

inline CheckResult check_interval_projection_section(const Options& o) {
  bool ok = true;
  long long maps = 0;
  for (int n = 0; n <= o.ambient_bound; ++n) {
    if (pi_object(psi(n)) != n) ok = false;
    for (int m = 0; m <= o.ambient_bound; ++m)
      for (const auto& phi : all_monotone_maps(m, n)) {
        ++maps;
        if (pi_morphism(psi_morphism(phi)) != phi) ok = false;
      }
  }
  return {"interval-projection-section", ok,
          detail::count_detail({{maps, "simplex maps recovered through the section"}})};
}

inline CheckResult check_unit_components_inert(const Options& o) {
  bool ok = true;
  long long components = 0;
  for (int n = 0; n <= o.ambient_bound; ++n)
    for (const auto& s : sigma_elements(n)) {
      ++components;
      ShatMorphism eta = eta_component(s);
      if (!in_w_class(eta) || !is_inert(eta.underlying) || !shat_is_cartesian(eta)) ok = false;
      if (eta.target != psi(pi_object(s))) ok = false;
      ShatMorphism eps = epsilon_component(s);
      if (eps.target != s || eps.underlying != SimplexMap::identity(s.ambient)) ok = false;
    }
  return {"unit-components-inert", ok,
          detail::count_detail({{components, "unit and counit components"}})};
}

inline CheckResult check_w_triangle_factorization(const Options& o) {
  bool ok = true;
  long long w_count = 0;
  for (const auto& w : detail::all_shat_morphisms(o.ambient_bound)) {
    if (!in_w_class(w)) continue;
    ++w_count;
    auto [a, b] = w_triangle_factorization(w);
    if (!shat_is_cartesian(a) || !is_inert(a.underlying)) ok = false;
    if (!shat_is_cartesian(b) || !is_inert(b.underlying)) ok = false;
    if (compose_shat(b, w) != a || a.target != b.target) ok = false;
  }
  return {"w-triangle-factorization", ok && w_count > 0,
          detail::count_detail({{w_count, "collapse morphisms factored"}})};
}

inline CheckResult check_codiscrete_terminality(const detail::Universe& u) {
  bool ok = true;
  long long extensions = 0;
  auto run = [&](const TruncatedSimplicialObject& X) {
    for (std::size_t k = 1; k <= 3; ++k) {
      FinSet S(spanseg::detail::numbered_labels("s", k));
      for (const auto& g : enumerate_maps(X.levels[0], S)) {
        ++extensions;
        if (count_maps_to_codiscrete(X, S, g) != 1) ok = false;
      }
    }
  };
  for (const auto& X : u.nerves) run(X);
  for (const auto& X : u.cat_nerves) run(X);
  return {"codiscrete-terminality", ok,
          detail::count_detail({{extensions, "object maps, one extension each"}})};
}

inline CheckResult check_restrict_two_formulas(const detail::Universe& u) {
  bool ok = true;
  long long restrictions = 0;

  auto run = [&](const TruncatedSimplicialObject& full) {
    TruncatedSimplicialObject X = truncate_simplicial(full, 2);
    for (std::size_t k = 0; k <= 2; ++k) {
      FinSet Y(spanseg::detail::numbered_labels("y", k));
      for (const auto& f : enumerate_maps(Y, X.levels[0])) {
        ++restrictions;
        TruncatedSimplicialObject R = restrict_along(f, X);
        try {
          validate_simplicial(R);
        } catch (const error&) {
          ok = false;
        }
        if (!check_segal(R)) ok = false;

        // rebuild the level-1 pullback the restriction used
        UnitMapResult um = unit_map(X);
        TruncatedSimplicialObject CY = codiscrete(Y, X.truncation);
        SimplicialMap fn = codiscrete_map(f, CY, um.codisc);
        PullbackResult pb1 = pullback(fn.components[1], um.transform.components[1]);
        if (pb1.set != R.levels[1]) ok = false;

        // the square formula: (Y x Y) x_{X0 x X0} X1
        ProductResult YY = product(Y, Y);
        ProductResult X0X0 = product(X.levels[0], X.levels[0]);
        std::vector<std::size_t> fxf_idx;
        fxf_idx.reserve(YY.set.size());
        for (std::size_t p = 0; p < YY.set.size(); ++p)
          fxf_idx.push_back(X0X0.set.index_of(
              pair_label(f.apply(Y.at(YY.first.apply_index(p))),
                         f.apply(Y.at(YY.second.apply_index(p))))));
        FinMap fxf(YY.set, X0X0.set, std::move(fxf_idx));
        std::vector<std::size_t> ends_idx;
        ends_idx.reserve(X.levels[1].size());
        for (std::size_t m = 0; m < X.levels[1].size(); ++m)
          ends_idx.push_back(X0X0.set.index_of(
              pair_label(X.levels[0].at(X.faces[1][1].apply_index(m)),
                         X.levels[0].at(X.faces[1][0].apply_index(m)))));
        FinMap ends(X.levels[1], X0X0.set, std::move(ends_idx));
        PullbackResult square = pullback(fxf, ends);

        // translate codiscrete edges to plain pairs and exhibit the bijection
        std::vector<std::size_t> edge_idx;
        edge_idx.reserve(CY.levels[1].size());
        for (std::size_t e = 0; e < CY.levels[1].size(); ++e)
          edge_idx.push_back(YY.set.index_of(
              pair_label(Y.at(CY.faces[1][1].apply_index(e)),
                         Y.at(CY.faces[1][0].apply_index(e)))));
        FinMap edges_to_pairs(CY.levels[1], YY.set, std::move(edge_idx));
        FinMap mediating = mediating_map(square, fxf, ends,
                                         compose(edges_to_pairs, pb1.to_left), pb1.to_right);
        if (!is_bijection(mediating)) ok = false;
      }
    }
  };
  for (const auto& X : u.nerves) run(X);
  for (const auto& X : u.cat_nerves) run(X);
  return {"restrict-two-formulas", ok,
          detail::count_detail({{restrictions, "restrictions, both pullback formulas agree"}})};
}

inline CheckResult check_complete_iff_gaunt(const detail::Universe& u) {
  bool ok = true;
  long long gaunt = 0;
  for (const auto& C : u.cats) {
    bool g = is_gaunt(C);
    if (g) ++gaunt;
    if (is_complete(C.underlying) != g) ok = false;
  }
  if (!is_complete(samples::walking_arrow().underlying)) ok = false;
  if (is_complete(samples::walking_iso().underlying)) ok = false;
  return {"complete-iff-gaunt", ok,
          detail::count_detail({{(long long)u.cats.size(), "categories"},
                                {gaunt, "gaunt, matching completeness everywhere"}})};
}

inline CheckResult check_spanplus_iff_segal(const detail::Universe& u) {
  bool ok = true;
  long long compared = 0, non_segal = 0;
  auto compare = [&](const TruncatedSimplicialObject& X) {
    for (int n = 0; n <= X.truncation; ++n) {
      ++compared;
      bool segal = check_segal(truncate_simplicial(X, n));
      if (!segal) ++non_segal;
      SigmaDiagram D = catobj_to_sigma_diagram(X, n);
      try {
        validate_sigma_diagram(D);
      } catch (const error&) {
        ok = false;
      }
      if (check_spanplus_segal(D) != segal) ok = false;
    }
  };
  for (const auto& X : u.nerves) compare(X);
  for (const auto& F : detail::non_segal_fixtures()) {
    validate_simplicial(F);
    compare(F);
  }
  for (const auto& C : u.cats) {
    auto Y0 = algebraic_to_simplicial(forget_units(C), 2);
    for (const auto& m : single_entry_mutants(Y0)) {
      try {
        validate_simplicial(m);
      } catch (const error&) {
        continue;
      }
      compare(m);
    }
  }
  bool saw_negative = non_segal > 0;
  return {"spanplus-iff-segal", ok && saw_negative,
          detail::count_detail({{compared, "truncations compared"},
                                {non_segal, "of them non-Segal"}})};
}

inline CheckResult check_twofold_roundtrip() {
  bool ok = true;
  auto universe = samples::twofold_universe();
  for (const auto& X : universe) {
    MultiSimplicialObject F = forget_nfold(X);
    if (!find_quasi_units_nfold(F)) ok = false;
    MultiSimplicialObject P = promote_nfold(F);
    if (P != X) ok = false;
    if (forget_nfold(P) != F) ok = false;
  }
  return {"twofold-roundtrip", ok,
          detail::count_detail(
              {{(long long)universe.size(), "double nerves forgotten and promoted back"}})};
}

inline CheckResult check_twofold_completeness_agreement() {
  bool ok = true;
  long long complete = 0;
  auto universe = samples::twofold_universe();
  for (const auto& X : universe) {
    bool lines = is_complete_nfold(X);
    if (lines != is_complete_nfold_recursive(X)) ok = false;
    if (lines) ++complete;
  }
  return {"twofold-completeness-agreement", ok,
          detail::count_detail({{(long long)universe.size(), "double nerves"},
                                {complete, "complete, both phrasings agree"}})};
}

inline CheckResult check_enumeration_determinism(const detail::Universe& u, const Options& o) {
  UniverseBounds b;
  b.max_objects = o.max_objects;
  b.max_morphisms = o.max_morphisms;
  bool ok = enumerate_semicats(b) == u.semicats && enumerate_cats(b) == u.cats;
  ok = ok && sample_indices(97, 13, o.seed) == sample_indices(97, 13, o.seed);
  if (!u.semicats.empty()) {
    io::StructureFile file{"semicat", u.semicats.front()};
    ok = ok && io::serialize_structure(file) == io::serialize_structure(file);
  }
  return {"enumeration-determinism", ok,
          detail::count_detail({{(long long)u.semicats.size(), "members re-enumerated identically"}})};
}

inline std::vector<CheckResult> run_all(const Options& o = {}) {
  detail::Universe u = detail::build_universe(o);
  std::vector<CheckResult> out;
  out.push_back(check_quasi_unit_uniqueness(u));
  out.push_back(check_promote_forget_roundtrip(u));
  out.push_back(check_unital_functor_bijection(u));
  out.push_back(check_constant_composition_counterexample());
  out.push_back(check_span_monoid_roundtrip(u));
  out.push_back(check_functor_monoid_morphism_bijection(u, o));
  out.push_back(check_nerve_segal(u));
  out.push_back(check_mutation_kill(u));
  out.push_back(check_interval_projection_functorial(o));
  out.push_back(check_interval_projection_section(o));
  out.push_back(check_unit_components_inert(o));
  out.push_back(check_w_triangle_factorization(o));
  out.push_back(check_codiscrete_terminality(u));
  out.push_back(check_restrict_two_formulas(u));
  out.push_back(check_complete_iff_gaunt(u));
  out.push_back(check_spanplus_iff_segal(u));
  out.push_back(check_twofold_roundtrip());
  out.push_back(check_twofold_completeness_agreement());
  out.push_back(check_enumeration_determinism(u, o));
  return out;
}

inline std::string render_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    out << (r.pass ? "ok   " : "FAIL ") << r.name << ": " << r.detail << '\n';
  }
  out << "selftest: " << results.size() << " checks, " << failures << " failures\n";
  return out.str();
}

}  // namespace spanseg::selftest
