#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"

namespace spanseg {

/// A quasi-unit: u assigns each object an endomorphism that every morphism
/// absorbs on both sides.
struct QuasiUnit {
  FinMap carrier;  // objects -> morphisms

  bool operator==(const QuasiUnit& o) const { return carrier == o.carrier; }
  bool operator!=(const QuasiUnit& o) const { return !(*this == o); }
};

/// Exhaustive search over all maps objects -> morphisms.  Kept deliberately
/// unoptimized; the per-object filtered search used elsewhere is tested
/// against this one.
inline std::vector<QuasiUnit> find_quasi_units(const SemicatPresentation& A) {
  std::vector<QuasiUnit> out;
  for (const auto& u : enumerate_maps(A.objects, A.morphisms)) {
    if (compose(A.src, u) != FinMap::identity(A.objects)) continue;
    if (compose(A.tgt, u) != FinMap::identity(A.objects)) continue;
    bool laws = true;
    for (std::size_t f = 0; f < A.morphisms.size() && laws; ++f) {
      const std::string& lab = A.morphisms.at(f);
      laws = A.compose_of(A.morphisms.at(u.apply_index(A.tgt.apply_index(f))), lab) == lab &&
             A.compose_of(lab, A.morphisms.at(u.apply_index(A.src.apply_index(f)))) == lab;
    }
    if (laws) out.push_back(QuasiUnit{u});
  }
  return out;
}

/// Per-object search, equivalent to the brute-force walk but polynomial.
inline std::optional<QuasiUnit> find_quasi_unit(const SemicatPresentation& A) {
  auto units = detail::quasi_unit_candidates(A);
  if (units.empty()) return std::nullopt;
  return QuasiUnit{units.front()};
}

inline bool is_quasi_unital(const SemicatPresentation& A) {
  return find_quasi_unit(A).has_value();
}

/// Promotes the unique quasi-unit to an identity assignment.
inline CatPresentation promote_to_unital(const SemicatPresentation& A) {
  auto units = find_quasi_units(A);
  if (units.empty()) throw error("promote_to_unital: input has no quasi-unit");
  CatPresentation C{A, units.front().carrier};
  validate_cat(C);
  return C;
}

inline SemicatPresentation forget_units(const CatPresentation& C) { return C.underlying; }

/// Quasi-unital against the unique quasi-units of both endpoints.
inline bool is_quasi_unital_functor(const CatFunctor& F) {
  auto ua = find_quasi_units(underlying_semicat(F.source));
  auto ub = find_quasi_units(underlying_semicat(F.target));
  if (ua.empty() || ub.empty())
    throw error("is_quasi_unital_functor: endpoints must be quasi-unital");
  return compose(F.on_morphisms, ua.front().carrier) ==
         compose(ub.front().carrier, F.on_objects);
}

/// Existential phrasing: some pair of quasi-units makes the square commute.
/// Uniqueness collapses this to the one above; both are kept and compared.
inline bool is_quasi_unital_functor_existential(const CatFunctor& F) {
  auto ua = find_quasi_units(underlying_semicat(F.source));
  auto ub = find_quasi_units(underlying_semicat(F.target));
  if (ua.empty() || ub.empty())
    throw error("is_quasi_unital_functor: endpoints must be quasi-unital");
  for (const auto& u : ua)
    for (const auto& v : ub)
      if (compose(F.on_morphisms, u.carrier) == compose(v.carrier, F.on_objects))
        return true;
  return false;
}

/// Pointwise quasi-identities: each object has a loop acting as the identity
/// on every hom-set into and out of it.
inline bool is_weakly_quasi_unital(const SemicatPresentation& A) {
  for (std::size_t x = 0; x < A.objects.size(); ++x) {
    bool found = false;
    for (std::size_t e = 0; e < A.morphisms.size() && !found; ++e) {
      if (A.src.apply_index(e) != x || A.tgt.apply_index(e) != x) continue;
      const std::string& el = A.morphisms.at(e);
      bool laws = true;
      for (std::size_t f = 0; f < A.morphisms.size() && laws; ++f) {
        const std::string& fl = A.morphisms.at(f);
        if (A.tgt.apply_index(f) == x) laws = A.compose_of(el, fl) == fl;
        if (laws && A.src.apply_index(f) == x) laws = A.compose_of(fl, el) == fl;
      }
      found = laws;
    }
    if (!found) return false;
  }
  return true;
}

struct RestrictionData {
  SemicatPresentation restricted;
  CatFunctor projection;  // restricted -> original
};

/// Pullback presentation along g : Y -> objects, computed through the nerve,
/// together with the projection functor back to the original.
inline RestrictionData restriction_with_projection(const FinMap& g,
                                                   const SemicatPresentation& A) {
  TruncatedSimplicialObject NA = algebraic_to_simplicial(A, 2);
  UnitMapResult um = unit_map(NA);
  TruncatedSimplicialObject CY = codiscrete(g.dom(), 2);
  SimplicialMap fn = codiscrete_map(g, CY, um.codisc);
  TruncatedSimplicialObject R = restrict_along(g, NA);
  auto P = std::get<SemicatPresentation>(simplicial_to_algebraic(R));

  auto pb0 = pullback(fn.components[0], um.transform.components[0]);
  auto pb1 = pullback(fn.components[1], um.transform.components[1]);
  CatFunctor proj{Presentation(P), Presentation(A),
                  FinMap(P.objects, A.objects, pb0.to_right.image_indices()),
                  FinMap(P.morphisms, A.morphisms, pb1.to_right.image_indices()), false};
  validate_functor(proj);
  return {std::move(P), std::move(proj)};
}

inline SemicatPresentation restrict_presentation(const FinMap& g,
                                                 const SemicatPresentation& A) {
  return restriction_with_projection(g, A).restricted;
}

struct RestrictedQuasiUnit {
  SemicatPresentation restricted;
  QuasiUnit unit;
};

/// The induced quasi-unit of a restriction: over (y, x) it picks the cell
/// ((y,y), u(x)).
inline RestrictedQuasiUnit restrict_quasi_unit(const FinMap& g,
                                               const SemicatPresentation& A) {
  auto units = find_quasi_units(A);
  if (units.empty()) throw error("restrict_quasi_unit: input has no quasi-unit");
  const FinMap& u = units.front().carrier;
  SemicatPresentation R = restrict_presentation(g, A);

  std::vector<std::size_t> idx;
  idx.reserve(R.objects.size());
  for (std::size_t r = 0; r < R.objects.size(); ++r) {
    const std::string& y = g.dom().at(r);  // one restricted object per element of Y
    std::string lab = pair_label(tuple_label({y, y}), u.apply(g.apply(y)));
    idx.push_back(R.morphisms.index_of(lab));
  }
  QuasiUnit unit{FinMap(R.objects, R.morphisms, std::move(idx))};
  return {std::move(R), std::move(unit)};
}

/// The factorization of F through the restriction of its target along the
/// object map: same objects as the source, morphisms sent into the pullback.
inline CatFunctor restriction_factorization(const CatFunctor& F) {
  const auto& A = underlying_semicat(F.source);
  const auto& B = underlying_semicat(F.target);
  SemicatPresentation R = restrict_presentation(F.on_objects, B);

  std::vector<std::size_t> oidx, midx;
  for (const auto& x : A.objects.elements())
    oidx.push_back(R.objects.index_of(pair_label(x, F.on_objects.apply(x))));
  for (std::size_t f = 0; f < A.morphisms.size(); ++f) {
    std::string sx = A.objects.at(A.src.apply_index(f));
    std::string tx = A.objects.at(A.tgt.apply_index(f));
    midx.push_back(R.morphisms.index_of(
        pair_label(tuple_label({sx, tx}), F.on_morphisms.apply(A.morphisms.at(f)))));
  }
  CatFunctor out{F.source, Presentation(R), FinMap(A.objects, R.objects, std::move(oidx)),
                 FinMap(A.morphisms, R.morphisms, std::move(midx)), false};
  validate_functor(out);
  return out;
}

/// Alternative criterion: F is quasi-unital iff its factorization through
/// the restriction of the target is.
inline bool quasi_unital_via_restriction(const CatFunctor& F) {
  return is_quasi_unital_functor(restriction_factorization(F));
}

namespace detail {

inline std::vector<CatFunctor> brute_force_semifunctors(const SemicatPresentation& A,
                                                        const SemicatPresentation& B) {
  std::vector<CatFunctor> out;
  for (const auto& om : enumerate_maps(A.objects, B.objects))
    for (const auto& mm : enumerate_maps(A.morphisms, B.morphisms)) {
      CatFunctor F{Presentation(A), Presentation(B), om, mm, false};
      try {
        validate_functor(F);
      } catch (const error&) {
        continue;
      }
      out.push_back(std::move(F));
    }
  return out;
}

}  // namespace detail

struct CartesianReport {
  bool pass = true;
  std::vector<std::string> counterexamples;
  long long restrictions_checked = 0;
  long long functors_checked = 0;
};

/// Verifies over a finite universe that the quasi-unital objects sit
/// cartesianly over object sets: (i) every restriction of a quasi-unital
/// member is again uniquely quasi-unital, carries the induced unit, and the
/// projection back is quasi-unital; (ii) a semifunctor between quasi-unital
/// members is quasi-unital exactly when its factorization through the
/// restriction of its target is.  Restrictions are taken along every map
/// from canonical sets of each size occurring in the universe; anything that
/// fails (including malformed members surfacing mid-computation) is recorded
/// as a counterexample rather than thrown.
inline CartesianReport cartesian_subcategory_check(
    const std::vector<SemicatPresentation>& universe) {
  CartesianReport rep;
  auto note = [&](const std::string& s) {
    rep.pass = false;
    rep.counterexamples.push_back(s);
  };

  std::vector<const SemicatPresentation*> qu;
  for (const auto& A : universe)
    if (is_quasi_unital(A)) qu.push_back(&A);

  std::size_t max_objects = 0;
  for (const auto& A : universe) max_objects = std::max(max_objects, A.objects.size());
  std::vector<FinSet> shapes;
  for (std::size_t k = 0; k <= max_objects; ++k) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("y" + std::to_string(i));
    shapes.push_back(FinSet(std::move(labels)));
  }

  for (std::size_t a = 0; a < qu.size(); ++a) {
    const auto& A = *qu[a];
    for (const auto& Y : shapes)
      for (const auto& g : enumerate_maps(Y, A.objects)) {
        ++rep.restrictions_checked;
        std::string where = "member " + std::to_string(a) + ", |Y| = " +
                            std::to_string(Y.size());
        try {
          RestrictionData rd = restriction_with_projection(g, A);
          auto units = find_quasi_units(rd.restricted);
          if (units.size() != 1) {
            note(where + ": restriction is not uniquely quasi-unital");
            continue;
          }
          if (restrict_quasi_unit(g, A).unit != units.front())
            note(where + ": induced quasi-unit is not the unique one");
          if (!is_quasi_unital_functor(rd.projection))
            note(where + ": projection from the restriction is not quasi-unital");
        } catch (const error& e) {
          note(where + ": " + e.what());
        }
      }
  }

  for (std::size_t a = 0; a < qu.size(); ++a)
    for (std::size_t b = 0; b < qu.size(); ++b)
      for (const auto& F : detail::brute_force_semifunctors(*qu[a], *qu[b])) {
        ++rep.functors_checked;
        try {
          if (is_quasi_unital_functor(F) != quasi_unital_via_restriction(F))
            note("members " + std::to_string(a) + " -> " + std::to_string(b) +
                 ": restriction criterion disagrees");
        } catch (const error& e) {
          note("members " + std::to_string(a) + " -> " + std::to_string(b) + ": " +
               e.what());
        }
      }
  return rep;
}

/// Quasi-unit at the simplicial level: the map X_0 -> X_1 the degeneracy
/// would be, found through the extracted presentation.
inline std::optional<FinMap> find_quasi_unit_simplicial(const TruncatedSimplicialObject& X) {
  if (X.unital) {
    if (X.truncation < 1) throw error("find_quasi_unit_simplicial: truncation too small");
    return X.degeneracies[0][0];
  }
  if (X.truncation < 2) throw error("find_quasi_unit_simplicial: truncation too small");
  auto A = std::get<SemicatPresentation>(simplicial_to_algebraic(X));
  auto unit = find_quasi_unit(A);
  if (!unit) return std::nullopt;
  return unit->carrier;
}

/// Rebuilds the degeneracies of a non-unital Segal object from its quasi-
/// unit, keeping levels and faces untouched: s_i on a cell splices the
/// quasi-unit of vertex i into its edge string and the Segal bijection pins
/// the resulting cell.
inline TruncatedSimplicialObject promote_simplicial(const TruncatedSimplicialObject& X) {
  if (X.unital) return X;
  if (X.truncation < 2) throw error("promote_simplicial: truncation must be at least 2");
  if (!check_segal(X)) throw error("promote_simplicial: Segal condition fails");
  auto u = find_quasi_unit_simplicial(X);
  if (!u) throw error("promote_simplicial: no quasi-unit");

  std::vector<std::map<std::vector<std::size_t>, std::size_t>> by_edges(X.truncation + 1);
  std::vector<std::vector<std::vector<std::size_t>>> edges_of(X.truncation + 1);
  for (int n = 1; n <= X.truncation; ++n) {
    std::vector<FinMap> e;
    for (int i = 0; i < n; ++i) e.push_back(evaluate_simplex(X, rho(i, i + 1, n)));
    for (std::size_t c = 0; c < X.levels[n].size(); ++c) {
      std::vector<std::size_t> key;
      key.reserve(n);
      for (int i = 0; i < n; ++i) key.push_back(e[i].apply_index(c));
      edges_of[n].push_back(key);
      by_edges[n][key] = c;
    }
  }

  TruncatedSimplicialObject Y = X;
  Y.unital = true;
  Y.degeneracies.resize(X.truncation);
  for (int n = 0; n < X.truncation; ++n) {
    std::vector<FinMap> vert;
    for (int i = 0; i <= n; ++i) vert.push_back(evaluate_simplex(X, rho(i, i, n)));
    for (int i = 0; i <= n; ++i) {
      std::vector<std::size_t> idx;
      idx.reserve(X.levels[n].size());
      for (std::size_t c = 0; c < X.levels[n].size(); ++c) {
        std::size_t loop = u->apply_index(vert[i].apply_index(c));
        std::vector<std::size_t> key;
        if (n == 0) {
          key = {loop};
        } else {
          key = edges_of[n][c];
          key.insert(key.begin() + i, loop);
        }
        idx.push_back(by_edges[n + 1].at(key));
      }
      Y.degeneracies[n].push_back(FinMap(X.levels[n], X.levels[n + 1], std::move(idx)));
    }
  }
  validate_simplicial(Y);
  return Y;
}

}  // namespace spanseg
