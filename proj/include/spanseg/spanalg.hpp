#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/quasiunit.hpp"
#include "spanseg/spans.hpp"

namespace spanseg {

/// A monoid in endomorphism spans over a base: multiplication is defined on
/// the canonical pullback of composable pairs (first coordinate first).
struct SpanMonoid {
  FinSet base;
  Span carrier;                 // base <- apex -> base
  FinMap mult;                  // (apex x_base apex) -> apex
  std::optional<FinMap> unit;   // base -> apex

  bool operator==(const SpanMonoid& o) const {
    return base == o.base && carrier == o.carrier && mult == o.mult && unit == o.unit;
  }
  bool operator!=(const SpanMonoid& o) const { return !(*this == o); }
};

inline PullbackResult monoid_pairs(const Span& carrier) {
  return pullback(carrier.right, carrier.left);
}

inline void validate_span_monoid(const SpanMonoid& M) {
  validate_span(M.carrier);
  if (M.carrier.left.cod() != M.base || M.carrier.right.cod() != M.base)
    throw error("span monoid: carrier feet must equal the base");
  const FinMap& l = M.carrier.left;
  const FinMap& r = M.carrier.right;
  auto pb2 = monoid_pairs(M.carrier);
  if (M.mult.dom() != pb2.set || M.mult.cod() != M.carrier.apex())
    throw error("span monoid: mult must go from the canonical pair pullback to the apex");
  if (compose(l, M.mult) != compose(l, pb2.to_left) ||
      compose(r, M.mult) != compose(r, pb2.to_right))
    throw error("span monoid: mult does not respect the legs");

  // associativity through the canonical associator ((a,b),c) -> (a,(b,c))
  auto p3l = pullback(compose(r, pb2.to_right), l);
  auto p3r = pullback(r, compose(l, pb2.to_left));
  FinMap bc = mediating_map(pb2, r, l, compose(pb2.to_right, p3l.to_left), p3l.to_right);
  FinMap assoc =
      mediating_map(p3r, r, compose(l, pb2.to_left), compose(pb2.to_left, p3l.to_left), bc);
  FinMap mult_tensor_id =
      mediating_map(pb2, r, l, compose(M.mult, p3l.to_left), p3l.to_right);
  FinMap id_tensor_mult =
      mediating_map(pb2, r, l, p3r.to_left, compose(M.mult, p3r.to_right));
  if (compose(M.mult, mult_tensor_id) != compose(M.mult, compose(id_tensor_mult, assoc)))
    throw error("span monoid: associativity fails");

  if (M.unit) {
    const FinMap& u = *M.unit;
    if (u.dom() != M.base || u.cod() != M.carrier.apex())
      throw error("span monoid: unit endpoints wrong");
    if (compose(l, u) != FinMap::identity(M.base) ||
        compose(r, u) != FinMap::identity(M.base))
      throw error("span monoid: unit is not a section of the legs");
    FinMap lam = mediating_map(pb2, r, l, compose(u, l), FinMap::identity(M.carrier.apex()));
    FinMap rho_ = mediating_map(pb2, r, l, FinMap::identity(M.carrier.apex()), compose(u, r));
    if (compose(M.mult, lam) != FinMap::identity(M.carrier.apex()) ||
        compose(M.mult, rho_) != FinMap::identity(M.carrier.apex()))
      throw error("span monoid: unit laws fail");
  }
}

/// Transcribes a presentation: the carrier is the (src, tgt) span, mult
/// reads the composition table along the canonical pair labeling.
inline SpanMonoid cat_to_span_monoid(const Presentation& P) {
  const auto& A = underlying_semicat(P);
  SpanMonoid M;
  M.base = A.objects;
  M.carrier = Span{A.src, A.tgt};
  auto pb2 = monoid_pairs(M.carrier);
  std::vector<std::size_t> idx;
  idx.reserve(pb2.set.size());
  for (std::size_t p = 0; p < pb2.set.size(); ++p) {
    const std::string& first = A.morphisms.at(pb2.to_left.apply_index(p));
    const std::string& second = A.morphisms.at(pb2.to_right.apply_index(p));
    idx.push_back(A.morphisms.index_of(A.compose_of(second, first)));
  }
  M.mult = FinMap(pb2.set, A.morphisms, std::move(idx));
  if (const auto* c = std::get_if<CatPresentation>(&P)) M.unit = c->id;
  return M;
}

/// Inverse transcription; validates the monoid and the resulting
/// presentation.
inline Presentation span_monoid_to_cat(const SpanMonoid& M) {
  validate_span_monoid(M);
  SemicatPresentation A;
  A.objects = M.base;
  A.morphisms = M.carrier.apex();
  A.src = M.carrier.left;
  A.tgt = M.carrier.right;
  auto pb2 = monoid_pairs(M.carrier);
  for (std::size_t p = 0; p < pb2.set.size(); ++p) {
    const std::string& first = A.morphisms.at(pb2.to_left.apply_index(p));
    const std::string& second = A.morphisms.at(pb2.to_right.apply_index(p));
    A.comp[{second, first}] = A.morphisms.at(M.mult.apply_index(p));
  }
  if (!M.unit) {
    validate_semicat(A);
    return A;
  }
  CatPresentation C{std::move(A), *M.unit};
  validate_cat(C);
  return C;
}

/// The unique section of both legs satisfying both unit laws through the
/// canonical unitors, if any.
inline std::optional<FinMap> quasi_unit_of_monoid(const SpanMonoid& M) {
  const FinMap& l = M.carrier.left;
  const FinMap& r = M.carrier.right;
  auto pb2 = monoid_pairs(M.carrier);
  for (const auto& u : enumerate_maps(M.base, M.carrier.apex())) {
    if (compose(l, u) != FinMap::identity(M.base) ||
        compose(r, u) != FinMap::identity(M.base))
      continue;
    FinMap lam = mediating_map(pb2, r, l, compose(u, l), FinMap::identity(M.carrier.apex()));
    FinMap rho_ = mediating_map(pb2, r, l, FinMap::identity(M.carrier.apex()), compose(u, r));
    if (compose(M.mult, lam) == FinMap::identity(M.carrier.apex()) &&
        compose(M.mult, rho_) == FinMap::identity(M.carrier.apex()))
      return u;
  }
  return std::nullopt;
}

/// Morphism of span monoids in the vertical direction: a base map and an
/// apex map commuting with legs, mult, and (when requested) units.
struct SpanMonoidMorphism {
  FinMap on_base, on_apex;
};

inline void validate_monoid_morphism(const SpanMonoid& M, const SpanMonoid& N,
                                     const SpanMonoidMorphism& m, bool unital = false) {
  if (m.on_base.dom() != M.base || m.on_base.cod() != N.base ||
      m.on_apex.dom() != M.carrier.apex() || m.on_apex.cod() != N.carrier.apex())
    throw error("monoid morphism: component endpoints wrong");
  if (compose(N.carrier.left, m.on_apex) != compose(m.on_base, M.carrier.left) ||
      compose(N.carrier.right, m.on_apex) != compose(m.on_base, M.carrier.right))
    throw error("monoid morphism: leg squares do not commute");
  auto pbM = monoid_pairs(M.carrier);
  auto pbN = monoid_pairs(N.carrier);
  FinMap pairs = mediating_map(pbN, N.carrier.right, N.carrier.left,
                               compose(m.on_apex, pbM.to_left),
                               compose(m.on_apex, pbM.to_right));
  if (compose(m.on_apex, M.mult) != compose(N.mult, pairs))
    throw error("monoid morphism: multiplication square does not commute");
  if (unital) {
    if (!M.unit || !N.unit)
      throw error("monoid morphism: unital comparison needs unital monoids");
    if (compose(m.on_apex, *M.unit) != compose(*N.unit, m.on_base))
      throw error("monoid morphism: unit square does not commute");
  }
}

inline SpanMonoidMorphism functor_to_monoid_morphism(const CatFunctor& F) {
  SpanMonoidMorphism m{F.on_objects, F.on_morphisms};
  validate_monoid_morphism(cat_to_span_monoid(F.source), cat_to_span_monoid(F.target), m,
                           F.unital);
  return m;
}

inline CatFunctor monoid_morphism_to_functor(const SpanMonoid& M, const SpanMonoid& N,
                                             const SpanMonoidMorphism& m,
                                             bool unital = false) {
  validate_monoid_morphism(M, N, m, unital);
  CatFunctor F{span_monoid_to_cat(M), span_monoid_to_cat(N), m.on_base, m.on_apex, unital};
  validate_functor(F);
  return F;
}

struct CodiscreteAlgebraReport {
  bool pass = true;
  long long objects_checked = 0;
  long long maps_checked = 0;
  std::vector<std::string> failures;
};

/// Checks over a universe of simplicial objects that maps into the
/// codiscrete object on S are exactly the object maps: each g : X_0 -> S
/// must extend uniquely.
inline CodiscreteAlgebraReport codiscrete_algebra_check(
    const FinSet& S, const std::vector<TruncatedSimplicialObject>& universe) {
  CodiscreteAlgebraReport rep;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    const auto& X = universe[k];
    ++rep.objects_checked;
    for (const auto& g : enumerate_maps(X.levels[0], S)) {
      ++rep.maps_checked;
      long long count = count_maps_to_codiscrete(X, S, g);
      if (count != 1) {
        rep.pass = false;
        rep.failures.push_back("member " + std::to_string(k) + ": an object map has " +
                               std::to_string(count) + " extensions");
      }
    }
  }
  return rep;
}

}  // namespace spanseg
