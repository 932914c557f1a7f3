#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spanseg/finset.hpp"

namespace spanseg {

/// Weakly monotone map [dom] -> [cod] between finite ordinals
/// [n] = {0, ..., n}, stored by its value list.
struct SimplexMap {
  int dom = 0, cod = 0;
  std::vector<int> values;  // size dom + 1

  SimplexMap() : values{0} {}

  SimplexMap(int dom_, int cod_, std::vector<int> values_)
      : dom(dom_), cod(cod_), values(std::move(values_)) {
    if (dom < 0 || cod < 0) throw error("SimplexMap: negative ordinal");
    if (static_cast<int>(values.size()) != dom + 1)
      throw error("SimplexMap: value list size must be dom + 1");
    for (int i = 0; i <= dom; ++i) {
      if (values[i] < 0 || values[i] > cod)
        throw error("SimplexMap: value out of range");
      if (i > 0 && values[i] < values[i - 1])
        throw error("SimplexMap: values must be weakly monotone");
    }
  }

  static SimplexMap identity(int n) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i;
    return SimplexMap(n, n, std::move(v));
  }

  int operator()(int i) const { return values.at(i); }

  bool is_identity() const {
    if (dom != cod) return false;
    for (int i = 0; i <= dom; ++i)
      if (values[i] != i) return false;
    return true;
  }

  bool operator==(const SimplexMap& o) const {
    return dom == o.dom && cod == o.cod && values == o.values;
  }
  bool operator!=(const SimplexMap& o) const { return !(*this == o); }
};

inline SimplexMap compose_simplex(const SimplexMap& g, const SimplexMap& f) {
  if (f.cod != g.dom)
    throw error("compose_simplex: codomain of the first map must equal domain of the second");
  std::vector<int> v(f.dom + 1);
  for (int i = 0; i <= f.dom; ++i) v[i] = g(f(i));
  return SimplexMap(f.dom, g.cod, std::move(v));
}

/// Interval inclusions: maps with phi(i) = phi(0) + i for every i.
inline bool is_inert(const SimplexMap& phi) {
  for (int i = 0; i <= phi.dom; ++i)
    if (phi(i) != phi(0) + i) return false;
  return true;
}

/// The inert map [j - i] -> [n] onto the subinterval {i, ..., j}.
inline SimplexMap rho(int i, int j, int n) {
  if (i < 0 || i > j || j > n) throw error("rho: need 0 <= i <= j <= n");
  std::vector<int> v(j - i + 1);
  for (int t = 0; t <= j - i; ++t) v[t] = i + t;
  return SimplexMap(j - i, n, std::move(v));
}

/// Point of the interval poset over [ambient]: the pair (lo, hi) with
/// 0 <= lo <= hi <= ambient.  Doubles as an object ([ambient], (lo, hi)) of
/// the bundle category over the simplex category.
struct SigmaElement {
  int ambient = 0, lo = 0, hi = 0;

  SigmaElement() = default;
  SigmaElement(int ambient_, int lo_, int hi_) : ambient(ambient_), lo(lo_), hi(hi_) {
    if (!(0 <= lo && lo <= hi && hi <= ambient))
      throw error("SigmaElement: need 0 <= lo <= hi <= ambient");
  }

  int length() const { return hi - lo; }

  bool operator==(const SigmaElement& o) const {
    return ambient == o.ambient && lo == o.lo && hi == o.hi;
  }
  bool operator!=(const SigmaElement& o) const { return !(*this == o); }
};

/// Order by reverse interval inclusion: (i,j) <= (i',j') iff i <= i' <= j' <= j.
inline bool sigma_leq(const SigmaElement& a, const SigmaElement& b) {
  if (a.ambient != b.ambient)
    throw error("sigma_leq: elements live over different ordinals");
  return a.lo <= b.lo && b.hi <= a.hi;
}

/// Image of an interval under a monotone map: (i,j) |-> (phi(i), phi(j)).
inline SigmaElement sigma_pushforward(const SimplexMap& phi, const SigmaElement& a) {
  if (a.ambient != phi.dom)
    throw error("sigma_pushforward: interval does not live over the map's domain");
  return SigmaElement(phi.cod, phi(a.lo), phi(a.hi));
}

inline std::vector<SigmaElement> sigma_elements(int n) {
  std::vector<SigmaElement> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(n, i, j);
  return out;
}

/// Morphism ([n], (i,j)) -> ([m], (i',j')) of the bundle category: a simplex
/// map phi : [m] -> [n] such that i <= phi(i') <= phi(j') <= j.
struct ShatMorphism {
  SigmaElement source, target;
  SimplexMap underlying;  // [target.ambient] -> [source.ambient]

  ShatMorphism(SigmaElement source_, SigmaElement target_, SimplexMap underlying_)
      : source(std::move(source_)), target(std::move(target_)),
        underlying(std::move(underlying_)) {
    if (underlying.dom != target.ambient || underlying.cod != source.ambient)
      throw error("ShatMorphism: underlying map must run from the target's ordinal "
                  "to the source's ordinal");
    if (!sigma_leq(source, sigma_pushforward(underlying, target)))
      throw error("ShatMorphism: the target interval must map into the source interval");
  }

  static ShatMorphism identity(const SigmaElement& x) {
    return ShatMorphism(x, x, SimplexMap::identity(x.ambient));
  }

  bool operator==(const ShatMorphism& o) const {
    return source == o.source && target == o.target && underlying == o.underlying;
  }
  bool operator!=(const ShatMorphism& o) const { return !(*this == o); }
};

inline ShatMorphism compose_shat(const ShatMorphism& w2, const ShatMorphism& w1) {
  if (w1.target != w2.source)
    throw error("compose_shat: target of the first morphism must equal source of the second");
  return ShatMorphism(w1.source, w2.target,
                      compose_simplex(w1.underlying, w2.underlying));
}

/// Cartesian means the target interval maps exactly onto the source interval.
inline bool shat_is_cartesian(const ShatMorphism& w) {
  return w.source == sigma_pushforward(w.underlying, w.target);
}

/// Projection to the opposite simplex category: on objects, the interval
/// length; on morphisms, t |-> phi(t + i') - i.
inline int pi_object(const SigmaElement& x) { return x.length(); }

inline SimplexMap pi_morphism(const ShatMorphism& w) {
  std::vector<int> v(w.target.length() + 1);
  for (int t = 0; t <= w.target.length(); ++t)
    v[t] = w.underlying(t + w.target.lo) - w.source.lo;
  return SimplexMap(w.target.length(), w.source.length(), std::move(v));
}

/// Section of the projection: [n] |-> ([n], (0, n)), phi |-> phi over itself.
inline SigmaElement psi(int n) { return SigmaElement(n, 0, n); }

inline ShatMorphism psi_morphism(const SimplexMap& phi) {
  return ShatMorphism(psi(phi.cod), psi(phi.dom), phi);
}

/// Component ([n], (i,j)) -> ([j-i], (0, j-i)) of the unit: lies over the
/// inert map onto {i, ..., j} and is cartesian.
inline ShatMorphism eta_component(const SigmaElement& x) {
  return ShatMorphism(x, psi(x.length()), rho(x.lo, x.hi, x.ambient));
}

/// Component ([n], (0,n)) -> ([n], (i,j)) of the counit, over the identity.
inline ShatMorphism epsilon_component(const SigmaElement& x) {
  return ShatMorphism(psi(x.ambient), x, SimplexMap::identity(x.ambient));
}

/// A morphism is projected to an identity exactly when the intervals have the
/// same length and phi(i' + t) = i + t on the target interval.  Each such
/// morphism factors through ([j-i], (0, j-i)) by its two unit components, and
/// the triangle commutes on the nose.
inline bool in_w_class(const ShatMorphism& w) { return pi_morphism(w).is_identity(); }

inline std::pair<ShatMorphism, ShatMorphism> w_triangle_factorization(const ShatMorphism& w) {
  if (!in_w_class(w))
    throw error("w_triangle_factorization: morphism is not projected to an identity");
  return {eta_component(w.source), eta_component(w.target)};
}

/// All weakly monotone maps [m] -> [n], ordered lexicographically by values.
inline std::vector<SimplexMap> all_monotone_maps(int m, int n) {
  std::vector<SimplexMap> out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    out.push_back(SimplexMap(m, n, v));
    int k = m;
    while (k >= 0) {
      if (v[k] < n) {
        ++v[k];
        for (int t = k + 1; t <= m; ++t) v[t] = v[k];
        break;
      }
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace spanseg
