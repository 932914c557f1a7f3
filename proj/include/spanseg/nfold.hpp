#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/quasiunit.hpp"

namespace spanseg {

/// Multisimplicial object truncated per axis: one level set per multi-index,
/// generator faces and (per unital axis) degeneracies along each axis.
struct MultiSimplicialObject {
  int arity = 2;
  std::vector<int> truncation;
  std::vector<bool> unital;
  std::map<std::vector<int>, FinSet> levels;
  // faces[{m, a}][i] : levels[m] -> levels[m - e_a], defined when m[a] >= 1
  std::map<std::pair<std::vector<int>, int>, std::vector<FinMap>> faces;
  // degeneracies[{m, a}][i] : levels[m] -> levels[m + e_a], when unital[a]
  std::map<std::pair<std::vector<int>, int>, std::vector<FinMap>> degeneracies;

  bool operator==(const MultiSimplicialObject& o) const {
    return arity == o.arity && truncation == o.truncation && unital == o.unital &&
           levels == o.levels && faces == o.faces && degeneracies == o.degeneracies;
  }
  bool operator!=(const MultiSimplicialObject& o) const { return !(*this == o); }
};

/// All multi-indices of the grid, lexicographic with the last axis fastest.
inline std::vector<std::vector<int>> multi_indices(const std::vector<int>& truncation) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(truncation.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t a = cur.size();
    while (a > 0) {
      if (++cur[a - 1] <= truncation[a - 1]) break;
      cur[a - 1] = 0;
      --a;
    }
    if (a == 0) break;
  }
  return out;
}

/// One-dimensional slice along `axis` through `base` (the axis entry of
/// `base` is ignored).
inline TruncatedSimplicialObject slice_line(const MultiSimplicialObject& X, int axis,
                                            std::vector<int> base) {
  if (axis < 0 || axis >= X.arity) throw error("slice_line: bad axis");
  TruncatedSimplicialObject S;
  S.truncation = X.truncation[axis];
  S.unital = X.unital[axis];
  auto key = std::move(base);
  for (int k = 0; k <= S.truncation; ++k) {
    key[axis] = k;
    S.levels.push_back(X.levels.at(key));
  }
  S.faces.resize(S.truncation + 1);
  for (int k = 1; k <= S.truncation; ++k) {
    key[axis] = k;
    S.faces[k] = X.faces.at({key, axis});
  }
  if (S.unital) {
    S.degeneracies.resize(S.truncation);
    for (int k = 0; k < S.truncation; ++k) {
      key[axis] = k;
      S.degeneracies[k] = X.degeneracies.at({key, axis});
    }
  }
  return S;
}

inline std::vector<std::vector<int>> line_bases(const MultiSimplicialObject& X, int axis) {
  std::vector<std::vector<int>> out;
  for (const auto& m : multi_indices(X.truncation))
    if (m[axis] == 0) out.push_back(m);
  return out;
}

inline void validate_multisimplicial(const MultiSimplicialObject& X) {
  if (X.arity < 1) throw error("multisimplicial: arity must be positive");
  if (static_cast<int>(X.truncation.size()) != X.arity ||
      static_cast<int>(X.unital.size()) != X.arity)
    throw error("multisimplicial: need one truncation and unital flag per axis");
  for (int N : X.truncation)
    if (N < 0) throw error("multisimplicial: negative truncation");

  auto grid = multi_indices(X.truncation);
  if (X.levels.size() != grid.size())
    throw error("multisimplicial: level grid size mismatch");
  std::size_t face_rows = 0, degen_rows = 0;
  for (const auto& m : grid) {
    if (!X.levels.count(m)) throw error("multisimplicial: missing level set");
    for (int a = 0; a < X.arity; ++a) {
      if (m[a] >= 1) {
        if (!X.faces.count({m, a})) throw error("multisimplicial: missing face row");
        ++face_rows;
      }
      if (X.unital[a] && m[a] < X.truncation[a]) {
        if (!X.degeneracies.count({m, a}))
          throw error("multisimplicial: missing degeneracy row");
        ++degen_rows;
      }
    }
  }
  if (X.faces.size() != face_rows) throw error("multisimplicial: unexpected face rows");
  if (X.degeneracies.size() != degen_rows)
    throw error("multisimplicial: unexpected degeneracy rows");

  // per-axis identities, endpoints, and row sizes: reuse the 1-d validator
  for (int a = 0; a < X.arity; ++a)
    for (const auto& base : line_bases(X, a)) validate_simplicial(slice_line(X, a, base));

  // cross-axis commutation
  for (const auto& m : grid)
    for (int a = 0; a < X.arity; ++a)
      for (int b = a + 1; b < X.arity; ++b) {
        auto ma = m, mb = m;
        --ma[a];
        --mb[b];
        if (m[a] >= 1 && m[b] >= 1)
          for (int i = 0; i <= m[a]; ++i)
            for (int j = 0; j <= m[b]; ++j)
              if (compose(X.faces.at({ma, b})[j], X.faces.at({m, a})[i]) !=
                  compose(X.faces.at({mb, a})[i], X.faces.at({m, b})[j]))
                throw error("multisimplicial: cross-axis face maps do not commute");
        if (m[a] >= 1 && X.unital[b] && m[b] < X.truncation[b]) {
          auto mpb = m;
          ++mpb[b];
          for (int i = 0; i <= m[a]; ++i)
            for (int j = 0; j <= m[b]; ++j)
              if (compose(X.faces.at({mpb, a})[i], X.degeneracies.at({m, b})[j]) !=
                  compose(X.degeneracies.at({ma, b})[j], X.faces.at({m, a})[i]))
                throw error("multisimplicial: face and degeneracy across axes clash");
        }
        if (m[b] >= 1 && X.unital[a] && m[a] < X.truncation[a]) {
          auto mpa = m;
          ++mpa[a];
          for (int i = 0; i <= m[a]; ++i)
            for (int j = 0; j <= m[b]; ++j)
              if (compose(X.faces.at({mpa, b})[j], X.degeneracies.at({m, a})[i]) !=
                  compose(X.degeneracies.at({mb, a})[i], X.faces.at({m, b})[j]))
                throw error("multisimplicial: face and degeneracy across axes clash");
        }
        if (X.unital[a] && X.unital[b] && m[a] < X.truncation[a] &&
            m[b] < X.truncation[b]) {
          auto mpa = m, mpb = m;
          ++mpa[a];
          ++mpb[b];
          for (int i = 0; i <= m[a]; ++i)
            for (int j = 0; j <= m[b]; ++j)
              if (compose(X.degeneracies.at({mpa, b})[j], X.degeneracies.at({m, a})[i]) !=
                  compose(X.degeneracies.at({mpb, a})[i], X.degeneracies.at({m, b})[j]))
                throw error("multisimplicial: cross-axis degeneracies do not commute");
        }
      }
}

inline bool is_valid_multisimplicial(const MultiSimplicialObject& X,
                                     std::string* why = nullptr) {
  try {
    validate_multisimplicial(X);
    return true;
  } catch (const error& e) {
    if (why) *why = e.what();
    return false;
  }
}

inline MultiSimplicialObject as_multi(const TruncatedSimplicialObject& S) {
  MultiSimplicialObject X;
  X.arity = 1;
  X.truncation = {S.truncation};
  X.unital = {S.unital};
  for (int k = 0; k <= S.truncation; ++k) X.levels[{k}] = S.levels[k];
  for (int k = 1; k <= S.truncation; ++k) X.faces[{{k}, 0}] = S.faces[k];
  if (S.unital)
    for (int k = 0; k < S.truncation; ++k) X.degeneracies[{{k}, 0}] = S.degeneracies[k];
  return X;
}

inline TruncatedSimplicialObject as_simplicial(const MultiSimplicialObject& X) {
  if (X.arity != 1) throw error("as_simplicial: arity must be 1");
  return slice_line(X, 0, {0});
}

/// Fixes one axis at a value, producing an object of arity one less.
inline MultiSimplicialObject fix_axis(const MultiSimplicialObject& X, int axis, int value) {
  if (X.arity < 2) throw error("fix_axis: arity must be at least 2");
  if (axis < 0 || axis >= X.arity || value < 0 || value > X.truncation[axis])
    throw error("fix_axis: bad axis or value");
  MultiSimplicialObject Y;
  Y.arity = X.arity - 1;
  for (int a = 0; a < X.arity; ++a)
    if (a != axis) {
      Y.truncation.push_back(X.truncation[a]);
      Y.unital.push_back(X.unital[a]);
    }
  auto expand = [&](const std::vector<int>& m) {
    std::vector<int> full;
    full.reserve(X.arity);
    std::size_t k = 0;
    for (int a = 0; a < X.arity; ++a) full.push_back(a == axis ? value : m[k++]);
    return full;
  };
  for (const auto& m : multi_indices(Y.truncation)) {
    auto full = expand(m);
    Y.levels[m] = X.levels.at(full);
    int aa = 0;
    for (int a = 0; a < X.arity; ++a) {
      if (a == axis) continue;
      if (m[aa] >= 1) Y.faces[{m, aa}] = X.faces.at({full, a});
      if (Y.unital[aa] && m[aa] < Y.truncation[aa])
        Y.degeneracies[{m, aa}] = X.degeneracies.at({full, a});
      ++aa;
    }
  }
  return Y;
}

/// Segal condition along every axis with all other coordinates fixed.
inline bool check_n_uple_segal(const MultiSimplicialObject& X) {
  for (int a = 0; a < X.arity; ++a)
    for (const auto& base : line_bases(X, a))
      if (!check_segal(slice_line(X, a, base))) return false;
  return true;
}

/// Recursive constancy: arity 1 reduces to the Segal condition, otherwise
/// the first-axis 0-slice must have all structure maps bijective and every
/// positive slice must pass recursively.
inline bool check_constancy(const MultiSimplicialObject& X) {
  if (X.arity == 1) return check_segal(as_simplicial(X));
  MultiSimplicialObject zero = fix_axis(X, 0, 0);
  for (const auto& kv : zero.faces)
    for (const auto& f : kv.second)
      if (!is_bijection(f)) return false;
  for (const auto& kv : zero.degeneracies)
    for (const auto& f : kv.second)
      if (!is_bijection(f)) return false;
  for (int i = 1; i <= X.truncation[0]; ++i)
    if (!check_constancy(fix_axis(X, 0, i))) return false;
  return true;
}

inline bool is_nfold_segal(const MultiSimplicialObject& X) {
  return check_n_uple_segal(X) && check_constancy(X);
}

struct NfoldQuasiUnits {
  // per axis, keyed by the base multi-index of each line
  std::vector<std::map<std::vector<int>, FinMap>> per_axis;
};

inline std::optional<NfoldQuasiUnits> find_quasi_units_nfold(
    const MultiSimplicialObject& X) {
  NfoldQuasiUnits R;
  R.per_axis.resize(X.arity);
  for (int a = 0; a < X.arity; ++a)
    for (const auto& base : line_bases(X, a)) {
      auto u = find_quasi_unit_simplicial(slice_line(X, a, base));
      if (!u) return std::nullopt;
      R.per_axis[a].emplace(base, *u);
    }
  return R;
}

/// Rebuilds degeneracies axis by axis, first axis outward, promoting every
/// line through its quasi-unit; the result is revalidated, so cross-axis
/// clashes surface as errors.
inline MultiSimplicialObject promote_nfold(const MultiSimplicialObject& X) {
  MultiSimplicialObject Y = X;
  for (int a = 0; a < Y.arity; ++a) {
    if (Y.unital[a]) continue;
    for (const auto& base : line_bases(Y, a)) {
      TruncatedSimplicialObject P = promote_simplicial(slice_line(Y, a, base));
      auto key = base;
      for (int k = 0; k < Y.truncation[a]; ++k) {
        key[a] = k;
        Y.degeneracies[{key, a}] = P.degeneracies[k];
      }
    }
    Y.unital[a] = true;
  }
  validate_multisimplicial(Y);
  return Y;
}

inline MultiSimplicialObject forget_nfold(MultiSimplicialObject X) {
  X.degeneracies.clear();
  for (int a = 0; a < X.arity; ++a) X.unital[a] = false;
  return X;
}

/// Completeness of the n designated lines X_{1,..,1,*,0,..,0}.
inline bool is_complete_nfold(const MultiSimplicialObject& X) {
  for (int a = 0; a < X.arity; ++a) {
    if (X.truncation[a] < 2)
      throw error("is_complete_nfold: every axis needs truncation at least 2");
    std::vector<int> base(X.arity, 0);
    for (int b = 0; b < a; ++b) base[b] = 1;
    auto A = underlying_semicat(simplicial_to_algebraic(slice_line(X, a, base)));
    if (!is_complete(A)) return false;
  }
  return true;
}

/// The recursive phrasing: the first-axis line at zero is complete and the
/// 1-slice is complete as an object of arity one less.
inline bool is_complete_nfold_recursive(const MultiSimplicialObject& X) {
  if (X.truncation[0] < 2)
    throw error("is_complete_nfold_recursive: axis needs truncation at least 2");
  if (X.arity == 1)
    return is_complete(underlying_semicat(simplicial_to_algebraic(as_simplicial(X))));
  std::vector<int> zeros(X.arity, 0);
  auto A = underlying_semicat(simplicial_to_algebraic(slice_line(X, 0, zeros)));
  if (!is_complete(A)) return false;
  return is_complete_nfold_recursive(fix_axis(X, 0, 1));
}

/// Repeats a simplicial object along a second, vertically trivial axis.
inline MultiSimplicialObject vertically_constant_double(const TruncatedSimplicialObject& S,
                                                        int trunc_v) {
  if (trunc_v < 0) throw error("vertically_constant_double: negative truncation");
  MultiSimplicialObject X;
  X.arity = 2;
  X.truncation = {S.truncation, trunc_v};
  X.unital = {S.unital, true};
  for (int m = 0; m <= S.truncation; ++m)
    for (int n = 0; n <= trunc_v; ++n) {
      std::vector<int> key{m, n};
      X.levels[key] = S.levels[m];
      if (m >= 1) X.faces[{key, 0}] = S.faces[m];
      if (S.unital && m < S.truncation) X.degeneracies[{key, 0}] = S.degeneracies[m];
      FinMap id = FinMap::identity(S.levels[m]);
      if (n >= 1) X.faces[{key, 1}] = std::vector<FinMap>(n + 1, id);
      if (n < trunc_v) X.degeneracies[{key, 1}] = std::vector<FinMap>(n + 1, id);
    }
  validate_multisimplicial(X);
  return X;
}

namespace detail {

// componentwise transport of string cells through maps on edges and objects
inline FinMap string_transport(const FinSet& dom, const FinSet& cod,
                               const std::vector<std::vector<std::size_t>>& dom_cells,
                               const std::map<std::vector<std::size_t>, std::size_t>&
                                   cod_index,
                               const FinMap& edge_map, const FinMap& obj_map, int m) {
  std::vector<std::size_t> idx(dom.size());
  if (m == 0) {
    for (std::size_t i = 0; i < dom.size(); ++i) idx[i] = obj_map.apply_index(i);
  } else {
    for (std::size_t c = 0; c < dom.size(); ++c) {
      std::vector<std::size_t> mapped;
      mapped.reserve(dom_cells[c].size());
      for (auto e : dom_cells[c]) mapped.push_back(edge_map.apply_index(e));
      auto it = cod_index.find(mapped);
      if (it == cod_index.end())
        throw error("double nerve: vertical structure map is not functorial");
      idx[c] = it->second;
    }
  }
  return FinMap(dom, cod, idx);
}

}  // namespace detail

/// A tower of categories with simplicial structure maps acting functorially
/// on objects and morphisms: the levelwise data of a category object in
/// categories.
struct VerticalTower {
  std::vector<CatPresentation> cats;
  std::vector<std::vector<FinMap>> vfaces;   // on morphisms; n >= 1, row 0 empty
  std::vector<std::vector<FinMap>> vdegen;   // on morphisms; n < top
  std::vector<std::vector<FinMap>> vofaces;  // on objects; same shape as vfaces
  std::vector<std::vector<FinMap>> vodegen;  // on objects; same shape as vdegen
};

/// Nerve in the horizontal direction of every tower level, glued with the
/// vertical maps transported componentwise onto strings.
inline MultiSimplicialObject double_nerve(const VerticalTower& T, int trunc_h) {
  if (T.cats.empty()) throw error("double nerve: tower needs at least one level");
  if (trunc_h < 1) throw error("double nerve: horizontal truncation must be at least 1");
  const int V = static_cast<int>(T.cats.size()) - 1;
  if (static_cast<int>(T.vfaces.size()) != V + 1 || !T.vfaces[0].empty() ||
      static_cast<int>(T.vofaces.size()) != V + 1 || !T.vofaces[0].empty())
    throw error("double nerve: vertical face tables must have empty row 0");
  if (static_cast<int>(T.vdegen.size()) != V ||
      static_cast<int>(T.vodegen.size()) != V)
    throw error("double nerve: vertical degeneracy tables need one row per level");
  for (const auto& C : T.cats) validate_cat(C);
  for (int n = 1; n <= V; ++n) {
    if (static_cast<int>(T.vfaces[n].size()) != n + 1 ||
        static_cast<int>(T.vofaces[n].size()) != n + 1)
      throw error("double nerve: vertical face row size");
    for (int j = 0; j <= n; ++j) {
      if (T.vfaces[n][j].dom() != T.cats[n].underlying.morphisms ||
          T.vfaces[n][j].cod() != T.cats[n - 1].underlying.morphisms ||
          T.vofaces[n][j].dom() != T.cats[n].underlying.objects ||
          T.vofaces[n][j].cod() != T.cats[n - 1].underlying.objects)
        throw error("double nerve: vertical face endpoints");
      if (compose(T.cats[n - 1].underlying.src, T.vfaces[n][j]) !=
              compose(T.vofaces[n][j], T.cats[n].underlying.src) ||
          compose(T.cats[n - 1].underlying.tgt, T.vfaces[n][j]) !=
              compose(T.vofaces[n][j], T.cats[n].underlying.tgt))
        throw error("double nerve: vertical face is not a functor");
    }
  }
  for (int n = 0; n < V; ++n) {
    if (static_cast<int>(T.vdegen[n].size()) != n + 1 ||
        static_cast<int>(T.vodegen[n].size()) != n + 1)
      throw error("double nerve: vertical degeneracy row size");
    for (int j = 0; j <= n; ++j) {
      if (T.vdegen[n][j].dom() != T.cats[n].underlying.morphisms ||
          T.vdegen[n][j].cod() != T.cats[n + 1].underlying.morphisms ||
          T.vodegen[n][j].dom() != T.cats[n].underlying.objects ||
          T.vodegen[n][j].cod() != T.cats[n + 1].underlying.objects)
        throw error("double nerve: vertical degeneracy endpoints");
      if (compose(T.cats[n + 1].underlying.src, T.vdegen[n][j]) !=
              compose(T.vodegen[n][j], T.cats[n].underlying.src) ||
          compose(T.cats[n + 1].underlying.tgt, T.vdegen[n][j]) !=
              compose(T.vodegen[n][j], T.cats[n].underlying.tgt))
        throw error("double nerve: vertical degeneracy is not a functor");
    }
  }

  std::vector<TruncatedSimplicialObject> horiz;
  std::vector<detail::StringLevels> strs;
  for (int n = 0; n <= V; ++n) {
    horiz.push_back(algebraic_to_simplicial(T.cats[n], trunc_h));
    strs.push_back(detail::enumerate_strings(T.cats[n].underlying, trunc_h));
  }

  MultiSimplicialObject X;
  X.arity = 2;
  X.truncation = {trunc_h, V};
  X.unital = {true, true};
  for (int m = 0; m <= trunc_h; ++m)
    for (int n = 0; n <= V; ++n) {
      std::vector<int> key{m, n};
      X.levels[key] = horiz[n].levels[m];
      if (m >= 1) X.faces[{key, 0}] = horiz[n].faces[m];
      if (m < trunc_h) X.degeneracies[{key, 0}] = horiz[n].degeneracies[m];
      if (n >= 1) {
        std::vector<FinMap> row;
        for (int j = 0; j <= n; ++j)
          row.push_back(detail::string_transport(
              horiz[n].levels[m], horiz[n - 1].levels[m], strs[n].cells[m],
              strs[n - 1].index[m], T.vfaces[n][j], T.vofaces[n][j], m));
        X.faces[{key, 1}] = std::move(row);
      }
      if (n < V) {
        std::vector<FinMap> row;
        for (int j = 0; j <= n; ++j)
          row.push_back(detail::string_transport(
              horiz[n].levels[m], horiz[n + 1].levels[m], strs[n].cells[m],
              strs[n + 1].index[m], T.vdegen[n][j], T.vodegen[n][j], m));
        X.degeneracies[{key, 1}] = std::move(row);
      }
    }
  validate_multisimplicial(X);
  return X;
}

namespace detail {

inline std::vector<std::vector<bool>> poset_closure(
    const FinSet& elements, const std::vector<std::pair<std::string, std::string>>& rel) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : rel) le[elements.index_of(a)][elements.index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw error("poset: relation is not antisymmetric");
  return le;
}

inline void monotone_tuples(const std::vector<std::vector<bool>>& le, int len,
                            std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t v = 0; v < le.size(); ++v) {
    if (!cur.empty() && !le[cur.back()][v]) continue;
    cur.push_back(v);
    monotone_tuples(le, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Double nerve of the commutative-square double category of a poset:
/// level (m, n) is the set of monotone (m+1) by (n+1) grids.
inline MultiSimplicialObject poset_double_nerve(
    const FinSet& elements, const std::vector<std::pair<std::string, std::string>>& rel,
    int trunc_h, int trunc_v) {
  if (trunc_v < 1) throw error("poset double nerve: vertical truncation must be at least 1");
  auto le = detail::poset_closure(elements, rel);

  auto tuple_of = [&](const std::vector<std::size_t>& t) {
    std::vector<std::string> labels;
    labels.reserve(t.size());
    for (auto v : t) labels.push_back(elements.at(v));
    return tuple_label(labels);
  };

  VerticalTower T;
  std::vector<std::vector<std::vector<std::size_t>>> chains(trunc_v + 1);
  T.vfaces.resize(trunc_v + 1);
  T.vdegen.resize(trunc_v);
  T.vofaces.resize(trunc_v + 1);
  T.vodegen.resize(trunc_v);
  for (int n = 0; n <= trunc_v; ++n) {
    std::vector<std::size_t> cur;
    detail::monotone_tuples(le, n + 1, cur, chains[n]);

    std::vector<std::string> objs;
    for (const auto& c : chains[n]) objs.push_back(tuple_of(c));
    CatPresentation A;
    A.underlying.objects = FinSet(objs);

    auto chain_le = [&](const std::vector<std::size_t>& c,
                        const std::vector<std::size_t>& d) {
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!le[c[k]][d[k]]) return false;
      return true;
    };
    std::vector<std::string> morphs;
    std::map<std::string, std::string> s, t, ids;
    for (std::size_t i = 0; i < chains[n].size(); ++i)
      for (std::size_t j = 0; j < chains[n].size(); ++j) {
        if (!chain_le(chains[n][i], chains[n][j])) continue;
        std::string lab = pair_label(objs[i], objs[j]);
        morphs.push_back(lab);
        s[lab] = objs[i];
        t[lab] = objs[j];
        if (i == j) ids[objs[i]] = lab;
      }
    A.underlying.morphisms = FinSet(morphs);
    A.underlying.src = FinMap::from_assignment(A.underlying.morphisms,
                                               A.underlying.objects, s);
    A.underlying.tgt = FinMap::from_assignment(A.underlying.morphisms,
                                               A.underlying.objects, t);
    for (const auto& f : morphs)
      for (const auto& g : morphs)
        if (t.at(f) == s.at(g)) A.underlying.comp[{g, f}] = pair_label(s.at(f), t.at(g));
    A.id = FinMap::from_assignment(A.underlying.objects, A.underlying.morphisms, ids);
    T.cats.push_back(std::move(A));
  }

  auto reindex = [&](int n, int target, auto entry_map) {
    // maps a pair-of-chains morphism at level n through per-chain surgery
    const FinSet& dom = T.cats[n].underlying.morphisms;
    const FinSet& cod = T.cats[target].underlying.morphisms;
    std::vector<std::size_t> idx;
    idx.reserve(dom.size());
    for (std::size_t f = 0; f < dom.size(); ++f) {
      std::size_t ci = T.cats[n].underlying.objects.index_of(
          T.cats[n].underlying.src.apply(dom.at(f)));
      std::size_t di = T.cats[n].underlying.objects.index_of(
          T.cats[n].underlying.tgt.apply(dom.at(f)));
      auto c = entry_map(chains[n][ci]);
      auto d = entry_map(chains[n][di]);
      idx.push_back(cod.index_of(pair_label(tuple_of(c), tuple_of(d))));
    }
    return FinMap(dom, cod, idx);
  };
  auto obj_reindex = [&](int n, int target, auto entry_map) {
    const FinSet& dom = T.cats[n].underlying.objects;
    const FinSet& cod = T.cats[target].underlying.objects;
    std::vector<std::size_t> idx;
    idx.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
      idx.push_back(cod.index_of(tuple_of(entry_map(chains[n][i]))));
    return FinMap(dom, cod, idx);
  };
  for (int n = 1; n <= trunc_v; ++n)
    for (int j = 0; j <= n; ++j) {
      auto drop = [j](std::vector<std::size_t> t) {
        t.erase(t.begin() + j);
        return t;
      };
      T.vfaces[n].push_back(reindex(n, n - 1, drop));
      T.vofaces[n].push_back(obj_reindex(n, n - 1, drop));
    }
  for (int n = 0; n < trunc_v; ++n)
    for (int j = 0; j <= n; ++j) {
      auto dup = [j](std::vector<std::size_t> t) {
        t.insert(t.begin() + j, t[j]);
        return t;
      };
      T.vdegen[n].push_back(reindex(n, n + 1, dup));
      T.vodegen[n].push_back(obj_reindex(n, n + 1, dup));
    }

  return double_nerve(T, trunc_h);
}

/// Strict 2-category: a vertical category of 1-cells and 2-cells over an
/// object set, with horizontal composition on both.
struct StrictTwoCat {
  FinSet objects;
  CatPresentation vertical;  // objects: 1-cells, morphisms: 2-cells
  FinMap cell_src, cell_tgt;  // 1-cells -> objects
  std::map<std::pair<std::string, std::string>, std::string> hcomp_cells;
  std::map<std::pair<std::string, std::string>, std::string> hcomp_twocells;
  FinMap identity_cell;  // objects -> 1-cells
};

inline CatPresentation horizontal_category(const StrictTwoCat& T) {
  SemicatPresentation H;
  H.objects = T.objects;
  H.morphisms = T.vertical.underlying.objects;
  H.src = T.cell_src;
  H.tgt = T.cell_tgt;
  H.comp = T.hcomp_cells;
  return CatPresentation{H, T.identity_cell};
}

inline void validate_strict_two_cat(const StrictTwoCat& T) {
  validate_cat(T.vertical);
  validate_cat(horizontal_category(T));
  const auto& V = T.vertical.underlying;
  if (compose(T.cell_src, V.src) != compose(T.cell_src, V.tgt) ||
      compose(T.cell_tgt, V.src) != compose(T.cell_tgt, V.tgt))
    throw error("strict 2-category: 2-cells must be parallel");

  FinMap obj_src = compose(T.cell_src, V.src);
  FinMap obj_tgt = compose(T.cell_tgt, V.src);
  auto hc2 = [&](const std::string& beta, const std::string& alpha) -> const std::string& {
    auto it = T.hcomp_twocells.find({beta, alpha});
    if (it == T.hcomp_twocells.end())
      throw error("strict 2-category: missing horizontal composite of 2-cells");
    return it->second;
  };

  std::size_t composable = 0;
  for (std::size_t a = 0; a < V.morphisms.size(); ++a)
    for (std::size_t b = 0; b < V.morphisms.size(); ++b) {
      if (obj_tgt.apply_index(a) != obj_src.apply_index(b)) continue;
      ++composable;
      const std::string& al = V.morphisms.at(a);
      const std::string& bl = V.morphisms.at(b);
      const std::string& c = hc2(bl, al);
      if (V.src.apply(c) != T.hcomp_cells.at({V.src.apply(bl), V.src.apply(al)}) ||
          V.tgt.apply(c) != T.hcomp_cells.at({V.tgt.apply(bl), V.tgt.apply(al)}))
        throw error("strict 2-category: horizontal composite has wrong boundary");
    }
  if (T.hcomp_twocells.size() != composable)
    throw error("strict 2-category: horizontal composition table has wrong coverage");

  // identity 2-cells compose to identity 2-cells
  for (const auto& [key, gf] : T.hcomp_cells) {
    if (T.hcomp_twocells.at({T.vertical.id.apply(key.first),
                             T.vertical.id.apply(key.second)}) != T.vertical.id.apply(gf))
      throw error("strict 2-category: identities break under horizontal composition");
  }

  // interchange with vertical composition
  for (const auto& [kf, f2] : V.comp)
    for (const auto& [kg, g2] : V.comp) {
      // kf = (a2 after a1), kg = (b2 after b1); need a* horizontally before b*
      const std::string& a1 = kf.second;
      const std::string& a2 = kf.first;
      const std::string& b1 = kg.second;
      const std::string& b2 = kg.first;
      if (obj_tgt.apply(a1) != obj_src.apply(b1)) continue;
      const std::string& lhs = hc2(g2, f2);
      const std::string& rhs = V.comp.at({hc2(b2, a2), hc2(b1, a1)});
      if (lhs != rhs) throw error("strict 2-category: interchange fails");
    }

  // horizontal associativity and units on 2-cells
  for (std::size_t a = 0; a < V.morphisms.size(); ++a) {
    const std::string& al = V.morphisms.at(a);
    std::string left_id = T.vertical.id.apply(T.identity_cell.apply(
        T.objects.at(obj_src.apply_index(a))));
    std::string right_id = T.vertical.id.apply(T.identity_cell.apply(
        T.objects.at(obj_tgt.apply_index(a))));
    if (hc2(al, left_id) != al || hc2(right_id, al) != al)
      throw error("strict 2-category: horizontal unit law fails on 2-cells");
    for (std::size_t b = 0; b < V.morphisms.size(); ++b) {
      if (obj_tgt.apply_index(a) != obj_src.apply_index(b)) continue;
      const std::string& bl = V.morphisms.at(b);
      for (std::size_t c = 0; c < V.morphisms.size(); ++c) {
        if (obj_tgt.apply_index(b) != obj_src.apply_index(c)) continue;
        const std::string& cl = V.morphisms.at(c);
        if (hc2(cl, hc2(bl, al)) != hc2(hc2(cl, bl), al))
          throw error("strict 2-category: horizontal associativity fails on 2-cells");
      }
    }
  }
}

/// Tower of chain categories of a strict 2-category: level n has the same
/// objects, with n-chains of 2-cells as morphisms under componentwise
/// horizontal composition.
inline VerticalTower two_cat_tower(const StrictTwoCat& T, int trunc_v) {
  if (trunc_v < 1) throw error("two_cat_tower: vertical truncation must be at least 1");
  validate_strict_two_cat(T);
  const auto& V = T.vertical.underlying;
  auto VN = algebraic_to_simplicial(T.vertical, trunc_v);
  auto VS = detail::enumerate_strings(V, trunc_v);

  VerticalTower tower;
  tower.vfaces.resize(trunc_v + 1);
  tower.vdegen.resize(trunc_v);
  tower.cats.push_back(horizontal_category(T));
  for (int n = 1; n <= trunc_v; ++n) {
    CatPresentation A;
    A.underlying.objects = T.objects;
    A.underlying.morphisms = VN.levels[n];

    auto boundary = [&](std::size_t cell, const FinMap& side) {
      std::size_t one_cell = V.src.apply_index(VS.cells[n][cell][0]);
      return side.apply_index(one_cell);
    };
    std::vector<std::size_t> sidx, tidx;
    for (std::size_t c = 0; c < VN.levels[n].size(); ++c) {
      sidx.push_back(boundary(c, T.cell_src));
      tidx.push_back(boundary(c, T.cell_tgt));
    }
    A.underlying.src = FinMap(VN.levels[n], T.objects, sidx);
    A.underlying.tgt = FinMap(VN.levels[n], T.objects, tidx);

    for (std::size_t a = 0; a < VN.levels[n].size(); ++a)
      for (std::size_t b = 0; b < VN.levels[n].size(); ++b) {
        if (tidx[a] != sidx[b]) continue;
        std::vector<std::size_t> edges;
        for (int k = 0; k < n; ++k)
          edges.push_back(V.morphisms.index_of(
              T.hcomp_twocells.at({V.morphisms.at(VS.cells[n][b][k]),
                                   V.morphisms.at(VS.cells[n][a][k])})));
        A.underlying.comp[{VN.levels[n].at(b), VN.levels[n].at(a)}] =
            VN.levels[n].at(VS.index[n].at(edges));
      }

    std::vector<std::size_t> ids;
    for (std::size_t x = 0; x < T.objects.size(); ++x) {
      std::size_t e0 = T.vertical.id.apply_index(T.identity_cell.apply_index(x));
      ids.push_back(VS.index[n].at(std::vector<std::size_t>(n, e0)));
    }
    A.id = FinMap(T.objects, VN.levels[n], ids);
    tower.cats.push_back(std::move(A));
  }
  for (int n = 1; n <= trunc_v; ++n) tower.vfaces[n] = VN.faces[n];
  for (int n = 0; n < trunc_v; ++n) tower.vdegen[n] = VN.degeneracies[n];
  tower.vofaces.resize(trunc_v + 1);
  tower.vodegen.resize(trunc_v);
  for (int n = 1; n <= trunc_v; ++n)
    tower.vofaces[n].assign(n + 1, FinMap::identity(T.objects));
  for (int n = 0; n < trunc_v; ++n)
    tower.vodegen[n].assign(n + 1, FinMap::identity(T.objects));
  return tower;
}

inline MultiSimplicialObject two_cat_double_nerve(const StrictTwoCat& T, int trunc_h,
                                                  int trunc_v) {
  return double_nerve(two_cat_tower(T, trunc_v), trunc_h);
}

}  // namespace spanseg
