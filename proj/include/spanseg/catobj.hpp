#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spanseg/finset.hpp"
#include "spanseg/simplex.hpp"

namespace spanseg {

/// Functorial presentation of a (non-)unital category object: levels
/// X_0..X_N with face maps d_i per level, and degeneracy maps s_i exactly
/// when unital.  Arbitrary structure maps are evaluated from the generators.
struct TruncatedSimplicialObject {
  int truncation = 3;
  bool unital = false;
  std::vector<FinSet> levels;                     // 0..truncation
  std::vector<std::vector<FinMap>> faces;         // faces[n][i] : X_n -> X_{n-1}, n >= 1
  std::vector<std::vector<FinMap>> degeneracies;  // degeneracies[n][i] : X_n -> X_{n+1}

  bool operator==(const TruncatedSimplicialObject& o) const {
    return truncation == o.truncation && unital == o.unital && levels == o.levels &&
           faces == o.faces && degeneracies == o.degeneracies;
  }
  bool operator!=(const TruncatedSimplicialObject& o) const { return !(*this == o); }
};

inline void validate_simplicial(const TruncatedSimplicialObject& X) {
  const int N = X.truncation;
  if (N < 0) throw error("simplicial: negative truncation");
  if (static_cast<int>(X.levels.size()) != N + 1)
    throw error("simplicial: expected one level set per 0..truncation");
  if (static_cast<int>(X.faces.size()) != N + 1 || !X.faces[0].empty())
    throw error("simplicial: face table must have empty level 0 and one row per level");
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(X.faces[n].size()) != n + 1)
      throw error("simplicial: level " + std::to_string(n) + " needs faces d_0..d_" +
                  std::to_string(n));
    for (int i = 0; i <= n; ++i)
      if (X.faces[n][i].dom() != X.levels[n] || X.faces[n][i].cod() != X.levels[n - 1])
        throw error("simplicial: face map endpoints wrong at level " + std::to_string(n));
  }
  if (X.unital) {
    if (static_cast<int>(X.degeneracies.size()) != N)
      throw error("simplicial: unital object needs degeneracy rows for levels 0.." +
                  std::to_string(N - 1));
    for (int n = 0; n < N; ++n) {
      if (static_cast<int>(X.degeneracies[n].size()) != n + 1)
        throw error("simplicial: level " + std::to_string(n) + " needs s_0..s_" +
                    std::to_string(n));
      for (int i = 0; i <= n; ++i)
        if (X.degeneracies[n][i].dom() != X.levels[n] ||
            X.degeneracies[n][i].cod() != X.levels[n + 1])
          throw error("simplicial: degeneracy endpoints wrong at level " +
                      std::to_string(n));
    }
  } else if (!X.degeneracies.empty()) {
    throw error("simplicial: non-unital object must not carry degeneracies");
  }

  // d_i d_j = d_{j-1} d_i  (i < j)
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (compose(X.faces[n - 1][i], X.faces[n][j]) !=
            compose(X.faces[n - 1][j - 1], X.faces[n][i]))
          throw error("simplicial: face identity d_" + std::to_string(i) + " d_" +
                      std::to_string(j) + " fails at level " + std::to_string(n));
  if (!X.unital) return;

  // s_i s_j = s_{j+1} s_i  (i <= j)
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (compose(X.degeneracies[n + 1][i], X.degeneracies[n][j]) !=
            compose(X.degeneracies[n + 1][j + 1], X.degeneracies[n][i]))
          throw error("simplicial: degeneracy identity fails at level " + std::to_string(n));

  // mixed identities at each level carrying an s_j
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        FinMap lhs = compose(X.faces[n + 1][i], X.degeneracies[n][j]);
        if (i == j || i == j + 1) {
          if (lhs != FinMap::identity(X.levels[n]))
            throw error("simplicial: d_" + std::to_string(i) + " s_" + std::to_string(j) +
                        " is not the identity at level " + std::to_string(n));
        } else if (i < j) {
          if (lhs != compose(X.degeneracies[n - 1][j - 1], X.faces[n][i]))
            throw error("simplicial: mixed identity fails at level " + std::to_string(n));
        } else {
          if (lhs != compose(X.degeneracies[n - 1][j], X.faces[n][i - 1]))
            throw error("simplicial: mixed identity fails at level " + std::to_string(n));
        }
      }
}

inline bool is_valid_simplicial(const TruncatedSimplicialObject& X,
                                std::string* why = nullptr) {
  try {
    validate_simplicial(X);
    return true;
  } catch (const error& e) {
    if (why) *why = e.what();
    return false;
  }
}

/// X(phi) for an arbitrary monotone phi, by peeling elementary faces and
/// degeneracies off a fixed factorization.  Non-unital objects only support
/// injective phi.
inline FinMap evaluate_simplex(const TruncatedSimplicialObject& X, const SimplexMap& phi) {
  if (phi.cod > X.truncation || phi.dom > X.truncation)
    throw error("evaluate_simplex: map exceeds the truncation");
  if (phi.is_identity()) return FinMap::identity(X.levels[phi.dom]);

  std::vector<bool> hit(phi.cod + 1, false);
  for (int v : phi.values) hit[v] = true;
  for (int q = phi.cod; q >= 0; --q)
    if (!hit[q]) {
      // phi = delta_q . phi'
      std::vector<int> v2;
      v2.reserve(phi.values.size());
      for (int v : phi.values) v2.push_back(v < q ? v : v - 1);
      return compose(evaluate_simplex(X, SimplexMap(phi.dom, phi.cod - 1, std::move(v2))),
                     X.faces[phi.cod][q]);
    }

  if (!X.unital)
    throw error("evaluate_simplex: non-injective map applied to a non-unital object");
  for (int t = 0; t < phi.dom; ++t)
    if (phi.values[t] == phi.values[t + 1]) {
      // phi = phi' . sigma_t
      std::vector<int> v2 = phi.values;
      v2.erase(v2.begin() + t);
      return compose(X.degeneracies[phi.dom - 1][t],
                     evaluate_simplex(X, SimplexMap(phi.dom - 1, phi.cod, std::move(v2))));
    }
  throw error("evaluate_simplex: unreachable");  // surjective + injective = identity
}

/// Comparison of X_n with the iterated canonical pullback of X_1 over X_0:
/// true when it is a bijection for every 2 <= n <= truncation.
inline bool check_segal(const TruncatedSimplicialObject& X) {
  if (X.truncation < 2) return true;
  for (int n = 2; n <= X.truncation; ++n) {
    const FinMap& src = X.faces[1][1];
    const FinMap& tgt = X.faces[1][0];
    FinSet P = X.levels[1];
    FinMap last_edge = FinMap::identity(X.levels[1]);
    for (int k = 2; k <= n; ++k) {
      auto pb = pullback(compose(tgt, last_edge), src);
      P = pb.set;
      last_edge = pb.to_right;
    }

    std::vector<FinMap> edges;
    for (int i = 0; i < n; ++i) edges.push_back(evaluate_simplex(X, rho(i, i + 1, n)));
    std::set<std::string> seen;
    for (std::size_t c = 0; c < X.levels[n].size(); ++c) {
      std::string lab = X.levels[1].at(edges[0].apply_index(c));
      for (int i = 1; i < n; ++i)
        lab = pair_label(lab, X.levels[1].at(edges[i].apply_index(c)));
      if (!P.contains(lab)) return false;      // edges do not match up
      if (!seen.insert(lab).second) return false;  // not injective
    }
    if (seen.size() != P.size()) return false;  // not surjective
  }
  return true;
}

/// Algebraic presentation of a non-unital category object: a composition
/// table defined on exactly the composable pairs.  Table keys are (g, f)
/// with src g = tgt f, the entry being g after f.
struct SemicatPresentation {
  FinSet objects, morphisms;
  FinMap src, tgt;
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const std::string& compose_of(const std::string& g, const std::string& f) const {
    auto it = comp.find({g, f});
    if (it == comp.end())
      throw error("semicat: no composite for (" + g + ", " + f + ")");
    return it->second;
  }

  bool operator==(const SemicatPresentation& o) const {
    return objects == o.objects && morphisms == o.morphisms && src == o.src &&
           tgt == o.tgt && comp == o.comp;
  }
  bool operator!=(const SemicatPresentation& o) const { return !(*this == o); }
};

struct CatPresentation {
  SemicatPresentation underlying;
  FinMap id;  // objects -> morphisms

  bool operator==(const CatPresentation& o) const {
    return underlying == o.underlying && id == o.id;
  }
  bool operator!=(const CatPresentation& o) const { return !(*this == o); }
};

using Presentation = std::variant<SemicatPresentation, CatPresentation>;

inline const SemicatPresentation& underlying_semicat(const Presentation& p) {
  if (const auto* s = std::get_if<SemicatPresentation>(&p)) return *s;
  return std::get<CatPresentation>(p).underlying;
}

inline bool presentation_is_unital(const Presentation& p) {
  return std::holds_alternative<CatPresentation>(p);
}

inline void validate_semicat(const SemicatPresentation& A) {
  if (A.src.dom() != A.morphisms || A.src.cod() != A.objects ||
      A.tgt.dom() != A.morphisms || A.tgt.cod() != A.objects)
    throw error("semicat: src/tgt must map morphisms to objects");

  for (std::size_t g = 0; g < A.morphisms.size(); ++g)
    for (std::size_t f = 0; f < A.morphisms.size(); ++f) {
      bool composable = A.src.apply_index(g) == A.tgt.apply_index(f);
      auto it = A.comp.find({A.morphisms.at(g), A.morphisms.at(f)});
      if (composable != (it != A.comp.end()))
        throw error("semicat: composition table must cover exactly the composable "
                    "pairs; wrong at (" + A.morphisms.at(g) + ", " + A.morphisms.at(f) + ")");
      if (!composable) continue;
      std::size_t h = A.morphisms.index_of(it->second);
      if (A.src.apply_index(h) != A.src.apply_index(f) ||
          A.tgt.apply_index(h) != A.tgt.apply_index(g))
        throw error("semicat: composite of (" + A.morphisms.at(g) + ", " +
                    A.morphisms.at(f) + ") has wrong endpoints");
    }
  for (const auto& [key, value] : A.comp) {
    if (!A.morphisms.contains(key.first) || !A.morphisms.contains(key.second) ||
        !A.morphisms.contains(value))
      throw error("semicat: composition table mentions unknown morphism");
  }

  // associativity over all composable triples
  for (const auto& m : A.morphisms.elements())
    for (const auto& g : A.morphisms.elements()) {
      if (A.src.apply(m) != A.tgt.apply(g)) continue;
      const std::string& mg = A.compose_of(m, g);
      for (const auto& f : A.morphisms.elements()) {
        if (A.src.apply(g) != A.tgt.apply(f)) continue;
        if (A.compose_of(m, A.compose_of(g, f)) != A.compose_of(mg, f))
          throw error("semicat: associativity fails at (" + m + ", " + g + ", " + f + ")");
      }
    }
}

inline void validate_cat(const CatPresentation& C) {
  validate_semicat(C.underlying);
  const auto& A = C.underlying;
  if (C.id.dom() != A.objects || C.id.cod() != A.morphisms)
    throw error("cat: id must map objects to morphisms");
  if (compose(A.src, C.id) != FinMap::identity(A.objects) ||
      compose(A.tgt, C.id) != FinMap::identity(A.objects))
    throw error("cat: id must assign an endomorphism to each object");
  for (const auto& f : A.morphisms.elements()) {
    if (A.compose_of(f, C.id.apply(A.src.apply(f))) != f ||
        A.compose_of(C.id.apply(A.tgt.apply(f)), f) != f)
      throw error("cat: '" + C.id.apply(A.src.apply(f)) + "' is not a unit for '" + f + "'");
  }
}

inline void validate_presentation(const Presentation& p) {
  if (const auto* s = std::get_if<SemicatPresentation>(&p))
    validate_semicat(*s);
  else
    validate_cat(std::get<CatPresentation>(p));
}

/// Structure-preserving pair of maps between presentations.  The unital flag
/// additionally requires both endpoints to carry identities and the maps to
/// preserve them.
struct CatFunctor {
  Presentation source, target;
  FinMap on_objects, on_morphisms;
  bool unital = false;

  bool operator==(const CatFunctor& o) const {
    return source == o.source && target == o.target && on_objects == o.on_objects &&
           on_morphisms == o.on_morphisms && unital == o.unital;
  }
  bool operator!=(const CatFunctor& o) const { return !(*this == o); }
};

inline void validate_functor(const CatFunctor& F) {
  const auto& S = underlying_semicat(F.source);
  const auto& T = underlying_semicat(F.target);
  if (F.on_objects.dom() != S.objects || F.on_objects.cod() != T.objects ||
      F.on_morphisms.dom() != S.morphisms || F.on_morphisms.cod() != T.morphisms)
    throw error("functor: component maps have wrong endpoints");
  if (compose(T.src, F.on_morphisms) != compose(F.on_objects, S.src) ||
      compose(T.tgt, F.on_morphisms) != compose(F.on_objects, S.tgt))
    throw error("functor: source/target squares do not commute");
  for (const auto& [key, value] : S.comp)
    if (T.compose_of(F.on_morphisms.apply(key.first), F.on_morphisms.apply(key.second)) !=
        F.on_morphisms.apply(value))
      throw error("functor: composition not preserved at (" + key.first + ", " +
                  key.second + ")");
  if (F.unital) {
    if (!presentation_is_unital(F.source) || !presentation_is_unital(F.target))
      throw error("functor: unital flag requires unital endpoints");
    const auto& idS = std::get<CatPresentation>(F.source).id;
    const auto& idT = std::get<CatPresentation>(F.target).id;
    if (compose(F.on_morphisms, idS) != compose(idT, F.on_objects))
      throw error("functor: identities not preserved");
  }
}

namespace detail {

// Composable strings of a presentation, the cells of its nerve.  A level-n
// cell for n >= 1 is the list of its n morphism indices in path order; level
// 0 cells are object indices.
struct StringLevels {
  std::vector<std::vector<std::vector<std::size_t>>> cells;  // per level
  std::vector<FinSet> sets;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
};

inline StringLevels enumerate_strings(const SemicatPresentation& A, int N) {
  StringLevels L;
  L.cells.resize(N + 1);
  L.index.resize(N + 1);
  std::vector<std::string> labels;

  for (std::size_t x = 0; x < A.objects.size(); ++x) L.cells[0].push_back({x});
  L.sets.push_back(A.objects);
  for (std::size_t c = 0; c < L.cells[0].size(); ++c) L.index[0][L.cells[0][c]] = c;

  if (N >= 1) {
    for (std::size_t f = 0; f < A.morphisms.size(); ++f) L.cells[1].push_back({f});
    L.sets.push_back(A.morphisms);
    for (std::size_t c = 0; c < L.cells[1].size(); ++c) L.index[1][L.cells[1][c]] = c;
  }

  for (int n = 2; n <= N; ++n) {
    labels.clear();
    for (std::size_t p = 0; p < L.cells[n - 1].size(); ++p) {
      const auto& prefix = L.cells[n - 1][p];
      for (std::size_t f = 0; f < A.morphisms.size(); ++f) {
        if (A.tgt.apply_index(prefix.back()) != A.src.apply_index(f)) continue;
        auto cell = prefix;
        cell.push_back(f);
        L.index[n][cell] = L.cells[n].size();
        L.cells[n].push_back(std::move(cell));
        labels.push_back(pair_label(L.sets[n - 1].at(p), A.morphisms.at(f)));
      }
    }
    L.sets.push_back(FinSet(labels));
  }
  return L;
}

inline std::vector<FinMap> quasi_unit_candidates(const SemicatPresentation& A) {
  // absorption pins each object separately, and two admissible loops at the
  // same object absorb one another, so at most one family exists
  std::vector<std::size_t> u;
  u.reserve(A.objects.size());
  for (std::size_t x = 0; x < A.objects.size(); ++x) {
    std::optional<std::size_t> pick;
    for (std::size_t e = 0; e < A.morphisms.size() && !pick; ++e) {
      if (A.src.apply_index(e) != x || A.tgt.apply_index(e) != x) continue;
      const std::string& el = A.morphisms.at(e);
      bool laws = true;
      for (std::size_t f = 0; f < A.morphisms.size() && laws; ++f) {
        const std::string& fl = A.morphisms.at(f);
        if (A.tgt.apply_index(f) == x) laws = A.compose_of(el, fl) == fl;
        if (laws && A.src.apply_index(f) == x) laws = A.compose_of(fl, el) == fl;
      }
      if (laws) pick = e;
    }
    if (!pick) return {};
    u.push_back(*pick);
  }
  return {FinMap(A.objects, A.morphisms, std::move(u))};
}

}  // namespace detail

/// Nerve of a presentation: level n is the set of composable n-strings with
/// left-nested pair labels, faces drop the end morphisms or compose adjacent
/// ones, degeneracies insert identities (unital input only).
inline TruncatedSimplicialObject algebraic_to_simplicial(const SemicatPresentation& A,
                                                         int N,
                                                         const FinMap* id = nullptr) {
  if (N < 1) throw error("algebraic_to_simplicial: truncation must be at least 1");
  auto L = detail::enumerate_strings(A, N);

  TruncatedSimplicialObject X;
  X.truncation = N;
  X.unital = id != nullptr;
  X.levels = L.sets;
  X.faces.resize(N + 1);

  auto face_of = [&](const std::vector<std::size_t>& cell, int n,
                     int i) -> std::vector<std::size_t> {
    if (n == 1)
      return {i == 0 ? A.tgt.apply_index(cell[0]) : A.src.apply_index(cell[0])};
    std::vector<std::size_t> out;
    out.reserve(cell.size() - 1);
    for (int k = 0; k < static_cast<int>(cell.size()); ++k) {
      if (i > 0 && k == i - 1) {
        if (i == static_cast<int>(cell.size())) break;  // drop the last morphism
        out.push_back(A.morphisms.index_of(
            A.compose_of(A.morphisms.at(cell[k + 1]), A.morphisms.at(cell[k]))));
        ++k;
      } else if (i == 0 && k == 0) {
        continue;  // drop the first morphism
      } else {
        out.push_back(cell[k]);
      }
    }
    return out;
  };

  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<std::size_t> idx;
      idx.reserve(L.cells[n].size());
      for (const auto& cell : L.cells[n])
        idx.push_back(L.index[n - 1].at(face_of(cell, n, i)));
      X.faces[n].push_back(FinMap(L.sets[n], L.sets[n - 1], std::move(idx)));
    }

  if (id) {
    X.degeneracies.resize(N);
    auto vertex_of = [&](const std::vector<std::size_t>& cell, int n, int i) {
      if (n == 0) return cell[0];
      return i == 0 ? A.src.apply_index(cell[0]) : A.tgt.apply_index(cell[i - 1]);
    };
    for (int n = 0; n < N; ++n)
      for (int i = 0; i <= n; ++i) {
        std::vector<std::size_t> idx;
        idx.reserve(L.cells[n].size());
        for (const auto& cell : L.cells[n]) {
          std::size_t unit =
              A.morphisms.index_of(id->apply(A.objects.at(vertex_of(cell, n, i))));
          std::vector<std::size_t> image;
          if (n == 0) {
            image = {unit};
          } else {
            image.assign(cell.begin(), cell.begin() + i);
            image.push_back(unit);
            image.insert(image.end(), cell.begin() + i, cell.end());
          }
          idx.push_back(L.index[n + 1].at(image));
        }
        X.degeneracies[n].push_back(FinMap(L.sets[n], L.sets[n + 1], std::move(idx)));
      }
  }
  return X;
}

inline TruncatedSimplicialObject algebraic_to_simplicial(const CatPresentation& C, int N) {
  return algebraic_to_simplicial(C.underlying, N, &C.id);
}

inline TruncatedSimplicialObject algebraic_to_simplicial(const Presentation& P, int N) {
  if (const auto* c = std::get_if<CatPresentation>(&P)) return algebraic_to_simplicial(*c, N);
  return algebraic_to_simplicial(std::get<SemicatPresentation>(P), N);
}

/// Reads the presentation back off a Segal simplicial object: morphisms and
/// objects from levels 1 and 0, composites through the unique level-2 cell
/// over each composable pair.
inline Presentation simplicial_to_algebraic(const TruncatedSimplicialObject& X) {
  if (X.truncation < 2)
    throw error("simplicial_to_algebraic: truncation must be at least 2");
  if (!check_segal(X)) throw error("simplicial_to_algebraic: Segal condition fails");

  SemicatPresentation A;
  A.objects = X.levels[0];
  A.morphisms = X.levels[1];
  A.src = X.faces[1][1];
  A.tgt = X.faces[1][0];
  for (std::size_t c = 0; c < X.levels[2].size(); ++c) {
    const std::string& f = X.levels[1].at(X.faces[2][2].apply_index(c));
    const std::string& g = X.levels[1].at(X.faces[2][0].apply_index(c));
    A.comp[{g, f}] = X.levels[1].at(X.faces[2][1].apply_index(c));
  }
  validate_semicat(A);
  if (!X.unital) return A;
  CatPresentation C{A, X.degeneracies[0][0]};
  validate_cat(C);
  return C;
}

inline FinSet hom_set(const SemicatPresentation& A, const std::string& x,
                      const std::string& y) {
  std::size_t xi = A.objects.index_of(x), yi = A.objects.index_of(y);
  std::vector<std::string> out;
  for (std::size_t f = 0; f < A.morphisms.size(); ++f)
    if (A.src.apply_index(f) == xi && A.tgt.apply_index(f) == yi)
      out.push_back(A.morphisms.at(f));
  return FinSet(std::move(out));
}

enum class EquivalenceMode { quasi_unit, representable };

/// Equivalences of a presentation: either invertibility against the unique
/// quasi-unit, or representable bijectivity of pre/postcomposition against
/// every object.
inline bool is_equivalence_morphism(const SemicatPresentation& A, const std::string& f,
                                    EquivalenceMode mode) {
  std::size_t fi = A.morphisms.index_of(f);
  std::size_t x = A.src.apply_index(fi), y = A.tgt.apply_index(fi);

  if (mode == EquivalenceMode::quasi_unit) {
    auto units = detail::quasi_unit_candidates(A);
    if (units.empty())
      throw error("is_equivalence_morphism: quasi-unit mode needs a quasi-unital input");
    const FinMap& u = units.front();
    for (std::size_t g = 0; g < A.morphisms.size(); ++g) {
      if (A.src.apply_index(g) != y || A.tgt.apply_index(g) != x) continue;
      if (A.compose_of(A.morphisms.at(g), f) == u.apply(A.objects.at(x)) &&
          A.compose_of(f, A.morphisms.at(g)) == u.apply(A.objects.at(y)))
        return true;
    }
    return false;
  }

  // representable mode: postcomposition hom(z,x) -> hom(z,y) and
  // precomposition hom(y,z) -> hom(x,z) must be bijections for every z
  for (std::size_t z = 0; z < A.objects.size(); ++z) {
    const std::string& zl = A.objects.at(z);
    FinSet zx = hom_set(A, zl, A.objects.at(x)), zy = hom_set(A, zl, A.objects.at(y));
    if (zx.size() != zy.size()) return false;
    std::set<std::string> image;
    for (const auto& h : zx.elements()) image.insert(A.compose_of(f, h));
    if (image.size() != zy.size()) return false;

    FinSet yz = hom_set(A, A.objects.at(y), zl), xz = hom_set(A, A.objects.at(x), zl);
    if (yz.size() != xz.size()) return false;
    image.clear();
    for (const auto& h : yz.elements()) image.insert(A.compose_of(h, f));
    if (image.size() != xz.size()) return false;
  }
  return true;
}

inline FinSet equivalences_subset(const SemicatPresentation& A,
                                  EquivalenceMode mode = EquivalenceMode::representable) {
  std::vector<std::string> out;
  for (const auto& f : A.morphisms.elements())
    if (is_equivalence_morphism(A, f, mode)) out.push_back(f);
  return FinSet(std::move(out));
}

/// Complete means both face maps restricted to the equivalences are
/// bijections onto the objects.
inline bool is_complete(const SemicatPresentation& A) {
  FinSet eq = equivalences_subset(A, EquivalenceMode::representable);
  std::vector<std::size_t> src_idx, tgt_idx;
  for (const auto& f : eq.elements()) {
    std::size_t fi = A.morphisms.index_of(f);
    src_idx.push_back(A.src.apply_index(fi));
    tgt_idx.push_back(A.tgt.apply_index(fi));
  }
  return is_bijection(FinMap(eq, A.objects, src_idx)) &&
         is_bijection(FinMap(eq, A.objects, tgt_idx));
}

/// Gaunt means every isomorphism is an identity, by plain two-sided inverse
/// search.
inline bool is_gaunt(const CatPresentation& C) {
  const auto& A = C.underlying;
  for (std::size_t f = 0; f < A.morphisms.size(); ++f) {
    std::size_t x = A.src.apply_index(f), y = A.tgt.apply_index(f);
    const std::string& fl = A.morphisms.at(f);
    bool iso = false;
    for (std::size_t g = 0; g < A.morphisms.size() && !iso; ++g) {
      if (A.src.apply_index(g) != y || A.tgt.apply_index(g) != x) continue;
      iso = A.compose_of(A.morphisms.at(g), fl) == C.id.apply(A.objects.at(x)) &&
            A.compose_of(fl, A.morphisms.at(g)) == C.id.apply(A.objects.at(y));
    }
    if (iso && fl != C.id.apply(A.objects.at(x))) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> all_tuples(std::size_t base, int len) {
  std::vector<std::vector<std::size_t>> out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  if (base == 0) return out;
  std::vector<std::size_t> t(len, 0);
  while (true) {
    out.push_back(t);
    int k = len;
    while (k > 0) {
      if (++t[k - 1] < base) break;
      t[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

inline std::string tuple_label_of(const FinSet& S, const std::vector<std::size_t>& t) {
  std::vector<std::string> parts;
  parts.reserve(t.size());
  for (std::size_t i : t) parts.push_back(S.at(i));
  return tuple_label(parts);
}

}  // namespace detail

/// Codiscrete category object on S: level n is S^{n+1} (level 0 is S
/// itself), faces drop a coordinate, degeneracies repeat one.
inline TruncatedSimplicialObject codiscrete(const FinSet& S, int N) {
  if (N < 1) throw error("codiscrete: truncation must be at least 1");
  TruncatedSimplicialObject X;
  X.truncation = N;
  X.unital = true;
  std::vector<std::vector<std::vector<std::size_t>>> tuples(N + 1);
  for (int n = 0; n <= N; ++n) {
    tuples[n] = detail::all_tuples(S.size(), n + 1);
    if (n == 0) {
      X.levels.push_back(S);
    } else {
      std::vector<std::string> labels;
      labels.reserve(tuples[n].size());
      for (const auto& t : tuples[n]) labels.push_back(detail::tuple_label_of(S, t));
      X.levels.push_back(FinSet(std::move(labels)));
    }
  }

  auto index_of_tuple = [&](int n, const std::vector<std::size_t>& t) -> std::size_t {
    std::size_t idx = 0;
    for (std::size_t c : t) idx = idx * S.size() + c;
    return idx;
  };

  X.faces.resize(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<std::size_t> idx;
      idx.reserve(tuples[n].size());
      for (const auto& t : tuples[n]) {
        auto u = t;
        u.erase(u.begin() + i);
        idx.push_back(index_of_tuple(n - 1, u));
      }
      X.faces[n].push_back(FinMap(X.levels[n], X.levels[n - 1], std::move(idx)));
    }

  X.degeneracies.resize(N);
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<std::size_t> idx;
      idx.reserve(tuples[n].size());
      for (const auto& t : tuples[n]) {
        auto u = t;
        u.insert(u.begin() + i, t[i]);
        idx.push_back(index_of_tuple(n + 1, u));
      }
      X.degeneracies[n].push_back(FinMap(X.levels[n], X.levels[n + 1], std::move(idx)));
    }
  return X;
}

/// Levelwise map between simplicial objects; naturality against the shared
/// generators is a separate validation step.
struct SimplicialMap {
  std::vector<FinMap> components;  // one per level
};

inline void validate_simplicial_map(const TruncatedSimplicialObject& X,
                                    const TruncatedSimplicialObject& Y,
                                    const SimplicialMap& m) {
  if (X.truncation != Y.truncation)
    throw error("simplicial map: truncations differ");
  if (static_cast<int>(m.components.size()) != X.truncation + 1)
    throw error("simplicial map: one component per level required");
  for (int n = 0; n <= X.truncation; ++n)
    if (m.components[n].dom() != X.levels[n] || m.components[n].cod() != Y.levels[n])
      throw error("simplicial map: component endpoints wrong at level " + std::to_string(n));
  for (int n = 1; n <= X.truncation; ++n)
    for (int i = 0; i <= n; ++i)
      if (compose(Y.faces[n][i], m.components[n]) !=
          compose(m.components[n - 1], X.faces[n][i]))
        throw error("simplicial map: face square fails at level " + std::to_string(n));
  if (X.unital && Y.unital)
    for (int n = 0; n < X.truncation; ++n)
      for (int i = 0; i <= n; ++i)
        if (compose(Y.degeneracies[n][i], m.components[n]) !=
            compose(m.components[n + 1], X.degeneracies[n][i]))
          throw error("simplicial map: degeneracy square fails at level " +
                      std::to_string(n));
}

struct UnitMapResult {
  TruncatedSimplicialObject codisc;  // codiscrete on X_0
  SimplicialMap transform;           // X -> codisc, cell |-> its vertex tuple
};

/// The canonical comparison into the codiscrete object on X_0: a cell goes
/// to the list of its vertices.
inline UnitMapResult unit_map(const TruncatedSimplicialObject& X) {
  UnitMapResult R;
  R.codisc = codiscrete(X.levels[0], X.truncation);
  R.transform.components.push_back(FinMap::identity(X.levels[0]));
  for (int n = 1; n <= X.truncation; ++n) {
    std::vector<FinMap> vertex;
    for (int i = 0; i <= n; ++i) vertex.push_back(evaluate_simplex(X, rho(i, i, n)));
    std::vector<std::size_t> idx;
    idx.reserve(X.levels[n].size());
    for (std::size_t c = 0; c < X.levels[n].size(); ++c) {
      std::vector<std::size_t> t;
      t.reserve(n + 1);
      for (int i = 0; i <= n; ++i) t.push_back(vertex[i].apply_index(c));
      std::size_t flat = 0;
      for (std::size_t v : t) flat = flat * X.levels[0].size() + v;
      idx.push_back(flat);
    }
    R.transform.components.push_back(FinMap(X.levels[n], R.codisc.levels[n], std::move(idx)));
  }
  return R;
}

/// Coordinate-wise action of f : Y -> S on codiscrete levels.
inline SimplicialMap codiscrete_map(const FinMap& f, const TruncatedSimplicialObject& CY,
                                    const TruncatedSimplicialObject& CS) {
  SimplicialMap m;
  m.components.push_back(f);
  std::size_t ny = f.dom().size(), ns = f.cod().size();
  for (int n = 1; n <= CY.truncation; ++n) {
    auto tuples = detail::all_tuples(ny, n + 1);
    std::vector<std::size_t> idx;
    idx.reserve(tuples.size());
    for (const auto& t : tuples) {
      std::size_t flat = 0;
      for (std::size_t v : t) flat = flat * ns + f.apply_index(v);
      idx.push_back(flat);
    }
    m.components.push_back(FinMap(CY.levels[n], CS.levels[n], std::move(idx)));
  }
  return m;
}

/// Restriction of a category object along f : Y -> X_0.  Level n is the
/// canonical pullback of Y^{n+1} -> X_0^{n+1} <- X_n, with the structure
/// maps acting coordinate-wise on the first component.
inline TruncatedSimplicialObject restrict_along(const FinMap& f,
                                                const TruncatedSimplicialObject& X) {
  if (f.cod() != X.levels[0])
    throw error("restrict_along: map must land in the object level");
  const int N = X.truncation;
  UnitMapResult u = unit_map(X);
  TruncatedSimplicialObject CY = codiscrete(f.dom(), N);
  SimplicialMap fn = codiscrete_map(f, CY, u.codisc);

  TruncatedSimplicialObject R;
  R.truncation = N;
  R.unital = X.unital;

  std::vector<PullbackResult> pbs;
  for (int n = 0; n <= N; ++n) {
    pbs.push_back(pullback(fn.components[n], u.transform.components[n]));
    R.levels.push_back(pbs[n].set);
  }

  auto transported = [&](int n, int to, const FinMap& onY, const FinMap& onX) {
    std::vector<std::size_t> idx;
    idx.reserve(R.levels[n].size());
    for (std::size_t c = 0; c < R.levels[n].size(); ++c) {
      std::size_t y = onY.apply_index(pbs[n].to_left.apply_index(c));
      std::size_t x = onX.apply_index(pbs[n].to_right.apply_index(c));
      idx.push_back(R.levels[to].index_of(pair_label(CY.levels[to].at(y), X.levels[to].at(x))));
    }
    return FinMap(R.levels[n], R.levels[to], std::move(idx));
  };

  R.faces.resize(N + 1);
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      R.faces[n].push_back(transported(n, n - 1, CY.faces[n][i], X.faces[n][i]));
  if (X.unital) {
    R.degeneracies.resize(N);
    for (int n = 0; n < N; ++n)
      for (int i = 0; i <= n; ++i)
        R.degeneracies[n].push_back(
            transported(n, n + 1, CY.degeneracies[n][i], X.degeneracies[n][i]));
  }
  return R;
}

inline TruncatedSimplicialObject drop_degeneracies(TruncatedSimplicialObject X) {
  X.unital = false;
  X.degeneracies.clear();
  return X;
}

inline TruncatedSimplicialObject truncate_simplicial(const TruncatedSimplicialObject& X,
                                                     int N) {
  if (N < 0 || N > X.truncation)
    throw error("truncate_simplicial: level must be between 0 and the truncation");
  TruncatedSimplicialObject Y;
  Y.truncation = N;
  Y.unital = X.unital;
  Y.levels.assign(X.levels.begin(), X.levels.begin() + N + 1);
  Y.faces.assign(X.faces.begin(), X.faces.begin() + N + 1);
  if (X.unital)
    Y.degeneracies.assign(X.degeneracies.begin(), X.degeneracies.begin() + N);
  return Y;
}

/// Count of simplicial maps X -> codiscrete(S) whose level-0 component is g,
/// by per-cell candidate filtering.  Images at level n are pinned pointwise
/// by the level-(n-1) values, so naturality constraints factor through the
/// cells and the count is the product of per-cell candidate counts.
inline long long count_maps_to_codiscrete(const TruncatedSimplicialObject& X,
                                          const FinSet& S, const FinMap& g) {
  if (g.dom() != X.levels[0] || g.cod() != S)
    throw error("count_maps_to_codiscrete: object map has wrong endpoints");
  const int N = X.truncation;
  TruncatedSimplicialObject CS = codiscrete(S, N);

  std::vector<std::vector<std::size_t>> h(N + 1);  // chosen image index per cell
  h[0] = g.image_indices();
  long long total = 1;
  for (int n = 1; n <= N; ++n) {
    h[n].assign(X.levels[n].size(), 0);
    for (std::size_t c = 0; c < X.levels[n].size(); ++c) {
      long long candidates = 0;
      std::size_t chosen = 0;
      for (std::size_t t = 0; t < CS.levels[n].size(); ++t) {
        bool ok = true;
        for (int i = 0; i <= n && ok; ++i)
          ok = CS.faces[n][i].apply_index(t) == h[n - 1][X.faces[n][i].apply_index(c)];
        if (ok) {
          ++candidates;
          chosen = t;
        }
      }
      if (candidates == 0) return 0;
      total *= candidates;
      h[n][c] = chosen;
    }
    // degeneracy squares into this level must agree with the pinned choices
    if (X.unital)
      for (std::size_t c = 0; c < X.levels[n - 1].size(); ++c)
        for (int i = 0; i <= n - 1; ++i)
          if (h[n][X.degeneracies[n - 1][i].apply_index(c)] !=
              CS.degeneracies[n - 1][i].apply_index(h[n - 1][c]))
            return 0;
  }
  return total;
}

}  // namespace spanseg
