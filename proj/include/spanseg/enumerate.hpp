#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/quasiunit.hpp"

namespace spanseg {

/// Size box for the brute-force universe.  Enumeration covers every object
/// count from 1 to max_objects and every morphism count from 1 to
/// max_morphisms; the empty and morphism-free shapes stay with the fixtures.
struct UniverseBounds {
  std::size_t max_objects = 2;
  std::size_t max_morphisms = 3;
  int arity = 1;
  unsigned seed = 0;
};

namespace detail {

inline std::vector<std::string> numbered_labels(const char* stem, std::size_t k) {
  std::vector<std::string> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline bool bump_odometer(std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t k = digits.size();
  while (k > 0) {
    if (++digits[k - 1] < base) return true;
    digits[k - 1] = 0;
    --k;
  }
  return false;
}

}  // namespace detail

/// Every semicategory with exactly nobj objects and nmor morphisms over the
/// canonical labels x0.., f0..: lexicographic in the flattened (src, tgt)
/// assignment, then in the composition table read in key order.
inline std::vector<SemicatPresentation> enumerate_semicats_exact(std::size_t nobj,
                                                                 std::size_t nmor) {
  if (nobj == 0 && nmor > 0)
    throw error("enumerate_semicats_exact: morphisms need objects");
  FinSet objects(detail::numbered_labels("x", nobj));
  FinSet morphisms(detail::numbered_labels("f", nmor));
  std::vector<SemicatPresentation> out;

  std::vector<std::size_t> st(2 * nmor, 0);  // src0, tgt0, src1, tgt1, ..
  do {
    auto src_of = [&](std::size_t f) { return st[2 * f]; };
    auto tgt_of = [&](std::size_t f) { return st[2 * f + 1]; };

    std::vector<std::pair<std::size_t, std::size_t>> entries;  // (g, f), g after f
    std::vector<std::vector<std::size_t>> choices;
    bool feasible = true;
    for (std::size_t g = 0; g < nmor && feasible; ++g)
      for (std::size_t f = 0; f < nmor; ++f) {
        if (tgt_of(f) != src_of(g)) continue;
        std::vector<std::size_t> c;
        for (std::size_t h = 0; h < nmor; ++h)
          if (src_of(h) == src_of(f) && tgt_of(h) == tgt_of(g)) c.push_back(h);
        if (c.empty()) {
          feasible = false;
          break;
        }
        entries.push_back({g, f});
        choices.push_back(std::move(c));
      }
    if (!feasible) continue;

    std::vector<std::vector<std::size_t>> table(nmor, std::vector<std::size_t>(nmor, 0));
    std::vector<std::size_t> pick(entries.size(), 0);
    while (true) {
      for (std::size_t e = 0; e < entries.size(); ++e)
        table[entries[e].first][entries[e].second] = choices[e][pick[e]];

      bool assoc = true;
      for (std::size_t f = 0; f < nmor && assoc; ++f)
        for (std::size_t g = 0; g < nmor && assoc; ++g) {
          if (tgt_of(f) != src_of(g)) continue;
          for (std::size_t h = 0; h < nmor && assoc; ++h) {
            if (tgt_of(g) != src_of(h)) continue;
            assoc = table[h][table[g][f]] == table[table[h][g]][f];
          }
        }
      if (assoc) {
        SemicatPresentation A;
        A.objects = objects;
        A.morphisms = morphisms;
        std::vector<std::size_t> si(nmor), ti(nmor);
        for (std::size_t f = 0; f < nmor; ++f) {
          si[f] = src_of(f);
          ti[f] = tgt_of(f);
        }
        A.src = FinMap(morphisms, objects, std::move(si));
        A.tgt = FinMap(morphisms, objects, std::move(ti));
        for (const auto& [g, f] : entries)
          A.comp[{morphisms.at(g), morphisms.at(f)}] = morphisms.at(table[g][f]);
        out.push_back(std::move(A));
      }

      std::size_t k = pick.size();
      while (k > 0) {
        if (++pick[k - 1] < choices[k - 1].size()) break;
        pick[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  } while (detail::bump_odometer(st, nobj));
  return out;
}

inline std::vector<SemicatPresentation> enumerate_semicats(const UniverseBounds& b) {
  if (b.max_objects == 0 || b.max_morphisms == 0)
    throw error("enumerate_semicats: bounds must be positive");
  std::vector<SemicatPresentation> out;
  for (std::size_t o = 1; o <= b.max_objects; ++o)
    for (std::size_t m = 1; m <= b.max_morphisms; ++m) {
      auto batch = enumerate_semicats_exact(o, m);
      out.insert(out.end(), std::make_move_iterator(batch.begin()),
                 std::make_move_iterator(batch.end()));
    }
  return out;
}

/// The quasi-unital members of the universe, with the unit installed.
inline std::vector<CatPresentation> enumerate_cats(const UniverseBounds& b) {
  std::vector<CatPresentation> out;
  for (auto& A : enumerate_semicats(b))
    if (auto u = find_quasi_unit(A)) out.push_back(CatPresentation{std::move(A), u->carrier});
  return out;
}

inline std::vector<CatFunctor> enumerate_semifunctors(const SemicatPresentation& A,
                                                      const SemicatPresentation& B) {
  return detail::brute_force_semifunctors(A, B);
}

/// All unital functors, object map outermost, morphism map innermost.
inline std::vector<CatFunctor> enumerate_functors(const CatPresentation& C,
                                                  const CatPresentation& D) {
  std::vector<CatFunctor> out;
  for (const auto& F : detail::brute_force_semifunctors(C.underlying, D.underlying)) {
    if (compose(F.on_morphisms, C.id) != compose(D.id, F.on_objects)) continue;
    out.push_back(CatFunctor{Presentation(C), Presentation(D), F.on_objects,
                             F.on_morphisms, true});
  }
  return out;
}

inline bool isomorphic(const SemicatPresentation& A, const SemicatPresentation& B) {
  if (A.objects.size() != B.objects.size() || A.morphisms.size() != B.morphisms.size())
    return false;
  std::vector<std::size_t> operm(A.objects.size()), mperm(A.morphisms.size());
  std::iota(operm.begin(), operm.end(), 0);
  do {
    std::iota(mperm.begin(), mperm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t f = 0; f < mperm.size() && ok; ++f)
        ok = B.src.apply_index(mperm[f]) == operm[A.src.apply_index(f)] &&
             B.tgt.apply_index(mperm[f]) == operm[A.tgt.apply_index(f)];
      for (auto it = A.comp.begin(); ok && it != A.comp.end(); ++it) {
        std::size_t g = A.morphisms.index_of(it->first.first);
        std::size_t f = A.morphisms.index_of(it->first.second);
        std::size_t v = A.morphisms.index_of(it->second);
        ok = B.compose_of(B.morphisms.at(mperm[g]), B.morphisms.at(mperm[f])) ==
             B.morphisms.at(mperm[v]);
      }
      if (ok) return true;
    } while (std::next_permutation(mperm.begin(), mperm.end()));
  } while (std::next_permutation(operm.begin(), operm.end()));
  return false;
}

inline bool isomorphic(const CatPresentation& C, const CatPresentation& D) {
  // units transport automatically, so the underlying check suffices
  return isomorphic(C.underlying, D.underlying);
}

/// First-in-order representatives under exhaustive isomorphism search.
template <typename T>
inline std::vector<T> iso_classes(const std::vector<T>& items) {
  std::vector<T> reps;
  for (const auto& it : items) {
    bool seen = false;
    for (const auto& r : reps)
      if (isomorphic(r, it)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(it);
  }
  return reps;
}

/// Every way of redirecting exactly one face or degeneracy entry.
inline std::vector<TruncatedSimplicialObject> single_entry_mutants(
    const TruncatedSimplicialObject& X) {
  std::vector<TruncatedSimplicialObject> out;
  auto mutate_rows = [&](auto member) {
    const auto& rows = X.*member;
    for (std::size_t n = 0; n < rows.size(); ++n)
      for (std::size_t i = 0; i < rows[n].size(); ++i) {
        const FinMap& m = rows[n][i];
        for (std::size_t c = 0; c < m.dom().size(); ++c)
          for (std::size_t v = 0; v < m.cod().size(); ++v) {
            if (v == m.apply_index(c)) continue;
            TruncatedSimplicialObject Y = X;
            auto idx = m.image_indices();
            idx[c] = v;
            (Y.*member)[n][i] = FinMap(m.dom(), m.cod(), std::move(idx));
            out.push_back(std::move(Y));
          }
      }
  };
  mutate_rows(&TruncatedSimplicialObject::faces);
  mutate_rows(&TruncatedSimplicialObject::degeneracies);
  return out;
}

/// A mutated nerve counts as caught when it fails validation, fails the
/// Segal condition, or extracts to a different presentation.
inline bool mutant_killed(const TruncatedSimplicialObject& Y, const Presentation& original) {
  try {
    validate_simplicial(Y);
    if (!check_segal(Y)) return true;
    return simplicial_to_algebraic(Y) != original;
  } catch (const error&) {
    return true;
  }
}

/// Deterministic subsample: Fisher-Yates on mt19937 draws, then sorted.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, unsigned seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937 rng(seed);
  for (std::size_t i = n; i > 1; --i)
    std::swap(idx[i - 1], idx[rng() % i]);
  idx.resize(std::min(n, k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace spanseg
