#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/simplex.hpp"

namespace spanseg {

/// A span between two feet: both legs share the apex.
struct Span {
  FinMap left, right;  // apex -> left foot, apex -> right foot

  const FinSet& apex() const { return left.dom(); }

  bool operator==(const Span& o) const { return left == o.left && right == o.right; }
  bool operator!=(const Span& o) const { return !(*this == o); }
};

inline void validate_span(const Span& s) {
  if (s.left.dom() != s.right.dom()) throw error("span: legs must share the apex");
}

inline Span identity_span(const FinSet& x) {
  return {FinMap::identity(x), FinMap::identity(x)};
}

/// Map of spans over fixed feet: a triangle-commuting map of apexes.
struct SpanMorphism {
  Span source, target;
  FinMap apex_map;
};

inline void validate_span_morphism(const SpanMorphism& m) {
  validate_span(m.source);
  validate_span(m.target);
  if (m.source.left.cod() != m.target.left.cod() ||
      m.source.right.cod() != m.target.right.cod())
    throw error("span morphism: feet differ");
  if (m.apex_map.dom() != m.source.apex() || m.apex_map.cod() != m.target.apex())
    throw error("span morphism: apex map endpoints wrong");
  if (compose(m.target.left, m.apex_map) != m.source.left ||
      compose(m.target.right, m.apex_map) != m.source.right)
    throw error("span morphism: triangles do not commute");
}

/// First s, then t: the apex is the canonical pullback of s's right leg
/// against t's left leg.
inline Span span_compose(const Span& s, const Span& t) {
  validate_span(s);
  validate_span(t);
  if (s.right.cod() != t.left.cod())
    throw error("span_compose: middle feet do not match");
  auto pb = pullback(s.right, t.left);
  return {compose(s.left, pb.to_left), compose(t.right, pb.to_right)};
}

namespace detail {

inline bool extend_span_bijection(
    const std::vector<std::vector<std::size_t>>& source_fibers,
    const std::vector<std::vector<std::size_t>>& target_fibers, std::size_t fiber,
    std::size_t pos, std::vector<std::size_t>& image, std::vector<bool>& used) {
  if (fiber == source_fibers.size()) return true;
  if (pos == source_fibers[fiber].size())
    return extend_span_bijection(source_fibers, target_fibers, fiber + 1, 0, image, used);
  for (std::size_t k = 0; k < target_fibers[fiber].size(); ++k) {
    std::size_t candidate = target_fibers[fiber][k];
    if (used[candidate]) continue;
    used[candidate] = true;
    image[source_fibers[fiber][pos]] = candidate;
    if (extend_span_bijection(source_fibers, target_fibers, fiber, pos + 1, image, used))
      return true;
    used[candidate] = false;
  }
  return false;
}

}  // namespace detail

/// Exhaustive search for a bijective apex map commuting with both legs.
/// Bijections are explored fiberwise over the foot pair of each apex
/// element, which prunes nothing valid: a commuting map must preserve those
/// fibers.
inline std::optional<SpanMorphism> span_isomorphic(const Span& s, const Span& t) {
  validate_span(s);
  validate_span(t);
  if (s.left.cod() != t.left.cod() || s.right.cod() != t.right.cod())
    throw error("span_isomorphic: feet differ");
  if (s.apex().size() != t.apex().size()) return std::nullopt;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> sf, tf;
  for (std::size_t a = 0; a < s.apex().size(); ++a)
    sf[{s.left.apply_index(a), s.right.apply_index(a)}].push_back(a);
  for (std::size_t b = 0; b < t.apex().size(); ++b)
    tf[{t.left.apply_index(b), t.right.apply_index(b)}].push_back(b);
  if (sf.size() != tf.size()) return std::nullopt;

  std::vector<std::vector<std::size_t>> source_fibers, target_fibers;
  for (auto its = sf.begin(), itt = tf.begin(); its != sf.end(); ++its, ++itt) {
    if (its->first != itt->first || its->second.size() != itt->second.size())
      return std::nullopt;
    source_fibers.push_back(its->second);
    target_fibers.push_back(itt->second);
  }

  std::vector<std::size_t> image(s.apex().size(), 0);
  std::vector<bool> used(t.apex().size(), false);
  if (!detail::extend_span_bijection(source_fibers, target_fibers, 0, 0, image, used))
    return std::nullopt;
  SpanMorphism m{s, t, FinMap(s.apex(), t.apex(), image)};
  validate_span_morphism(m);
  return m;
}

/// Monoidal product of endomorphism spans over a fixed base.
inline Span tensor_over_base(const FinSet& x, const Span& s, const Span& t) {
  if (s.left.cod() != x || s.right.cod() != x || t.left.cod() != x || t.right.cod() != x)
    throw error("tensor_over_base: all feet must equal the base");
  return span_compose(s, t);
}

/// A functor out of the interval poset of [n]: one set per 0 <= i <= j <= n,
/// one map per covering relation (shrink the interval by one on either
/// side); general maps arise by composition.
struct SigmaDiagram {
  int ambient = 0;
  std::map<std::pair<int, int>, FinSet> values;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, FinMap> arrows;

  bool operator==(const SigmaDiagram& o) const {
    return ambient == o.ambient && values == o.values && arrows == o.arrows;
  }
  bool operator!=(const SigmaDiagram& o) const { return !(*this == o); }
};

inline std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> sigma_covers(int n) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i + 1 <= j) out.push_back({{i, j}, {i + 1, j}});
      if (i <= j - 1) out.push_back({{i, j}, {i, j - 1}});
    }
  return out;
}

inline void validate_sigma_diagram(const SigmaDiagram& F) {
  if (F.ambient < 0) throw error("sigma diagram: negative ambient");
  std::size_t expected = 0;
  for (int i = 0; i <= F.ambient; ++i)
    for (int j = i; j <= F.ambient; ++j) {
      ++expected;
      if (!F.values.count({i, j}))
        throw error("sigma diagram: missing value at (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
    }
  if (F.values.size() != expected) throw error("sigma diagram: extra value entries");

  auto covers = sigma_covers(F.ambient);
  if (F.arrows.size() != covers.size())
    throw error("sigma diagram: arrow table must cover exactly the covering relations");
  for (const auto& c : covers) {
    auto it = F.arrows.find(c);
    if (it == F.arrows.end())
      throw error("sigma diagram: missing arrow for a covering relation");
    if (it->second.dom() != F.values.at(c.first) || it->second.cod() != F.values.at(c.second))
      throw error("sigma diagram: arrow endpoints do not match its values");
  }

  // commuting squares: shrinking lo then hi equals hi then lo
  for (int i = 0; i <= F.ambient; ++i)
    for (int j = i + 2; j <= F.ambient; ++j) {
      const FinMap& lo_first = F.arrows.at({{i, j}, {i + 1, j}});
      const FinMap& then_hi = F.arrows.at({{i + 1, j}, {i + 1, j - 1}});
      const FinMap& hi_first = F.arrows.at({{i, j}, {i, j - 1}});
      const FinMap& then_lo = F.arrows.at({{i, j - 1}, {i + 1, j - 1}});
      if (compose(then_hi, lo_first) != compose(then_lo, hi_first))
        throw error("sigma diagram: functoriality square fails at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
    }
}

/// The value map for an arbitrary interval inclusion, composed from covers.
inline FinMap sigma_arrow(const SigmaDiagram& F, std::pair<int, int> from,
                          std::pair<int, int> to) {
  if (!(from.first <= to.first && to.first <= to.second && to.second <= from.second))
    throw error("sigma_arrow: target interval must sit inside the source interval");
  FinMap acc = FinMap::identity(F.values.at(from));
  auto cur = from;
  while (cur.first < to.first) {
    acc = compose(F.arrows.at({cur, {cur.first + 1, cur.second}}), acc);
    cur.first += 1;
  }
  while (cur.second > to.second) {
    acc = compose(F.arrows.at({cur, {cur.first, cur.second - 1}}), acc);
    cur.second -= 1;
  }
  return acc;
}

/// The SPAN+ Segal condition: every F(i,j) with j-i >= 2 maps bijectively
/// into the iterated pullback of the unit intervals it spans.
inline bool check_spanplus_segal(const SigmaDiagram& F) {
  for (int i = 0; i <= F.ambient; ++i)
    for (int j = i + 2; j <= F.ambient; ++j) {
      const int m = j - i;
      FinSet P = F.values.at({i, i + 1});
      FinMap last_edge = FinMap::identity(P);
      for (int k = 1; k < m; ++k) {
        FinMap to_joint = sigma_arrow(F, {i + k - 1, i + k}, {i + k, i + k});
        FinMap from_next = sigma_arrow(F, {i + k, i + k + 1}, {i + k, i + k});
        auto pb = pullback(compose(to_joint, last_edge), from_next);
        P = pb.set;
        last_edge = pb.to_right;
      }

      std::vector<FinMap> edges;
      for (int k = 0; k < m; ++k)
        edges.push_back(sigma_arrow(F, {i, j}, {i + k, i + k + 1}));
      std::set<std::string> seen;
      const FinSet& cells = F.values.at({i, j});
      bool ok = true;
      for (std::size_t c = 0; c < cells.size() && ok; ++c) {
        std::string lab = edges[0].cod().at(edges[0].apply_index(c));
        for (int k = 1; k < m; ++k)
          lab = pair_label(lab, edges[k].cod().at(edges[k].apply_index(c)));
        ok = P.contains(lab) && seen.insert(lab).second;
      }
      if (!ok || seen.size() != P.size()) return false;
    }
  return true;
}

/// The interval diagram of a simplicial object: the interval (i,j) holds
/// X_{j-i}, covers restrict a cell to a subinterval of its vertices.
inline SigmaDiagram catobj_to_sigma_diagram(const TruncatedSimplicialObject& X, int n) {
  if (n < 0 || n > X.truncation)
    throw error("catobj_to_sigma_diagram: ambient exceeds the truncation");
  SigmaDiagram F;
  F.ambient = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) F.values[{i, j}] = X.levels[j - i];
  for (const auto& c : sigma_covers(n)) {
    int len = c.first.second - c.first.first;
    bool raised_lo = c.second.first == c.first.first + 1;
    F.arrows[c] = evaluate_simplex(X, raised_lo ? rho(1, len, len) : rho(0, len - 1, len));
  }
  return F;
}

/// The boundary span of a simplicial object: X_0 <- X_1 -> X_0 with the
/// source and target faces.
inline Span underlying_span(const TruncatedSimplicialObject& X) {
  if (X.truncation < 1) throw error("underlying_span: need at least one level");
  return {X.faces[1][1], X.faces[1][0]};
}

}  // namespace spanseg
