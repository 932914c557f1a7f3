#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spanseg {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Labeled finite set.  The element order is part of the value: it is fixed
/// at construction and every derived set (product, pullback, ...) orders its
/// elements canonically from the orders of its inputs.
class FinSet {
 public:
  FinSet() = default;

  explicit FinSet(std::vector<std::string> elements)
      : elements_(std::move(elements)) {
    std::set<std::string> seen;
    for (const auto& e : elements_)
      if (!seen.insert(e).second)
        throw error("FinSet: duplicate element label '" + e + "'");
  }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& at(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == label) return i;
    return std::nullopt;
  }

  bool contains(const std::string& label) const { return find(label).has_value(); }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw error("FinSet: no element '" + label + "'");
  }

  bool operator==(const FinSet& other) const { return elements_ == other.elements_; }
  bool operator!=(const FinSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> elements_;
};

/// Total map between labeled finite sets, stored as image indices aligned
/// with the domain's element order.
class FinMap {
 public:
  FinMap() = default;

  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> image_indices)
      : dom_(std::move(dom)), cod_(std::move(cod)), idx_(std::move(image_indices)) {
    if (idx_.size() != dom_.size())
      throw error("FinMap: assignment size does not match domain size");
    for (std::size_t i : idx_)
      if (i >= cod_.size()) throw error("FinMap: image index out of range");
  }

  static FinMap from_assignment(FinSet dom, FinSet cod,
                                const std::map<std::string, std::string>& assignment) {
    std::vector<std::size_t> idx;
    idx.reserve(dom.size());
    for (const auto& x : dom.elements()) {
      auto it = assignment.find(x);
      if (it == assignment.end())
        throw error("FinMap: no image assigned to '" + x + "'");
      idx.push_back(cod.index_of(it->second));
    }
    if (assignment.size() != dom.size())
      throw error("FinMap: assignment mentions labels outside the domain");
    return FinMap(std::move(dom), std::move(cod), std::move(idx));
  }

  static FinMap identity(const FinSet& s) {
    std::vector<std::size_t> idx(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) idx[i] = i;
    return FinMap(s, s, std::move(idx));
  }

  static FinMap constant(const FinSet& dom, const FinSet& cod, const std::string& value) {
    return FinMap(dom, cod, std::vector<std::size_t>(dom.size(), cod.index_of(value)));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }

  std::size_t apply_index(std::size_t i) const { return idx_.at(i); }
  const std::vector<std::size_t>& image_indices() const { return idx_; }

  const std::string& apply(const std::string& label) const {
    return cod_.at(idx_.at(dom_.index_of(label)));
  }

  bool operator==(const FinMap& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && idx_ == other.idx_;
  }
  bool operator!=(const FinMap& other) const { return !(*this == other); }

 private:
  FinSet dom_, cod_;
  std::vector<std::size_t> idx_;
};

inline FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod() != g.dom())
    throw error("compose: codomain of the first map must equal domain of the second");
  std::vector<std::size_t> idx;
  idx.reserve(f.dom().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    idx.push_back(g.apply_index(f.apply_index(i)));
  return FinMap(f.dom(), g.cod(), std::move(idx));
}

inline bool is_bijection(const FinMap& f) {
  if (f.dom().size() != f.cod().size()) return false;
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t i : f.image_indices()) {
    if (hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

inline FinMap invert(const FinMap& f) {
  if (!is_bijection(f)) throw error("invert: map is not a bijection");
  std::vector<std::size_t> idx(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) idx[f.apply_index(i)] = i;
  return FinMap(f.cod(), f.dom(), std::move(idx));
}

// Label synthesis for derived sets.  Separator and delimiters are escaped so
// that distinct component tuples always produce distinct labels.
inline std::string escape_label(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == ',' || c == '(' || c == ')') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += escape_label(parts[i]);
  }
  out.push_back(')');
  return out;
}

inline std::string pair_label(const std::string& a, const std::string& b) {
  return tuple_label({a, b});
}

struct ProductResult {
  FinSet set;
  FinMap first, second;
};

/// Cartesian product with pair labels, ordered lexicographically by the
/// component indices (left component outermost).
inline ProductResult product(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  std::vector<std::size_t> fst, snd;
  labels.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      labels.push_back(pair_label(a.at(i), b.at(j)));
      fst.push_back(i);
      snd.push_back(j);
    }
  FinSet p(std::move(labels));
  return {p, FinMap(p, a, std::move(fst)), FinMap(p, b, std::move(snd))};
}

struct PullbackResult {
  FinSet set;
  FinMap to_left, to_right;
};

/// Canonical pullback of f : A -> J, g : B -> J: the subset of A x B where
/// the two images agree, with the product's labels and order.
inline PullbackResult pullback(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.cod())
    throw error("pullback: maps must share their codomain");
  std::vector<std::string> labels;
  std::vector<std::size_t> fst, snd;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j)
      if (f.apply_index(i) == g.apply_index(j)) {
        labels.push_back(pair_label(f.dom().at(i), g.dom().at(j)));
        fst.push_back(i);
        snd.push_back(j);
      }
  FinSet p(std::move(labels));
  return {p, FinMap(p, f.dom(), std::move(fst)), FinMap(p, g.dom(), std::move(snd))};
}

/// The map <p, q> : C -> P into a pullback P of (f, g), for a cone with
/// f . p = g . q.  Throws if the cone does not commute.
inline FinMap mediating_map(const PullbackResult& pb, const FinMap& f, const FinMap& g,
                            const FinMap& p, const FinMap& q) {
  if (p.dom() != q.dom()) throw error("mediating_map: cone legs must share a domain");
  if (p.cod() != f.dom() || q.cod() != g.dom())
    throw error("mediating_map: cone legs do not match the pullback diagram");
  std::vector<std::size_t> idx;
  idx.reserve(p.dom().size());
  for (std::size_t c = 0; c < p.dom().size(); ++c) {
    std::size_t a = p.apply_index(c), b = q.apply_index(c);
    if (f.apply_index(a) != g.apply_index(b))
      throw error("mediating_map: cone does not commute at '" + p.dom().at(c) + "'");
    idx.push_back(pb.set.index_of(pair_label(f.dom().at(a), g.dom().at(b))));
  }
  return FinMap(p.dom(), pb.set, std::move(idx));
}

/// The map x |-> (f x, g x) into the product of the codomains.
inline FinMap pairing(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom()) throw error("pairing: maps must share their domain");
  ProductResult pr = product(f.cod(), g.cod());
  std::vector<std::size_t> idx;
  idx.reserve(f.dom().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    idx.push_back(f.apply_index(i) * g.cod().size() + g.apply_index(i));
  return FinMap(f.dom(), pr.set, std::move(idx));
}

/// All maps from -> to, ordered lexicographically by image indices.
inline std::vector<FinMap> enumerate_maps(const FinSet& from, const FinSet& to) {
  std::vector<FinMap> out;
  if (from.empty()) {
    out.push_back(FinMap(from, to, {}));
    return out;
  }
  if (to.empty()) return out;  // no total map from a nonempty set
  std::vector<std::size_t> idx(from.size(), 0);
  while (true) {
    out.push_back(FinMap(from, to, idx));
    std::size_t k = from.size();
    while (k > 0) {
      if (++idx[k - 1] < to.size()) break;
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace spanseg
