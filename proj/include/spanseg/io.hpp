#pragma once

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/nfold.hpp"
#include "spanseg/spanalg.hpp"
#include "spanseg/spans.hpp"

namespace spanseg::io {

using json = nlohmann::json;

/// Shape-level failures: unreadable files, bad JSON, unknown kinds or keys,
/// labels that do not resolve.  Module invariants (associativity, simplicial
/// identities, ...) are not checked here; run semantic_validate for those.
struct decode_error : std::runtime_error {
  explicit decode_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* format_version = "1";

using Payload =
    std::variant<FinSet, FinMap, Span, SpanMonoid, SemicatPresentation, CatPresentation,
                 CatFunctor, TruncatedSimplicialObject, MultiSimplicialObject, SigmaDiagram>;

struct StructureFile {
  std::string kind;
  Payload payload;
};

namespace detail {

inline void expect_keys(const json& j, std::initializer_list<const char*> keys,
                        const std::string& what) {
  if (!j.is_object()) throw decode_error(what + ": expected an object");
  for (const char* k : keys)
    if (!j.contains(k)) throw decode_error(what + ": missing key '" + k + "'");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw decode_error(what + ": unknown key '" + k + "'");
  }
}

inline std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw decode_error(what + ": expected an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw decode_error(what + ": expected string entries");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline FinSet finset_value(const json& j, const std::string& what) {
  try {
    return FinSet(string_list(j, what));
  } catch (const error& e) {
    throw decode_error(what + ": " + e.what());
  }
}

/// Positional map encoding: entry i names the image of the i-th domain
/// element in the codomain.
inline FinMap positional_map(const json& j, const FinSet& dom, const FinSet& cod,
                             const std::string& what) {
  auto labels = string_list(j, what);
  if (labels.size() != dom.size())
    throw decode_error(what + ": expected " + std::to_string(dom.size()) + " entries");
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) {
    auto i = cod.find(l);
    if (!i) throw decode_error(what + ": label '" + l + "' is not in the codomain");
    idx.push_back(*i);
  }
  return FinMap(dom, cod, std::move(idx));
}

inline json positional_of(const FinMap& m) {
  json out = json::array();
  for (std::size_t i : m.image_indices()) out.push_back(m.cod().at(i));
  return out;
}

inline int int_value(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw decode_error(what + ": expected an integer");
  return j.get<int>();
}

inline bool bool_value(const json& j, const std::string& what) {
  if (!j.is_boolean()) throw decode_error(what + ": expected a boolean");
  return j.get<bool>();
}

}  // namespace detail

inline json encode_finset(const FinSet& s) {
  return json{{"elements", s.elements()}};
}

inline FinSet decode_finset(const json& j) {
  detail::expect_keys(j, {"elements"}, "finset");
  return detail::finset_value(j.at("elements"), "finset.elements");
}

inline json encode_finmap(const FinMap& m) {
  return json{{"dom", m.dom().elements()},
              {"cod", m.cod().elements()},
              {"map", detail::positional_of(m)}};
}

inline FinMap decode_finmap(const json& j) {
  detail::expect_keys(j, {"dom", "cod", "map"}, "finmap");
  FinSet dom = detail::finset_value(j.at("dom"), "finmap.dom");
  FinSet cod = detail::finset_value(j.at("cod"), "finmap.cod");
  return detail::positional_map(j.at("map"), dom, cod, "finmap.map");
}

inline json encode_span(const Span& s) {
  return json{{"apex", s.apex().elements()},
              {"left_foot", s.left.cod().elements()},
              {"right_foot", s.right.cod().elements()},
              {"left", detail::positional_of(s.left)},
              {"right", detail::positional_of(s.right)}};
}

inline Span decode_span(const json& j) {
  detail::expect_keys(j, {"apex", "left_foot", "right_foot", "left", "right"}, "span");
  FinSet apex = detail::finset_value(j.at("apex"), "span.apex");
  FinSet lf = detail::finset_value(j.at("left_foot"), "span.left_foot");
  FinSet rf = detail::finset_value(j.at("right_foot"), "span.right_foot");
  return Span{detail::positional_map(j.at("left"), apex, lf, "span.left"),
              detail::positional_map(j.at("right"), apex, rf, "span.right")};
}

inline json encode_span_monoid(const SpanMonoid& m) {
  return json{{"base", m.base.elements()},
              {"carrier", encode_span(m.carrier)},
              {"mult", encode_finmap(m.mult)},
              {"unit", m.unit ? encode_finmap(*m.unit) : json(nullptr)}};
}

inline SpanMonoid decode_span_monoid(const json& j) {
  detail::expect_keys(j, {"base", "carrier", "mult", "unit"}, "span-monoid");
  SpanMonoid m;
  m.base = detail::finset_value(j.at("base"), "span-monoid.base");
  m.carrier = decode_span(j.at("carrier"));
  m.mult = decode_finmap(j.at("mult"));
  if (!j.at("unit").is_null()) m.unit = decode_finmap(j.at("unit"));
  return m;
}

inline json encode_semicat(const SemicatPresentation& a) {
  json comp = json::array();
  for (const auto& [key, value] : a.comp)
    comp.push_back(json::array({key.first, key.second, value}));
  return json{{"objects", a.objects.elements()},
              {"morphisms", a.morphisms.elements()},
              {"src", detail::positional_of(a.src)},
              {"tgt", detail::positional_of(a.tgt)},
              {"comp", std::move(comp)}};
}

inline SemicatPresentation decode_semicat(const json& j) {
  detail::expect_keys(j, {"objects", "morphisms", "src", "tgt", "comp"}, "semicat");
  SemicatPresentation a;
  a.objects = detail::finset_value(j.at("objects"), "semicat.objects");
  a.morphisms = detail::finset_value(j.at("morphisms"), "semicat.morphisms");
  a.src = detail::positional_map(j.at("src"), a.morphisms, a.objects, "semicat.src");
  a.tgt = detail::positional_map(j.at("tgt"), a.morphisms, a.objects, "semicat.tgt");
  const json& comp = j.at("comp");
  if (!comp.is_array()) throw decode_error("semicat.comp: expected an array");
  for (const auto& entry : comp) {
    auto triple = detail::string_list(entry, "semicat.comp entry");
    if (triple.size() != 3)
      throw decode_error("semicat.comp: entries are [after, first, composite] triples");
    for (const auto& l : triple)
      if (!a.morphisms.contains(l))
        throw decode_error("semicat.comp: label '" + l + "' is not a morphism");
    if (a.comp.count({triple[0], triple[1]}))
      throw decode_error("semicat.comp: duplicate entry (" + triple[0] + ", " + triple[1] + ")");
    a.comp[{triple[0], triple[1]}] = triple[2];
  }
  return a;
}

inline json encode_cat(const CatPresentation& c) {
  return json{{"underlying", encode_semicat(c.underlying)},
              {"id", detail::positional_of(c.id)}};
}

inline CatPresentation decode_cat(const json& j) {
  detail::expect_keys(j, {"underlying", "id"}, "cat");
  CatPresentation c;
  c.underlying = decode_semicat(j.at("underlying"));
  c.id = detail::positional_map(j.at("id"), c.underlying.objects, c.underlying.morphisms,
                                "cat.id");
  return c;
}

inline json encode_presentation(const Presentation& p) {
  if (const auto* s = std::get_if<SemicatPresentation>(&p))
    return json{{"kind", "semicat"}, {"payload", encode_semicat(*s)}};
  return json{{"kind", "cat"}, {"payload", encode_cat(std::get<CatPresentation>(p))}};
}

inline Presentation decode_presentation(const json& j) {
  detail::expect_keys(j, {"kind", "payload"}, "presentation");
  const json& kind = j.at("kind");
  if (kind == "semicat") return Presentation(decode_semicat(j.at("payload")));
  if (kind == "cat") return Presentation(decode_cat(j.at("payload")));
  throw decode_error("presentation: kind must be 'semicat' or 'cat'");
}

inline json encode_functor(const CatFunctor& f) {
  return json{{"source", encode_presentation(f.source)},
              {"target", encode_presentation(f.target)},
              {"on_objects", detail::positional_of(f.on_objects)},
              {"on_morphisms", detail::positional_of(f.on_morphisms)},
              {"unital", f.unital}};
}

inline CatFunctor decode_functor(const json& j) {
  detail::expect_keys(j, {"source", "target", "on_objects", "on_morphisms", "unital"},
                      "functor");
  CatFunctor f{decode_presentation(j.at("source")), decode_presentation(j.at("target")),
               FinMap(), FinMap(), detail::bool_value(j.at("unital"), "functor.unital")};
  const auto& s = underlying_semicat(f.source);
  const auto& t = underlying_semicat(f.target);
  f.on_objects =
      detail::positional_map(j.at("on_objects"), s.objects, t.objects, "functor.on_objects");
  f.on_morphisms = detail::positional_map(j.at("on_morphisms"), s.morphisms, t.morphisms,
                                          "functor.on_morphisms");
  return f;
}

inline json encode_simplicial(const TruncatedSimplicialObject& x) {
  json levels = json::array();
  for (const auto& l : x.levels) levels.push_back(l.elements());
  auto rows_of = [](const std::vector<std::vector<FinMap>>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
      json r = json::array();
      for (const auto& m : row) r.push_back(detail::positional_of(m));
      out.push_back(std::move(r));
    }
    return out;
  };
  return json{{"truncation", x.truncation},
              {"unital", x.unital},
              {"levels", std::move(levels)},
              {"faces", rows_of(x.faces)},
              {"degeneracies", rows_of(x.degeneracies)}};
}

inline TruncatedSimplicialObject decode_simplicial(const json& j) {
  detail::expect_keys(j, {"truncation", "unital", "levels", "faces", "degeneracies"},
                      "simplicial");
  TruncatedSimplicialObject x;
  x.truncation = detail::int_value(j.at("truncation"), "simplicial.truncation");
  x.unital = detail::bool_value(j.at("unital"), "simplicial.unital");
  if (x.truncation < 0) throw decode_error("simplicial.truncation: negative");
  const json& levels = j.at("levels");
  if (!levels.is_array() || levels.size() != static_cast<std::size_t>(x.truncation) + 1)
    throw decode_error("simplicial.levels: expected truncation + 1 level sets");
  for (std::size_t n = 0; n < levels.size(); ++n)
    x.levels.push_back(
        detail::finset_value(levels[n], "simplicial.levels[" + std::to_string(n) + "]"));

  auto decode_rows = [&](const json& rows, bool faces) {
    std::string what = faces ? "simplicial.faces" : "simplicial.degeneracies";
    if (!rows.is_array()) throw decode_error(what + ": expected an array");
    std::vector<std::vector<FinMap>> out;
    for (std::size_t n = 0; n < rows.size(); ++n) {
      const json& row = rows[n];
      if (!row.is_array()) throw decode_error(what + ": rows are arrays");
      std::vector<FinMap> maps;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::size_t target = faces ? n - 1 : n + 1;
        if (faces && n == 0) throw decode_error(what + ": level 0 has no faces");
        if (target >= x.levels.size()) throw decode_error(what + ": row outside truncation");
        maps.push_back(detail::positional_map(
            row[i], x.levels[n], x.levels[target],
            what + "[" + std::to_string(n) + "][" + std::to_string(i) + "]"));
      }
      out.push_back(std::move(maps));
    }
    return out;
  };
  x.faces = decode_rows(j.at("faces"), true);
  x.degeneracies = decode_rows(j.at("degeneracies"), false);
  return x;
}

inline json encode_multisimplicial(const MultiSimplicialObject& x) {
  json levels = json::array();
  for (const auto& [index, set] : x.levels)
    levels.push_back(json{{"index", index}, {"elements", set.elements()}});
  auto tables_of = [](const std::map<std::pair<std::vector<int>, int>,
                                     std::vector<FinMap>>& maps) {
    json out = json::array();
    for (const auto& [key, row] : maps) {
      json r = json::array();
      for (const auto& m : row) r.push_back(detail::positional_of(m));
      out.push_back(json{{"index", key.first}, {"axis", key.second}, {"maps", std::move(r)}});
    }
    return out;
  };
  return json{{"arity", x.arity},
              {"truncation", x.truncation},
              {"unital", x.unital},
              {"levels", std::move(levels)},
              {"faces", tables_of(x.faces)},
              {"degeneracies", tables_of(x.degeneracies)}};
}

inline MultiSimplicialObject decode_multisimplicial(const json& j) {
  detail::expect_keys(j, {"arity", "truncation", "unital", "levels", "faces", "degeneracies"},
                      "multisimplicial");
  MultiSimplicialObject x;
  x.arity = detail::int_value(j.at("arity"), "multisimplicial.arity");
  if (x.arity < 1) throw decode_error("multisimplicial.arity: must be positive");
  const json& trunc = j.at("truncation");
  const json& unital = j.at("unital");
  if (!trunc.is_array() || trunc.size() != static_cast<std::size_t>(x.arity))
    throw decode_error("multisimplicial.truncation: one entry per axis");
  if (!unital.is_array() || unital.size() != static_cast<std::size_t>(x.arity))
    throw decode_error("multisimplicial.unital: one entry per axis");
  for (const auto& t : trunc)
    x.truncation.push_back(detail::int_value(t, "multisimplicial.truncation entry"));
  for (const auto& u : unital)
    x.unital.push_back(detail::bool_value(u, "multisimplicial.unital entry"));

  auto index_of = [&](const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != static_cast<std::size_t>(x.arity))
      throw decode_error(what + ": expected one coordinate per axis");
    std::vector<int> idx;
    for (const auto& c : v) idx.push_back(detail::int_value(c, what));
    for (int a = 0; a < x.arity; ++a)
      if (idx[a] < 0 || idx[a] > x.truncation[a])
        throw decode_error(what + ": coordinate outside the truncation");
    return idx;
  };

  const json& levels = j.at("levels");
  if (!levels.is_array()) throw decode_error("multisimplicial.levels: expected an array");
  for (const auto& entry : levels) {
    detail::expect_keys(entry, {"index", "elements"}, "multisimplicial.levels entry");
    auto idx = index_of(entry.at("index"), "multisimplicial.levels index");
    if (x.levels.count(idx))
      throw decode_error("multisimplicial.levels: duplicate index");
    x.levels[idx] =
        detail::finset_value(entry.at("elements"), "multisimplicial.levels elements");
  }

  auto decode_tables = [&](const json& tables, bool faces) {
    std::string what = faces ? "multisimplicial.faces" : "multisimplicial.degeneracies";
    std::map<std::pair<std::vector<int>, int>, std::vector<FinMap>> out;
    if (!tables.is_array()) throw decode_error(what + ": expected an array");
    for (const auto& entry : tables) {
      detail::expect_keys(entry, {"index", "axis", "maps"}, what + " entry");
      auto idx = index_of(entry.at("index"), what + " index");
      int axis = detail::int_value(entry.at("axis"), what + " axis");
      if (axis < 0 || axis >= x.arity) throw decode_error(what + ": axis out of range");
      auto target = idx;
      target[axis] += faces ? -1 : 1;
      if (target[axis] < 0 || target[axis] > x.truncation[axis])
        throw decode_error(what + ": maps leave the truncation");
      if (!x.levels.count(idx) || !x.levels.count(target))
        throw decode_error(what + ": missing level for the endpoints");
      if (out.count({idx, axis})) throw decode_error(what + ": duplicate entry");
      const json& maps = entry.at("maps");
      if (!maps.is_array()) throw decode_error(what + ": maps is an array");
      std::vector<FinMap> row;
      for (const auto& m : maps)
        row.push_back(
            detail::positional_map(m, x.levels.at(idx), x.levels.at(target), what + " map"));
      out[{idx, axis}] = std::move(row);
    }
    return out;
  };
  x.faces = decode_tables(j.at("faces"), true);
  x.degeneracies = decode_tables(j.at("degeneracies"), false);
  return x;
}

inline json encode_sigma_diagram(const SigmaDiagram& f) {
  json values = json::array();
  for (const auto& [interval, set] : f.values)
    values.push_back(json{{"interval", json::array({interval.first, interval.second})},
                          {"elements", set.elements()}});
  json arrows = json::array();
  for (const auto& [key, m] : f.arrows)
    arrows.push_back(json{{"from", json::array({key.first.first, key.first.second})},
                          {"to", json::array({key.second.first, key.second.second})},
                          {"map", detail::positional_of(m)}});
  return json{{"ambient", f.ambient}, {"values", std::move(values)},
              {"arrows", std::move(arrows)}};
}

inline SigmaDiagram decode_sigma_diagram(const json& j) {
  detail::expect_keys(j, {"ambient", "values", "arrows"}, "sigma-diagram");
  SigmaDiagram f;
  f.ambient = detail::int_value(j.at("ambient"), "sigma-diagram.ambient");
  if (f.ambient < 0) throw decode_error("sigma-diagram.ambient: negative");

  auto interval_of = [&](const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 2) throw decode_error(what + ": expected [i, j]");
    int i = detail::int_value(v[0], what), k = detail::int_value(v[1], what);
    if (i < 0 || i > k || k > f.ambient) throw decode_error(what + ": not an interval");
    return std::pair<int, int>{i, k};
  };

  const json& values = j.at("values");
  if (!values.is_array()) throw decode_error("sigma-diagram.values: expected an array");
  for (const auto& entry : values) {
    detail::expect_keys(entry, {"interval", "elements"}, "sigma-diagram.values entry");
    auto iv = interval_of(entry.at("interval"), "sigma-diagram.values interval");
    if (f.values.count(iv)) throw decode_error("sigma-diagram.values: duplicate interval");
    f.values[iv] =
        detail::finset_value(entry.at("elements"), "sigma-diagram.values elements");
  }
  const json& arrows = j.at("arrows");
  if (!arrows.is_array()) throw decode_error("sigma-diagram.arrows: expected an array");
  for (const auto& entry : arrows) {
    detail::expect_keys(entry, {"from", "to", "map"}, "sigma-diagram.arrows entry");
    auto from = interval_of(entry.at("from"), "sigma-diagram.arrows from");
    auto to = interval_of(entry.at("to"), "sigma-diagram.arrows to");
    if (!f.values.count(from) || !f.values.count(to))
      throw decode_error("sigma-diagram.arrows: endpoints missing from values");
    if (f.arrows.count({from, to})) throw decode_error("sigma-diagram.arrows: duplicate");
    f.arrows[{from, to}] = detail::positional_map(entry.at("map"), f.values.at(from),
                                                  f.values.at(to), "sigma-diagram.arrows map");
  }
  return f;
}

inline json encode_structure(const StructureFile& s) {
  json payload = std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinSet>) return encode_finset(p);
        else if constexpr (std::is_same_v<T, FinMap>) return encode_finmap(p);
        else if constexpr (std::is_same_v<T, Span>) return encode_span(p);
        else if constexpr (std::is_same_v<T, SpanMonoid>) return encode_span_monoid(p);
        else if constexpr (std::is_same_v<T, SemicatPresentation>) return encode_semicat(p);
        else if constexpr (std::is_same_v<T, CatPresentation>) return encode_cat(p);
        else if constexpr (std::is_same_v<T, CatFunctor>) return encode_functor(p);
        else if constexpr (std::is_same_v<T, TruncatedSimplicialObject>)
          return encode_simplicial(p);
        else if constexpr (std::is_same_v<T, MultiSimplicialObject>)
          return encode_multisimplicial(p);
        else return encode_sigma_diagram(p);
      },
      s.payload);
  return json{{"format_version", format_version},
              {"kind", s.kind},
              {"payload", std::move(payload)}};
}

inline StructureFile decode_structure(const json& j) {
  detail::expect_keys(j, {"format_version", "kind", "payload"}, "structure file");
  if (j.at("format_version") != format_version)
    throw decode_error("structure file: unsupported format_version");
  const json& kind = j.at("kind");
  if (!kind.is_string()) throw decode_error("structure file: kind must be a string");
  const std::string k = kind.get<std::string>();
  const json& p = j.at("payload");
  if (k == "finset") return {k, decode_finset(p)};
  if (k == "finmap") return {k, decode_finmap(p)};
  if (k == "span") return {k, decode_span(p)};
  if (k == "span-monoid") return {k, decode_span_monoid(p)};
  if (k == "semicat") return {k, decode_semicat(p)};
  if (k == "cat") return {k, decode_cat(p)};
  if (k == "functor") return {k, decode_functor(p)};
  if (k == "simplicial") return {k, decode_simplicial(p)};
  if (k == "multisimplicial") return {k, decode_multisimplicial(p)};
  if (k == "sigma-diagram") return {k, decode_sigma_diagram(p)};
  throw decode_error("structure file: unknown kind '" + k + "'");
}

inline std::string serialize_structure(const StructureFile& s) {
  return encode_structure(s).dump(2) + "\n";
}

inline StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw decode_error(std::string("structure file: ") + e.what());
  }
  return decode_structure(j);
}

inline StructureFile load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw decode_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

inline void save_structure(const std::string& path, const StructureFile& s) {
  std::ofstream out(path);
  if (!out) throw decode_error("cannot write '" + path + "'");
  out << serialize_structure(s);
}

/// Runs the owning module's validator; throws spanseg::error on failure.
inline void semantic_validate(const StructureFile& s) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Span>) validate_span(p);
        else if constexpr (std::is_same_v<T, SpanMonoid>) validate_span_monoid(p);
        else if constexpr (std::is_same_v<T, SemicatPresentation>) validate_semicat(p);
        else if constexpr (std::is_same_v<T, CatPresentation>) validate_cat(p);
        else if constexpr (std::is_same_v<T, CatFunctor>) validate_functor(p);
        else if constexpr (std::is_same_v<T, TruncatedSimplicialObject>)
          validate_simplicial(p);
        else if constexpr (std::is_same_v<T, MultiSimplicialObject>)
          validate_multisimplicial(p);
        else if constexpr (std::is_same_v<T, SigmaDiagram>) validate_sigma_diagram(p);
      },
      s.payload);
}

}  // namespace spanseg::io
