#pragma once

#include <map>
#include <string>
#include <vector>

#include "spanseg/catobj.hpp"
#include "spanseg/finset.hpp"
#include "spanseg/nfold.hpp"

namespace spanseg::samples {

// two objects, one non-identity arrow f : 0 -> 1
inline CatPresentation walking_arrow() {
  SemicatPresentation A;
  A.objects = FinSet({"0", "1"});
  A.morphisms = FinSet({"id0", "id1", "f"});
  A.src = FinMap::from_assignment(A.morphisms, A.objects,
                                  {{"id0", "0"}, {"id1", "1"}, {"f", "0"}});
  A.tgt = FinMap::from_assignment(A.morphisms, A.objects,
                                  {{"id0", "0"}, {"id1", "1"}, {"f", "1"}});
  A.comp = {{{"id0", "id0"}, "id0"},
            {{"f", "id0"}, "f"},
            {{"id1", "f"}, "f"},
            {{"id1", "id1"}, "id1"}};
  FinMap id = FinMap::from_assignment(A.objects, A.morphisms, {{"0", "id0"}, {"1", "id1"}});
  return CatPresentation{A, id};
}

// two objects, mutually inverse f : 0 -> 1 and g : 1 -> 0
inline CatPresentation walking_iso() {
  SemicatPresentation A;
  A.objects = FinSet({"0", "1"});
  A.morphisms = FinSet({"id0", "id1", "f", "g"});
  A.src = FinMap::from_assignment(
      A.morphisms, A.objects, {{"id0", "0"}, {"id1", "1"}, {"f", "0"}, {"g", "1"}});
  A.tgt = FinMap::from_assignment(
      A.morphisms, A.objects, {{"id0", "0"}, {"id1", "1"}, {"f", "1"}, {"g", "0"}});
  A.comp = {{{"id0", "id0"}, "id0"}, {{"id0", "g"}, "g"},   {{"f", "id0"}, "f"},
            {{"f", "g"}, "id1"},     {{"id1", "id1"}, "id1"}, {{"id1", "f"}, "f"},
            {{"g", "id1"}, "g"},     {{"g", "f"}, "id0"}};
  FinMap id = FinMap::from_assignment(A.objects, A.morphisms, {{"0", "id0"}, {"1", "id1"}});
  return CatPresentation{A, id};
}

inline CatPresentation terminal_cat() {
  SemicatPresentation A;
  A.objects = FinSet({"*"});
  A.morphisms = FinSet({"id"});
  A.src = FinMap::constant(A.morphisms, A.objects, "*");
  A.tgt = A.src;
  A.comp = {{{"id", "id"}, "id"}};
  return CatPresentation{A, FinMap::constant(A.objects, A.morphisms, "id")};
}

// one object, two morphisms, every composite equal to g; associative but
// with no quasi-unit
inline SemicatPresentation constant_g() {
  SemicatPresentation A;
  A.objects = FinSet({"x"});
  A.morphisms = FinSet({"f", "g"});
  A.src = FinMap::constant(A.morphisms, A.objects, "x");
  A.tgt = A.src;
  A.comp = {{{"f", "f"}, "g"}, {{"f", "g"}, "g"}, {{"g", "f"}, "g"}, {{"g", "g"}, "g"}};
  return A;
}

// one object, one idempotent morphism, no identity field
inline SemicatPresentation terminal_semicat() {
  SemicatPresentation A;
  A.objects = FinSet({"x"});
  A.morphisms = FinSet({"e"});
  A.src = FinMap::constant(A.morphisms, A.objects, "x");
  A.tgt = A.src;
  A.comp = {{{"e", "e"}, "e"}};
  return A;
}

// one object with an identity and a non-identity idempotent e
inline CatPresentation walking_idempotent() {
  SemicatPresentation A;
  A.objects = FinSet({"x"});
  A.morphisms = FinSet({"id", "e"});
  A.src = FinMap::constant(A.morphisms, A.objects, "x");
  A.tgt = A.src;
  A.comp = {{{"id", "id"}, "id"}, {{"id", "e"}, "e"}, {{"e", "id"}, "e"}, {{"e", "e"}, "e"}};
  return CatPresentation{A, FinMap::constant(A.objects, A.morphisms, "id")};
}

inline CatPresentation discrete_cat(const std::vector<std::string>& labels) {
  SemicatPresentation A;
  A.objects = FinSet(labels);
  std::vector<std::string> morphs;
  std::map<std::string, std::string> s, ids;
  for (const auto& x : labels) {
    morphs.push_back("id_" + x);
    s["id_" + x] = x;
    ids[x] = "id_" + x;
  }
  A.morphisms = FinSet(morphs);
  A.src = FinMap::from_assignment(A.morphisms, A.objects, s);
  A.tgt = A.src;
  for (const auto& m : morphs) A.comp[{m, m}] = m;
  return CatPresentation{A, FinMap::from_assignment(A.objects, A.morphisms, ids)};
}

// poset chain p0 < p1 < ... with one morphism m_i_j per i <= j
inline CatPresentation chain_cat(int n) {
  SemicatPresentation A;
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back("p" + std::to_string(i));
  A.objects = FinSet(objs);
  std::vector<std::string> morphs;
  std::map<std::string, std::string> s, t, ids;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::string m = "m" + std::to_string(i) + "_" + std::to_string(j);
      morphs.push_back(m);
      s[m] = objs[i];
      t[m] = objs[j];
      if (i == j) ids[objs[i]] = m;
    }
  A.morphisms = FinSet(morphs);
  A.src = FinMap::from_assignment(A.morphisms, A.objects, s);
  A.tgt = FinMap::from_assignment(A.morphisms, A.objects, t);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        A.comp[{"m" + std::to_string(j) + "_" + std::to_string(k),
                "m" + std::to_string(i) + "_" + std::to_string(j)}] =
            "m" + std::to_string(i) + "_" + std::to_string(k);
  return CatPresentation{A, FinMap::from_assignment(A.objects, A.morphisms, ids)};
}

inline SemicatPresentation empty_semicat() {
  SemicatPresentation A;
  A.objects = FinSet(std::vector<std::string>{});
  A.morphisms = FinSet(std::vector<std::string>{});
  A.src = FinMap(A.morphisms, A.objects, {});
  A.tgt = A.src;
  return A;
}

// objects but no morphisms at all
inline SemicatPresentation morphism_free(const std::vector<std::string>& labels) {
  SemicatPresentation A;
  A.objects = FinSet(labels);
  A.morphisms = FinSet(std::vector<std::string>{});
  A.src = FinMap(A.morphisms, A.objects, {});
  A.tgt = A.src;
  return A;
}

/// Views a category as a strict 2-category with only identity 2-cells.
inline StrictTwoCat two_cat_from_cat(const CatPresentation& C) {
  StrictTwoCat T;
  T.objects = C.underlying.objects;
  SemicatPresentation V;
  V.objects = C.underlying.morphisms;
  V.morphisms = C.underlying.morphisms;
  V.src = FinMap::identity(V.objects);
  V.tgt = V.src;
  for (const auto& f : V.morphisms.elements()) V.comp[{f, f}] = f;
  T.vertical = CatPresentation{V, FinMap::identity(V.objects)};
  T.cell_src = C.underlying.src;
  T.cell_tgt = C.underlying.tgt;
  T.hcomp_cells = C.underlying.comp;
  T.hcomp_twocells = C.underlying.comp;
  T.identity_cell = C.id;
  return T;
}

// objects a, b; 1-cells ida, idb, f, g : a -> b; one 2-cell alpha : f => g
inline StrictTwoCat walking_two_cell() {
  StrictTwoCat T;
  T.objects = FinSet({"a", "b"});
  SemicatPresentation V;
  V.objects = FinSet({"ida", "idb", "f", "g"});
  V.morphisms = FinSet({"vida", "vidb", "vf", "vg", "alpha"});
  V.src = FinMap::from_assignment(
      V.morphisms, V.objects,
      {{"vida", "ida"}, {"vidb", "idb"}, {"vf", "f"}, {"vg", "g"}, {"alpha", "f"}});
  V.tgt = FinMap::from_assignment(
      V.morphisms, V.objects,
      {{"vida", "ida"}, {"vidb", "idb"}, {"vf", "f"}, {"vg", "g"}, {"alpha", "g"}});
  V.comp = {{{"vida", "vida"}, "vida"}, {{"vidb", "vidb"}, "vidb"},
            {{"vf", "vf"}, "vf"},       {{"vg", "vg"}, "vg"},
            {{"alpha", "vf"}, "alpha"}, {{"vg", "alpha"}, "alpha"}};
  T.vertical = CatPresentation{
      V, FinMap::from_assignment(
             V.objects, V.morphisms,
             {{"ida", "vida"}, {"idb", "vidb"}, {"f", "vf"}, {"g", "vg"}})};
  T.cell_src = FinMap::from_assignment(V.objects, T.objects,
                                       {{"ida", "a"}, {"idb", "b"}, {"f", "a"}, {"g", "a"}});
  T.cell_tgt = FinMap::from_assignment(V.objects, T.objects,
                                       {{"ida", "a"}, {"idb", "b"}, {"f", "b"}, {"g", "b"}});
  T.hcomp_cells = {{{"ida", "ida"}, "ida"}, {{"f", "ida"}, "f"}, {{"g", "ida"}, "g"},
                   {{"idb", "f"}, "f"},     {{"idb", "g"}, "g"}, {{"idb", "idb"}, "idb"}};
  T.hcomp_twocells = {{{"vida", "vida"}, "vida"}, {{"vf", "vida"}, "vf"},
                      {{"vg", "vida"}, "vg"},     {{"alpha", "vida"}, "alpha"},
                      {{"vidb", "vf"}, "vf"},     {{"vidb", "vg"}, "vg"},
                      {{"vidb", "alpha"}, "alpha"}, {{"vidb", "vidb"}, "vidb"}};
  T.identity_cell =
      FinMap::from_assignment(T.objects, V.objects, {{"a", "ida"}, {"b", "idb"}});
  return T;
}

// like the walking 2-cell but alpha has an inverse abar : g => f
inline StrictTwoCat walking_two_iso() {
  StrictTwoCat T;
  T.objects = FinSet({"a", "b"});
  SemicatPresentation V;
  V.objects = FinSet({"ida", "idb", "f", "g"});
  V.morphisms = FinSet({"vida", "vidb", "vf", "vg", "alpha", "abar"});
  V.src = FinMap::from_assignment(V.morphisms, V.objects,
                                  {{"vida", "ida"},
                                   {"vidb", "idb"},
                                   {"vf", "f"},
                                   {"vg", "g"},
                                   {"alpha", "f"},
                                   {"abar", "g"}});
  V.tgt = FinMap::from_assignment(V.morphisms, V.objects,
                                  {{"vida", "ida"},
                                   {"vidb", "idb"},
                                   {"vf", "f"},
                                   {"vg", "g"},
                                   {"alpha", "g"},
                                   {"abar", "f"}});
  V.comp = {{{"vida", "vida"}, "vida"}, {{"vidb", "vidb"}, "vidb"},
            {{"vf", "vf"}, "vf"},       {{"vg", "vg"}, "vg"},
            {{"alpha", "vf"}, "alpha"}, {{"vg", "alpha"}, "alpha"},
            {{"abar", "vg"}, "abar"},   {{"vf", "abar"}, "abar"},
            {{"abar", "alpha"}, "vf"},  {{"alpha", "abar"}, "vg"}};
  T.vertical = CatPresentation{
      V, FinMap::from_assignment(
             V.objects, V.morphisms,
             {{"ida", "vida"}, {"idb", "vidb"}, {"f", "vf"}, {"g", "vg"}})};
  T.cell_src = FinMap::from_assignment(V.objects, T.objects,
                                       {{"ida", "a"}, {"idb", "b"}, {"f", "a"}, {"g", "a"}});
  T.cell_tgt = FinMap::from_assignment(V.objects, T.objects,
                                       {{"ida", "a"}, {"idb", "b"}, {"f", "b"}, {"g", "b"}});
  T.hcomp_cells = {{{"ida", "ida"}, "ida"}, {{"f", "ida"}, "f"}, {{"g", "ida"}, "g"},
                   {{"idb", "f"}, "f"},     {{"idb", "g"}, "g"}, {{"idb", "idb"}, "idb"}};
  T.hcomp_twocells = {{{"vida", "vida"}, "vida"},   {{"vf", "vida"}, "vf"},
                      {{"vg", "vida"}, "vg"},       {{"alpha", "vida"}, "alpha"},
                      {{"abar", "vida"}, "abar"},   {{"vidb", "vf"}, "vf"},
                      {{"vidb", "vg"}, "vg"},       {{"vidb", "alpha"}, "alpha"},
                      {{"vidb", "abar"}, "abar"},   {{"vidb", "vidb"}, "vidb"}};
  T.identity_cell =
      FinMap::from_assignment(T.objects, V.objects, {{"a", "ida"}, {"b", "idb"}});
  return T;
}

/// Double nerves used as the 2-fold test universe: commutative-square double
/// categories of small posets plus small strict 2-categories.
inline std::vector<MultiSimplicialObject> twofold_universe() {
  std::vector<MultiSimplicialObject> U;
  U.push_back(poset_double_nerve(FinSet({"0"}), {}, 2, 2));
  U.push_back(poset_double_nerve(FinSet({"0", "1"}), {{"0", "1"}}, 3, 3));
  U.push_back(poset_double_nerve(FinSet({"0", "1", "2"}), {{"0", "1"}, {"1", "2"}}, 2, 2));
  U.push_back(poset_double_nerve(FinSet({"a", "b", "c"}), {{"a", "c"}, {"b", "c"}}, 2, 2));
  U.push_back(poset_double_nerve(FinSet({"x", "y"}), {}, 2, 2));
  U.push_back(two_cat_double_nerve(two_cat_from_cat(walking_arrow()), 2, 2));
  U.push_back(two_cat_double_nerve(two_cat_from_cat(walking_iso()), 2, 2));
  U.push_back(two_cat_double_nerve(walking_two_cell(), 2, 2));
  U.push_back(two_cat_double_nerve(walking_two_iso(), 2, 2));
  return U;
}

}  // namespace spanseg::samples
