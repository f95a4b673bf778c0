#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fca/bitvec.hpp"

namespace fca {

// A formal context (G, M, I) stored twice: row-major (rows[g] is the
// attribute set of object g) and column-major (cols[m] is the object set of
// attribute m). Objects and attributes are dense 0-based indices; names are
// metadata only.
class FormalContext {
 public:
  // The 0x0 context.
  FormalContext() = default;
  // m objects, n attributes, empty relation, default names.
  FormalContext(std::size_t objects, std::size_t attributes);

  // Builds from rows of length `attributes`. Empty name tables get defaults
  // ("g0".., "m0"..).
  static FormalContext from_rows(std::size_t attributes, std::vector<AttrSet> rows,
                                 std::vector<std::string> object_names = {},
                                 std::vector<std::string> attribute_names = {});

  // Builds from a 0/1 pattern, one string per object; any character other
  // than '0' or '.' counts as an incidence. Convenient for fixtures.
  static FormalContext from_strings(const std::vector<std::string>& rows,
                                    std::vector<std::string> object_names = {},
                                    std::vector<std::string> attribute_names = {});

  std::size_t object_count() const { return rows_.size(); }
  std::size_t attribute_count() const { return cols_.size(); }

  bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }
  void set_incidence(std::size_t g, std::size_t m, bool value);

  const AttrSet& row(std::size_t g) const { return rows_.at(g); }
  const ObjSet& column(std::size_t m) const { return cols_.at(m); }
  const std::vector<AttrSet>& rows() const { return rows_; }
  const std::vector<ObjSet>& columns() const { return cols_; }

  std::size_t incidence_count() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }

  ObjSet all_objects() const { return ObjSet::full(object_count()); }
  AttrSet all_attributes() const { return AttrSet::full(attribute_count()); }

  // rows/columns are transposes and all dimensions agree.
  bool is_consistent() const;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  std::string name_;
  std::size_t attributes_ = 0;
  std::vector<AttrSet> rows_;
  std::vector<ObjSet> cols_;
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;

  void rebuild_columns();
};

// A formal concept (extent, intent). Viewed as a rectangle, extent x intent
// is a maximal block of incidences.
struct FormalConcept {
  ObjSet extent;
  AttrSet intent;

  // extent x intent is the empty rectangle.
  bool is_empty_rectangle() const { return extent.none() || intent.none(); }

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

using ConceptList = std::vector<FormalConcept>;

// X* : attributes shared by every object in X. X = {} gives all of M.
AttrSet derive_objects(const FormalContext& ctx, const ObjSet& objects);
// B* : objects having every attribute in B. B = {} gives all of G.
ObjSet derive_attrs(const FormalContext& ctx, const AttrSet& attributes);

ObjSet close_objects(const FormalContext& ctx, const ObjSet& objects);
AttrSet close_attrs(const FormalContext& ctx, const AttrSet& attributes);

// True iff extent* == intent and intent* == extent.
bool is_concept(const FormalContext& ctx, const FormalConcept& c);
// Throws std::invalid_argument if `c` is not a concept of `ctx`.
void require_concept(const FormalContext& ctx, const FormalConcept& c);

struct GeneratorConcepts {
  ConceptList object_concepts;     // [g] = (g**, g*)
  ConceptList attribute_concepts;  // [m] = (m*, m**)
};

FormalConcept object_concept(const FormalContext& ctx, std::size_t g);
FormalConcept attribute_concept(const FormalContext& ctx, std::size_t m);
GeneratorConcepts generator_concepts(const FormalContext& ctx);

}  // namespace fca
