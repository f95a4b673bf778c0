#include "fca/context.hpp"

#include <stdexcept>

namespace fca {

namespace {

std::vector<std::string> default_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    names.push_back(prefix + std::to_string(i));
  return names;
}

void check_length(const BitVec& v, std::size_t expected, const char* what) {
  if (v.size() != expected)
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(v.size()) +
                                ", context dimension is " + std::to_string(expected));
}

}  // namespace

FormalContext::FormalContext(std::size_t objects, std::size_t attributes)
    : attributes_(attributes),
      rows_(objects, AttrSet(attributes)),
      cols_(attributes, ObjSet(objects)),
      object_names_(default_names("g", objects)),
      attribute_names_(default_names("m", attributes)) {}

FormalContext FormalContext::from_rows(std::size_t attributes, std::vector<AttrSet> rows,
                                       std::vector<std::string> object_names,
                                       std::vector<std::string> attribute_names) {
  for (const AttrSet& r : rows)
    check_length(r, attributes, "row");
  if (object_names.empty())
    object_names = default_names("g", rows.size());
  if (attribute_names.empty())
    attribute_names = default_names("m", attributes);
  if (object_names.size() != rows.size())
    throw std::invalid_argument("object name count does not match row count");
  if (attribute_names.size() != attributes)
    throw std::invalid_argument("attribute name count does not match attribute count");

  FormalContext ctx;
  ctx.attributes_ = attributes;
  ctx.rows_ = std::move(rows);
  ctx.object_names_ = std::move(object_names);
  ctx.attribute_names_ = std::move(attribute_names);
  ctx.rebuild_columns();
  return ctx;
}

FormalContext FormalContext::from_strings(const std::vector<std::string>& rows,
                                          std::vector<std::string> object_names,
                                          std::vector<std::string> attribute_names) {
  const std::size_t n = rows.empty() ? attribute_names.size() : rows.front().size();
  std::vector<AttrSet> bits;
  bits.reserve(rows.size());
  for (const std::string& r : rows) {
    if (r.size() != n)
      throw std::invalid_argument("ragged row pattern \"" + r + "\"");
    AttrSet row(n);
    for (std::size_t m = 0; m < n; ++m)
      row.assign(m, r[m] != '0' && r[m] != '.');
    bits.push_back(std::move(row));
  }
  return from_rows(n, std::move(bits), std::move(object_names), std::move(attribute_names));
}

void FormalContext::rebuild_columns() {
  cols_.assign(attributes_, ObjSet(rows_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
}

void FormalContext::set_incidence(std::size_t g, std::size_t m, bool value) {
  if (g >= object_count() || m >= attribute_count())
    throw std::out_of_range("incidence (" + std::to_string(g) + "," + std::to_string(m) +
                            ") outside context");
  rows_[g].assign(m, value);
  cols_[m].assign(g, value);
}

std::size_t FormalContext::incidence_count() const {
  std::size_t total = 0;
  for (const AttrSet& r : rows_)
    total += r.count();
  return total;
}

bool FormalContext::is_consistent() const {
  if (cols_.size() != attributes_ || object_names_.size() != rows_.size() ||
      attribute_names_.size() != attributes_)
    return false;
  for (const AttrSet& r : rows_)
    if (r.size() != attributes_)
      return false;
  for (const ObjSet& c : cols_)
    if (c.size() != rows_.size())
      return false;
  for (std::size_t g = 0; g < rows_.size(); ++g)
    for (std::size_t m = 0; m < attributes_; ++m)
      if (rows_[g].test(m) != cols_[m].test(g))
        return false;
  return true;
}

AttrSet derive_objects(const FormalContext& ctx, const ObjSet& objects) {
  check_length(objects, ctx.object_count(), "object set");
  AttrSet out = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { out &= ctx.row(g); });
  return out;
}

ObjSet derive_attrs(const FormalContext& ctx, const AttrSet& attributes) {
  check_length(attributes, ctx.attribute_count(), "attribute set");
  ObjSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { out &= ctx.column(m); });
  return out;
}

ObjSet close_objects(const FormalContext& ctx, const ObjSet& objects) {
  return derive_attrs(ctx, derive_objects(ctx, objects));
}

AttrSet close_attrs(const FormalContext& ctx, const AttrSet& attributes) {
  return derive_objects(ctx, derive_attrs(ctx, attributes));
}

bool is_concept(const FormalContext& ctx, const FormalConcept& c) {
  if (c.extent.size() != ctx.object_count() || c.intent.size() != ctx.attribute_count())
    return false;
  return derive_objects(ctx, c.extent) == c.intent && derive_attrs(ctx, c.intent) == c.extent;
}

void require_concept(const FormalContext& ctx, const FormalConcept& c) {
  if (!is_concept(ctx, c))
    throw std::invalid_argument("(" + to_string(c.extent) + ", " + to_string(c.intent) +
                                ") is not a formal concept of the context");
}

FormalConcept object_concept(const FormalContext& ctx, std::size_t g) {
  AttrSet intent = ctx.row(g);
  ObjSet extent = derive_attrs(ctx, intent);
  return {std::move(extent), std::move(intent)};
}

FormalConcept attribute_concept(const FormalContext& ctx, std::size_t m) {
  ObjSet extent = ctx.column(m);
  AttrSet intent = derive_objects(ctx, extent);
  return {std::move(extent), std::move(intent)};
}

GeneratorConcepts generator_concepts(const FormalContext& ctx) {
  GeneratorConcepts out;
  out.object_concepts.reserve(ctx.object_count());
  out.attribute_concepts.reserve(ctx.attribute_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    out.object_concepts.push_back(object_concept(ctx, g));
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    out.attribute_concepts.push_back(attribute_concept(ctx, m));
  return out;
}

}  // namespace fca
