#include "fca/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "fca/error.hpp"

namespace fca {

namespace {

// {k : extent is a subset of column k}, skipping attributes already known to
// be in the result.
AttrSet intent_of(const FormalContext& ctx, const ObjSet& extent, const AttrSet& known) {
  AttrSet out = known;
  for (std::size_t k = 0; k < ctx.attribute_count(); ++k)
    if (!out.test(k) && extent.is_subset_of(ctx.column(k)))
      out.set(k);
  return out;
}

void check_dimensions(const FormalConcept& c1, const FormalConcept& c2) {
  if (c1.extent.size() != c2.extent.size() || c1.intent.size() != c2.intent.size())
    throw std::invalid_argument("concepts come from contexts of different dimensions");
}

struct Frame {
  ObjSet extent;
  AttrSet intent;
  std::size_t next;
};

}  // namespace

ConceptList enumerate_concepts(const FormalContext& ctx, const EnumerateOptions& options) {
  const std::size_t n = ctx.attribute_count();
  ConceptList out;

  std::vector<Frame> stack;
  {
    ObjSet top = ctx.all_objects();
    AttrSet top_intent = derive_objects(ctx, top);
    stack.push_back({std::move(top), std::move(top_intent), 0});
  }

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();

    for (std::size_t j = f.next; j < n; ++j) {
      if (f.intent.test(j))
        continue;
      ObjSet extent = f.extent & ctx.column(j);
      AttrSet seed = f.intent;
      seed.set(j);
      AttrSet intent = intent_of(ctx, extent, seed);
      // Canonicity: the closure must not add any attribute before j.
      if (intent.equal_below(f.intent, j))
        stack.push_back({std::move(extent), std::move(intent), j + 1});
    }

    out.push_back({std::move(f.extent), std::move(f.intent)});
    if (out.size() > options.max_concepts)
      throw ResourceLimitError("concept count exceeds the cap of " +
                               std::to_string(options.max_concepts));
  }

  sort_canonical(out);
  return out;
}

bool canonical_less(const FormalConcept& a, const FormalConcept& b) {
  return compare_as_integer(a.extent, b.extent) < 0;
}

void sort_canonical(ConceptList& concepts) {
  std::sort(concepts.begin(), concepts.end(), canonical_less);
}

bool leq(const FormalConcept& c1, const FormalConcept& c2) {
  check_dimensions(c1, c2);
  return c1.extent.is_subset_of(c2.extent);
}

FormalConcept meet(const FormalContext& ctx, const FormalConcept& c1, const FormalConcept& c2) {
  check_dimensions(c1, c2);
  ObjSet extent = c1.extent & c2.extent;
  AttrSet intent = derive_objects(ctx, extent);
  return {std::move(extent), std::move(intent)};
}

FormalConcept join(const FormalContext& ctx, const FormalConcept& c1, const FormalConcept& c2) {
  check_dimensions(c1, c2);
  AttrSet intent = c1.intent & c2.intent;
  ObjSet extent = derive_attrs(ctx, intent);
  return {std::move(extent), std::move(intent)};
}

std::string to_json_line(const FormalConcept& c) {
  nlohmann::json j;
  j["extent"] = c.extent.indices();
  j["intent"] = c.intent.indices();
  return j.dump();
}

std::string to_json_lines(const ConceptList& concepts) {
  std::string out;
  for (const FormalConcept& c : concepts) {
    out += to_json_line(c);
    out += '\n';
  }
  return out;
}

namespace {

std::string named_set(const BitVec& v, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  v.for_each([&](std::size_t i) {
    if (!first)
      out += ',';
    out += names.at(i);
    first = false;
  });
  return out + '}';
}

}  // namespace

std::string to_text(const FormalContext& ctx, const FormalConcept& c) {
  return named_set(c.extent, ctx.object_names()) + " / " +
         named_set(c.intent, ctx.attribute_names());
}

}  // namespace fca
