#include "fca/concept_reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "fca/error.hpp"
#include "fca/lattice.hpp"

namespace fca {

std::string_view to_string(ConceptClass c) {
  switch (c) {
    case ConceptClass::Core:
      return "core";
    case ConceptClass::RelativelyNecessary:
      return "relatively_necessary";
    case ConceptClass::Unnecessary:
      return "unnecessary";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CoverCounter

CoverCounter::CoverCounter(std::size_t objects, std::size_t attributes)
    : objects_(objects), attributes_(attributes), counts_(objects * attributes, 0) {}

CoverCounter::CoverCounter(const FormalContext& ctx, const ConceptList& concepts)
    : CoverCounter(ctx.object_count(), ctx.attribute_count()) {
  for (const FormalConcept& c : concepts)
    add(c);
}

void CoverCounter::add(const FormalConcept& c) {
  c.extent.for_each([&](std::size_t g) {
    c.intent.for_each([&](std::size_t a) { ++counts_[g * attributes_ + a]; });
  });
}

void CoverCounter::remove(const FormalConcept& c) {
  c.extent.for_each([&](std::size_t g) {
    c.intent.for_each([&](std::size_t a) { --counts_[g * attributes_ + a]; });
  });
}

bool CoverCounter::has_unique_cell(const FormalConcept& c) const {
  bool unique = false;
  c.extent.for_each([&](std::size_t g) {
    if (unique)
      return;
    c.intent.for_each([&](std::size_t a) {
      if (count(g, a) == 1)
        unique = true;
    });
  });
  return unique;
}

bool CoverCounter::covers(const FormalContext& ctx) const {
  for (std::size_t g = 0; g < objects_; ++g) {
    bool ok = true;
    ctx.row(g).for_each([&](std::size_t a) { ok = ok && count(g, a) > 0; });
    if (!ok)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rectangle unions

namespace {

// Row-wise union of rectangles: cover[g] is the set of attributes a with
// (g, a) inside some added rectangle.
class RowCover {
 public:
  explicit RowCover(const FormalContext& ctx)
      : rows_(ctx.object_count(), AttrSet(ctx.attribute_count())) {}

  void add(const FormalConcept& c) {
    c.extent.for_each([&](std::size_t g) { rows_[g] |= c.intent; });
  }

  bool equals(const FormalContext& ctx) const { return rows_ == ctx.rows(); }

  // Every cell of c lies in the union.
  bool contains(const FormalConcept& c) const {
    bool ok = true;
    c.extent.for_each([&](std::size_t g) { ok = ok && c.intent.is_subset_of(rows_[g]); });
    return ok;
  }

 private:
  std::vector<AttrSet> rows_;
};

void require_concepts(const FormalContext& ctx, const ConceptList& concepts) {
  for (const FormalConcept& c : concepts)
    require_concept(ctx, c);
}

bool is_core(const CoverCounter& lattice_cover, const FormalConcept& c) {
  return !c.is_empty_rectangle() && lattice_cover.has_unique_cell(c);
}

}  // namespace

bool is_consistent(const FormalContext& ctx, const ConceptList& concepts) {
  require_concepts(ctx, concepts);
  RowCover cover(ctx);
  for (const FormalConcept& c : concepts)
    cover.add(c);
  return cover.equals(ctx);
}

bool is_reduction_set(const FormalContext& ctx, const ConceptList& concepts) {
  if (!is_consistent(ctx, concepts))
    return false;
  // Within a consistent set, a member is irreplaceable iff it owns a cell
  // no other member covers. Empty rectangles and duplicates never do.
  CoverCounter counter(ctx, concepts);
  return std::all_of(concepts.begin(), concepts.end(),
                     [&](const FormalConcept& c) { return counter.has_unique_cell(c); });
}

void require_full_lattice(const FormalContext& ctx, const ConceptList& lattice) {
  require_concepts(ctx, lattice);
  std::unordered_set<BitVec, BitVecHash> extents;
  for (const FormalConcept& c : lattice)
    if (!extents.insert(c.extent).second)
      throw std::invalid_argument("concept list contains a duplicate concept");
  const ConceptList all = enumerate_concepts(ctx);
  if (all.size() != lattice.size())
    throw std::invalid_argument("concept list holds " + std::to_string(lattice.size()) +
                                " concepts, the lattice has " + std::to_string(all.size()));
}

ConceptList core_concepts(const FormalContext& ctx, const ConceptList& lattice) {
  require_full_lattice(ctx, lattice);
  const CoverCounter counter(ctx, lattice);
  ConceptList out;
  for (const FormalConcept& c : lattice)
    if (is_core(counter, c))
      out.push_back(c);
  return out;
}

bool is_side_covered(const FormalContext& ctx, const FormalConcept& c) {
  require_concept(ctx, c);
  AttrSet by_objects(ctx.attribute_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g)
    if (!c.extent.test(g) && ctx.row(g).is_subset_of(c.intent))
      by_objects |= ctx.row(g);
  if (by_objects == c.intent)
    return true;

  ObjSet by_attributes(ctx.object_count());
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (!c.intent.test(m) && ctx.column(m).is_subset_of(c.extent))
      by_attributes |= ctx.column(m);
  return by_attributes == c.extent;
}

// ---------------------------------------------------------------------------
// Classification

ConceptClass Classification::label_of(const FormalConcept& c) const {
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i] == c)
      return labels[i];
  throw std::invalid_argument("concept " + to_string(c.extent) + " is not in the classification");
}

ConceptList Classification::members(ConceptClass c) const {
  ConceptList out;
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (labels[i] == c)
      out.push_back(concepts[i]);
  return out;
}

std::size_t Classification::count(ConceptClass c) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), c));
}

std::size_t Classification::count_nonempty(ConceptClass c) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (labels[i] == c && !concepts[i].is_empty_rectangle())
      ++total;
  return total;
}

Classification classify(const FormalContext& ctx, const ConceptList& lattice) {
  require_full_lattice(ctx, lattice);
  const CoverCounter counter(ctx, lattice);
  const GeneratorConcepts generators = generator_concepts(ctx);

  Classification out{lattice, {}};
  out.labels.reserve(lattice.size());
  for (const FormalConcept& c : lattice) {
    if (c.is_empty_rectangle()) {
      out.labels.push_back(ConceptClass::Unnecessary);
      continue;
    }
    if (is_core(counter, c)) {
      out.labels.push_back(ConceptClass::Core);
      continue;
    }
    RowCover cover(ctx);
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
      if (!c.extent.test(g))
        cover.add(generators.object_concepts[g]);
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
      if (!c.intent.test(m))
        cover.add(generators.attribute_concepts[m]);
    out.labels.push_back(cover.equals(ctx) ? ConceptClass::Unnecessary
                                           : ConceptClass::RelativelyNecessary);
  }
  return out;
}

Classification classify_by_side_cover(const FormalContext& ctx, const ConceptList& lattice) {
  require_full_lattice(ctx, lattice);
  const CoverCounter counter(ctx, lattice);

  RowCover cover(ctx);
  for (const FormalConcept& c : lattice)
    if (is_core(counter, c) || is_side_covered(ctx, c))
      cover.add(c);

  Classification out{lattice, {}};
  out.labels.reserve(lattice.size());
  for (const FormalConcept& c : lattice) {
    if (c.is_empty_rectangle())
      out.labels.push_back(ConceptClass::Unnecessary);
    else if (is_core(counter, c))
      out.labels.push_back(ConceptClass::Core);
    else
      out.labels.push_back(cover.contains(c) ? ConceptClass::Unnecessary
                                             : ConceptClass::RelativelyNecessary);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

// Reduction sets as bitmasks over `candidates`. A reduction set is exactly
// an inclusion-minimal consistent set (any proper consistent subset makes
// some member redundant). Subsets are visited by ascending size; supersets
// of a reduction set found earlier are skipped, and any consistent survivor
// is minimal because all its consistent subsets would have been found first.
std::vector<std::uint64_t> reduction_masks(const FormalContext& ctx,
                                           const ConceptList& candidates) {
  const std::size_t k = candidates.size();
  std::vector<std::uint64_t> found;
  auto consistent = [&](std::uint64_t mask) {
    RowCover cover(ctx);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      cover.add(candidates[static_cast<std::size_t>(std::countr_zero(rest))]);
    return cover.equals(ctx);
  };
  auto dominated = [&](std::uint64_t mask) {
    return std::any_of(found.begin(), found.end(),
                       [&](std::uint64_t r) { return (mask & r) == r; });
  };

  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::size_t size = 0; size <= k; ++size) {
    if (size == 0) {
      if (consistent(0))
        found.push_back(0);
      continue;
    }
    // Gosper's hack: successive masks with `size` bits set.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      if (!dominated(mask) && consistent(mask))
        found.push_back(mask);
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return found;
}

ConceptList nonempty_members(const ConceptList& lattice) {
  ConceptList out;
  for (const FormalConcept& c : lattice)
    if (!c.is_empty_rectangle())
      out.push_back(c);
  return out;
}

}  // namespace

std::vector<ConceptList> reduction_family(const FormalContext& ctx, const ConceptList& lattice,
                                          const OracleOptions& options) {
  require_full_lattice(ctx, lattice);
  const ConceptList candidates = nonempty_members(lattice);
  if (candidates.size() > options.max_concepts || candidates.size() >= 63)
    throw ResourceLimitError("oracle would search 2^" + std::to_string(candidates.size()) +
                             " subsets; cap is " + std::to_string(options.max_concepts) +
                             " concepts");

  std::vector<ConceptList> family;
  for (std::uint64_t mask : reduction_masks(ctx, candidates)) {
    ConceptList set;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      set.push_back(candidates[static_cast<std::size_t>(std::countr_zero(rest))]);
    family.push_back(std::move(set));
  }
  return family;
}

Classification classify_by_definition(const FormalContext& ctx, const ConceptList& lattice,
                                      const OracleOptions& options) {
  const std::vector<ConceptList> family = reduction_family(ctx, lattice, options);

  Classification out{lattice, {}};
  out.labels.reserve(lattice.size());
  for (const FormalConcept& c : lattice) {
    std::size_t hits = 0;
    for (const ConceptList& set : family)
      if (std::find(set.begin(), set.end(), c) != set.end())
        ++hits;
    if (hits == 0)
      out.labels.push_back(ConceptClass::Unnecessary);
    else if (hits == family.size())
      out.labels.push_back(ConceptClass::Core);
    else
      out.labels.push_back(ConceptClass::RelativelyNecessary);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Greedy reduction

ConceptList greedy_reduction(const FormalContext& ctx, const ConceptList& lattice,
                             std::span<const std::size_t> order) {
  require_full_lattice(ctx, lattice);
  if (order.size() != lattice.size())
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " entries, lattice has " + std::to_string(lattice.size()));
  std::vector<bool> seen(lattice.size(), false);
  for (std::size_t i : order) {
    if (i >= lattice.size() || seen[i])
      throw std::invalid_argument("order is not a permutation of the lattice indices");
    seen[i] = true;
  }

  CoverCounter counter(ctx, lattice);
  std::vector<bool> kept(lattice.size(), true);
  for (std::size_t i : order) {
    const FormalConcept& c = lattice[i];
    // Dropping c keeps the set consistent iff every cell of c is covered
    // by another kept concept.
    if (!counter.has_unique_cell(c)) {
      counter.remove(c);
      kept[i] = false;
    }
  }

  ConceptList out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (kept[i])
      out.push_back(lattice[i]);
  return out;
}

ConceptList greedy_reduction(const FormalContext& ctx, const ConceptList& lattice) {
  std::vector<std::size_t> order(lattice.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  return greedy_reduction(ctx, lattice, order);
}

// ---------------------------------------------------------------------------
// Extremal contexts

namespace {

void append_subsets(std::size_t n, std::size_t k, std::vector<AttrSet>& rows) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i)
    pick[i] = i;
  while (true) {
    AttrSet row(n);
    for (std::size_t a : pick)
      row.set(a);
    rows.push_back(std::move(row));
    // Advance to the next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

FormalContext gen_bound_context(std::size_t n, BoundKind kind) {
  if (n < 2 || n > 20)
    throw std::invalid_argument("attribute count " + std::to_string(n) +
                                " outside the supported range [2, 20]");
  std::vector<AttrSet> rows;
  append_subsets(n, n / 2, rows);
  if (kind == BoundKind::Unnecessary)
    append_subsets(n, n / 2 + 1, rows);

  std::vector<std::string> object_names;
  for (std::size_t g = 1; g <= rows.size(); ++g)
    object_names.push_back(std::to_string(g));
  std::vector<std::string> attribute_names;
  for (std::size_t a = 1; a <= n; ++a)
    attribute_names.push_back("a" + std::to_string(a));

  FormalContext ctx = FormalContext::from_rows(n, std::move(rows), std::move(object_names),
                                               std::move(attribute_names));
  ctx.set_name((kind == BoundKind::Relative ? "relative-" : "unnecessary-") + std::to_string(n));
  return ctx;
}

// ---------------------------------------------------------------------------
// Reports

std::string classification_json(const Classification& c) {
  nlohmann::json out = {{"core", nlohmann::json::array()},
                        {"relatively_necessary", nlohmann::json::array()},
                        {"unnecessary", nlohmann::json::array()}};
  for (std::size_t i = 0; i < c.concepts.size(); ++i) {
    nlohmann::json concept_json;
    concept_json["extent"] = c.concepts[i].extent.indices();
    concept_json["intent"] = c.concepts[i].intent.indices();
    out[std::string(to_string(c.labels[i]))].push_back(std::move(concept_json));
  }
  return out.dump();
}

namespace {

std::string join_indices(const BitVec& v) {
  std::string out;
  v.for_each([&](std::size_t i) {
    if (!out.empty())
      out += ',';
    out += std::to_string(i);
  });
  return out;
}

}  // namespace

std::string classification_tsv(const Classification& c) {
  std::string out = "class\textent\tintent\n";
  for (std::size_t i = 0; i < c.concepts.size(); ++i) {
    out += to_string(c.labels[i]);
    out += '\t' + join_indices(c.concepts[i].extent) + '\t' + join_indices(c.concepts[i].intent) +
           '\n';
  }
  return out;
}

}  // namespace fca
