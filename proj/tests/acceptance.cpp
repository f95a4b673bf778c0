// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion carries its own time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fca/attr_reduction.hpp"
#include "fca/concept_reduction.hpp"
#include "fca/io.hpp"
#include "fca/lattice.hpp"
#include "fca/random_context.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace fca;
using testing::make_concept;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass)
      detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok)
      fail(why);
  }
};

bool same_members(ConceptList a, ConceptList b) {
  sort_canonical(a);
  sort_canonical(b);
  return a == b;
}

std::vector<std::size_t> positions(const ConceptList& lattice, const ConceptList& wanted) {
  std::vector<std::size_t> out;
  for (const FormalConcept& c : wanted)
    out.push_back(static_cast<std::size_t>(std::find(lattice.begin(), lattice.end(), c) - lattice.begin()));
  return out;
}

ExtentSet extents_of(const ConceptList& list) {
  ExtentSet out;
  for (const FormalConcept& c : list)
    out.push_back(c.extent);
  return out;
}

bool naive_preserved(const testing::Matrix& m, const testing::Bools& kept, const ExtentSet& extents) {
  return std::all_of(extents.begin(), extents.end(), [&](const ObjSet& x) {
    return testing::naive_closure_under(m, kept, testing::to_bools(x)) == testing::to_bools(x);
  });
}

// ---------------------------------------------------------------------------

Outcome lattice_fixture() {
  Outcome o;
  const testing::RunningExample ex;
  const ConceptList lattice = enumerate_concepts(ex.ctx);
  o.require(lattice.size() == 11, std::to_string(lattice.size()) + " concepts, expected 11");
  o.require(same_members(lattice, ex.c), "concept set differs from the expected eleven");
  o.detail = o.pass ? "11 concepts, set-equal" : o.detail;
  return o;
}

Outcome classification_fixtures() {
  Outcome o;
  {
    const testing::RunningExample ex;
    const Classification l = classify(ex.ctx, enumerate_concepts(ex.ctx));
    o.require(same_members(l.members(ConceptClass::Core), ex.pick({1, 4, 7})), "running example: core");
    o.require(same_members(l.members(ConceptClass::RelativelyNecessary), ex.pick({2, 3, 5, 6, 8})),
              "running example: relatively necessary");
    o.require(l.label_of(ex.c[9]) == ConceptClass::Unnecessary, "running example: C9");
  }
  {
    const FormalContext ctx = testing::load_fixture("two_blocks.cxt");
    const Classification l = classify(ctx, enumerate_concepts(ctx));
    o.require(l.label_of(make_concept(ctx, {4, 5, 6}, {2, 3, 4, 5})) == ConceptClass::Core, "two blocks: C1");
    o.require(l.label_of(make_concept(ctx, {1, 2, 3}, {1, 2, 3})) == ConceptClass::Core, "two blocks: C2");
    o.require(l.label_of(make_concept(ctx, {1, 2, 3, 4, 5, 6}, {2, 3})) == ConceptClass::Unnecessary,
              "two blocks: C3");
  }
  {
    const FormalContext ctx = testing::load_fixture("side_covered.cxt");
    const Classification l = classify(ctx, enumerate_concepts(ctx));
    o.require(is_side_covered(ctx, make_concept(ctx, {1, 2, 3}, {1, 2, 3})), "side cover: C2 not side-covered");
    o.require(l.label_of(make_concept(ctx, {1, 2, 3, 7}, {1, 2})) == ConceptClass::RelativelyNecessary,
              "side cover: C4");
  }
  {
    const FormalContext ctx = testing::load_fixture("unnecessary_bound4.cxt");
    const Classification l = classify(ctx, enumerate_concepts(ctx));
    o.require(l.label_of(make_concept(ctx, {7}, {1, 2, 3})) == ConceptClass::Unnecessary,
              "unnecessary bound: C7");
  }
  if (o.pass)
    o.detail = "4 fixtures, all labels exact";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  auto check = [&](const FormalContext& ctx) {
    const ConceptList lattice = enumerate_concepts(ctx);
    if (classify(ctx, lattice).labels != classify_by_definition(ctx, lattice).labels)
      ++disagreements;
    ++checked;
  };
  for (const char* name : {"running_example.cxt", "two_blocks.cxt", "side_covered.cxt", "relative_bound5.cxt",
                           "unnecessary_bound4.cxt"})
    check(testing::load_fixture(name));

  std::mt19937_64 rng(20240101);
  std::uniform_int_distribution<std::size_t> rows(1, 6), cols(1, 5);
  std::size_t random = 0;
  while (random < 200) {
    const FormalContext ctx = random_context(rows(rng), cols(rng), 0.4, rng);
    if (enumerate_concepts(ctx).size() > 14)
      continue;
    check(ctx);
    ++random;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail = std::to_string(checked) + " contexts (5 fixtures + 200 random), " +
             std::to_string(disagreements) + " disagreements";
  return o;
}

Outcome bound_properties() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::size_t violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const FormalContext ctx = random_context(dim(rng), dim(rng), 0.4, rng);
    if (core_concepts(ctx, enumerate_concepts(ctx)).size() > std::min(ctx.object_count(), ctx.attribute_count()))
      ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " contexts with |core| > min(m,n)");

  const FormalContext relative = gen_bound_context(5, BoundKind::Relative);
  const std::size_t relnec =
      classify(relative, enumerate_concepts(relative)).count_nonempty(ConceptClass::RelativelyNecessary);
  o.require(relnec == 15, "relative-5 has " + std::to_string(relnec) + " relatively necessary, expected 15");

  const FormalContext unnecessary = gen_bound_context(4, BoundKind::Unnecessary);
  const std::size_t unnec =
      classify(unnecessary, enumerate_concepts(unnecessary)).count_nonempty(ConceptClass::Unnecessary);
  o.require(unnec >= 4, "unnecessary-4 has " + std::to_string(unnec) + " unnecessary, expected >= 4");
  if (o.pass)
    o.detail = "1000 contexts within min(m,n); relative-5 relnec=15; unnecessary-4 unnec=" +
               std::to_string(unnec);
  return o;
}

Outcome concept_reduction() {
  Outcome o;
  const testing::RunningExample ex;
  const ConceptList lattice = enumerate_concepts(ex.ctx);
  // Visit in the fixture's C0..C10 numbering.
  const std::vector<std::size_t> order = positions(lattice, ex.c);
  const ConceptList kept = greedy_reduction(ex.ctx, lattice, order);
  o.require(same_members(kept, ex.pick({1, 4, 5, 6, 7, 8})), "greedy result is not {C1,C4,C5,C6,C7,C8}");
  o.require(is_reduction_set(ex.ctx, ex.pick({1, 2, 3, 4, 7})), "{C1,C2,C3,C4,C7} rejected");
  o.require(is_reduction_set(ex.ctx, ex.pick({1, 4, 5, 6, 7, 8})), "{C1,C4,C5,C6,C7,C8} rejected");
  if (o.pass)
    o.detail = "greedy C0..C10 -> {C1,C4,C5,C6,C7,C8}; both reduction sets accepted";
  return o;
}

Outcome bit_parallel() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> objects(1, 300), attributes(1, 12);
  std::size_t disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    const FormalContext ctx = random_context(objects(rng), attributes(rng), 0.6, rng);
    const testing::Matrix m = testing::to_matrix(ctx);
    const std::size_t n = ctx.attribute_count();
    const ColumnStore store(ctx);
    const ExtentSet extents = random_closed_extents(ctx, 4, 2, rng);

    for (const ObjSet& x : extents) {
      const testing::Bools xb = testing::to_bools(x);
      for (std::size_t q = 0; q < n; ++q) {
        const testing::Bools col = testing::to_bools(ctx.column(q));
        if (column_contains_extent(store, q, x) != testing::naive_subset(xb, col))
          ++disagreements;
        if (testing::to_bools(x & ctx.column(q)) != testing::naive_and(xb, col))
          ++disagreements;
      }
    }
    const testing::Bools all(n, true);
    for (std::size_t q = 0; q < n; ++q) {
      testing::Bools kept = all;
      kept[q] = false;
      if (is_column_removable(store, q, extents).removable != naive_preserved(m, kept, extents))
        ++disagreements;
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.detail = "500 cases, " + std::to_string(kWordBits) + "-bit words, " + std::to_string(disagreements) +
             " disagreements";
  return o;
}

Outcome attr_reduct_contract() {
  Outcome o;
  std::mt19937_64 rng(31415);
  std::uniform_int_distribution<std::size_t> objects(1, 14), attributes(1, 10);
  std::size_t violations = 0;
  std::size_t removed = 0;
  for (int i = 0; i < 200; ++i) {
    const FormalContext ctx = random_context(objects(rng), attributes(rng), 0.4, rng);
    const ExtentSet extents = extents_of(enumerate_concepts(ctx));
    const testing::Matrix m = testing::to_matrix(ctx);
    const ReductReport r = greedy_attr_reduce(ColumnStore(ctx), extents, static_cast<std::size_t>(i) % ctx.attribute_count());
    removed += r.removed.count();
    const testing::Bools kept = testing::to_bools(r.kept);
    if (!naive_preserved(m, kept, extents))
      ++violations;
    r.kept.for_each([&](std::size_t q) {
      testing::Bools fewer = kept;
      fewer[q] = false;
      if (naive_preserved(m, fewer, extents))
        ++violations;
    });
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail = "200 contexts, " + std::to_string(removed) + " columns removed in total, " +
             std::to_string(violations) + " violations";
  return o;
}

// Times one greedy pass and checks every extent is still closed afterwards.
double timed_reduction(const FormalContext& ctx, const ExtentSet& extents, Outcome& o, std::size_t& removed) {
  const auto start = std::chrono::steady_clock::now();
  const ReductReport r = greedy_attr_reduce(ColumnStore(ctx), extents, 0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  removed = r.removed.count();
  const FormalContext reduced = reduced_context(ctx, r.kept);
  for (const ObjSet& x : extents)
    if (close_objects(reduced, x) != x) {
      o.fail("an extent is not closed in the reduced context");
      break;
    }
  o.require(seconds < 10.0, "greedy_attr_reduce took " + std::to_string(seconds) + " s");
  return seconds;
}

Outcome performance_smoke() {
  Outcome o;
  std::mt19937_64 rng(8124);
  const FormalContext ctx = random_context(8124, 115, 0.19, rng);

  // Extents generated by 1 to 3 random columns: every column ends up blocked.
  const ExtentSet extents = random_closed_extents(ctx, 512, 3, rng);
  std::size_t removed = 0;
  const double seconds = timed_reduction(ctx, extents, o, removed);

  // Generators restricted to ten columns, so most columns are removable and
  // each of those checks visits all 512 extents.
  ExtentSet narrow;
  std::uniform_int_distribution<std::size_t> column(0, 9), size(1, 3);
  for (int i = 0; i < 512; ++i) {
    AttrSet b(ctx.attribute_count());
    const std::size_t k = size(rng);
    while (b.count() < k)
      b.set(column(rng));
    narrow.push_back(derive_attrs(ctx, b));
  }
  std::size_t narrow_removed = 0;
  const double narrow_seconds = timed_reduction(ctx, narrow, o, narrow_removed);

  char buffer[200];
  std::snprintf(buffer, sizeof buffer,
                "8124x115, 512 extents: %zu removed in %.3f s; narrow generators: %zu removed in %.3f s",
                removed, seconds, narrow_removed, narrow_seconds);
  if (o.pass)
    o.detail = buffer;
  return o;
}

Outcome format_fidelity() {
  Outcome o;
  std::size_t files = 0;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(FCA_FIXTURE_DIR))
    if (entry.path().extension() == ".cxt")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    const std::string text = read_text_file(path);
    o.require(serialize_cxt(parse_cxt(text)) == text, path.filename().string() + " does not round-trip");
    ++files;
  }
  o.require(files > 0, "no fixtures found");
  if (o.pass)
    o.detail = std::to_string(files) + " fixtures byte-exact";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "lattice fixture", 1.0, lattice_fixture},
      {2, "classification fixtures", 1.0, classification_fixtures},
      {3, "oracle equivalence", 60.0, oracle_equivalence},
      {4, "bound properties", 30.0, bound_properties},
      {5, "concept reduction", 1.0, concept_reduction},
      {6, "bit-parallel correctness", 30.0, bit_parallel},
      {7, "attribute-reduct contract", 60.0, attr_reduct_contract},
      {8, "performance smoke", 10.0, performance_smoke},
      {9, "format fidelity", 1.0, format_fidelity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds)
      outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    if (!outcome.pass)
      ++failures;
    std::printf("%s [%d] %-26s %7.3f s  %s\n", outcome.pass ? "PASS" : "FAIL", c.number, c.name, seconds,
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed (%d-bit words)\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), static_cast<int>(kWordBits));
  return failures == 0 ? 0 : 1;
}
