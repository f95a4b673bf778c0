#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/io.hpp"

namespace fca::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(FCA_FIXTURE_DIR) / name;
}

inline FormalContext load_fixture(const std::string& name) { return load_context(fixture_path(name)); }

// Fixtures below name objects 1.. and attributes a1.., and the helpers take
// those 1-based numbers.

inline ObjSet objs(const FormalContext& ctx, std::initializer_list<std::size_t> one_based) {
  ObjSet out(ctx.object_count());
  for (std::size_t g : one_based)
    out.set(g - 1);
  return out;
}

inline AttrSet attrs(const FormalContext& ctx, std::initializer_list<std::size_t> one_based) {
  AttrSet out(ctx.attribute_count());
  for (std::size_t a : one_based)
    out.set(a - 1);
  return out;
}

inline FormalConcept make_concept(const FormalContext& ctx, std::initializer_list<std::size_t> extent,
                                  std::initializer_list<std::size_t> intent) {
  return {objs(ctx, extent), attrs(ctx, intent)};
}

// The 7x5 running example and its eleven concepts, numbered C0..C10 from
// the top down as usually drawn.
struct RunningExample {
  FormalContext ctx = load_fixture("running_example.cxt");
  std::vector<FormalConcept> c = {
      make_concept(ctx, {1, 2, 3, 4, 5, 6, 7}, {}),  // C0
      make_concept(ctx, {4, 5, 6}, {5}),              // C1
      make_concept(ctx, {1, 6, 7}, {3}),              // C2
      make_concept(ctx, {1, 2, 7}, {2}),              // C3
      make_concept(ctx, {2, 3, 7}, {1}),              // C4
      make_concept(ctx, {2, 7}, {1, 2}),              // C5
      make_concept(ctx, {1, 7}, {2, 3}),              // C6
      make_concept(ctx, {5, 6}, {4, 5}),              // C7
      make_concept(ctx, {6}, {3, 4, 5}),              // C8
      make_concept(ctx, {7}, {1, 2, 3}),              // C9
      make_concept(ctx, {}, {1, 2, 3, 4, 5}),         // C10
  };

  ConceptList pick(std::initializer_list<std::size_t> numbers) const {
    ConceptList out;
    for (std::size_t i : numbers)
      out.push_back(c[i]);
    return out;
  }
};

}  // namespace fca::testing
