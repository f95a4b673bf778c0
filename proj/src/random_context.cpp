#include "fca/random_context.hpp"

#include <algorithm>
#include <stdexcept>

namespace fca {

FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::mt19937_64& rng) {
  std::bernoulli_distribution cell(density);
  std::vector<AttrSet> rows(objects, AttrSet(attributes));
  for (AttrSet& row : rows)
    for (std::size_t a = 0; a < attributes; ++a)
      if (cell(rng))
        row.set(a);
  return FormalContext::from_rows(attributes, std::move(rows));
}

FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_context(objects, attributes, density, rng);
}

ExtentSet random_closed_extents(const FormalContext& ctx, std::size_t count,
                                std::size_t max_attributes, std::mt19937_64& rng) {
  const std::size_t n = ctx.attribute_count();
  if (n == 0 || max_attributes == 0)
    throw std::invalid_argument("need at least one attribute to draw extents from");
  std::uniform_int_distribution<std::size_t> size_dist(1, std::min(max_attributes, n));
  std::uniform_int_distribution<std::size_t> column_dist(0, n - 1);
  ExtentSet out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    AttrSet b(n);
    const std::size_t size = size_dist(rng);
    while (b.count() < size)
      b.set(column_dist(rng));
    out.push_back(derive_attrs(ctx, b));
  }
  return out;
}

}  // namespace fca
