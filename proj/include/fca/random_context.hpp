#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "fca/attr_reduction.hpp"
#include "fca/context.hpp"

namespace fca {

// Independent Bernoulli(density) incidences.
FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::mt19937_64& rng);
FormalContext random_context(std::size_t objects, std::size_t attributes, double density,
                             std::uint64_t seed);

// `count` closed extents B* for random attribute sets B of 1..max_attributes
// columns. Extents may repeat.
ExtentSet random_closed_extents(const FormalContext& ctx, std::size_t count,
                                std::size_t max_attributes, std::mt19937_64& rng);

}  // namespace fca
