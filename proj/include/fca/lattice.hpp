#pragma once

#include <cstddef>
#include <string>

#include "fca/context.hpp"

namespace fca {

struct EnumerateOptions {
  // Enumeration stops with ResourceLimitError once more concepts than this
  // have been found.
  std::size_t max_concepts = 1'000'000;
};

// All concepts of `ctx` in canonical order: ascending by extent read as an
// unsigned integer (object g has weight 2^g). Top (G, G*) and bottom
// (M*, M) are always present. Uses an iterative Close-by-One search over the
// packed column store.
ConceptList enumerate_concepts(const FormalContext& ctx, const EnumerateOptions& options = {});

bool canonical_less(const FormalConcept& a, const FormalConcept& b);
void sort_canonical(ConceptList& concepts);

// c1 <= c2 iff extent(c1) is a subset of extent(c2).
bool leq(const FormalConcept& c1, const FormalConcept& c2);

// (X1 & X2, (X1 & X2)*)
FormalConcept meet(const FormalContext& ctx, const FormalConcept& c1, const FormalConcept& c2);
// ((B1 & B2)*, B1 & B2)
FormalConcept join(const FormalContext& ctx, const FormalConcept& c1, const FormalConcept& c2);

// {"extent":[...],"intent":[...]} with 0-based indices, no trailing newline.
std::string to_json_line(const FormalConcept& c);
// One JSON line per concept.
std::string to_json_lines(const ConceptList& concepts);
// "{1,6,7} / {a3}" using the context's names.
std::string to_text(const FormalContext& ctx, const FormalConcept& c);

}  // namespace fca
