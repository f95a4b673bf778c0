#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// Role of a concept with respect to the reduction sets of its lattice: in all
// of them (core), in some but not all, or in none.
enum class ConceptClass { Core, RelativelyNecessary, Unnecessary };

std::string_view to_string(ConceptClass c);

// count(g, a) = number of concepts in a list whose rectangle holds (g, a).
class CoverCounter {
 public:
  CoverCounter(std::size_t objects, std::size_t attributes);
  CoverCounter(const FormalContext& ctx, const ConceptList& concepts);

  std::size_t object_count() const { return objects_; }
  std::size_t attribute_count() const { return attributes_; }
  std::uint32_t count(std::size_t g, std::size_t a) const { return counts_[g * attributes_ + a]; }

  void add(const FormalConcept& c);
  void remove(const FormalConcept& c);

  // Some cell of c is covered exactly once, i.e. only by c itself when c is
  // in the counted list.
  bool has_unique_cell(const FormalConcept& c) const;
  // Every incidence of ctx has a nonzero count.
  bool covers(const FormalContext& ctx) const;

 private:
  std::size_t objects_;
  std::size_t attributes_;
  std::vector<std::uint32_t> counts_;
};

// The union of the rectangles of `concepts` is exactly the relation of ctx.
// Throws std::invalid_argument if a member is not a concept of ctx.
bool is_consistent(const FormalContext& ctx, const ConceptList& concepts);
// Consistent, and dropping any single member breaks consistency.
bool is_reduction_set(const FormalContext& ctx, const ConceptList& concepts);

// Throws std::invalid_argument unless `lattice` holds exactly the concepts
// of ctx (in any order, without duplicates).
void require_full_lattice(const FormalContext& ctx, const ConceptList& lattice);

// Concepts owning a cell no other concept covers. These are exactly the
// concepts present in every reduction set: a concept without such a cell
// can be dropped from the full lattice while keeping it consistent.
ConceptList core_concepts(const FormalContext& ctx, const ConceptList& lattice);

// The intent is the union of g* over the objects g outside the extent with
// g* inside the intent, or dually for the extent. Such concepts belong to no
// reduction set. Using every eligible generator suffices: any witnessing
// subfamily has a union inside this maximal one.
bool is_side_covered(const FormalContext& ctx, const FormalConcept& c);

struct Classification {
  ConceptList concepts;             // the lattice, in the order given
  std::vector<ConceptClass> labels;  // labels[i] belongs to concepts[i]

  ConceptClass label_of(const FormalConcept& c) const;
  ConceptList members(ConceptClass c) const;
  std::size_t count(ConceptClass c) const;
  // Count restricted to concepts with a nonempty rectangle.
  std::size_t count_nonempty(ConceptClass c) const;
};

// Polynomial classification. A non-core concept (A, B) is relatively
// necessary iff the object concepts of G \ A together with the attribute
// concepts of M \ B fail to cover the relation. Concepts with an empty
// extent or intent are labelled Unnecessary.
Classification classify(const FormalContext& ctx, const ConceptList& lattice);

// Cross-check path: a non-core concept is unnecessary iff each of its cells
// lies in some core or side-covered concept.
Classification classify_by_side_cover(const FormalContext& ctx, const ConceptList& lattice);

struct OracleOptions {
  // Limit on the number of nonempty-rectangle concepts searched; the
  // search is exponential in this number.
  std::size_t max_concepts = 16;
};

// Every reduction set of the lattice, found by exhaustive subset search.
// Empty-rectangle concepts never belong to a reduction set and are not
// searched. Throws ResourceLimitError past the cap.
std::vector<ConceptList> reduction_family(const FormalContext& ctx, const ConceptList& lattice,
                                          const OracleOptions& options = {});

// Brute-force classification straight from the family of reduction sets:
// core = intersection, relatively necessary = union minus intersection,
// unnecessary = the rest.
Classification classify_by_definition(const FormalContext& ctx, const ConceptList& lattice,
                                      const OracleOptions& options = {});

// Starts from the whole lattice and visits concepts in `order` (a
// permutation of lattice indices), dropping each one whose removal keeps the
// set consistent. The survivors, in lattice order, form a reduction set.
ConceptList greedy_reduction(const FormalContext& ctx, const ConceptList& lattice,
                             std::span<const std::size_t> order);
// Visits the lattice in its own order.
ConceptList greedy_reduction(const FormalContext& ctx, const ConceptList& lattice);

enum class BoundKind { Relative, Unnecessary };

// Extremal contexts over n attributes (2 <= n <= 20). Relative: one row per
// floor(n/2)-subset of the attributes. Unnecessary: those rows followed by
// one row per (floor(n/2)+1)-subset. Subsets in lexicographic order; objects
// are named 1.., attributes a1...
FormalContext gen_bound_context(std::size_t n, BoundKind kind);

// {"core":[...],"relatively_necessary":[...],"unnecessary":[...]}, each
// concept as {"extent":[...],"intent":[...]}.
std::string classification_json(const Classification& c);
// class<TAB>extent<TAB>intent with comma-separated indices, plus header.
std::string classification_tsv(const Classification& c);

}  // namespace fca
