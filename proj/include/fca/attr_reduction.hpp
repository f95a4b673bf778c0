#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// Working copy of a context's columns. Removing a column zeroes it and
// clears it from the active set; indices of the other columns never move.
class ColumnStore {
 public:
  explicit ColumnStore(const FormalContext& ctx);

  std::size_t object_count() const { return objects_; }
  std::size_t attribute_count() const { return cols_.size(); }

  const ObjSet& column(std::size_t q) const { return cols_.at(q); }
  const AttrSet& active() const { return active_; }
  bool is_active(std::size_t q) const { return active_.test(q); }

  void remove(std::size_t q);

 private:
  std::size_t objects_;
  std::vector<ObjSet> cols_;
  AttrSet active_;
};

// Object sets whose closedness must survive the reduction.
using ExtentSet = std::vector<ObjSet>;

// X is a subset of column q, tested one word at a time.
bool column_contains_extent(const ColumnStore& store, std::size_t q, const ObjSet& extent);

// Active columns containing X, i.e. the intent of X in the reduced context.
// Once columns are gone it can differ from the original intent of X.
AttrSet induced_intension(const ColumnStore& store, const ObjSet& extent);

// Intersection of the named columns; the full object set for none.
// Throws std::invalid_argument if an inactive column is named.
ObjSet closure_extent(const ColumnStore& store, const AttrSet& columns);

struct Removability {
  bool removable = true;
  // First extent whose closure breaks without the column.
  std::optional<std::size_t> blocking_extent;

  explicit operator bool() const { return removable; }
};

// Without column q, every X in `extents` still equals the intersection of
// the active columns containing it.
Removability is_column_removable(const ColumnStore& store, std::size_t q, const ExtentSet& extents);

// Throws NotClosedError naming the first extent that is not closed in the
// store's current context.
void require_closed_extents(const ColumnStore& store, const ExtentSet& extents);

struct ColumnAudit {
  std::size_t column = 0;
  std::size_t step = 0;  // position in the visiting order
  bool removed = false;
  std::optional<std::size_t> blocking_extent;
};

struct ReductReport {
  std::size_t start = 0;
  AttrSet removed;
  AttrSet kept;
  std::vector<ColumnAudit> audit;  // in visiting order
};

// Visits columns start, start+1, ..., wrapping around, and zeroes each one
// that is removable at that moment. The kept set preserves every extent and
// is irredundant: a column that was blocked stays blocked as more columns
// disappear. `store` is taken by value and is the context the extents must
// be closed in.
ReductReport greedy_attr_reduce(ColumnStore store, const ExtentSet& extents, std::size_t start);

// greedy_attr_reduce from every start column, deduplicated by kept set and
// ordered by first start producing each.
std::vector<ReductReport> rotation_reducts(const ColumnStore& store, const ExtentSet& extents);

// ctx restricted to the kept columns, names carried along.
FormalContext reduced_context(const FormalContext& ctx, const AttrSet& kept);

// {"start":s,"removed":[...],"kept":[...],"audit":[{"column":q,"step":k,
//  "removed":bool,"blocking_extent":i|null},...]}
std::string report_json(const ReductReport& report);

// One extent per line: either a JSON array of object indices or an object
// with an "extent" array (the format `concepts` writes). Blank lines are
// skipped. Throws ParseError on malformed lines or out-of-range indices.
ExtentSet parse_extents(std::string_view text, std::size_t objects);

}  // namespace fca
