#include "fca/attr_reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "fca/error.hpp"

namespace fca {

namespace {

void check_column(const ColumnStore& store, std::size_t q) {
  if (q >= store.attribute_count())
    throw std::out_of_range("column " + std::to_string(q) + " out of range (" +
                            std::to_string(store.attribute_count()) + " columns)");
}

void check_extent(const ColumnStore& store, const ObjSet& extent) {
  if (extent.size() != store.object_count())
    throw std::invalid_argument("extent has length " + std::to_string(extent.size()) +
                                ", store has " + std::to_string(store.object_count()) +
                                " objects");
}

}  // namespace

ColumnStore::ColumnStore(const FormalContext& ctx)
    : objects_(ctx.object_count()), cols_(ctx.columns()), active_(ctx.all_attributes()) {}

void ColumnStore::remove(std::size_t q) {
  check_column(*this, q);
  cols_[q].reset_all();
  active_.reset(q);
}

bool column_contains_extent(const ColumnStore& store, std::size_t q, const ObjSet& extent) {
  check_column(store, q);
  check_extent(store, extent);
  const auto column = store.column(q).words();
  const auto x = extent.words();
  for (std::size_t k = x.size(); k-- > 0;)
    if ((column[k] & x[k]) != x[k])
      return false;
  return true;
}

AttrSet induced_intension(const ColumnStore& store, const ObjSet& extent) {
  check_extent(store, extent);
  AttrSet row(store.attribute_count());
  store.active().for_each([&](std::size_t q) {
    if (column_contains_extent(store, q, extent))
      row.set(q);
  });
  return row;
}

ObjSet closure_extent(const ColumnStore& store, const AttrSet& columns) {
  if (columns.size() != store.attribute_count())
    throw std::invalid_argument("column set has length " + std::to_string(columns.size()) +
                                ", store has " + std::to_string(store.attribute_count()) +
                                " columns");
  if (!columns.is_subset_of(store.active()))
    throw std::invalid_argument("column set names a removed column");
  ObjSet out = ObjSet::full(store.object_count());
  columns.for_each([&](std::size_t q) { out &= store.column(q); });
  return out;
}

Removability is_column_removable(const ColumnStore& store, std::size_t q,
                                 const ExtentSet& extents) {
  check_column(store, q);
  if (!store.is_active(q))
    throw std::invalid_argument("column " + std::to_string(q) + " is already removed");
  for (std::size_t i = 0; i < extents.size(); ++i) {
    AttrSet row = induced_intension(store, extents[i]);
    row.reset(q);
    if (closure_extent(store, row) != extents[i])
      return {false, i};
  }
  return {};
}

void require_closed_extents(const ColumnStore& store, const ExtentSet& extents) {
  for (std::size_t i = 0; i < extents.size(); ++i) {
    check_extent(store, extents[i]);
    if (closure_extent(store, induced_intension(store, extents[i])) != extents[i])
      throw NotClosedError(i, "extent " + std::to_string(i) + " " + to_string(extents[i]) +
                                  " is not closed in the context");
  }
}

ReductReport greedy_attr_reduce(ColumnStore store, const ExtentSet& extents, std::size_t start) {
  const std::size_t n = store.attribute_count();
  if (start >= n)
    throw std::out_of_range("start column " + std::to_string(start) + " out of range (" +
                            std::to_string(n) + " columns)");
  require_closed_extents(store, extents);

  ReductReport report;
  report.start = start;
  report.removed = AttrSet(n);
  report.audit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t q = (start + step) % n;
    const Removability r = is_column_removable(store, q, extents);
    if (r.removable) {
      store.remove(q);
      report.removed.set(q);
    }
    report.audit.push_back({q, step, r.removable, r.blocking_extent});
  }
  report.kept = report.removed.complement();
  return report;
}

std::vector<ReductReport> rotation_reducts(const ColumnStore& store, const ExtentSet& extents) {
  std::vector<ReductReport> out;
  for (std::size_t start = 0; start < store.attribute_count(); ++start) {
    ReductReport r = greedy_attr_reduce(store, extents, start);
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const ReductReport& o) { return o.kept == r.kept; });
    if (!seen)
      out.push_back(std::move(r));
  }
  return out;
}

FormalContext reduced_context(const FormalContext& ctx, const AttrSet& kept) {
  if (kept.size() != ctx.attribute_count())
    throw std::invalid_argument("kept set does not match the context's attribute count");
  const std::vector<std::size_t> columns = kept.indices();
  std::vector<AttrSet> rows;
  rows.reserve(ctx.object_count());
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    AttrSet row(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      row.assign(j, ctx.incident(g, columns[j]));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> names;
  for (std::size_t q : columns)
    names.push_back(ctx.attribute_names()[q]);
  FormalContext out =
      FormalContext::from_rows(columns.size(), std::move(rows), ctx.object_names(), std::move(names));
  out.set_name(ctx.name());
  return out;
}

std::string report_json(const ReductReport& report) {
  nlohmann::json audit = nlohmann::json::array();
  for (const ColumnAudit& a : report.audit) {
    nlohmann::json entry;
    entry["column"] = a.column;
    entry["step"] = a.step;
    entry["removed"] = a.removed;
    entry["blocking_extent"] =
        a.blocking_extent ? nlohmann::json(*a.blocking_extent) : nlohmann::json(nullptr);
    audit.push_back(std::move(entry));
  }
  nlohmann::json out;
  out["start"] = report.start;
  out["removed"] = report.removed.indices();
  out["kept"] = report.kept.indices();
  out["audit"] = std::move(audit);
  return out.dump();
}

ExtentSet parse_extents(std::string_view text, std::size_t objects) {
  ExtentSet out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos)
      continue;

    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("extent"))
      j = j["extent"];
    if (!j.is_array())
      throw ParseError(ParseError::Kind::MalformedHeader, line_no,
                       "expected a JSON array of object indices");
    ObjSet extent(objects);
    for (const auto& v : j) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= objects)
        throw ParseError(ParseError::Kind::IllegalCell, line_no,
                         "object index " + v.dump() + " is not in [0, " + std::to_string(objects) +
                             ")");
      extent.set(v.get<std::size_t>());
    }
    out.push_back(std::move(extent));
  }
  return out;
}

}  // namespace fca
