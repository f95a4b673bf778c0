// fca: batch front end for concept enumeration, concept classification,
// concept reduction and attribute reduction.
//
// Exit status: 0 success, 2 input error, 3 resource cap, 4 non-closed extent.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fca/attr_reduction.hpp"
#include "fca/concept_reduction.hpp"
#include "fca/error.hpp"
#include "fca/io.hpp"
#include "fca/lattice.hpp"
#include "fca/random_context.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitContract = 4;

struct InputFlags {
  std::string path;
  std::string format = "auto";
  bool csv_no_header = false;
  bool csv_no_names = false;
  char delimiter = ',';
};

struct CommonFlags {
  std::string format = "json";
  std::size_t cap = fca::EnumerateOptions{}.max_concepts;
  bool time = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void report(const char* what) const {
    if (enabled_)
      std::fprintf(stderr, "%s: %.3f s\n", what, seconds());
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

void add_input(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("input", in.path, "Context file (.cxt or .csv)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--input-format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "cxt", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--csv-no-header", in.csv_no_header, "CSV has no attribute-name row");
  cmd->add_flag("--csv-no-names", in.csv_no_names, "CSV has no object-name column");
  cmd->add_option("--delimiter", in.delimiter, "CSV cell delimiter")->capture_default_str();
}

void add_common(CLI::App* cmd, CommonFlags& common, std::vector<std::string> formats) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--cap", common.cap, "Maximum number of concepts to enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--time", common.time, "Print elapsed time to stderr");
}

fca::FormalContext load(const InputFlags& in) {
  std::optional<fca::ContextFormat> format;
  if (in.format == "cxt")
    format = fca::ContextFormat::Cxt;
  else if (in.format == "csv")
    format = fca::ContextFormat::Csv;
  const fca::CsvOptions csv{!in.csv_no_header, !in.csv_no_names, in.delimiter};
  return fca::load_context(in.path, format, csv);
}

fca::ConceptList enumerate(const fca::FormalContext& ctx, const CommonFlags& common) {
  const Stopwatch watch(common.time);
  fca::ConceptList lattice = fca::enumerate_concepts(ctx, {common.cap});
  watch.report("enumerate");
  return lattice;
}

std::string join_indices(const fca::BitVec& v) {
  std::string out;
  v.for_each([&](std::size_t i) {
    if (!out.empty())
      out += ',';
    out += std::to_string(i);
  });
  return out;
}

void write_concepts(const fca::FormalContext& ctx, const fca::ConceptList& list,
                    const std::string& format) {
  if (format == "json") {
    std::cout << fca::to_json_lines(list);
  } else if (format == "tsv") {
    std::cout << "extent\tintent\n";
    for (const fca::FormalConcept& c : list)
      std::cout << join_indices(c.extent) << '\t' << join_indices(c.intent) << '\n';
  } else {
    for (const fca::FormalConcept& c : list)
      std::cout << fca::to_text(ctx, c) << '\n';
  }
}

std::string names_of(const fca::FormalContext& ctx, const fca::AttrSet& columns) {
  std::string out;
  columns.for_each([&](std::size_t q) {
    if (!out.empty())
      out += ' ';
    out += ctx.attribute_names()[q];
  });
  return out;
}

void write_reports(const fca::FormalContext& ctx, const std::vector<fca::ReductReport>& reports,
                   const std::string& format) {
  for (const fca::ReductReport& r : reports) {
    if (format == "json") {
      std::cout << fca::report_json(r) << '\n';
    } else if (format == "tsv") {
      std::cout << "start\tcolumn\tstep\tremoved\tblocking_extent\n";
      for (const fca::ColumnAudit& a : r.audit)
        std::cout << r.start << '\t' << a.column << '\t' << a.step << '\t' << (a.removed ? 1 : 0)
                  << '\t' << (a.blocking_extent ? std::to_string(*a.blocking_extent) : "")
                  << '\n';
    } else {
      std::cout << "start: " << ctx.attribute_names()[r.start] << '\n'
                << "removed: " << names_of(ctx, r.removed) << '\n'
                << "kept: " << names_of(ctx, r.kept) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Subcommands

int run_concepts(const InputFlags& in, const CommonFlags& common) {
  const fca::FormalContext ctx = load(in);
  const fca::ConceptList lattice = enumerate(ctx, common);
  write_concepts(ctx, lattice, common.format);
  std::cerr << lattice.size() << " concepts\n";
  return 0;
}

int run_classify(const InputFlags& in, const CommonFlags& common) {
  const fca::FormalContext ctx = load(in);
  const fca::ConceptList lattice = enumerate(ctx, common);
  const Stopwatch watch(common.time);
  const fca::Classification labels = fca::classify(ctx, lattice);
  watch.report("classify");

  if (common.format == "json") {
    std::cout << fca::classification_json(labels) << '\n';
  } else if (common.format == "tsv") {
    std::cout << fca::classification_tsv(labels);
  } else {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      std::cout << fca::to_string(labels.labels[i]) << '\t' << fca::to_text(ctx, lattice[i]) << '\n';
  }
  std::cerr << "core=" << labels.count(fca::ConceptClass::Core)
            << " relnec=" << labels.count(fca::ConceptClass::RelativelyNecessary)
            << " unnec=" << labels.count(fca::ConceptClass::Unnecessary) << '\n';
  return 0;
}

int run_reduce_concepts(const InputFlags& in, const CommonFlags& common,
                        const std::optional<std::uint64_t>& seed) {
  const fca::FormalContext ctx = load(in);
  const fca::ConceptList lattice = enumerate(ctx, common);
  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  const Stopwatch watch(common.time);
  const fca::ConceptList kept = fca::greedy_reduction(ctx, lattice, order);
  watch.report("reduce");
  write_concepts(ctx, kept, common.format);
  std::cerr << "kept " << kept.size() << " of " << lattice.size() << " concepts\n";
  return 0;
}

struct AttrFlags {
  std::string extents_path;
  std::optional<std::size_t> first_k;
  std::size_t start = 0;
  bool all_starts = false;
  std::string output;
};

int run_reduce_attrs(const InputFlags& in, const CommonFlags& common, const AttrFlags& flags) {
  const fca::FormalContext ctx = load(in);
  fca::ExtentSet extents;
  if (!flags.extents_path.empty()) {
    extents = fca::parse_extents(fca::read_text_file(flags.extents_path), ctx.object_count());
  } else {
    // First K concepts of the canonical order, or all of them.
    const fca::ConceptList lattice = enumerate(ctx, common);
    const std::size_t k = std::min(lattice.size(), flags.first_k.value_or(lattice.size()));
    for (std::size_t i = 0; i < k; ++i)
      extents.push_back(lattice[i].extent);
  }
  if (ctx.attribute_count() == 0)
    throw std::invalid_argument("context has no attributes to reduce");

  const fca::ColumnStore store(ctx);
  const Stopwatch watch(common.time);
  std::vector<fca::ReductReport> reports;
  if (flags.all_starts)
    reports = fca::rotation_reducts(store, extents);
  else
    reports.push_back(fca::greedy_attr_reduce(store, extents, flags.start));
  watch.report("reduce");

  write_reports(ctx, reports, common.format);
  for (const fca::ReductReport& r : reports)
    std::cerr << "start " << r.start << ": removed " << r.removed.count() << " of "
              << ctx.attribute_count() << " columns over " << extents.size() << " extents\n";
  if (!flags.output.empty())
    fca::write_text_file(flags.output, fca::serialize_cxt(fca::reduced_context(ctx, reports[0].kept)));
  return 0;
}

int run_gen(std::size_t n, const std::string& kind, const std::string& output) {
  const fca::FormalContext ctx = fca::gen_bound_context(
      n, kind == "relative" ? fca::BoundKind::Relative : fca::BoundKind::Unnecessary);
  const std::string text = fca::serialize_cxt(ctx);
  if (output.empty())
    std::cout << text;
  else
    fca::write_text_file(output, text);
  return 0;
}

struct BenchFlags {
  std::size_t objects = 8124;
  std::size_t attributes = 115;
  double density = 0.19;
  std::size_t extents = 512;
  std::size_t max_attributes = 3;
  std::uint64_t seed = 1;
  std::size_t start = 0;
};

int run_bench(const BenchFlags& flags) {
  std::mt19937_64 rng(flags.seed);
  const fca::FormalContext ctx =
      fca::random_context(flags.objects, flags.attributes, flags.density, rng);
  const fca::ExtentSet extents =
      fca::random_closed_extents(ctx, flags.extents, flags.max_attributes, rng);

  const Stopwatch watch(true);
  const fca::ReductReport report = fca::greedy_attr_reduce(fca::ColumnStore(ctx), extents, flags.start);
  const double seconds = watch.seconds();

  std::cout << fca::report_json(report) << '\n';
  std::fprintf(stderr, "%zux%zu context, %zu extents: removed %zu columns in %.3f s\n",
               ctx.object_count(), ctx.attribute_count(), extents.size(), report.removed.count(),
               seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formal concept analysis: concepts, reductions and attribute reducts"};
  app.require_subcommand(1);

  InputFlags in;
  CommonFlags common;
  std::function<int()> action;

  CLI::App* concepts = app.add_subcommand("concepts", "Enumerate all concepts in canonical order");
  add_input(concepts, in);
  add_common(concepts, common, {"json", "tsv", "text"});
  concepts->callback([&] { action = [&] { return run_concepts(in, common); }; });

  CLI::App* classify = app.add_subcommand("classify", "Label concepts core, relatively necessary or unnecessary");
  add_input(classify, in);
  add_common(classify, common, {"json", "tsv", "text"});
  classify->callback([&] { action = [&] { return run_classify(in, common); }; });

  std::optional<std::uint64_t> order_seed;
  CLI::App* reduce_concepts =
      app.add_subcommand("reduce-concepts", "Greedy reduction of the concept set");
  add_input(reduce_concepts, in);
  add_common(reduce_concepts, common, {"json", "tsv", "text"});
  reduce_concepts->add_option("--seed", order_seed, "Shuffle the visiting order with this seed");
  reduce_concepts->callback([&] { action = [&] { return run_reduce_concepts(in, common, order_seed); }; });

  AttrFlags attr;
  CLI::App* reduce_attrs =
      app.add_subcommand("reduce-attrs", "Remove columns while keeping the given extents closed");
  add_input(reduce_attrs, in);
  add_common(reduce_attrs, common, {"json", "tsv", "text"});
  CLI::Option* extents_opt =
      reduce_attrs->add_option("--extents", attr.extents_path, "Extent file, one JSON array per line")
          ->check(CLI::ExistingFile);
  reduce_attrs
      ->add_option("--first-k", attr.first_k,
                   "Use the first K concepts of the canonical order (default: all)")
      ->excludes(extents_opt);
  CLI::Option* start_opt =
      reduce_attrs->add_option("--start", attr.start, "First column visited")->capture_default_str();
  CLI::Option* all_opt =
      reduce_attrs->add_flag("--all-starts", attr.all_starts, "Run from every start column")->excludes(start_opt);
  reduce_attrs->add_option("-o,--output", attr.output, "Write the reduced context (.cxt)")->excludes(all_opt);
  reduce_attrs->callback([&] { action = [&] { return run_reduce_attrs(in, common, attr); }; });

  std::size_t gen_n = 0;
  std::string gen_kind;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "Write an extremal bound context");
  gen->add_option("n", gen_n, "Number of attributes (2..20)")->required();
  gen->add_option("kind", gen_kind, "Context kind")->required()->check(CLI::IsMember({"relative", "unnecessary"}));
  gen->add_option("-o,--output", gen_output, "Output file (default stdout)");
  gen->callback([&] { action = [&] { return run_gen(gen_n, gen_kind, gen_output); }; });

  BenchFlags bench_flags;
  CLI::App* bench = app.add_subcommand("bench", "Time attribute reduction on a seeded random context");
  bench->add_option("--objects", bench_flags.objects)->capture_default_str();
  bench->add_option("--attributes", bench_flags.attributes)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--density", bench_flags.density)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  bench->add_option("--extents", bench_flags.extents)->capture_default_str();
  bench->add_option("--max-attributes", bench_flags.max_attributes, "Columns per generating attribute set")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_flags.seed)->capture_default_str();
  bench->add_option("--start", bench_flags.start)->capture_default_str();
  bench->callback([&] { action = [&] { return run_bench(bench_flags); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const fca::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const fca::NotClosedError& e) {
    std::cerr << "error: extent " << e.extent_index() << ": " << e.what() << '\n';
    return kExitContract;
  } catch (const fca::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
