// rwlat — construct mesh, hypercube, and symplectic interconnect topologies,
// report their graph characteristics, export graphs and matrices, compute
// path-length distributions, and certify the closed-form distance rules
// against a brute-force BFS check.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rwlattice/io.hpp"
#include "rwlattice/lattice.hpp"
#include "rwlattice/metrics.hpp"
#include "rwlattice/oracle.hpp"
#include "rwlattice/topology.hpp"

namespace {

// Exit-status classes; documented in --help and the README.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;
constexpr int kExitVerifyFailed = 5;

struct GlobalOptions {
  std::uint64_t budget_edges = rwl::kDefaultEdgeBudget;
  std::uint64_t budget_pairs = rwl::kDefaultPairBudget;
  int threads = 0;
};

// "-" or empty selects stdout.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw rwl::IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

  void finish() {
    stream().flush();
    if (!stream()) throw rwl::IoError("write failed" +
                                      (path_.empty() ? "" : ": " + path_));
  }

 private:
  std::ofstream file_;
  std::string path_;
};

std::string histogram_default_path(const rwl::TopologySpec& spec) {
  std::string name = rwl::format_spec(spec);
  for (char& c : name)
    if (c == ':' || c == ',' || c == '=') c = '_';
  return name + ".csv";
}

void print_summary_lines(std::ostream& os, const rwl::TopologySpec& spec,
                         const rwl::TopologySummary& s, bool kv) {
  const std::string spec_text = rwl::format_spec(spec);
  if (kv) {
    os << "spec=" << spec_text << '\n'
       << "nodes=" << s.nu << '\n'
       << "diameter=" << s.diameter << '\n'
       << "max_degree=" << s.eps_max << '\n'
       << "min_degree=" << s.eps_min << '\n'
       << "density=" << rwl::format_double(s.rho) << '\n';
    return;
  }
  os << std::left;
  os << std::setw(12) << "spec" << spec_text << '\n';
  os << std::setw(12) << "nodes" << s.nu << '\n';
  os << std::setw(12) << "diameter" << s.diameter << '\n';
  os << std::setw(12) << "max_degree" << s.eps_max;
  if (s.eps_max_enumerated)
    os << "  (attained; the closed-form bound "
       << 2 * static_cast<std::uint64_t>(spec.n) * static_cast<std::uint64_t>(spec.n)
       << " is not reached when M=1)";
  else if (spec.family == rwl::Family::Symplectic && spec.M == 1)
    os << "  (closed-form bound; not attained when M=1, enumeration skipped"
          " for size)";
  os << '\n';
  os << std::setw(12) << "min_degree" << s.eps_min << '\n';
  os << std::setw(12) << "density" << rwl::format_double(s.rho) << '\n';
}

int run_info(const std::string& spec_text, bool kv) {
  const auto spec = rwl::parse_spec(spec_text);
  print_summary_lines(std::cout, spec, rwl::summary(spec), kv);
  return kExitOk;
}

int run_export(const GlobalOptions& global, const std::string& spec_text,
               const std::string& what, const std::string& format,
               const std::string& out_path) {
  const auto spec = rwl::parse_spec(spec_text);
  OutputFile out(out_path);
  if (what == "edges") {
    if (format != "edgelist")
      throw rwl::DomainError("edges export supports format 'edgelist' only");
    rwl::write_edgelist(out.stream(), spec, global.budget_edges);
  } else if (what == "adjacency") {
    if (format == "matrixmarket")
      rwl::write_adjacency_matrixmarket(out.stream(), spec, global.budget_edges);
    else if (format == "csv")
      rwl::write_adjacency_csv(out.stream(), spec, global.budget_pairs);
    else
      throw rwl::DomainError("adjacency export supports 'matrixmarket' or 'csv'");
  } else if (what == "distances") {
    if (format == "matrixmarket")
      rwl::write_distances_matrixmarket(out.stream(), spec, global.budget_pairs);
    else if (format == "csv")
      rwl::write_distances_csv(out.stream(), spec, global.budget_pairs);
    else
      throw rwl::DomainError("distances export supports 'matrixmarket' or 'csv'");
  } else {
    throw rwl::DomainError("unknown export payload '" + what + "'");
  }
  out.finish();
  return kExitOk;
}

rwl::PathLengthHistogram make_histogram(const GlobalOptions& global,
                                        const rwl::TopologySpec& spec, bool exact,
                                        std::uint64_t sample,
                                        std::uint64_t seed) {
  if (exact)
    return rwl::path_length_histogram(spec, global.budget_pairs, global.threads);
  return rwl::path_length_histogram_sampled(spec, sample, seed, global.threads);
}

int run_histogram(const GlobalOptions& global, const std::string& spec_text,
                  bool exact, std::uint64_t sample, std::uint64_t seed,
                  const std::string& out_path) {
  const auto spec = rwl::parse_spec(spec_text);
  const auto histogram = make_histogram(global, spec, exact, sample, seed);
  OutputFile out(out_path);
  rwl::write_histogram_csv(out.stream(), histogram, spec);
  out.finish();
  return kExitOk;
}

int run_compare(const GlobalOptions& global, const std::string& spec_a_text,
                const std::string& spec_b_text, bool exact, std::uint64_t sample,
                std::uint64_t seed, std::string out_a, std::string out_b) {
  const auto spec_a = rwl::parse_spec(spec_a_text);
  const auto spec_b = rwl::parse_spec(spec_b_text);
  if (out_a.empty()) out_a = histogram_default_path(spec_a);
  if (out_b.empty()) out_b = histogram_default_path(spec_b);

  const auto summary_a = rwl::summary(spec_a);
  const auto summary_b = rwl::summary(spec_b);
  const auto hist_a = make_histogram(global, spec_a, exact, sample, seed);
  const auto hist_b = make_histogram(global, spec_b, exact, sample, seed);

  {
    OutputFile fa(out_a);
    rwl::write_histogram_csv(fa.stream(), hist_a, spec_a);
    fa.finish();
    OutputFile fb(out_b);
    rwl::write_histogram_csv(fb.stream(), hist_b, spec_b);
    fb.finish();
  }

  auto row = [](const std::string& name, const std::string& a,
                const std::string& b) {
    std::cout << std::left << std::setw(18) << name << std::setw(24) << a << b
              << '\n';
  };
  row("", "A", "B");
  row("spec", rwl::format_spec(spec_a), rwl::format_spec(spec_b));
  row("nodes", std::to_string(summary_a.nu), std::to_string(summary_b.nu));
  row("diameter", std::to_string(summary_a.diameter),
      std::to_string(summary_b.diameter));
  row("max_degree", std::to_string(summary_a.eps_max),
      std::to_string(summary_b.eps_max));
  row("min_degree", std::to_string(summary_a.eps_min),
      std::to_string(summary_b.eps_min));
  row("density", rwl::format_double(summary_a.rho),
      rwl::format_double(summary_b.rho));
  row("mean_path_length", rwl::format_double(hist_a.mean()),
      rwl::format_double(hist_b.mean()));
  row("density_ratio", rwl::format_double(rwl::density_ratio(spec_a, spec_b)),
      "(A / B)");
  row("histogram_a", out_a, "");
  row("histogram_b", out_b, "");
  return kExitOk;
}

int run_verify(const GlobalOptions& global, const std::string& spec_text,
               std::uint64_t node_budget, const std::string& mismatch_csv) {
  const auto spec = rwl::parse_spec(spec_text);
  auto report = rwl::verify_distances(spec, node_budget, global.threads);
  const auto degrees = rwl::verify_degree_bounds(spec);
  report.degree_bounds_ok = degrees.degree_bounds_ok;
  std::cout << rwl::report_text(report);
  if (!mismatch_csv.empty()) {
    OutputFile out(mismatch_csv);
    rwl::write_mismatch_csv(out.stream(), report);
    out.finish();
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lattice interconnect topologies: mesh, hypercube, and symplectic.\n"
      "Spec strings: mesh:mu=<int>,n=<int> | hypercube:n=<int> | "
      "symplectic:M=<int>,n=<int>\n"
      "Exit codes: 0 ok, 2 usage, 3 capacity, 4 I/O, 5 verification failure."};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--budget-edges", global.budget_edges,
                 "Edge enumeration budget")
      ->envname("RWLAT_BUDGET_EDGES")
      ->capture_default_str();
  app.add_option("--budget-pairs", global.budget_pairs,
                 "Pair evaluation budget")
      ->envname("RWLAT_BUDGET_PAIRS")
      ->capture_default_str();
  app.add_option("--threads", global.threads,
                 "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();

  std::string spec_text, spec_b_text;
  bool kv = false;

  auto* info = app.add_subcommand("info", "Print the characteristics row");
  info->add_option("spec", spec_text, "Topology spec string")->required();
  info->add_flag("--kv", kv, "key=value lines instead of aligned text");

  std::string what, format, out_path;
  auto* exp = app.add_subcommand("export", "Write edges, adjacency, or distances");
  exp->add_option("spec", spec_text)->required();
  exp->add_option("--what", what, "edges | adjacency | distances")->required();
  exp->add_option("--format", format, "edgelist | matrixmarket | csv")->required();
  exp->add_option("--out", out_path, "Output path ('-' = stdout)")->required();

  bool exact = false;
  std::uint64_t sample = 0, seed = 0;
  auto* hist = app.add_subcommand("histogram", "Path-length distribution CSV");
  hist->add_option("spec", spec_text)->required();
  auto* hist_exact = hist->add_flag("--exact", exact, "All unordered pairs");
  auto* hist_sample =
      hist->add_option("--sample", sample, "Sampled pair count");
  hist->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  hist->add_option("--out", out_path, "Output CSV path (default stdout)");
  hist_exact->excludes(hist_sample);

  std::string out_a, out_b;
  auto* cmp = app.add_subcommand("compare", "Side-by-side comparison of two specs");
  cmp->add_option("spec_a", spec_text)->required();
  cmp->add_option("spec_b", spec_b_text)->required();
  auto* cmp_exact = cmp->add_flag("--exact", exact, "All unordered pairs");
  auto* cmp_sample = cmp->add_option("--sample", sample, "Sampled pair count");
  cmp->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  cmp->add_option("--out-a", out_a, "Histogram CSV for spec_a");
  cmp->add_option("--out-b", out_b, "Histogram CSV for spec_b");
  cmp_exact->excludes(cmp_sample);

  std::uint64_t node_budget = rwl::kDefaultVerifyNodeBudget;
  std::string mismatch_csv;
  auto* verify = app.add_subcommand(
      "verify", "Certify closed-form distances against all-pairs BFS");
  verify->add_option("spec", spec_text)->required();
  verify->add_option("--node-budget", node_budget, "All-pairs node budget")
      ->capture_default_str();
  verify->add_option("--mismatch-csv", mismatch_csv, "Write mismatches as CSV");

  try {
    app.parse(argc, argv);

    if ((hist->parsed() && !exact && !*hist_sample) ||
        (cmp->parsed() && !exact && !*cmp_sample))
      throw rwl::DomainError("choose --exact or --sample <size>");

    if (info->parsed()) return run_info(spec_text, kv);
    if (exp->parsed())
      return run_export(global, spec_text, what, format, out_path);
    if (hist->parsed())
      return run_histogram(global, spec_text, exact, sample, seed, out_path);
    if (cmp->parsed())
      return run_compare(global, spec_text, spec_b_text, exact, sample, seed,
                         out_a, out_b);
    if (verify->parsed())
      return run_verify(global, spec_text, node_budget, mismatch_csv);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const rwl::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const rwl::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const rwl::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
