#include "rwlattice/io.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace rwl {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw IoError("double formatting failed");
  return std::string(buf, ptr);
}

namespace {

void require_stream(const std::ostream& os, const char* what) {
  if (!os) throw IoError(std::string("write failed: ") + what);
}

unsigned __int128 unordered_pairs(std::uint64_t nu) {
  return static_cast<unsigned __int128>(nu) * (nu - 1) / 2;
}

void check_pair_budget(const TopologySpec& spec, std::uint64_t nu,
                       std::uint64_t pair_budget, const char* what) {
  if (unordered_pairs(nu) > pair_budget)
    throw CapacityError(std::string(what) + " for " + format_spec(spec) +
                        " exceeds the pair budget (" + std::to_string(pair_budget) +
                        ")");
}

// Row-major closed-form distance walk shared by the dense writers.
template <typename RowFn>
void for_each_distance_row(const Lattice& lat, RowFn&& row_fn) {
  const std::uint64_t nu = lat.node_count();
  const int n = lat.dim();
  std::vector<std::int32_t> table(nu * static_cast<std::uint64_t>(n));
  NodeAddress addr;
  for (std::uint64_t i = 0; i < nu; ++i) {
    lat.unlabel_into(lat.label_of_index(i), addr);
    for (int k = 0; k < n; ++k)
      table[i * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k)] =
          addr[static_cast<size_t>(k)];
  }
  const bool halve = lat.spec().family == Family::Symplectic;
  for (std::uint64_t i = 0; i < nu; ++i) {
    const std::int32_t* ai = table.data() + i * static_cast<std::uint64_t>(n);
    row_fn(i, [&](std::uint64_t j) {
      const std::int32_t* bj = table.data() + j * static_cast<std::uint64_t>(n);
      std::int64_t d = 0;
      for (int k = 0; k < n; ++k)
        d += std::abs(static_cast<std::int64_t>(ai[k]) - bj[k]);
      return halve ? d / 2 : d;
    });
  }
}

}  // namespace

void write_edgelist(std::ostream& os, const TopologySpec& spec,
                    std::uint64_t edge_budget) {
  Lattice lat(spec);
  for_each_edge(
      spec,
      [&](const Edge& e) {
        os << lat.index_of(e.u) << ' ' << lat.index_of(e.v) << '\n';
      },
      edge_budget);
  require_stream(os, "edge list");
}

void write_adjacency_matrixmarket(std::ostream& os, const TopologySpec& spec,
                                  std::uint64_t edge_budget) {
  Lattice lat(spec);
  std::uint64_t nnz = 0;
  for_each_edge(spec, [&](const Edge&) { ++nnz; }, edge_budget);
  os << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  os << lat.node_count() << ' ' << lat.node_count() << ' ' << nnz << '\n';
  for_each_edge(
      spec,
      [&](const Edge& e) {
        // Lower triangle, 1-based.
        os << lat.index_of(e.v) + 1 << ' ' << lat.index_of(e.u) + 1 << '\n';
      },
      edge_budget);
  require_stream(os, "adjacency matrix");
}

void write_adjacency_csv(std::ostream& os, const TopologySpec& spec,
                         std::uint64_t pair_budget) {
  Lattice lat(spec);
  const std::uint64_t nu = lat.node_count();
  check_pair_budget(spec, nu, pair_budget, "dense adjacency");
  std::vector<char> row(nu);
  NeighborEnumerator enumerator(spec);
  std::vector<NodeLabel> nbrs;
  for (std::uint64_t i = 0; i < nu; ++i) {
    std::fill(row.begin(), row.end(), '0');
    enumerator.neighbors_of(lat.label_of_index(i), nbrs);
    for (NodeLabel v : nbrs) row[lat.index_of(v)] = '1';
    for (std::uint64_t j = 0; j < nu; ++j) {
      if (j) os << ',';
      os << row[j];
    }
    os << '\n';
  }
  require_stream(os, "adjacency matrix");
}

void write_distances_matrixmarket(std::ostream& os, const TopologySpec& spec,
                                  std::uint64_t pair_budget) {
  Lattice lat(spec);
  const std::uint64_t nu = lat.node_count();
  check_pair_budget(spec, nu, pair_budget, "distance matrix");
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << nu << ' ' << nu << ' ' << nu * (nu - 1) << '\n';
  for_each_distance_row(lat, [&](std::uint64_t i, auto&& dist_to) {
    for (std::uint64_t j = 0; j < nu; ++j) {
      if (j == i) continue;
      os << i + 1 << ' ' << j + 1 << ' ' << dist_to(j) << '\n';
    }
  });
  require_stream(os, "distance matrix");
}

void write_distances_csv(std::ostream& os, const TopologySpec& spec,
                         std::uint64_t pair_budget) {
  Lattice lat(spec);
  const std::uint64_t nu = lat.node_count();
  check_pair_budget(spec, nu, pair_budget, "dense distance matrix");
  for_each_distance_row(lat, [&](std::uint64_t i, auto&& dist_to) {
    for (std::uint64_t j = 0; j < nu; ++j) {
      if (j) os << ',';
      os << (j == i ? 0 : dist_to(j));
    }
    os << '\n';
  });
  require_stream(os, "distance matrix");
}

void write_histogram_csv(std::ostream& os, const PathLengthHistogram& histogram,
                         const TopologySpec& spec) {
  os << "# spec: " << format_spec(spec) << '\n';
  const bool sampled = histogram.mode == PathLengthHistogram::Mode::Sampled;
  os << "# mode: " << (sampled ? "sampled" : "exact") << '\n';
  if (sampled) {
    os << "# seed: " << histogram.seed << '\n';
    os << "# sample_size: " << histogram.sample_size << '\n';
    os << "# rng: " << sampling_rng_id() << '\n';
  }
  os << "# mean: " << format_double(histogram.mean()) << '\n';
  os << "distance,count,fraction\n";
  const double total = static_cast<double>(histogram.total_pairs);
  for (size_t d = 1; d < histogram.counts.size(); ++d) {
    os << d << ',' << histogram.counts[d] << ','
       << format_double(static_cast<double>(histogram.counts[d]) / total) << '\n';
  }
  require_stream(os, "histogram");
}

std::string report_text(const OracleReport& report) {
  std::ostringstream os;
  os << "spec              " << format_spec(report.spec) << '\n';
  os << "nodes             " << node_count(report.spec) << '\n';
  os << "pairs_checked     " << report.pairs_checked << '\n';
  os << "mismatches        " << report.mismatches.size() << '\n';
  os << "min_degree_seen   " << report.min_degree_seen << "  (expected "
     << report.expected_min_degree << ")\n";
  os << "max_degree_seen   " << report.max_degree_seen << "  (expected ";
  if (report.expected_max_is_bound)
    os << "below " << report.expected_max_degree << "; the bound is not attained "
       << "when M=1";
  else
    os << report.expected_max_degree;
  os << ")\n";
  os << "degree_bounds     " << (report.degree_bounds_ok ? "ok" : "VIOLATED") << '\n';
  os << "distance_check    "
     << (report.mismatches.empty() ? "certified" : "FAILED") << '\n';
  return os.str();
}

void write_mismatch_csv(std::ostream& os, const OracleReport& report) {
  os << "kappa_a,kappa_b,closed_form,bfs\n";
  for (const DistanceMismatch& m : report.mismatches)
    os << m.a << ',' << m.b << ',' << m.closed_form << ',' << m.bfs << '\n';
  require_stream(os, "mismatch csv");
}

}  // namespace rwl
