#include "rwlattice/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "rwlattice/metrics.hpp"
#include "rwlattice/topology.hpp"

namespace rwl {

namespace {

void check_node_budget(const Lattice& lat, std::uint64_t node_budget,
                       const char* what) {
  if (lat.node_count() > node_budget)
    throw CapacityError(std::string(what) + " for " + format_spec(lat.spec()) +
                        ": " + std::to_string(lat.node_count()) +
                        " nodes exceed the budget (" + std::to_string(node_budget) +
                        ")");
}

// Flattened adjacency in index space, built purely from neighbor
// enumeration so BFS shares no logic with the closed-form distance.
struct IndexedGraph {
  std::vector<std::uint32_t> offsets;  // size nu+1
  std::vector<std::uint32_t> targets;

  explicit IndexedGraph(const TopologySpec& spec, std::uint64_t nu) {
    NeighborEnumerator enumerator(spec);
    const Lattice& lat = enumerator.lattice();
    offsets.reserve(nu + 1);
    offsets.push_back(0);
    std::vector<NodeLabel> nbrs;
    for (std::uint64_t i = 0; i < nu; ++i) {
      enumerator.neighbors_of(lat.label_of_index(i), nbrs);
      for (NodeLabel v : nbrs)
        targets.push_back(static_cast<std::uint32_t>(lat.index_of(v)));
      offsets.push_back(static_cast<std::uint32_t>(targets.size()));
    }
  }

  std::uint32_t degree(std::uint64_t i) const {
    return offsets[i + 1] - offsets[i];
  }
};

void bfs_from(const IndexedGraph& graph, std::uint32_t source,
              std::vector<std::int64_t>& dist, std::vector<std::uint32_t>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    const std::int64_t du = dist[u];
    for (std::uint32_t k = graph.offsets[u]; k < graph.offsets[u + 1]; ++k) {
      const std::uint32_t v = graph.targets[k];
      if (dist[v] < 0) {
        dist[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> bfs_distances(NodeLabel source, const TopologySpec& spec,
                                        std::uint64_t node_budget) {
  Lattice lat(spec);
  check_node_budget(lat, node_budget, "breadth-first search");
  const std::uint64_t nu = lat.node_count();
  if (nu > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("breadth-first search exceeds 32-bit index range");
  const std::uint64_t src = lat.index_of(source);

  IndexedGraph graph(spec, nu);
  std::vector<std::int64_t> dist(nu, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(nu);
  bfs_from(graph, static_cast<std::uint32_t>(src), dist, queue);
  if (queue.size() != nu)
    throw DisconnectedError("BFS from label " + std::to_string(source) + " reached " +
                            std::to_string(queue.size()) + " of " +
                            std::to_string(nu) + " nodes in " + format_spec(spec));
  return dist;
}

void expected_degree_bounds(const TopologySpec& spec, std::uint64_t& min_deg,
                            std::uint64_t& max_deg, bool& max_is_bound) {
  const auto n = static_cast<std::uint64_t>(spec.n);
  max_is_bound = false;
  switch (spec.family) {
    case Family::Hypercube:
      min_deg = max_deg = n;
      break;
    case Family::Mesh:
      min_deg = n;
      max_deg = spec.mu >= 3 ? 2 * n : n;
      break;
    case Family::Symplectic:
      min_deg = n * (n + 1) / 2;
      max_deg = 2 * n * n;
      max_is_bound = spec.M == 1;
      break;
  }
}

OracleReport verify_distances(const TopologySpec& spec, std::uint64_t node_budget,
                              int threads) {
  Lattice lat(spec);
  check_node_budget(lat, node_budget, "all-pairs verification");
  const std::uint64_t nu = lat.node_count();
  const int n = spec.n;

  OracleReport report;
  report.spec = spec;
  expected_degree_bounds(spec, report.expected_min_degree,
                         report.expected_max_degree, report.expected_max_is_bound);

  IndexedGraph graph(spec, nu);
  report.min_degree_seen = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i < nu; ++i) {
    const std::uint64_t deg = graph.degree(i);
    report.min_degree_seen = std::min(report.min_degree_seen, deg);
    report.max_degree_seen = std::max(report.max_degree_seen, deg);
  }

  // Address table for the closed-form side of the comparison.
  std::vector<std::int32_t> table(nu * static_cast<std::uint64_t>(n));
  {
    NodeAddress addr;
    for (std::uint64_t i = 0; i < nu; ++i) {
      lat.unlabel_into(lat.label_of_index(i), addr);
      for (int k = 0; k < n; ++k)
        table[i * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k)] =
            addr[static_cast<size_t>(k)];
    }
  }
  const bool halve = spec.family == Family::Symplectic;

  const int workers = detail::resolve_threads(threads);
  std::vector<std::vector<DistanceMismatch>> local_mismatches(
      static_cast<size_t>(workers));
  std::vector<std::uint64_t> local_pairs(static_cast<size_t>(workers), 0);
  std::vector<std::exception_ptr> disconnected(static_cast<size_t>(workers));

  detail::run_workers(workers, [&](int t) {
    std::vector<std::int64_t> dist(nu, -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(nu);
    auto& mism = local_mismatches[static_cast<size_t>(t)];
    for (std::uint64_t s = static_cast<std::uint64_t>(t); s < nu;
         s += static_cast<std::uint64_t>(workers)) {
      bfs_from(graph, static_cast<std::uint32_t>(s), dist, queue);
      if (queue.size() != nu) {
        disconnected[static_cast<size_t>(t)] = std::make_exception_ptr(
            DisconnectedError("BFS reached " + std::to_string(queue.size()) +
                              " of " + std::to_string(nu) + " nodes in " +
                              format_spec(spec)));
        return;
      }
      const std::int32_t* as = table.data() + s * static_cast<std::uint64_t>(n);
      for (std::uint64_t u = s + 1; u < nu; ++u) {
        const std::int32_t* bu = table.data() + u * static_cast<std::uint64_t>(n);
        std::int64_t cf = 0;
        for (int k = 0; k < n; ++k)
          cf += std::abs(static_cast<std::int64_t>(as[k]) - bu[k]);
        if (halve) cf /= 2;
        ++local_pairs[static_cast<size_t>(t)];
        if (cf != dist[u])
          mism.push_back({lat.label_of_index(s), lat.label_of_index(u), cf, dist[u]});
      }
    }
  });
  for (auto& err : disconnected)
    if (err) std::rethrow_exception(err);

  for (int t = 0; t < workers; ++t) {
    report.pairs_checked += local_pairs[static_cast<size_t>(t)];
    report.mismatches.insert(report.mismatches.end(),
                             local_mismatches[static_cast<size_t>(t)].begin(),
                             local_mismatches[static_cast<size_t>(t)].end());
  }
  // Striped sources interleave; restore (a, b) order for deterministic
  // reports regardless of worker count.
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const DistanceMismatch& x, const DistanceMismatch& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  return report;
}

OracleReport verify_degree_bounds(const TopologySpec& spec,
                                  std::uint64_t node_budget) {
  Lattice lat(spec);
  check_node_budget(lat, node_budget, "degree enumeration");
  const std::uint64_t nu = lat.node_count();

  OracleReport report;
  report.spec = spec;
  expected_degree_bounds(spec, report.expected_min_degree,
                         report.expected_max_degree, report.expected_max_is_bound);

  NeighborEnumerator enumerator(spec);
  std::vector<NodeLabel> nbrs;
  report.min_degree_seen = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i < nu; ++i) {
    enumerator.neighbors_of(lat.label_of_index(i), nbrs);
    const auto deg = static_cast<std::uint64_t>(nbrs.size());
    report.min_degree_seen = std::min(report.min_degree_seen, deg);
    report.max_degree_seen = std::max(report.max_degree_seen, deg);
  }

  report.degree_bounds_ok =
      report.min_degree_seen == report.expected_min_degree &&
      (report.expected_max_is_bound
           ? report.max_degree_seen < report.expected_max_degree
           : report.max_degree_seen == report.expected_max_degree);
  return report;
}

}  // namespace rwl
