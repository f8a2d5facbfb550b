#pragma once

#include <cstdint>
#include <vector>

#include "rwlattice/lattice.hpp"

namespace rwl {

inline constexpr std::uint64_t kDefaultVerifyNodeBudget = 2'000;
inline constexpr std::uint64_t kDefaultBfsNodeBudget = 1'000'000;

/// Single-source shortest-path distances by breadth-first search over the
/// neighbor enumeration — no closed-form distance logic is involved, so the
/// result is an independent check of it. Returned vector is indexed by node
/// index. Throws DisconnectedError if any node is unreached.
std::vector<std::int64_t> bfs_distances(
    NodeLabel source, const TopologySpec& spec,
    std::uint64_t node_budget = kDefaultBfsNodeBudget);

struct DistanceMismatch {
  NodeLabel a = 0;
  NodeLabel b = 0;
  std::int64_t closed_form = 0;
  std::int64_t bfs = 0;
};

struct OracleReport {
  TopologySpec spec;
  std::uint64_t pairs_checked = 0;
  std::vector<DistanceMismatch> mismatches;
  std::uint64_t max_degree_seen = 0;
  std::uint64_t min_degree_seen = 0;
  std::uint64_t expected_min_degree = 0;
  std::uint64_t expected_max_degree = 0;
  /// True when expected_max_degree is only an upper bound (symplectic
  /// M = 1, where the interior never admits every generator).
  bool expected_max_is_bound = false;
  bool degree_bounds_ok = true;

  bool ok() const { return mismatches.empty() && degree_bounds_ok; }
};

/// Closed-form degree extrema: (n, n) for hypercube, (n, 2n) for mesh with
/// mu >= 3 and (n, n) for mu = 2, (n(n+1)/2, 2n^2) for symplectic.
void expected_degree_bounds(const TopologySpec& spec, std::uint64_t& min_deg,
                            std::uint64_t& max_deg, bool& max_is_bound);

/// Runs BFS from every node and compares against the closed-form distance
/// for every unordered pair; also records observed degree extrema.
/// threads <= 0 picks the hardware concurrency.
OracleReport verify_distances(
    const TopologySpec& spec,
    std::uint64_t node_budget = kDefaultVerifyNodeBudget, int threads = 0);

/// Enumerates every node degree and judges it against the closed-form
/// extrema. A violation is reported via degree_bounds_ok, not thrown.
OracleReport verify_degree_bounds(
    const TopologySpec& spec,
    std::uint64_t node_budget = kDefaultBfsNodeBudget);

}  // namespace rwl
