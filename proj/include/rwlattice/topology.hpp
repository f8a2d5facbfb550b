#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rwlattice/lattice.hpp"
#include "rwlattice/roots.hpp"

namespace rwl {

/// Symplectic node classification by coordinate parity: bosonic nodes have
/// all coordinates even, fermionic nodes a positive even count of odd
/// coordinates.
enum class NodeClass { Bosonic, Fermionic };

/// Throws DomainError for an odd count of odd coordinates (no such node
/// exists in a symplectic lattice).
NodeClass classify(const NodeAddress& address);

inline constexpr std::uint64_t kDefaultEdgeBudget = 10'000'000;

/// Reusable neighbor enumeration for one spec: holds the conversion state
/// and the generator steps (+-e_i for mesh/hypercube, all 2n^2 roots for
/// symplectic). Not thread-safe; build one per thread.
class NeighborEnumerator {
 public:
  explicit NeighborEnumerator(const TopologySpec& spec);

  const Lattice& lattice() const { return lattice_; }

  /// Sorted labels one generator step away whose address stays
  /// coordinate-wise inside [0, mu-1]^n. Validates kappa.
  void neighbors_of(NodeLabel kappa, std::vector<NodeLabel>& out);

 private:
  Lattice lattice_;
  std::vector<std::vector<int>> steps_;
  NodeAddress scratch_;
};

/// Sorted neighbor labels of kappa.
std::vector<NodeLabel> neighbors(NodeLabel kappa, const TopologySpec& spec);

std::size_t degree(NodeLabel kappa, const TopologySpec& spec);

struct Edge {
  NodeLabel u = 0;            // min endpoint label
  NodeLabel v = 0;            // max endpoint label
  std::vector<int> step;      // address(v) - address(u); a +e_i step or a root
};

/// Calls fn once per undirected edge, ordered by (u, v). Throws
/// CapacityError as soon as the emitted count would exceed edge_budget.
/// The Edge reference passed to fn is reused between calls.
void for_each_edge(const TopologySpec& spec,
                   const std::function<void(const Edge&)>& fn,
                   std::uint64_t edge_budget = kDefaultEdgeBudget);

/// Shard of the edge stream: only edges whose min endpoint has node index
/// in [first_index, last_index). Disjoint shards cover the stream exactly
/// once, so workers on disjoint ranges emit deterministic partitions. The
/// budget applies per shard.
void for_each_edge_in_range(const TopologySpec& spec, std::uint64_t first_index,
                            std::uint64_t last_index,
                            const std::function<void(const Edge&)>& fn,
                            std::uint64_t edge_budget = kDefaultEdgeBudget);

std::vector<Edge> edges(const TopologySpec& spec,
                        std::uint64_t edge_budget = kDefaultEdgeBudget);

/// Sparse symmetric 0/1 matrix in coordinate form. Row/column indices are
/// node labels for mesh/hypercube and weight indices p for symplectic;
/// entries hold each edge once as (i, j) with i < j, sorted ascending.
struct AdjacencyMatrix {
  std::uint64_t dim = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
};

AdjacencyMatrix adjacency_matrix(const TopologySpec& spec,
                                 std::uint64_t edge_budget = kDefaultEdgeBudget);

}  // namespace rwl
