#include "rwlattice/topology.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rwl {

NodeClass classify(const NodeAddress& address) {
  int odd = 0;
  for (int l : address) odd += l & 1;
  if (odd & 1)
    throw DomainError("address with an odd count of odd coordinates is not a "
                      "symplectic node");
  return odd == 0 ? NodeClass::Bosonic : NodeClass::Fermionic;
}

NeighborEnumerator::NeighborEnumerator(const TopologySpec& spec) : lattice_(spec) {
  const int n = spec.n;
  if (spec.family == Family::Symplectic) {
    for (const RootVector& root : all_roots(n)) steps_.push_back(root.components);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int s : {1, -1}) {
        std::vector<int> step(static_cast<size_t>(n), 0);
        step[static_cast<size_t>(i)] = s;
        steps_.push_back(std::move(step));
      }
    }
  }
}

void NeighborEnumerator::neighbors_of(NodeLabel kappa, std::vector<NodeLabel>& out) {
  lattice_.check_label(kappa);
  lattice_.unlabel_into(kappa, scratch_);
  const int mu = lattice_.side();
  const size_t n = scratch_.size();
  out.clear();
  for (const auto& step : steps_) {
    // Validity is coordinate-wise: every stepped coordinate must stay in
    // [0, mu-1]. A label-range test alone would admit wrap-around pairs
    // that are not lattice neighbors.
    std::int64_t delta = 0;
    bool ok = true;
    for (size_t i = 0; i < n; ++i) {
      const int c = scratch_[i] + step[i];
      if (c < 0 || c >= mu) {
        ok = false;
        break;
      }
      if (step[i] != 0)
        delta += static_cast<std::int64_t>(step[i]) *
                 static_cast<std::int64_t>(lattice_.power(static_cast<int>(i)));
    }
    if (ok) out.push_back(kappa + static_cast<std::uint64_t>(delta));
  }
  std::sort(out.begin(), out.end());
}

std::vector<NodeLabel> neighbors(NodeLabel kappa, const TopologySpec& spec) {
  NeighborEnumerator enumerator(spec);
  std::vector<NodeLabel> out;
  enumerator.neighbors_of(kappa, out);
  return out;
}

std::size_t degree(NodeLabel kappa, const TopologySpec& spec) {
  return neighbors(kappa, spec).size();
}

void for_each_edge_in_range(const TopologySpec& spec, std::uint64_t first_index,
                            std::uint64_t last_index,
                            const std::function<void(const Edge&)>& fn,
                            std::uint64_t edge_budget) {
  NeighborEnumerator enumerator(spec);
  const Lattice& lat = enumerator.lattice();
  const std::uint64_t nu = lat.node_count();
  if (first_index > last_index || last_index > nu)
    throw DomainError("edge shard [" + std::to_string(first_index) + ", " +
                      std::to_string(last_index) + ") outside the node range");
  const auto over_budget = [&] {
    return CapacityError("edge enumeration for " + format_spec(spec) +
                         " exceeds the edge budget (" +
                         std::to_string(edge_budget) +
                         "); use sampled workflows instead");
  };
  // Every family here is connected, so a full stream has at least nu-1
  // edges.
  if (first_index == 0 && last_index == nu && nu - 1 > edge_budget)
    throw over_budget();

  Edge edge;
  edge.step.resize(static_cast<size_t>(spec.n));
  std::vector<NodeLabel> nbrs;
  NodeAddress a, b;
  std::uint64_t emitted = 0;
  for (std::uint64_t idx = first_index; idx < last_index; ++idx) {
    const NodeLabel u = lat.label_of_index(idx);
    enumerator.neighbors_of(u, nbrs);
    lat.unlabel_into(u, a);
    for (NodeLabel v : nbrs) {
      if (v <= u) continue;
      if (++emitted > edge_budget) throw over_budget();
      lat.unlabel_into(v, b);
      edge.u = u;
      edge.v = v;
      for (size_t i = 0; i < b.size(); ++i) edge.step[i] = b[i] - a[i];
      fn(edge);
    }
  }
}

void for_each_edge(const TopologySpec& spec,
                   const std::function<void(const Edge&)>& fn,
                   std::uint64_t edge_budget) {
  for_each_edge_in_range(spec, 0, Lattice(spec).node_count(), fn, edge_budget);
}

std::vector<Edge> edges(const TopologySpec& spec, std::uint64_t edge_budget) {
  std::vector<Edge> out;
  for_each_edge(spec, [&out](const Edge& e) { out.push_back(e); }, edge_budget);
  return out;
}

AdjacencyMatrix adjacency_matrix(const TopologySpec& spec,
                                 std::uint64_t edge_budget) {
  Lattice lat(spec);
  if (lat.node_count() > std::numeric_limits<std::uint32_t>::max())
    throw CapacityError("adjacency matrix for " + format_spec(spec) +
                        " exceeds 32-bit index range");
  AdjacencyMatrix matrix;
  matrix.dim = lat.node_count();
  for_each_edge(
      spec,
      [&](const Edge& e) {
        matrix.entries.emplace_back(static_cast<std::uint32_t>(lat.index_of(e.u)),
                                    static_cast<std::uint32_t>(lat.index_of(e.v)));
      },
      edge_budget);
  return matrix;
}

}  // namespace rwl
