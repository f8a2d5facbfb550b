#pragma once

#include <cstdint>
#include <vector>

#include "rwlattice/errors.hpp"
#include "rwlattice/spec.hpp"

namespace rwl {

/// Coordinates (l_1, ..., l_n) of a lattice node, each in [0, mu-1].
using NodeAddress = std::vector<int>;

/// Scalar node label: the base-mu evaluation of the address with l_1 least
/// significant. For symplectic specs labels are even and kappa = 2p, where
/// p is the weight index.
using NodeLabel = std::uint64_t;

/// Precomputed conversion state for one spec: the power table mu^0..mu^n
/// and the node count. Cheap to build, reusable across many label/address
/// conversions.
class Lattice {
 public:
  /// Throws CapacityError when mu^n does not fit 64 bits (labels and counts
  /// must stay exact).
  explicit Lattice(const TopologySpec& spec);

  const TopologySpec& spec() const { return spec_; }
  int dim() const { return spec_.n; }
  int side() const { return spec_.mu; }

  /// Number of nodes: 2^n, mu^n, or ((2M+1)^n + 1)/2.
  std::uint64_t node_count() const { return node_count_; }

  /// mu^i for i in [0, n].
  std::uint64_t power(int i) const { return pow_[static_cast<size_t>(i)]; }

  /// kappa = sum_i l_i mu^(i-1). Validates coordinate ranges; for
  /// symplectic specs an odd result raises InadmissibleNodeError.
  NodeLabel label(const NodeAddress& address) const;

  /// Inverse of label(). Validates the range (and, for symplectic specs,
  /// evenness) of kappa.
  NodeAddress unlabel(NodeLabel kappa) const;

  /// Allocation-free unlabel for hot paths; out is resized to n.
  void unlabel_into(NodeLabel kappa, NodeAddress& out) const;

  /// Mesh/hypercube: every in-range address. Symplectic: the count of odd
  /// coordinates is even.
  bool is_admissible(const NodeAddress& address) const;

  /// Contiguous node index: kappa itself for mesh/hypercube, the weight
  /// index p = kappa/2 for symplectic.
  std::uint64_t index_of(NodeLabel kappa) const;
  NodeLabel label_of_index(std::uint64_t index) const;

  /// Label of an address already known to be in range; skips validation.
  NodeLabel label_unchecked(const NodeAddress& address) const;

  /// Range check shared by label() and friends; throws DomainError.
  void check_address(const NodeAddress& address) const;

  /// Range/evenness check for labels; throws DomainError or
  /// InadmissibleNodeError.
  void check_label(NodeLabel kappa) const;

 private:
  TopologySpec spec_;
  std::vector<std::uint64_t> pow_;
  std::uint64_t node_count_ = 0;
};

// One-shot conveniences over a temporary Lattice.

NodeLabel label(const NodeAddress& address, const TopologySpec& spec);
NodeAddress unlabel(NodeLabel kappa, const TopologySpec& spec);
bool is_admissible(const NodeAddress& address, const TopologySpec& spec);
std::uint64_t node_count(const TopologySpec& spec);

/// Weight index p with kappa = 2p. Symplectic specs only.
std::uint64_t weight_index(NodeLabel kappa, const TopologySpec& spec);

std::uint64_t node_index(NodeLabel kappa, const TopologySpec& spec);
NodeLabel node_label(std::uint64_t index, const TopologySpec& spec);

}  // namespace rwl
