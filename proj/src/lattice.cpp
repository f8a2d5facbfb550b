#include "rwlattice/lattice.hpp"

#include <string>

namespace rwl {

Lattice::Lattice(const TopologySpec& spec) : spec_(spec) {
  const auto n = static_cast<size_t>(spec.n);
  pow_.resize(n + 1);
  pow_[0] = 1;
  const auto mu = static_cast<std::uint64_t>(spec.mu);
  for (size_t i = 1; i <= n; ++i) {
    if (__builtin_mul_overflow(pow_[i - 1], mu, &pow_[i]))
      throw CapacityError("node labels for " + format_spec(spec) +
                          " exceed exact 64-bit range (mu^n overflow)");
  }
  switch (spec.family) {
    case Family::Mesh:
    case Family::Hypercube:
      node_count_ = pow_[n];
      break;
    case Family::Symplectic:
      // mu odd makes mu^n odd, so the +1 halves exactly.
      if (__builtin_add_overflow(pow_[n], std::uint64_t{1}, &node_count_))
        throw CapacityError("node count for " + format_spec(spec) +
                            " exceeds exact 64-bit range");
      node_count_ /= 2;
      break;
  }
}

void Lattice::check_address(const NodeAddress& address) const {
  if (address.size() != static_cast<size_t>(spec_.n))
    throw DomainError("address has " + std::to_string(address.size()) +
                      " coordinates, expected " + std::to_string(spec_.n));
  for (size_t i = 0; i < address.size(); ++i) {
    if (address[i] < 0 || address[i] >= spec_.mu)
      throw DomainError("coordinate l_" + std::to_string(i + 1) + " = " +
                        std::to_string(address[i]) + " outside [0, " +
                        std::to_string(spec_.mu - 1) + "]");
  }
}

NodeLabel Lattice::label_unchecked(const NodeAddress& address) const {
  std::uint64_t kappa = 0;
  for (size_t i = 0; i < address.size(); ++i)
    kappa += static_cast<std::uint64_t>(address[i]) * pow_[i];
  return kappa;
}

NodeLabel Lattice::label(const NodeAddress& address) const {
  check_address(address);
  NodeLabel kappa = label_unchecked(address);
  if (spec_.family == Family::Symplectic && (kappa & 1))
    throw InadmissibleNodeError("address has odd label " + std::to_string(kappa) +
                                "; not a symplectic node");
  return kappa;
}

void Lattice::check_label(NodeLabel kappa) const {
  if (kappa >= pow_[static_cast<size_t>(spec_.n)])
    throw DomainError("label " + std::to_string(kappa) + " outside [0, " +
                      std::to_string(pow_[static_cast<size_t>(spec_.n)] - 1) + "]");
  if (spec_.family == Family::Symplectic && (kappa & 1))
    throw InadmissibleNodeError("odd label " + std::to_string(kappa) +
                                " is not a symplectic node");
}

void Lattice::unlabel_into(NodeLabel kappa, NodeAddress& out) const {
  const int n = spec_.n;
  out.resize(static_cast<size_t>(n));
  std::uint64_t rest = kappa;
  for (int i = n; i >= 2; --i) {
    const std::uint64_t p = pow_[static_cast<size_t>(i - 1)];
    const std::uint64_t digit = rest / p;
    rest -= digit * p;
    out[static_cast<size_t>(i - 1)] = static_cast<int>(digit);
  }
  out[0] = static_cast<int>(rest);
}

NodeAddress Lattice::unlabel(NodeLabel kappa) const {
  check_label(kappa);
  NodeAddress out;
  unlabel_into(kappa, out);
  return out;
}

bool Lattice::is_admissible(const NodeAddress& address) const {
  check_address(address);
  if (spec_.family != Family::Symplectic) return true;
  int odd = 0;
  for (int l : address) odd += l & 1;
  return (odd & 1) == 0;
}

std::uint64_t Lattice::index_of(NodeLabel kappa) const {
  check_label(kappa);
  return spec_.family == Family::Symplectic ? kappa / 2 : kappa;
}

NodeLabel Lattice::label_of_index(std::uint64_t index) const {
  if (index >= node_count_)
    throw DomainError("node index " + std::to_string(index) + " outside [0, " +
                      std::to_string(node_count_ - 1) + "]");
  return spec_.family == Family::Symplectic ? 2 * index : index;
}

NodeLabel label(const NodeAddress& address, const TopologySpec& spec) {
  return Lattice(spec).label(address);
}

NodeAddress unlabel(NodeLabel kappa, const TopologySpec& spec) {
  return Lattice(spec).unlabel(kappa);
}

bool is_admissible(const NodeAddress& address, const TopologySpec& spec) {
  return Lattice(spec).is_admissible(address);
}

std::uint64_t node_count(const TopologySpec& spec) {
  return Lattice(spec).node_count();
}

std::uint64_t weight_index(NodeLabel kappa, const TopologySpec& spec) {
  if (spec.family != Family::Symplectic)
    throw DomainError("weight index is defined for symplectic specs only");
  Lattice lat(spec);
  lat.check_label(kappa);
  return kappa / 2;
}

std::uint64_t node_index(NodeLabel kappa, const TopologySpec& spec) {
  return Lattice(spec).index_of(kappa);
}

NodeLabel node_label(std::uint64_t index, const TopologySpec& spec) {
  return Lattice(spec).label_of_index(index);
}

}  // namespace rwl
