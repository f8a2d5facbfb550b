#pragma once

#include <string>
#include <string_view>

namespace rwl {

enum class Family { Mesh, Hypercube, Symplectic };

/// Parameters of one topology instance.
///
/// `n` is the lattice dimension (the algebra rank for the symplectic
/// family) and `mu` the side length of the enclosing lattice, so nodes
/// live in [0, mu)^n. Hypercubes fix mu = 2. Symplectic instances are
/// parameterized by the highest-weight component M >= 1 and derive
/// mu = 2M + 1; their node set is the even-label sublattice.
struct TopologySpec {
  Family family = Family::Mesh;
  int n = 1;
  int mu = 2;
  int M = 0;  // symplectic only; 0 otherwise

  static TopologySpec mesh(int mu, int n);
  static TopologySpec hypercube(int n);
  static TopologySpec symplectic(int M, int n);

  bool operator==(const TopologySpec&) const = default;
};

const char* family_name(Family family);

/// Parses "mesh:mu=<int>,n=<int>", "hypercube:n=<int>" or
/// "symplectic:M=<int>,n=<int>". Parameters may appear in either order.
/// Throws DomainError naming the offending token.
TopologySpec parse_spec(std::string_view text);

/// Canonical spec string; parse_spec(format_spec(s)) == s.
std::string format_spec(const TopologySpec& spec);

}  // namespace rwl
