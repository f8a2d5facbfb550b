#pragma once

#include <iosfwd>
#include <string>

#include "rwlattice/metrics.hpp"
#include "rwlattice/oracle.hpp"
#include "rwlattice/topology.hpp"

namespace rwl {

// All writers emit locale-independent ASCII ('.' decimal separator, '\n'
// line ends) and are byte-deterministic for a given spec and budget. Node
// ids are contiguous indices: labels for mesh/hypercube, weight indices p
// for symplectic.

/// One "u v" pair per line, u < v, sorted by (u, v).
void write_edgelist(std::ostream& os, const TopologySpec& spec,
                    std::uint64_t edge_budget = kDefaultEdgeBudget);

/// Matrix Market "coordinate pattern symmetric": one lower-triangle entry
/// per edge, 1-based.
void write_adjacency_matrixmarket(std::ostream& os, const TopologySpec& spec,
                                  std::uint64_t edge_budget = kDefaultEdgeBudget);

/// Dense 0/1 rows, comma separated.
void write_adjacency_csv(std::ostream& os, const TopologySpec& spec,
                         std::uint64_t pair_budget = kDefaultPairBudget);

/// Matrix Market "coordinate integer general": every off-diagonal entry of
/// the distance matrix, row-major, 1-based.
void write_distances_matrixmarket(std::ostream& os, const TopologySpec& spec,
                                  std::uint64_t pair_budget = kDefaultPairBudget);

/// Dense integer distance rows, comma separated.
void write_distances_csv(std::ostream& os, const TopologySpec& spec,
                         std::uint64_t pair_budget = kDefaultPairBudget);

/// Histogram CSV: '#'-prefixed metadata (spec, mode, seed, sample size, rng
/// id, mean) then "distance,count,fraction" rows for every d in [1, L].
void write_histogram_csv(std::ostream& os, const PathLengthHistogram& histogram,
                         const TopologySpec& spec);

/// Aligned plain-text rendering of an oracle report.
std::string report_text(const OracleReport& report);

/// "kappa_a,kappa_b,closed_form,bfs" rows, one per mismatch.
void write_mismatch_csv(std::ostream& os, const OracleReport& report);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double value);

}  // namespace rwl
