#pragma once

#include <cstdint>
#include <vector>

#include "rwlattice/lattice.hpp"

namespace rwl {

inline constexpr std::uint64_t kDefaultPairBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultSummaryEnumerationBudget = 10'000;

/// Shortest-path distance from coordinates alone: sum |l_i - l_i'| for mesh
/// and hypercube, half of it for symplectic (edges there have length two in
/// the enclosing lattice). Both addresses must be admissible.
std::int64_t distance(const NodeAddress& a, const NodeAddress& b,
                      const TopologySpec& spec);

/// n (hypercube), (mu-1) n (mesh), or M n (symplectic).
std::uint64_t diameter(const TopologySpec& spec);

/// Packing density nu / L^n used to compare topologies of equal diameter.
double density(const TopologySpec& spec);

/// density(a) / density(b).
double density_ratio(const TopologySpec& a, const TopologySpec& b);

/// One characteristics row: node count, diameter, degree extrema, density.
struct TopologySummary {
  std::uint64_t nu = 0;
  std::uint64_t diameter = 0;
  std::uint64_t eps_max = 0;
  std::uint64_t eps_min = 0;
  double rho = 0.0;
  /// True when eps_max was measured by degree enumeration instead of the
  /// closed form. For symplectic M = 1 the closed-form 2n^2 is only an
  /// upper bound, so the attained maximum is enumerated whenever
  /// nu <= enumeration_budget.
  bool eps_max_enumerated = false;
};

TopologySummary summary(
    const TopologySpec& spec,
    std::uint64_t enumeration_budget = kDefaultSummaryEnumerationBudget);

/// Distance census over node pairs. counts[d] is the number of unordered
/// distinct pairs at distance d (exact mode) or the number of sampled pairs
/// at distance d (sampled mode); counts[0] is always zero and the vector
/// extends to the spec's diameter.
struct PathLengthHistogram {
  enum class Mode { Exact, Sampled };

  std::vector<std::uint64_t> counts;
  std::uint64_t total_pairs = 0;
  Mode mode = Mode::Exact;
  std::uint64_t seed = 0;         // sampled mode only
  std::uint64_t sample_size = 0;  // sampled mode only

  /// sum d * counts[d] / total_pairs; throws DomainError when empty.
  double mean() const;
};

/// Exact histogram over all nu(nu-1)/2 unordered distinct pairs, evaluated
/// with the closed-form distance. Throws CapacityError naming the sampled
/// variant when the pair count exceeds pair_budget. threads <= 0 picks the
/// hardware concurrency; the result is identical for every thread count.
PathLengthHistogram path_length_histogram(
    const TopologySpec& spec, std::uint64_t pair_budget = kDefaultPairBudget,
    int threads = 0);

/// Histogram over sample_size uniform unordered distinct node pairs.
/// Deterministic for a fixed seed regardless of thread count: samples are
/// drawn in fixed 65536-pair blocks, block b seeded with the b-th
/// splitmix64 output of seed feeding an mt19937_64 with mask-rejection
/// bounded draws, and worker threads only steal whole blocks.
PathLengthHistogram path_length_histogram_sampled(const TopologySpec& spec,
                                                  std::uint64_t sample_size,
                                                  std::uint64_t seed,
                                                  int threads = 0);

double mean_path_length(const PathLengthHistogram& histogram);

/// Identifier of the sampled-mode generator, recorded in CSV metadata.
const char* sampling_rng_id();

}  // namespace rwl
