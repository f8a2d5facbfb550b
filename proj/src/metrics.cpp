#include "rwlattice/metrics.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "rwlattice/topology.hpp"

namespace rwl {

namespace {

// Deterministic integer power in binary64; repeated multiplication keeps
// results reproducible across libm implementations.
double fpow(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::int64_t coordinate_distance(const NodeAddress& a, const NodeAddress& b) {
  std::int64_t sum = 0;
  for (size_t i = 0; i < a.size(); ++i)
    sum += std::abs(static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]));
  return sum;
}

unsigned __int128 unordered_pair_count(std::uint64_t nu) {
  return static_cast<unsigned __int128>(nu) * (nu - 1) / 2;
}

// The b-th output of splitmix64 seeded with `seed`; block seeds for the
// sampled histogram substreams.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t b) {
  std::uint64_t z = seed + (b + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kSampleBlock = 65536;

}  // namespace

std::int64_t distance(const NodeAddress& a, const NodeAddress& b,
                      const TopologySpec& spec) {
  Lattice lat(spec);
  if (!lat.is_admissible(a) || !lat.is_admissible(b))
    throw InadmissibleNodeError("distance endpoints must be admissible nodes");
  const std::int64_t sum = coordinate_distance(a, b);
  if (spec.family != Family::Symplectic) return sum;
  if (sum & 1)
    throw std::logic_error("odd coordinate distance between admissible "
                           "symplectic nodes");
  return sum / 2;
}

std::uint64_t diameter(const TopologySpec& spec) {
  switch (spec.family) {
    case Family::Hypercube:
      return static_cast<std::uint64_t>(spec.n);
    case Family::Mesh:
      return static_cast<std::uint64_t>(spec.mu - 1) *
             static_cast<std::uint64_t>(spec.n);
    case Family::Symplectic:
      return static_cast<std::uint64_t>(spec.M) * static_cast<std::uint64_t>(spec.n);
  }
  throw DomainError("diameter: invalid family");
}

double density(const TopologySpec& spec) {
  if (spec.n < 1) throw DomainError("density: n must be >= 1");
  const std::uint64_t L = diameter(spec);
  if (L == 0) throw DomainError("density: zero diameter");
  double nu = 0.0;
  switch (spec.family) {
    case Family::Hypercube:
      nu = fpow(2.0, spec.n);
      break;
    case Family::Mesh:
      nu = fpow(static_cast<double>(spec.mu), spec.n);
      break;
    case Family::Symplectic:
      nu = (fpow(static_cast<double>(2 * spec.M + 1), spec.n) + 1.0) / 2.0;
      break;
  }
  return nu / fpow(static_cast<double>(L), spec.n);
}

double density_ratio(const TopologySpec& a, const TopologySpec& b) {
  return density(a) / density(b);
}

TopologySummary summary(const TopologySpec& spec,
                        std::uint64_t enumeration_budget) {
  TopologySummary s;
  s.nu = node_count(spec);
  s.diameter = diameter(spec);
  s.rho = density(spec);
  const auto n = static_cast<std::uint64_t>(spec.n);
  switch (spec.family) {
    case Family::Hypercube:
      s.eps_max = s.eps_min = n;
      break;
    case Family::Mesh:
      s.eps_min = n;
      s.eps_max = spec.mu >= 3 ? 2 * n : n;
      break;
    case Family::Symplectic:
      s.eps_min = n * (n + 1) / 2;
      s.eps_max = 2 * n * n;
      // For M = 1 the lattice is too narrow for any node to take every
      // generator step, so 2n^2 is only a bound; report the attained
      // maximum when enumeration is affordable.
      if (spec.M == 1 && s.nu <= enumeration_budget) {
        NeighborEnumerator enumerator(spec);
        std::vector<NodeLabel> nbrs;
        std::uint64_t max_deg = 0;
        for (std::uint64_t i = 0; i < s.nu; ++i) {
          enumerator.neighbors_of(enumerator.lattice().label_of_index(i), nbrs);
          max_deg = std::max(max_deg, static_cast<std::uint64_t>(nbrs.size()));
        }
        s.eps_max = max_deg;
        s.eps_max_enumerated = true;
      }
      break;
  }
  return s;
}

double PathLengthHistogram::mean() const {
  if (total_pairs == 0) throw DomainError("mean of an empty histogram");
  unsigned __int128 weighted = 0;
  for (size_t d = 1; d < counts.size(); ++d)
    weighted += static_cast<unsigned __int128>(counts[d]) * d;
  return static_cast<double>(weighted) / static_cast<double>(total_pairs);
}

double mean_path_length(const PathLengthHistogram& histogram) {
  return histogram.mean();
}

PathLengthHistogram path_length_histogram(const TopologySpec& spec,
                                          std::uint64_t pair_budget,
                                          int threads) {
  Lattice lat(spec);
  const std::uint64_t nu = lat.node_count();
  const unsigned __int128 pairs = unordered_pair_count(nu);
  if (pairs > pair_budget)
    throw CapacityError("exact histogram for " + format_spec(spec) +
                        " needs more pair evaluations than the pair budget (" +
                        std::to_string(pair_budget) +
                        ") allows; use path_length_histogram_sampled");

  const int n = spec.n;
  const std::uint64_t L = diameter(spec);
  const bool halve = spec.family == Family::Symplectic;

  // Address table, row-major: nu is at most ~sqrt(2 * pair_budget), so this
  // stays small.
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

  const int workers = detail::resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> local(
      static_cast<size_t>(workers), std::vector<std::uint64_t>(L + 1, 0));
  std::atomic<bool> parity_violation{false};

  detail::run_workers(workers, [&](int t) {
    auto& counts = local[static_cast<size_t>(t)];
    // Row stripes i = t, t+W, ... balance the triangular pair loop.
    for (std::uint64_t i = static_cast<std::uint64_t>(t); i < nu;
         i += static_cast<std::uint64_t>(workers)) {
      const std::int32_t* ai = table.data() + i * static_cast<std::uint64_t>(n);
      for (std::uint64_t j = i + 1; j < nu; ++j) {
        const std::int32_t* bj = table.data() + j * static_cast<std::uint64_t>(n);
        std::int64_t d = 0;
        for (int k = 0; k < n; ++k)
          d += std::abs(static_cast<std::int64_t>(ai[k]) - bj[k]);
        if (halve) {
          if (d & 1) {
            parity_violation.store(true);
            return;
          }
          d /= 2;
        }
        ++counts[static_cast<size_t>(d)];
      }
    }
  });
  if (parity_violation.load())
    throw std::logic_error("odd coordinate distance between admissible "
                           "symplectic nodes");

  PathLengthHistogram h;
  h.mode = PathLengthHistogram::Mode::Exact;
  h.counts.assign(L + 1, 0);
  for (const auto& counts : local)
    for (size_t d = 0; d <= L; ++d) h.counts[d] += counts[d];
  h.total_pairs = static_cast<std::uint64_t>(pairs);
  return h;
}

const char* sampling_rng_id() {
  return "splitmix64-block/mt19937_64/mask-rejection,block=65536";
}

PathLengthHistogram path_length_histogram_sampled(const TopologySpec& spec,
                                                  std::uint64_t sample_size,
                                                  std::uint64_t seed,
                                                  int threads) {
  if (sample_size < 1) throw DomainError("sample_size must be >= 1");
  Lattice lat(spec);
  const std::uint64_t nu = lat.node_count();
  if (nu < 2) throw DomainError("sampling needs at least two nodes");
  if (nu > (std::uint64_t{1} << 63))
    throw CapacityError("sampling index space for " + format_spec(spec) +
                        " exceeds the supported range");

  const std::uint64_t L = diameter(spec);
  const bool halve = spec.family == Family::Symplectic;
  const std::uint64_t blocks = (sample_size + kSampleBlock - 1) / kSampleBlock;
  const std::uint64_t mask = std::bit_ceil(nu) - 1;

  const int workers = detail::resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> local(
      static_cast<size_t>(workers), std::vector<std::uint64_t>(L + 1, 0));
  std::atomic<std::uint64_t> next_block{0};

  detail::run_workers(workers, [&](int t) {
    auto& counts = local[static_cast<size_t>(t)];
    NodeAddress a, b;
    for (;;) {
      const std::uint64_t block = next_block.fetch_add(1);
      if (block >= blocks) return;
      const std::uint64_t block_samples =
          std::min(kSampleBlock, sample_size - block * kSampleBlock);
      std::mt19937_64 eng(splitmix64_at(seed, block));
      auto draw = [&]() {
        std::uint64_t x;
        do {
          x = eng() & mask;
        } while (x >= nu);
        return x;
      };
      for (std::uint64_t s = 0; s < block_samples; ++s) {
        std::uint64_t i, j;
        do {
          i = draw();
          j = draw();
        } while (i == j);
        lat.unlabel_into(lat.label_of_index(i), a);
        lat.unlabel_into(lat.label_of_index(j), b);
        std::int64_t d = coordinate_distance(a, b);
        if (halve) d /= 2;
        ++counts[static_cast<size_t>(d)];
      }
    }
  });

  PathLengthHistogram h;
  h.mode = PathLengthHistogram::Mode::Sampled;
  h.seed = seed;
  h.sample_size = sample_size;
  h.counts.assign(L + 1, 0);
  for (const auto& counts : local)
    for (size_t d = 0; d <= L; ++d) h.counts[d] += counts[d];
  h.total_pairs = sample_size;
  return h;
}

}  // namespace rwl
