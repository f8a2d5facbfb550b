// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria. argv[1] (optional) is the path to the rwlat binary,
// needed by the CLI determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rwlattice/io.hpp"
#include "rwlattice/lattice.hpp"
#include "rwlattice/metrics.hpp"
#include "rwlattice/oracle.hpp"
#include "rwlattice/topology.hpp"

using namespace rwl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << '\n';
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<TopologySpec> verification_matrix() {
  std::vector<TopologySpec> specs;
  for (int n = 1; n <= 10; ++n) specs.push_back(TopologySpec::hypercube(n));
  for (int mu = 2; mu <= 5; ++mu)
    for (int n = 1; n <= 4; ++n) specs.push_back(TopologySpec::mesh(mu, n));
  for (int M = 1; M <= 3; ++M)
    for (int n = 2; n <= 4; ++n) specs.push_back(TopologySpec::symplectic(M, n));
  return specs;
}

std::vector<TopologySpec> symplectic_matrix() {
  std::vector<TopologySpec> specs;
  for (int M = 1; M <= 3; ++M)
    for (int n = 2; n <= 4; ++n) specs.push_back(TopologySpec::symplectic(M, n));
  return specs;
}

// 1. Exact node counts, < 1 s.
void criterion_node_counts() {
  const auto start = Clock::now();
  const std::vector<std::pair<TopologySpec, std::uint64_t>> expected = {
      {TopologySpec::symplectic(2, 5), 1563},
      {TopologySpec::symplectic(2, 6), 7813},
      {TopologySpec::symplectic(2, 10), 4'882'813},
      {TopologySpec::symplectic(1, 8), 3281},
      {TopologySpec::symplectic(1, 9), 9842},
      {TopologySpec::symplectic(5, 3), 666},
      {TopologySpec::symplectic(5, 4), 7321},
      {TopologySpec::symplectic(4, 2), 41},
      {TopologySpec::symplectic(3, 3), 172},
      {TopologySpec::symplectic(2, 4), 313},
      {TopologySpec::hypercube(12), 4096},
      {TopologySpec::hypercube(20), 1'048'576},
  };
  bool pass = true;
  std::ostringstream detail;
  for (const auto& [spec, want] : expected) {
    const auto got = node_count(spec);
    if (got != want) {
      pass = false;
      detail << format_spec(spec) << " gave " << got << ", want " << want << "; ";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    pass = false;
    detail << "took " << elapsed << " s (limit 1 s)";
  }
  report(1, "node counts (exact)", pass,
         pass ? std::to_string(expected.size()) + " instances" : detail.str());
}

// 2. Diameters: L = M n, matched pairings, and BFS agreement on small
// instances.
void criterion_diameters() {
  bool pass = true;
  std::ostringstream detail;
  auto expect = [&](std::uint64_t got, std::uint64_t want, const std::string& what) {
    if (got != want) {
      pass = false;
      detail << what << " gave " << got << ", want " << want << "; ";
    }
  };

  for (const auto& spec : symplectic_matrix())
    expect(diameter(spec),
           static_cast<std::uint64_t>(spec.M) * static_cast<std::uint64_t>(spec.n),
           format_spec(spec));

  const std::pair<TopologySpec, TopologySpec> matched[] = {
      {TopologySpec::hypercube(10), TopologySpec::symplectic(2, 5)},
      {TopologySpec::hypercube(12), TopologySpec::symplectic(2, 6)},
      {TopologySpec::hypercube(20), TopologySpec::symplectic(2, 10)},
      {TopologySpec::hypercube(8), TopologySpec::symplectic(1, 8)},
      {TopologySpec::hypercube(9), TopologySpec::symplectic(1, 9)},
      {TopologySpec::mesh(6, 3), TopologySpec::symplectic(5, 3)},
      {TopologySpec::mesh(6, 4), TopologySpec::symplectic(5, 4)},
  };
  const std::uint64_t matched_values[] = {10, 12, 20, 8, 9, 15, 20};
  for (size_t i = 0; i < std::size(matched); ++i) {
    expect(diameter(matched[i].first), matched_values[i],
           format_spec(matched[i].first));
    expect(diameter(matched[i].second), matched_values[i],
           format_spec(matched[i].second));
  }

  // Brute-force agreement: the farthest node from the zero corner sits at
  // the closed-form diameter.
  for (const auto& spec : symplectic_matrix()) {
    std::int64_t ecc = 0;
    for (auto d : bfs_distances(0, spec)) ecc = std::max(ecc, d);
    expect(static_cast<std::uint64_t>(ecc), diameter(spec),
           "BFS eccentricity of node 0 in " + format_spec(spec));
  }
  report(2, "diameters (exact, matched pairings)", pass, detail.str());
}

// 3. Zero distance mismatches over the whole verification matrix, < 60 s.
void criterion_oracle_certification() {
  const auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;
  std::uint64_t pairs = 0;
  for (const auto& spec : verification_matrix()) {
    if (node_count(spec) > 2000) {
      pass = false;
      detail << format_spec(spec) << " exceeds the 2000-node matrix bound; ";
      continue;
    }
    const auto report_ = verify_distances(spec);
    pairs += report_.pairs_checked;
    if (!report_.mismatches.empty()) {
      pass = false;
      detail << format_spec(spec) << " has " << report_.mismatches.size()
             << " mismatches; ";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    pass = false;
    detail << "took " << elapsed << " s (limit 60 s)";
  }
  report(3, "closed-form distance equals all-pairs BFS", pass,
         pass ? std::to_string(pairs) + " pairs, " +
                    format_double(elapsed) + " s"
              : detail.str());
}

// 4. Degree bounds across the symplectic matrix.
void criterion_degree_bounds() {
  bool pass = true;
  std::ostringstream detail;
  std::ostringstream attained;
  for (const auto& spec : symplectic_matrix()) {
    const auto r = verify_degree_bounds(spec);
    const auto n = static_cast<std::uint64_t>(spec.n);
    if (r.min_degree_seen != n * (n + 1) / 2) {
      pass = false;
      detail << format_spec(spec) << " min degree " << r.min_degree_seen
             << ", want " << n * (n + 1) / 2 << "; ";
    }
    if (spec.M >= 2) {
      if (r.max_degree_seen != 2 * n * n) {
        pass = false;
        detail << format_spec(spec) << " max degree " << r.max_degree_seen
               << ", want " << 2 * n * n << "; ";
      }
    } else {
      if (r.max_degree_seen >= 2 * n * n) {
        pass = false;
        detail << format_spec(spec) << " M=1 max degree " << r.max_degree_seen
               << " not below 2n^2 = " << 2 * n * n << "; ";
      }
      attained << "M=1,n=" << spec.n << " attains " << r.max_degree_seen << "/"
               << 2 * n * n << "; ";
    }
    if (!r.degree_bounds_ok) {
      pass = false;
      detail << format_spec(spec) << " bounds flagged; ";
    }
  }
  report(4, "degree bounds (min n(n+1)/2; max 2n^2 for M>=2; M=1 below)", pass,
         pass ? attained.str() : detail.str());
}

// 5. Density closed forms over the whole grid at 1e-12 relative error.
void criterion_density_formulas() {
  constexpr double kRelTol = 1e-12;
  bool pass = true;
  std::ostringstream detail;
  auto expect = [&](double got, double want, const std::string& what) {
    if (std::abs(got - want) >
        kRelTol * std::max(std::abs(got), std::abs(want))) {
      pass = false;
      detail << what << " gave " << got << ", want " << want << "; ";
    }
  };
  for (int n = 2; n <= 10; ++n) {
    expect(density(TopologySpec::hypercube(n)), std::pow(2.0 / n, n),
           "rho hypercube n=" + std::to_string(n));
    for (int mu = 2; mu <= 9; ++mu) {
      expect(density(TopologySpec::mesh(mu, n)),
             std::pow(mu / ((mu - 1.0) * n), n),
             "rho mesh mu=" + std::to_string(mu));
      expect(density_ratio(TopologySpec::hypercube(n), TopologySpec::mesh(mu, n)),
             std::pow(2.0 * (1.0 - 1.0 / mu), n),
             "rho_h/rho_m mu=" + std::to_string(mu));
    }
    for (int M = 1; M <= 5; ++M) {
      expect(density(TopologySpec::symplectic(M, n)),
             (std::pow(2.0 * M + 1.0, n) + 1.0) /
                 (2.0 * std::pow(static_cast<double>(M) * n, n)),
             "rho symplectic M=" + std::to_string(M));
      expect(density_ratio(TopologySpec::symplectic(M, n),
                           TopologySpec::hypercube(n)),
             0.5 * (std::pow(2.0 * M + 1.0, n) + 1.0) / std::pow(2.0 * M, n),
             "rho_s/rho_h M=" + std::to_string(M));
      const int mu = M + 1;  // matched dimension and diameter
      const double x = 1.0 / (2.0 * mu);
      expect(density_ratio(TopologySpec::symplectic(M, n),
                           TopologySpec::mesh(mu, n)),
             std::pow(2.0, n - 1) * (std::pow(1.0 - x, n) + std::pow(x, n)),
             "rho_s/rho_m M=" + std::to_string(M));
    }
  }
  report(5, "density and density-ratio closed forms (1e-12 relative)", pass,
         detail.str());
}

// 6. Matched-diameter exact histograms: hypercube n=10 vs symplectic M=2,n=5.
void criterion_matched_histograms() {
  bool pass = true;
  std::ostringstream detail;
  const auto hyper = TopologySpec::hypercube(10);
  const auto sympl = TopologySpec::symplectic(2, 5);
  if (diameter(hyper) != 10 || diameter(sympl) != 10) {
    pass = false;
    detail << "diameters differ; ";
  }
  const auto hh = path_length_histogram(hyper);
  const auto hs = path_length_histogram(sympl);
  const std::uint64_t nu_h = node_count(hyper), nu_s = node_count(sympl);
  if (hh.total_pairs != nu_h * (nu_h - 1) / 2) {
    pass = false;
    detail << "hypercube total " << hh.total_pairs << "; ";
  }
  if (hs.total_pairs != nu_s * (nu_s - 1) / 2) {
    pass = false;
    detail << "symplectic total " << hs.total_pairs << "; ";
  }
  std::uint64_t sum_h = 0, sum_s = 0;
  for (auto c : hh.counts) sum_h += c;
  for (auto c : hs.counts) sum_s += c;
  if (sum_h != hh.total_pairs || sum_s != hs.total_pairs) {
    pass = false;
    detail << "histogram sums disagree with totals; ";
  }
  if (!(hs.mean() < hh.mean())) {
    pass = false;
    detail << "symplectic mean " << hs.mean() << " not below hypercube mean "
           << hh.mean() << "; ";
  }
  report(6, "matched-diameter exact histograms (n=10 pair)", pass,
         pass ? "means " + format_double(hs.mean()) + " < " +
                    format_double(hh.mean())
              : detail.str());
}

// 7. Desk-scale sampled comparison, < 30 s.
void criterion_sampled_comparison() {
  const auto start = Clock::now();
  bool pass = true;
  std::ostringstream detail;

  const std::uint64_t samples = 1'000'000;
  {
    const int n = 20;
    const auto h = path_length_histogram_sampled(TopologySpec::hypercube(n),
                                                 samples, 42);
    // Exact mean over unordered distinct pairs: n 2^(n-1) / (2^n - 1).
    const double exact = n * std::pow(2.0, n - 1) / (std::pow(2.0, n) - 1.0);
    const double mean = h.mean();
    double var = 0;
    for (size_t d = 1; d < h.counts.size(); ++d)
      var += static_cast<double>(h.counts[d]) * (d - mean) * (d - mean);
    var /= static_cast<double>(h.total_pairs - 1);
    const double se = std::sqrt(var / static_cast<double>(h.total_pairs));
    if (std::abs(mean - exact) > 3 * se) {
      pass = false;
      detail << "hypercube n=20 sampled mean " << mean << " outside " << exact
             << " +- 3*" << se << "; ";
    } else {
      detail << "hypercube mean " << format_double(mean) << " vs exact "
             << format_double(exact) << "; ";
    }
  }
  {
    const auto h = path_length_histogram_sampled(TopologySpec::symplectic(2, 10),
                                                 samples, 42);
    const double mean = h.mean();
    if (std::abs(mean - 8.0) > 0.1) {
      pass = false;
      detail << "symplectic M=2,n=10 sampled mean " << mean
             << " outside 8.0 +- 0.1; ";
    } else {
      detail << "symplectic mean " << format_double(mean) << " = 8.0 +- 0.1";
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    pass = false;
    detail << "; took " << elapsed << " s (limit 30 s)";
  }
  report(7, "sampled means at desk scale (1e6 pairs)", pass, detail.str());
}

// 8. Even labels, even neighbor differences, admissible census.
void criterion_parity_and_census() {
  bool pass = true;
  std::ostringstream detail;
  for (const auto& spec : symplectic_matrix()) {
    Lattice lat(spec);
    const std::uint64_t nu = lat.node_count();
    for (std::uint64_t i = 0; i < nu; ++i) {
      if (lat.label_of_index(i) % 2 != 0) {
        pass = false;
        detail << format_spec(spec) << " node " << i << " has odd label; ";
        break;
      }
    }
    std::uint64_t odd_diffs = 0;
    for_each_edge(spec, [&](const Edge& e) {
      if ((e.v - e.u) % 2 != 0 || e.u % 2 != 0 || e.v % 2 != 0) ++odd_diffs;
    });
    if (odd_diffs) {
      pass = false;
      detail << format_spec(spec) << " has " << odd_diffs
             << " odd neighbor differences; ";
    }
    // Census over the whole enclosing lattice.
    std::uint64_t admissible = 0;
    NodeAddress addr;
    const std::uint64_t total = lat.power(spec.n);
    for (std::uint64_t kappa = 0; kappa < total; ++kappa) {
      lat.unlabel_into(kappa, addr);
      if (lat.is_admissible(addr)) ++admissible;
    }
    if (admissible != nu) {
      pass = false;
      detail << format_spec(spec) << " census " << admissible << ", want " << nu
             << "; ";
    }
  }
  report(8, "even labels, even neighbor differences, admissible census", pass,
         detail.str());
}

// 9. Byte-identical sampled CSV across 1, 2, and 8 worker threads.
void criterion_thread_determinism(const char* rwlat_path) {
  bool pass = true;
  std::ostringstream detail;

  // Library level.
  const auto spec = TopologySpec::symplectic(2, 5);
  std::string reference;
  for (int threads : {1, 2, 8}) {
    std::ostringstream os;
    write_histogram_csv(os, path_length_histogram_sampled(spec, 100'000, 7, threads),
                        spec);
    if (reference.empty())
      reference = os.str();
    else if (os.str() != reference) {
      pass = false;
      detail << "library CSV differs at " << threads << " threads; ";
    }
  }

  // CLI level, through the real binary.
  if (rwlat_path != nullptr) {
    const auto dir = std::filesystem::temp_directory_path();
    std::string cli_reference;
    for (int threads : {1, 2, 8}) {
      const auto out = dir / ("rwlat_det_" + std::to_string(threads) + ".csv");
      std::ostringstream cmd;
      cmd << '"' << rwlat_path << '"' << " --threads " << threads
          << " histogram symplectic:M=2,n=5 --sample 100000 --seed 7 --out "
          << '"' << out.string() << '"';
      if (std::system(cmd.str().c_str()) != 0) {
        pass = false;
        detail << "CLI run failed at " << threads << " threads; ";
        continue;
      }
      std::ifstream in(out, std::ios::binary);
      std::stringstream buffer;
      buffer << in.rdbuf();
      if (cli_reference.empty())
        cli_reference = buffer.str();
      else if (buffer.str() != cli_reference) {
        pass = false;
        detail << "CLI CSV differs at " << threads << " threads; ";
      }
      std::filesystem::remove(out);
    }
    if (pass && cli_reference != reference) {
      pass = false;
      detail << "CLI and library CSVs differ; ";
    }
  } else {
    detail << "library level only (no rwlat path given)";
  }
  report(9, "sampled CSV byte-identical across 1/2/8 threads", pass,
         detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  const char* rwlat_path = argc > 1 ? argv[1] : nullptr;
  try {
    criterion_node_counts();
    criterion_diameters();
    criterion_oracle_certification();
    criterion_degree_bounds();
    criterion_density_formulas();
    criterion_matched_histograms();
    criterion_sampled_comparison();
    criterion_parity_and_census();
    criterion_thread_determinism(rwlat_path);
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance suite aborted: " << e.what() << '\n';
    return 99;
  }
  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << '\n';
  return g_failures;
}
