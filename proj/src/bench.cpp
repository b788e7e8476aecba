#include "egz/bench.hpp"

#include "egz/egz.hpp"
#include "egz/errors.hpp"
#include "egz/prime_target.hpp"

#include <chrono>
#include <cstdio>
#include <random>

namespace egz {

BenchRecord make_record(std::uint64_t n, std::uint64_t wall_time_ns,
                        const InstrumentationCounters& c) {
  BenchRecord r;
  r.n = n;
  r.wall_time_ns = wall_time_ns;
  r.owner_reads = c.owner_reads;
  r.owner_writes = c.owner_writes;
  r.owner_clears = c.owner_clears;
  r.cells_scanned = c.cells_scanned;
  r.merges = c.merges;
  r.extensions = c.extensions;
  r.recon_nodes = c.recon_nodes;
  r.touches_per_p = static_cast<double>(c.touches()) / static_cast<double>(n);
  return r;
}

BenchRecord bench_one(BenchMode mode, std::uint64_t n, std::uint64_t seed, Distribution dist) {
  using clock = std::chrono::steady_clock;
  if (mode == BenchMode::PrimeTarget) {
    if (!is_prime_trial(n)) throw InputError("prime-target bench sizes must be prime");
    const std::vector<Residue> d = generate_differences(n, seed, dist);
    const Residue tau = std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL)() % n;
    PrimeTargetSolver solver;
    const auto t0 = clock::now();
    solver.solve(n, d, tau);
    const auto t1 = clock::now();
    return make_record(n, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
                       solver.counters());
  }
  const Instance inst = generate_instance(n, seed, dist);
  EgzSolver solver;
  const auto t0 = clock::now();
  solver.solve(n, inst.values);
  const auto t1 = clock::now();
  return make_record(n, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
                     solver.counters());
}

std::string bench_csv_header() {
  return "n,wall_time_ns,owner_reads,owner_writes,owner_clears,cells_scanned,merges,extensions,"
         "recon_nodes,touches_per_p";
}

std::string to_csv_row(const BenchRecord& r) {
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", r.touches_per_p);
  return std::to_string(r.n) + ',' + std::to_string(r.wall_time_ns) + ',' +
         std::to_string(r.owner_reads) + ',' + std::to_string(r.owner_writes) + ',' +
         std::to_string(r.owner_clears) + ',' + std::to_string(r.cells_scanned) + ',' +
         std::to_string(r.merges) + ',' + std::to_string(r.extensions) + ',' +
         std::to_string(r.recon_nodes) + ',' + ratio;
}

}  // namespace egz
