#pragma once

#include "egz/generate.hpp"
#include "egz/state.hpp"

#include <cstdint>
#include <string>

namespace egz {

enum class BenchMode : std::uint8_t { PrimeTarget, Egz };

struct BenchRecord {
  std::uint64_t n = 0;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t owner_reads = 0;
  std::uint64_t owner_writes = 0;
  std::uint64_t owner_clears = 0;
  std::uint64_t cells_scanned = 0;
  std::uint64_t merges = 0;
  std::uint64_t extensions = 0;
  std::uint64_t recon_nodes = 0;
  double touches_per_p = 0;
};

/// Generates one instance and times only the solve. In prime-target mode n
/// must be prime and the target is drawn from the same seed.
BenchRecord bench_one(BenchMode mode, std::uint64_t n, std::uint64_t seed, Distribution dist);

BenchRecord make_record(std::uint64_t n, std::uint64_t wall_time_ns,
                        const InstrumentationCounters& c);

std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& r);

}  // namespace egz
