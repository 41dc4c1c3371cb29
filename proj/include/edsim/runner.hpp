#pragma once

#include <vector>

#include "edsim/replication.hpp"

namespace edsim {

/// Runs `count` replications. `workers` > 1 runs them in parallel when
/// OpenMP is available; results land in a preallocated slot per replication
/// index, so the output is identical to the serial path in order and value.
/// workers == 0 means one thread per available core.
std::vector<ReplicationResult> run_batch(const ReplicationSetup& setup, uint64_t seed, int count,
                                         int workers);

/// Plain loop reference implementation, kept for equality testing and
/// benchmarking against the parallel path.
std::vector<ReplicationResult> run_batch_serial(const ReplicationSetup& setup, uint64_t seed,
                                                int count);

}  // namespace edsim
