#include "edsim/runner.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edsim {

std::vector<ReplicationResult> run_batch_serial(const ReplicationSetup& setup, uint64_t seed,
                                                int count) {
  std::vector<ReplicationResult> results(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] =
        run_replication(setup, seed, static_cast<uint64_t>(i));
  }
  return results;
}

std::vector<ReplicationResult> run_batch(const ReplicationSetup& setup, uint64_t seed, int count,
                                         int workers) {
  if (count < 0) throw std::invalid_argument("replication count must be >= 0");
  if (workers == 1) return run_batch_serial(setup, seed, count);

  std::vector<ReplicationResult> results(static_cast<std::size_t>(count));
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] =
        run_replication(setup, seed, static_cast<uint64_t>(i));
  }
#else
  for (int i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] =
        run_replication(setup, seed, static_cast<uint64_t>(i));
  }
#endif
  return results;
}

}  // namespace edsim
