#include <limits>

#include "kn3/circuits.hpp"

namespace kn3::kernels {

// Same contract as first_failing_pair_serial: the smallest failing pair in
// row-major order, independent of thread count.
std::optional<std::pair<Vertex, Vertex>> first_failing_pair_parallel(
    const std::vector<TransitionIndex>& index, bool strong) {
  const long long n = static_cast<long long>(index.size());
  const long long pairs = n * n;
  long long first = std::numeric_limits<long long>::max();

#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (long long k = 0; k < pairs; ++k) {
    const long long a = k / n, b = k % n;
    if (b <= a || k >= first) continue;
    const bool ok = strong ? strong_pair(index[a], index[b]) : compatible_pair(index[a], index[b]);
    if (!ok && k < first) first = k;
  }

  if (first == std::numeric_limits<long long>::max()) return std::nullopt;
  return std::pair<Vertex, Vertex>{index[first / n].excluded(), index[first % n].excluded()};
}

}  // namespace kn3::kernels
