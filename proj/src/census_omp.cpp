#include <omp.h>

#include "kn3/census.hpp"

namespace kn3::kernels {

std::vector<std::optional<EmbeddingSet>> build_attempts_parallel(int n, bool orientable, std::uint64_t seed,
                                                                 std::size_t first, std::size_t count) {
  std::vector<std::optional<EmbeddingSet>> out(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < total; ++k)
    out[static_cast<std::size_t>(k)] = build_attempt(n, orientable, seed, first + static_cast<std::size_t>(k));
  return out;
}

}  // namespace kn3::kernels
