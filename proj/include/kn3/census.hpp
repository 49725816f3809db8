#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kn3/builder.hpp"
#include "kn3/circuits.hpp"

namespace kn3 {

using BigInt = boost::multiprecision::cpp_int;

// Lexicographically least sequence among all rotations of `seq` and of its
// reversal.
std::vector<Vertex> canonical_cycle(std::span<const Vertex> seq);

struct CanonicalSet {
  int n = 0;
  int m = 1;
  std::vector<std::vector<Vertex>> circuits;  // canonical T_1..T_n

  std::uint64_t hash() const;
  friend bool operator==(const CanonicalSet&, const CanonicalSet&) = default;
  friend auto operator<=>(const CanonicalSet&, const CanonicalSet&) = default;
};

CanonicalSet canonicalize(const EmbeddingSet& s);
bool sets_equivalent(const EmbeddingSet& a, const EmbeddingSet& b);

// The set rebuilt from its canonical circuits.
EmbeddingSet to_set(const CanonicalSet& c, bool strong);

// A permutation sigma (sigma[v-1] = image of v) with relabel(a, sigma)
// equivalent to b.  Throws BoundExceeded when n > bound.
std::optional<std::vector<Vertex>> sets_isomorphic(const EmbeddingSet& a, const EmbeddingSet& b, int bound = 10);

// Random degrees of freedom for build_even(n, orientable) from its base.
TransitionChoice random_choice(int n, bool orientable, Rng& rng);

struct EnumerateOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 0;  // build attempts; 0 means 50 x count
  bool parallel = true;
  std::size_t batch = 64;
  std::vector<EmbeddingSet> resume;  // classes already found (e.g. from a census file)
};

struct EnumerationResult {
  std::vector<EmbeddingSet> sets;
  std::size_t attempts = 0;
  std::size_t duplicates = 0;
  std::size_t rejected = 0;  // builds that failed verification or changed orientability
  bool budget_exhausted = false;
};

EnumerationResult enumerate_variants(int n, bool orientable, std::size_t count, const EnumerateOptions& options = {});

// Full verification used by the enumerator: embedding set, strength per
// `orientable`, quadrilateral faces at minimum Euler genus, orientability.
bool verified_minimum(const EmbeddingSet& s, bool orientable);

namespace kernels {

// Builds attempts [first, first + count) of a seeded run and returns the
// verified ones (nullopt for rejects), in attempt order.
std::vector<std::optional<EmbeddingSet>> build_attempts_serial(int n, bool orientable, std::uint64_t seed,
                                                               std::size_t first, std::size_t count);
std::vector<std::optional<EmbeddingSet>> build_attempts_parallel(int n, bool orientable, std::uint64_t seed,
                                                                 std::size_t first, std::size_t count);
std::optional<EmbeddingSet> build_attempt(int n, bool orientable, std::uint64_t seed, std::size_t attempt);

}  // namespace kernels

// Every equivalence class of embedding sets of K_n^3 by brute force over
// Eulerian circuits.  Only n = 4 is tractable; larger n throw BoundExceeded.
std::vector<CanonicalSet> exhaustive_classes(int n);

BigInt double_factorial(int k);
BigInt count_lower_bound(int n);
// The same bound written as a product over k = 2..(n-2)/2.
BigInt count_lower_bound_product(int n);
BigInt count_upper_bound(int n);

namespace census {

inline constexpr std::string_view kDigestPrefix = "# digest ";

std::string digest(const CanonicalSet& c);
std::string write(const std::vector<EmbeddingSet>& sets);
// Checks each digest line against its record; throws ParseError on mismatch.
std::vector<EmbeddingSet> parse(std::string_view text);

}  // namespace census

}  // namespace kn3
