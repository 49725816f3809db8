#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "kn3/circuits.hpp"

namespace kn3 {

enum class BaseKind {
  Orientable4,          // planar K_4^3
  Nonorientable6,       // non-strong set of K_6^3
  MultiNonorientable4,  // 2K_4^3 on the Klein bottle
};

EmbeddingSet base_set(BaseKind kind);
// The strong genus-3 embedding set of K_6^3 shipped as a reference fixture.
EmbeddingSet strong_example_6();

// Permutation of [n] \ {i, i+1} used to build the insertion trails (i odd).
std::vector<Vertex> build_sigma(Vertex i, int n);

// Trail spliced into T_i when going from n to n+2.  Apex labels are x = n+1
// and y = n+2.
struct InsertionTrail {
  Vertex i = 0;
  int n = 0;
  std::vector<Vertex> seq;
};

InsertionTrail build_insertion(Vertex i, int n);

// Circuits of the two new vertices: first excludes x = n+1, second y = n+2.
std::pair<Circuit, Circuit> build_apex_circuits(int n);

// Degrees of freedom of one induction step n -> n+2.
struct StepChoice {
  // pick[(i-1)/2]: which occurrence of i+1 in T_i (scan order) to break.
  // Missing entries mean the first occurrence.
  std::vector<std::size_t> pick;
  // Relabelling applied before the step and undone afterwards; entry v-1 is
  // the working label of v.  Working pairs (1,2),(3,4),... then realise any
  // perfect matching of [n] with either role inside a pair.  Empty = identity.
  std::vector<Vertex> relabel;
  bool swap_apex = false;  // exchange the labels n+1 and n+2 afterwards
};

struct TransitionChoice {
  std::vector<Vertex> base_relabel;  // applied to the base set first; empty = identity
  std::vector<StepChoice> steps;     // steps[k] drives the k-th step from the base
};

struct StepResult {
  EmbeddingSet set;
  // broken[i-1]: the transition of T_i that was split, as it reads in the
  // input circuit (after an orientation flip of T_{i+1}, if one was needed).
  std::vector<Transition> broken;
  std::vector<bool> flipped;  // T_i had to be reversed before splicing
};

StepResult extend_by_two(const EmbeddingSet& s, const StepChoice& choice = {});

struct BuildOptions {
  std::optional<std::uint64_t> seed;       // uniform random picks when set
  std::optional<TransitionChoice> choice;  // explicit picks, wins over seed
};

EmbeddingSet build_even(int n, bool orientable, const BuildOptions& options = {});
EmbeddingSet build_multi(int n, int m, bool orientable, std::optional<std::uint64_t> seed = std::nullopt);

// One step of the multiplicity induction: splice `fresh` (an embedding set of
// K_n^3) into `target` (of mK_n^3).  Returns an embedding set of (m+1)K_n^3.
EmbeddingSet splice_layer(const EmbeddingSet& target, const EmbeddingSet& fresh,
                          std::optional<std::uint64_t> seed = std::nullopt);

// T_{perm(i)} := perm(T_i); perm[v-1] is the image of v.
EmbeddingSet relabel(const EmbeddingSet& s, std::span<const Vertex> perm);

using Rng = std::mt19937_64;

// Uniform-enough index in [0, bound); avoids the implementation-defined
// standard distributions so seeded output is identical across toolchains.
inline std::size_t draw_below(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace kn3
