#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kn3/levi.hpp"

namespace kn3 {

// A closed trail in m(K_order - excluded), stored as a cyclic vertex sequence
// with an arbitrary start.  Consecutive entries (with wrap-around) are the
// traversed edges.
struct Circuit {
  Vertex excluded = 0;
  int order = 0;
  int multiplicity = 1;
  std::vector<Vertex> seq;

  std::size_t size() const { return seq.size(); }
  Vertex at(std::ptrdiff_t pos) const;  // cyclic indexing

  Circuit reversed() const;
  Circuit rotated(std::size_t start) const;
};

// Equality up to choice of starting point.
bool same_cycle(const Circuit& a, const Circuit& b);
// Equality up to rotation and reversal.
bool equivalent_cycle(const Circuit& a, const Circuit& b);

struct Transition {
  Vertex a = 0;
  Vertex mid = 0;
  Vertex b = 0;

  Transition reversed() const { return {b, mid, a}; }
  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

std::string to_string(const Transition& t);

struct EulerianReport {
  bool ok = true;
  std::string message;
  // First offending pair (u < w) with its observed and expected counts.
  Vertex u = 0, w = 0;
  int count = 0, expected = 0;
};

EulerianReport validate_eulerian(const Circuit& c);

// All (prev, j, next) around occurrences of j, in scan order from the stored
// start.  Throws VertexAbsent when j never occurs.
std::vector<Transition> transitions_through(const Circuit& c, Vertex j);

bool is_compatible(const Circuit& ti, const Circuit& tj);
bool is_strongly_compatible(const Circuit& ti, const Circuit& tj);

// Circuits T_1..T_n with T_i stored at index i-1.
struct EmbeddingSet {
  int n = 0;
  int m = 1;
  bool strong = true;
  std::vector<Circuit> circuits;

  const Circuit& T(Vertex i) const { return circuits.at(i - 1); }
  Circuit& T(Vertex i) { return circuits.at(i - 1); }
  HypergraphSpec spec() const { return {n, m}; }
};

struct SetReport {
  enum class Failure { None, Shape, Eulerian, Compatibility, Strength };

  bool ok = true;
  Failure failure = Failure::None;
  Vertex i = 0, j = 0;                // failing circuit (i) or pair (i, j)
  std::optional<Transition> witness;  // transition of T_i through j
  std::string message;
  // Every pair failing the same check, row-major (i, j) with i < j.
  std::vector<std::pair<Vertex, Vertex>> failing_pairs;
};

const char* to_string(SetReport::Failure f);

SetReport is_embedding_set(const EmbeddingSet& s, bool require_strong);

// Orientation flags (true = reverse T_i) turning a compatible set into a
// strong one, or nullopt when no choice of directions works.
std::optional<std::vector<bool>> strong_orientation(const EmbeddingSet& s);
EmbeddingSet reoriented(const EmbeddingSet& s, const std::vector<bool>& reverse);

// Transitions of one circuit bucketed by middle vertex, each bucket sorted.
class TransitionIndex {
 public:
  TransitionIndex() = default;
  explicit TransitionIndex(const Circuit& c);

  Vertex excluded() const { return excluded_; }
  // Ordered (prev, next) pairs around j.
  const std::vector<std::pair<Vertex, Vertex>>& around(Vertex j) const;

 private:
  Vertex excluded_ = 0;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> by_mid_;
};

// Pair-check kernels over prebuilt indexes.  `compatible_pair` and
// `strong_pair` test one unordered pair; the scan kernels return the first
// failing pair (i < j, row-major) or nullopt.
bool compatible_pair(const TransitionIndex& ti, const TransitionIndex& tj);
bool strong_pair(const TransitionIndex& ti, const TransitionIndex& tj);

namespace kernels {

std::optional<std::pair<Vertex, Vertex>> first_failing_pair_serial(
    const std::vector<TransitionIndex>& index, bool strong);
std::optional<std::pair<Vertex, Vertex>> first_failing_pair_parallel(
    const std::vector<TransitionIndex>& index, bool strong);

}  // namespace kernels

// A transition of T_i through j with no partner in T_j (or nullopt).
std::optional<Transition> compatibility_witness(const Circuit& ti, const Circuit& tj, bool strong);

}  // namespace kn3
