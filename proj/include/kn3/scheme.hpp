#pragma once

#include <map>
#include <vector>

#include "kn3/circuits.hpp"
#include "kn3/levi.hpp"

namespace kn3 {

// Rotation system plus signature on a Levi graph.  rotation[v] is the cyclic
// order of edge ids around vertex id v; signature[e] is +1 or -1.
struct EmbeddingScheme {
  LeviGraph graph;
  std::vector<std::vector<int>> rotation;
  std::vector<int> signature;

  explicit EmbeddingScheme(LeviGraph g);
};

bool operator==(const EmbeddingScheme& a, const EmbeddingScheme& b);

// Throws PreconditionViolated unless every rotation lists the incident edges
// exactly once and every sign is +1/-1.
void validate_scheme(const EmbeddingScheme& sch);

struct FaceReport {
  int face_count = 0;
  std::vector<int> face_lengths;  // sorted ascending
  int euler_genus = 0;
  bool orientable = true;

  std::map<int, int> histogram() const;
  bool quadrilateral() const;
  friend bool operator==(const FaceReport&, const FaceReport&) = default;
};

FaceReport trace_faces(const EmbeddingScheme& sch);
bool is_orientable(const EmbeddingScheme& sch);
bool is_connected(const EmbeddingScheme& sch);

EmbeddingScheme set_to_scheme(const EmbeddingSet& s);
EmbeddingSet scheme_to_set(const EmbeddingScheme& sch);

// Switching equivalence: some vertex subset U turns a into b by inverting the
// rotations in U and negating signs on edges leaving U.
bool schemes_equivalent(const EmbeddingScheme& a, const EmbeddingScheme& b);

// Operations used by equivalence checks and perturbation tests.
void invert_rotation(EmbeddingScheme& sch, int vid);
void switch_vertex(EmbeddingScheme& sch, int vid);  // invert + negate incident signs

namespace detail {

// triple_of[i-1][p] = triple index of the hyperedge carried by the edge
// (T_i[p], T_i[p+1]).  Throws NotAnEmbeddingSet when no consistent
// assignment of parallel copies exists.
std::vector<std::vector<int>> assign_triples(const EmbeddingSet& s, const LeviGraph& g);

}  // namespace detail

}  // namespace kn3
