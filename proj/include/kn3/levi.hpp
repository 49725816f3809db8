#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kn3 {

using Vertex = int;  // hypergraph vertex label, 1-based

// The m-fold complete 3-uniform hypergraph mK_n^3.
struct HypergraphSpec {
  int n = 4;
  int m = 1;

  void validate() const;  // throws Error(InvalidSpec)

  std::int64_t edge_count() const;        // m * C(n,3)
  std::int64_t levi_vertex_count() const;  // n + m * C(n,3)
  std::int64_t levi_edge_count() const;    // 3 * m * C(n,3)
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

// A hyperedge: sorted triple plus the index of its parallel copy.
struct Triple {
  Vertex v[3];  // v[0] < v[1] < v[2]
  int copy = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Levi graph of mK_n^3.  Vertex ids 0..n-1 are the labels 1..n; ids n.. are
// the triple vertices in lexicographic (triple, copy) order.  Edge 3*y+s joins
// triple y to its s-th (sorted) element.
class LeviGraph {
 public:
  explicit LeviGraph(HypergraphSpec spec);

  const HypergraphSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  int m() const { return spec_.m; }

  int vertex_count() const { return spec_.n + static_cast<int>(triples_.size()); }
  int edge_count() const { return 3 * static_cast<int>(triples_.size()); }
  int triple_count() const { return static_cast<int>(triples_.size()); }

  bool is_x(int vid) const { return vid < spec_.n; }
  int x_id(Vertex label) const { return label - 1; }
  Vertex x_label(int vid) const { return vid + 1; }
  int y_id(int triple_index) const { return spec_.n + triple_index; }
  int triple_index(int vid) const { return vid - spec_.n; }

  const Triple& triple(int triple_index) const { return triples_[triple_index]; }
  // Index of copy `copy` of {a,b,c}, in any order.  Throws on bad input.
  int triple_index_of(Vertex a, Vertex b, Vertex c, int copy = 0) const;

  int edge_id(int triple_index, int slot) const { return 3 * triple_index + slot; }
  int edge_triple(int e) const { return e / 3; }
  int edge_slot(int e) const { return e % 3; }
  int edge_x(int e) const { return x_id(triples_[e / 3].v[e % 3]); }
  int edge_y(int e) const { return y_id(e / 3); }
  int other_end(int e, int vid) const { return vid == edge_x(e) ? edge_y(e) : edge_x(e); }

  // Incident edges of a vertex in canonical (ascending edge id) order.
  const std::vector<int>& incident(int vid) const { return incident_[vid]; }

  // `3`, `e{1,2,3}` or `e{1,2,3}#1` (the copy suffix only when m > 1).
  std::string vertex_name(int vid) const;

  friend bool operator==(const LeviGraph& a, const LeviGraph& b) {
    return a.spec_.n == b.spec_.n && a.spec_.m == b.spec_.m;
  }

 private:
  HypergraphSpec spec_;
  std::vector<Triple> triples_;
  std::vector<int> rank_;  // (a*(n+1)+b)*(n+1)+c -> first triple index
  std::vector<std::vector<int>> incident_;
};

LeviGraph build_levi(const HypergraphSpec& spec);

// ceil(e/2 - n + 2), the Euler-formula bound for a bipartite Levi graph.
std::int64_t euler_genus_lower_bound(const HypergraphSpec& spec);

// Closed-form genus (orientable) or crosscap number (non-orientable) of
// mK_n^3 for even n.  Throws OddOrder or UnsupportedCase.
std::int64_t genus_formula(const HypergraphSpec& spec, bool orientable);

}  // namespace kn3
