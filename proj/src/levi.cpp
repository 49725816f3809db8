#include "kn3/levi.hpp"

#include <algorithm>

#include "kn3/error.hpp"

namespace kn3 {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void HypergraphSpec::validate() const {
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "n must be at least 4, got " + std::to_string(n));
  if (m < 1) throw Error(ErrorCode::InvalidSpec, "m must be at least 1, got " + std::to_string(m));
}

std::int64_t HypergraphSpec::edge_count() const { return m * binomial(n, 3); }
std::int64_t HypergraphSpec::levi_vertex_count() const { return n + edge_count(); }
std::int64_t HypergraphSpec::levi_edge_count() const { return 3 * edge_count(); }

LeviGraph::LeviGraph(HypergraphSpec spec) : spec_(spec) {
  spec_.validate();
  const int n = spec_.n;
  rank_.assign(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), -1);
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) {
        rank_[(static_cast<std::size_t>(a) * (n + 1) + b) * (n + 1) + c] =
            static_cast<int>(triples_.size());
        for (int copy = 0; copy < spec_.m; ++copy) triples_.push_back(Triple{{a, b, c}, copy});
      }

  incident_.assign(vertex_count(), {});
  for (int t = 0; t < triple_count(); ++t)
    for (int s = 0; s < 3; ++s) {
      const int e = edge_id(t, s);
      incident_[edge_x(e)].push_back(e);
      incident_[y_id(t)].push_back(e);
    }
}

int LeviGraph::triple_index_of(Vertex a, Vertex b, Vertex c, int copy) const {
  Vertex v[3] = {a, b, c};
  std::sort(v, v + 3);
  const int n = spec_.n;
  if (v[0] < 1 || v[2] > n || v[0] == v[1] || v[1] == v[2] || copy < 0 || copy >= spec_.m)
    throw Error(ErrorCode::PreconditionViolated,
                "no hyperedge {" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + "}#" + std::to_string(copy));
  return rank_[(static_cast<std::size_t>(v[0]) * (n + 1) + v[1]) * (n + 1) + v[2]] + copy;
}

std::string LeviGraph::vertex_name(int vid) const {
  if (is_x(vid)) return std::to_string(x_label(vid));
  const Triple& t = triples_[triple_index(vid)];
  std::string s = "e{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
                  std::to_string(t.v[2]) + "}";
  if (spec_.m > 1) s += "#" + std::to_string(t.copy);
  return s;
}

LeviGraph build_levi(const HypergraphSpec& spec) { return LeviGraph(spec); }

std::int64_t euler_genus_lower_bound(const HypergraphSpec& spec) {
  spec.validate();
  // e/2 - n + 2 = (e - 2n + 4) / 2, and the numerator is never negative for n >= 4.
  const std::int64_t twice = spec.edge_count() - 2 * spec.n + 4;
  return (twice + 1) / 2;
}

std::int64_t genus_formula(const HypergraphSpec& spec, bool orientable) {
  spec.validate();
  const std::int64_t n = spec.n, m = spec.m;
  if (n % 2 != 0)
    throw Error(ErrorCode::OddOrder, "closed form only known for even n (n=" + std::to_string(n) + ")");
  if (!orientable && m == 1 && n == 4)
    throw Error(ErrorCode::UnsupportedCase, "K_4^3 is planar; it has no non-orientable quadrilateral embedding");
  const std::int64_t numerator = (n - 2) * (m * n * (n - 1) - 12);
  return orientable ? numerator / 24 : numerator / 12;
}

}  // namespace kn3
