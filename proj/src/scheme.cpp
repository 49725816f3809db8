#include "kn3/scheme.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

#include "kn3/error.hpp"

namespace kn3 {

EmbeddingScheme::EmbeddingScheme(LeviGraph g) : graph(std::move(g)) {
  rotation.resize(graph.vertex_count());
  for (int v = 0; v < graph.vertex_count(); ++v) rotation[v] = graph.incident(v);
  signature.assign(graph.edge_count(), 1);
}

namespace {

bool is_rotation_of(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin()), len = a.size();
  for (std::size_t k = 0; k < len; ++k)
    if (a[k] != b[(off + k) % len]) return false;
  return true;
}

// where[e][0]: index of e in the rotation at its X end, where[e][1]: at its Y end.
std::vector<std::array<int, 2>> rotation_positions(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  std::vector<std::array<int, 2>> where(g.edge_count(), {-1, -1});
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = sch.rotation[v];
    for (int k = 0; k < static_cast<int>(rot.size()); ++k) where[rot[k]][g.is_x(v) ? 0 : 1] = k;
  }
  return where;
}

}  // namespace

bool operator==(const EmbeddingScheme& a, const EmbeddingScheme& b) {
  if (!(a.graph == b.graph) || a.signature != b.signature) return false;
  for (std::size_t v = 0; v < a.rotation.size(); ++v)
    if (!is_rotation_of(a.rotation[v], b.rotation[v])) return false;
  return true;
}

void validate_scheme(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  if (static_cast<int>(sch.rotation.size()) != g.vertex_count() ||
      static_cast<int>(sch.signature.size()) != g.edge_count())
    throw Error(ErrorCode::PreconditionViolated, "scheme does not match its graph");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> got = sch.rotation[v];
    std::sort(got.begin(), got.end());
    if (got != g.incident(v))
      throw Error(ErrorCode::PreconditionViolated,
                  "rotation at " + g.vertex_name(v) + " does not list each incident edge exactly once");
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (sch.signature[e] != 1 && sch.signature[e] != -1)
      throw Error(ErrorCode::PreconditionViolated, "signature values must be +1 or -1");
}

bool is_connected(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : g.incident(v)) {
      const int w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

std::map<int, int> FaceReport::histogram() const {
  std::map<int, int> h;
  for (int len : face_lengths) ++h[len];
  return h;
}

bool FaceReport::quadrilateral() const {
  return std::all_of(face_lengths.begin(), face_lengths.end(), [](int l) { return l == 4; });
}

// Faces are orbits of the walk "leave v along e carrying local orientation s;
// at the far end w multiply s by the sign of e and continue with the successor
// (s = +1) or predecessor (s = -1) of e in the rotation at w".  The walk acts
// on 4|E| states and each face is covered by exactly two orbits, one per
// direction of traversal.
FaceReport trace_faces(const EmbeddingScheme& sch) {
  validate_scheme(sch);
  if (!is_connected(sch)) throw Error(ErrorCode::Disconnected, "face tracing needs a connected graph");
  const LeviGraph& g = sch.graph;
  const auto where = rotation_positions(sch);
  const int states = 4 * g.edge_count();
  // state = (e * 2 + from_y) * 2 + negative
  std::vector<char> visited(static_cast<std::size_t>(states), 0);
  std::map<int, int> orbit_lengths;
  int orbits = 0;

  for (int start = 0; start < states; ++start) {
    if (visited[start]) continue;
    ++orbits;
    int len = 0;
    int state = start;
    do {
      visited[state] = 1;
      ++len;
      const int e = state >> 2;
      const int from_y = (state >> 1) & 1;
      int negative = state & 1;
      if (sch.signature[e] < 0) negative ^= 1;
      const int at_y = from_y ^ 1;
      const int w = at_y ? g.edge_y(e) : g.edge_x(e);
      const auto& rot = sch.rotation[w];
      const int deg = static_cast<int>(rot.size());
      const int k = where[e][at_y];
      const int next = rot[negative ? (k + deg - 1) % deg : (k + 1) % deg];
      const int next_from_y = g.is_x(w) ? 0 : 1;
      state = ((next * 2 + next_from_y) << 1) | negative;
    } while (state != start);
    ++orbit_lengths[len];
  }

  FaceReport rep;
  rep.face_count = orbits / 2;
  for (auto [len, count] : orbit_lengths)
    for (int k = 0; k < count / 2; ++k) rep.face_lengths.push_back(len);
  rep.euler_genus = 2 - g.vertex_count() + g.edge_count() - rep.face_count;
  rep.orientable = is_orientable(sch);
  return rep;
}

// Switch along a BFS tree so that tree edges become positive; the embedding
// is orientable iff every remaining edge is positive too.
bool is_orientable(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  std::vector<int> flip(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> queue;
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : g.incident(v)) {
        const int w = g.other_end(e, v);
        if (seen[w]) continue;
        seen[w] = 1;
        flip[w] = flip[v] ^ (sch.signature[e] < 0 ? 1 : 0);
        queue.push(w);
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const int parity = flip[g.edge_x(e)] ^ flip[g.edge_y(e)] ^ (sch.signature[e] < 0 ? 1 : 0);
    if (parity != 0) return false;
  }
  return true;
}

void invert_rotation(EmbeddingScheme& sch, int vid) {
  auto& rot = sch.rotation[vid];
  if (rot.size() > 1) std::reverse(rot.begin() + 1, rot.end());
}

void switch_vertex(EmbeddingScheme& sch, int vid) {
  invert_rotation(sch, vid);
  for (int e : sch.graph.incident(vid)) sch.signature[e] = -sch.signature[e];
}

EmbeddingScheme set_to_scheme(const EmbeddingSet& s) {
  const SetReport rep = is_embedding_set(s, s.strong);
  if (!rep.ok) throw Error(ErrorCode::NotAnEmbeddingSet, rep.message);
  EmbeddingScheme sch{LeviGraph(s.spec())};
  const LeviGraph& g = sch.graph;
  const auto triple_of = detail::assign_triples(s, g);

  for (Vertex i = 1; i <= s.n; ++i) {
    const Circuit& c = s.T(i);
    const auto len = static_cast<std::ptrdiff_t>(c.size());
    auto& rot = sch.rotation[g.x_id(i)];
    rot.clear();
    for (std::ptrdiff_t p = 0; p < len; ++p) {
      const int t = triple_of[i - 1][static_cast<std::size_t>(p)];
      const Triple& tr = g.triple(t);
      const int slot = static_cast<int>(std::find(tr.v, tr.v + 3, i) - tr.v);
      const int e = g.edge_id(t, slot);
      rot.push_back(e);
      // Positive iff the edge between the two other corners is walked in the
      // cyclic order of the sorted triple that starts after i.
      const Vertex first = tr.v[(slot + 1) % 3];
      sch.signature[e] = c.at(p) == first ? 1 : -1;
    }
  }
  return sch;
}

EmbeddingSet scheme_to_set(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  if (g.n() % 2 != 0)
    throw Error(ErrorCode::OddOrder, "odd order admits no quadrilateral embedding of the Levi graph");
  const FaceReport faces = trace_faces(sch);
  if (!faces.quadrilateral()) throw Error(ErrorCode::NotQuadrilateral, "scheme has a face whose length is not 4");

  EmbeddingSet out;
  out.n = g.n();
  out.m = g.m();
  out.strong = faces.orientable;
  for (Vertex i = 1; i <= g.n(); ++i) {
    const auto& rot = sch.rotation[g.x_id(i)];
    const std::size_t len = rot.size();
    auto others = [&](std::size_t p) {
      const Triple& t = g.triple(g.edge_triple(rot[p % len]));
      std::array<Vertex, 2> o{};
      int k = 0;
      for (Vertex v : t.v)
        if (v != i) o[k++] = v;
      return o;
    };
    // a_{p+1} is the corner shared by consecutive triples p and p+1; parallel
    // copies can make that ambiguous, so try both starting corners.
    Circuit c{i, g.n(), g.m(), {}};
    for (Vertex start : others(len - 1)) {
      const auto first = others(0);
      if (start != first[0] && start != first[1]) continue;
      std::vector<Vertex> seq{start};
      bool ok = true;
      for (std::size_t p = 0; p < len && ok; ++p) {
        const auto o = others(p);
        const Vertex next = o[0] == seq.back() ? o[1] : (o[1] == seq.back() ? o[0] : 0);
        if (next == 0) ok = false;
        else seq.push_back(next);
      }
      if (ok && seq.back() == seq.front()) {
        seq.pop_back();
        c.seq = std::move(seq);
        break;
      }
    }
    if (c.seq.empty())
      throw Error(ErrorCode::NotQuadrilateral, "rotation at vertex " + std::to_string(i) + " is not a closed trail");
    out.circuits.push_back(std::move(c));
  }
  return out;
}

bool schemes_equivalent(const EmbeddingScheme& a, const EmbeddingScheme& b) {
  if (!(a.graph == b.graph)) throw Error(ErrorCode::GraphMismatch, "schemes live on different Levi graphs");
  validate_scheme(a);
  validate_scheme(b);
  const LeviGraph& g = a.graph;
  const int nv = g.vertex_count();

  // -1 free, 0 kept, 1 switched.
  std::vector<int> in_u(nv, -1);
  for (int v = 0; v < nv; ++v) {
    std::vector<int> rev(b.rotation[v].rbegin(), b.rotation[v].rend());
    const bool same = is_rotation_of(a.rotation[v], b.rotation[v]);
    const bool inverted = is_rotation_of(a.rotation[v], rev);
    if (!same && !inverted) return false;
    if (same != inverted) in_u[v] = inverted ? 1 : 0;
  }

  // Signs force in_u[x] xor in_u[y] on every edge; resolve free vertices by
  // propagation and then check every edge.
  std::vector<int> value = in_u;
  std::queue<int> queue;
  auto differs = [&](int e) { return a.signature[e] != b.signature[e] ? 1 : 0; };
  auto propagate = [&](int root) {
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : g.incident(v)) {
        const int w = g.other_end(e, v);
        if (value[w] == -1) {
          value[w] = value[v] ^ differs(e);
          queue.push(w);
        }
      }
    }
  };
  for (int v = 0; v < nv; ++v)
    if (value[v] != -1) propagate(v);
  for (int v = 0; v < nv; ++v)
    if (value[v] == -1) {
      value[v] = 0;
      propagate(v);
    }
  for (int e = 0; e < g.edge_count(); ++e)
    if ((value[g.edge_x(e)] ^ value[g.edge_y(e)]) != differs(e)) return false;
  return true;
}

}  // namespace kn3
