// Assigns a hyperedge copy to every traversed edge of every circuit.
//
// Each traversed edge of T_i ("slot") is one incidence between vertex i and a
// triple vertex.  Matching a transition (u, j, v) of T_i with a transition of
// T_j through i that has the same unordered ends glues the two slots on each
// side together.  A valid assignment glues slots into triangles, one slot
// from each of T_i, T_j, T_k; every triangle becomes one copy of {i, j, k}.
// With m = 1 every transition has exactly one partner; with parallel copies
// the partners are chosen by a small backtracking search that tries
// candidates in scan order.

#include <algorithm>
#include <cstdint>
#include <map>

#include "kn3/error.hpp"
#include "kn3/scheme.hpp"

namespace kn3::detail {

namespace {

constexpr std::int64_t kNodeBudget = 2'000'000;

struct Problem {
  const EmbeddingSet* set = nullptr;
  std::vector<int> offset;  // first slot id of circuit i-1
  std::vector<int> circ;    // slot/transition id -> circuit label
  std::vector<int> pos;     // slot/transition id -> position
  std::vector<std::vector<int>> candidates;

  int total() const { return static_cast<int>(circ.size()); }
  const Circuit& T(int id) const { return set->T(circ[id]); }
  Vertex mid(int t) const { return T(t).at(pos[t]); }
  Vertex prev(int t) const { return T(t).at(pos[t] - 1); }
  Vertex next(int t) const { return T(t).at(pos[t] + 1); }
  int len(int id) const { return static_cast<int>(T(id).size()); }
  int id_at(int circuit_label, int p) const {
    const int l = static_cast<int>(set->T(circuit_label).size());
    return offset[circuit_label - 1] + ((p % l) + l) % l;
  }
  int left_slot(int t) const { return id_at(circ[t], pos[t] - 1); }
  int right_slot(int t) const { return t; }
  // Transition of slot s at its start (end = 0) or end (end = 1).
  int slot_transition(int s, int end) const { return end == 0 ? s : id_at(circ[s], pos[s] + 1); }
};

struct State {
  std::vector<int> match;                // transition -> partner or -1
  std::vector<std::array<int, 2>> link;  // slot -> glued slot via start / end transition
};

class Solver {
 public:
  explicit Solver(const Problem& p) : p_(p) {}

  bool solve(State& st) { return search(st); }

 private:
  // Glue t with u; `same` means prev(t) pairs with prev(u).
  bool apply(State& st, int t, int u, bool same, std::vector<int>& touched) const {
    if (st.match[t] != -1 || st.match[u] != -1) return false;
    st.match[t] = u;
    st.match[u] = t;
    const int lt = p_.left_slot(t), rt = p_.right_slot(t);
    const int lu = p_.left_slot(u), ru = p_.right_slot(u);
    // left slot uses its end link for the transition, right slot its start link.
    auto glue = [&](int s, int s_end, int w, int w_end) {
      st.link[s][s_end] = w;
      st.link[w][w_end] = s;
      touched.push_back(s);
      touched.push_back(w);
    };
    if (same) {
      glue(lt, 1, lu, 1);
      glue(rt, 0, ru, 0);
    } else {
      glue(lt, 1, ru, 0);
      glue(rt, 0, lu, 1);
    }
    return true;
  }

  // End of slot s whose vertex is v (0 = start, 1 = end).
  int end_with(int s, Vertex v) const { return p_.T(s).at(p_.pos[s]) == v ? 0 : 1; }

  // A slot whose two links are known must close a triangle.
  bool close(State& st, std::vector<int>& work) const {
    while (!work.empty()) {
      const int s = work.back();
      work.pop_back();
      if (st.link[s][0] == -1 || st.link[s][1] == -1) continue;
      const int i = p_.circ[s];
      const Vertex x = p_.T(s).at(p_.pos[s]);
      const Vertex y = p_.T(s).at(p_.pos[s] + 1);
      const int sx = st.link[s][0], sy = st.link[s][1];
      const int ex = end_with(sx, y), ey = end_with(sy, x);
      const int lx = st.link[sx][ex], ly = st.link[sy][ey];
      if (lx != -1 || ly != -1) {
        if (lx != sy || ly != sx) return false;
        continue;
      }
      const int tx = p_.slot_transition(sx, ex), ty = p_.slot_transition(sy, ey);
      const Vertex wx = p_.prev(tx) == i ? p_.next(tx) : p_.prev(tx);
      const Vertex wy = p_.prev(ty) == i ? p_.next(ty) : p_.prev(ty);
      if (wx != wy) return false;
      const bool sx_left = p_.left_slot(tx) == sx && ex == 1;
      const bool sy_left = p_.left_slot(ty) == sy && ey == 1;
      if (!apply(st, tx, ty, sx_left == sy_left, work)) return false;
    }
    return true;
  }

  bool search(State& st) {
    if (++nodes_ > kNodeBudget)
      throw Error(ErrorCode::NotAnEmbeddingSet, "copy assignment search exceeded its budget");
    int best = -1;
    std::size_t best_live = 0;
    for (int t = 0; t < p_.total(); ++t) {
      if (st.match[t] != -1) continue;
      std::size_t live = 0;
      for (int u : p_.candidates[t])
        if (st.match[u] == -1) ++live;
      if (live == 0) return false;
      if (best == -1 || live < best_live) {
        best = t;
        best_live = live;
        if (live == 1) break;
      }
    }
    if (best == -1) return true;

    for (int u : p_.candidates[best]) {
      if (st.match[u] != -1) continue;
      const bool degenerate = p_.prev(best) == p_.next(best);
      for (int orientation = 0; orientation < (degenerate ? 2 : 1); ++orientation) {
        const bool same = degenerate ? orientation == 0 : p_.prev(u) == p_.prev(best);
        State trial = st;
        std::vector<int> work;
        if (!apply(trial, best, u, same, work)) continue;
        if (!close(trial, work)) continue;
        if (search(trial)) {
          st = std::move(trial);
          return true;
        }
      }
    }
    return false;
  }

  const Problem& p_;
  std::int64_t nodes_ = 0;
};

}  // namespace

std::vector<std::vector<int>> assign_triples(const EmbeddingSet& s, const LeviGraph& g) {
  Problem p;
  p.set = &s;
  for (Vertex i = 1; i <= s.n; ++i) {
    p.offset.push_back(p.total());
    for (int q = 0; q < static_cast<int>(s.T(i).size()); ++q) {
      p.circ.push_back(i);
      p.pos.push_back(q);
    }
  }

  // Group transitions by (unordered circuit pair, unordered ends).
  std::map<std::array<int, 4>, std::vector<int>> groups;
  for (int t = 0; t < p.total(); ++t) {
    const int i = p.circ[t];
    const Vertex j = p.mid(t);
    const Vertex a = std::min(p.prev(t), p.next(t)), b = std::max(p.prev(t), p.next(t));
    groups[{std::min(i, j), std::max(i, j), a, b}].push_back(t);
  }
  p.candidates.assign(p.total(), {});
  for (const auto& [key, members] : groups)
    for (int t : members)
      for (int u : members)
        if (p.circ[u] != p.circ[t]) p.candidates[t].push_back(u);

  State st;
  st.match.assign(p.total(), -1);
  st.link.assign(p.total(), {-1, -1});
  Solver solver(p);
  if (!solver.solve(st))
    throw Error(ErrorCode::NotAnEmbeddingSet, "no consistent assignment of parallel hyperedges exists");

  // Number the triangles of each hyperedge type by the scan position of their
  // slot in the circuit of the smallest corner.
  std::vector<std::vector<int>> triple_of(s.n);
  for (Vertex i = 1; i <= s.n; ++i) triple_of[i - 1].assign(s.T(i).size(), -1);
  std::map<std::array<int, 3>, int> next_copy;
  for (int slot = 0; slot < p.total(); ++slot) {
    const int i = p.circ[slot];
    const Vertex x = p.T(slot).at(p.pos[slot]), y = p.T(slot).at(p.pos[slot] + 1);
    if (i > x || i > y) continue;
    const int copy = next_copy[{i, std::min(x, y), std::max(x, y)}]++;
    const int t = g.triple_index_of(i, x, y, copy);
    triple_of[i - 1][p.pos[slot]] = t;
    for (int end = 0; end < 2; ++end) {
      const int other = st.link[slot][end];
      triple_of[p.circ[other] - 1][p.pos[other]] = t;
    }
  }
  return triple_of;
}

}  // namespace kn3::detail
