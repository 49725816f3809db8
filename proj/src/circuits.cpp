#include "kn3/circuits.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "kn3/error.hpp"

namespace kn3 {

Vertex Circuit::at(std::ptrdiff_t pos) const {
  const auto len = static_cast<std::ptrdiff_t>(seq.size());
  return seq[static_cast<std::size_t>(((pos % len) + len) % len)];
}

Circuit Circuit::reversed() const {
  Circuit r = *this;
  std::reverse(r.seq.begin(), r.seq.end());
  return r;
}

Circuit Circuit::rotated(std::size_t start) const {
  Circuit r = *this;
  if (!r.seq.empty())
    std::rotate(r.seq.begin(), r.seq.begin() + static_cast<std::ptrdiff_t>(start % r.seq.size()),
                r.seq.end());
  return r;
}

namespace {

bool is_rotation_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t len = a.size();
  for (std::size_t shift = 0; shift < len; ++shift) {
    std::size_t k = 0;
    while (k < len && a[(shift + k) % len] == b[k]) ++k;
    if (k == len) return true;
  }
  return false;
}

}  // namespace

bool same_cycle(const Circuit& a, const Circuit& b) {
  return a.excluded == b.excluded && is_rotation_of(a.seq, b.seq);
}

bool equivalent_cycle(const Circuit& a, const Circuit& b) {
  if (a.excluded != b.excluded) return false;
  if (is_rotation_of(a.seq, b.seq)) return true;
  std::vector<Vertex> rev(b.seq.rbegin(), b.seq.rend());
  return is_rotation_of(a.seq, rev);
}

std::string to_string(const Transition& t) {
  return std::to_string(t.a) + "," + std::to_string(t.mid) + "," + std::to_string(t.b);
}

EulerianReport validate_eulerian(const Circuit& c) {
  EulerianReport rep;
  const int order = c.order;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.message = std::move(msg);
    return rep;
  };
  if (order < 3) return fail("ambient order " + std::to_string(order) + " is too small");
  if (c.excluded < 1 || c.excluded > order)
    return fail("excluded vertex " + std::to_string(c.excluded) + " outside [1," + std::to_string(order) + "]");
  for (Vertex v : c.seq) {
    if (v < 1 || v > order) return fail("label " + std::to_string(v) + " outside [1," + std::to_string(order) + "]");
    if (v == c.excluded) return fail("excluded vertex " + std::to_string(v) + " occurs in the circuit");
  }
  const int stride = order + 1;
  std::vector<int> count(static_cast<std::size_t>(stride) * stride, 0);
  const std::size_t len = c.seq.size();
  for (std::size_t p = 0; p < len; ++p) {
    const Vertex u = c.seq[p], w = c.seq[(p + 1) % len];
    if (u == w) {
      rep.u = rep.w = u;
      return fail("immediate repetition of " + std::to_string(u));
    }
    ++count[static_cast<std::size_t>(std::min(u, w)) * stride + std::max(u, w)];
  }
  // Over-used pairs in walking order first, then missing pairs.
  for (std::size_t p = 0; p < len; ++p) {
    const Vertex u = std::min(c.seq[p], c.seq[(p + 1) % len]);
    const Vertex w = std::max(c.seq[p], c.seq[(p + 1) % len]);
    const int k = count[static_cast<std::size_t>(u) * stride + w];
    if (k > c.multiplicity) {
      rep.u = u, rep.w = w, rep.count = k, rep.expected = c.multiplicity;
      return fail("pair {" + std::to_string(u) + "," + std::to_string(w) + "} traversed " +
                  std::to_string(k) + " times, expected " + std::to_string(c.multiplicity));
    }
  }
  for (Vertex u = 1; u <= order; ++u) {
    if (u == c.excluded) continue;
    for (Vertex w = u + 1; w <= order; ++w) {
      if (w == c.excluded) continue;
      const int k = count[static_cast<std::size_t>(u) * stride + w];
      if (k != c.multiplicity) {
        rep.u = u, rep.w = w, rep.count = k, rep.expected = c.multiplicity;
        return fail("pair {" + std::to_string(u) + "," + std::to_string(w) + "} traversed " +
                    std::to_string(k) + " times, expected " + std::to_string(c.multiplicity));
      }
    }
  }
  return rep;
}

std::vector<Transition> transitions_through(const Circuit& c, Vertex j) {
  std::vector<Transition> out;
  const auto len = static_cast<std::ptrdiff_t>(c.seq.size());
  for (std::ptrdiff_t p = 0; p < len; ++p)
    if (c.seq[static_cast<std::size_t>(p)] == j) out.push_back({c.at(p - 1), j, c.at(p + 1)});
  if (out.empty())
    throw Error(ErrorCode::VertexAbsent, "vertex " + std::to_string(j) + " does not occur in T_" +
                                             std::to_string(c.excluded));
  return out;
}

const std::vector<std::pair<Vertex, Vertex>>& TransitionIndex::around(Vertex j) const {
  static const std::vector<std::pair<Vertex, Vertex>> empty;
  return j >= 0 && static_cast<std::size_t>(j) < by_mid_.size() ? by_mid_[static_cast<std::size_t>(j)] : empty;
}

TransitionIndex::TransitionIndex(const Circuit& c) : excluded_(c.excluded) {
  by_mid_.assign(static_cast<std::size_t>(std::max(c.order, 0)) + 1, {});
  const auto len = static_cast<std::ptrdiff_t>(c.seq.size());
  for (std::ptrdiff_t p = 0; p < len; ++p) {
    const Vertex v = c.seq[static_cast<std::size_t>(p)];
    if (v >= 0 && v < static_cast<Vertex>(by_mid_.size())) by_mid_[v].emplace_back(c.at(p - 1), c.at(p + 1));
  }
  for (auto& bucket : by_mid_) std::sort(bucket.begin(), bucket.end());
}

namespace {

using Bucket = std::vector<std::pair<Vertex, Vertex>>;

Bucket unordered(const Bucket& b) {
  Bucket out;
  out.reserve(b.size());
  for (auto [a, c] : b) out.emplace_back(std::min(a, c), std::max(a, c));
  std::sort(out.begin(), out.end());
  return out;
}

Bucket flipped(const Bucket& b) {
  Bucket out;
  out.reserve(b.size());
  for (auto [a, c] : b) out.emplace_back(c, a);
  std::sort(out.begin(), out.end());
  return out;
}

void check_pair_preconditions(const Circuit& ti, const Circuit& tj) {
  if (ti.order != tj.order || ti.multiplicity != tj.multiplicity)
    throw Error(ErrorCode::MismatchedAmbient, "circuits live in different ambient graphs");
  if (ti.excluded == tj.excluded)
    throw Error(ErrorCode::PreconditionViolated,
                "both circuits exclude vertex " + std::to_string(ti.excluded));
}

}  // namespace

bool compatible_pair(const TransitionIndex& ti, const TransitionIndex& tj) {
  const Vertex i = ti.excluded(), j = tj.excluded();
  return unordered(ti.around(j)) == unordered(tj.around(i));
}

bool strong_pair(const TransitionIndex& ti, const TransitionIndex& tj) {
  const Vertex i = ti.excluded(), j = tj.excluded();
  return ti.around(j) == flipped(tj.around(i));
}

bool is_compatible(const Circuit& ti, const Circuit& tj) {
  check_pair_preconditions(ti, tj);
  return compatible_pair(TransitionIndex(ti), TransitionIndex(tj));
}

bool is_strongly_compatible(const Circuit& ti, const Circuit& tj) {
  check_pair_preconditions(ti, tj);
  return strong_pair(TransitionIndex(ti), TransitionIndex(tj));
}

std::optional<Transition> compatibility_witness(const Circuit& ti, const Circuit& tj, bool strong) {
  const Vertex i = ti.excluded, j = tj.excluded;
  std::map<std::pair<Vertex, Vertex>, int> available;
  const auto len_j = static_cast<std::ptrdiff_t>(tj.seq.size());
  for (std::ptrdiff_t q = 0; q < len_j; ++q) {
    if (tj.seq[static_cast<std::size_t>(q)] != i) continue;
    Vertex a = tj.at(q - 1), b = tj.at(q + 1);
    // A partner of (x, j, y) in T_j is (y, i, x) when strong, either way otherwise.
    if (strong) std::swap(a, b);
    else if (a > b) std::swap(a, b);
    ++available[{a, b}];
  }
  const auto len_i = static_cast<std::ptrdiff_t>(ti.seq.size());
  for (std::ptrdiff_t p = 0; p < len_i; ++p) {
    if (ti.seq[static_cast<std::size_t>(p)] != j) continue;
    const Transition t{ti.at(p - 1), j, ti.at(p + 1)};
    std::pair<Vertex, Vertex> key{t.a, t.b};
    if (!strong && key.first > key.second) std::swap(key.first, key.second);
    auto it = available.find(key);
    if (it == available.end() || it->second == 0) return t;
    --it->second;
  }
  return std::nullopt;
}

const char* to_string(SetReport::Failure f) {
  switch (f) {
    case SetReport::Failure::None: return "none";
    case SetReport::Failure::Shape: return "shape";
    case SetReport::Failure::Eulerian: return "eulerian";
    case SetReport::Failure::Compatibility: return "compatibility";
    case SetReport::Failure::Strength: return "strength";
  }
  return "unknown";
}

namespace {

std::vector<std::pair<Vertex, Vertex>> all_failing_pairs(const std::vector<TransitionIndex>& index, bool strong) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t a = 0; a < index.size(); ++a)
    for (std::size_t b = a + 1; b < index.size(); ++b)
      if (!(strong ? strong_pair(index[a], index[b]) : compatible_pair(index[a], index[b])))
        out.emplace_back(index[a].excluded(), index[b].excluded());
  return out;
}

}  // namespace

SetReport is_embedding_set(const EmbeddingSet& s, bool require_strong) {
  SetReport rep;
  auto fail = [&](SetReport::Failure f, Vertex i, Vertex j, std::string msg) {
    rep.ok = false;
    rep.failure = f;
    rep.i = i;
    rep.j = j;
    rep.message = std::move(msg);
    return rep;
  };
  if (s.n < 4 || s.m < 1 || static_cast<int>(s.circuits.size()) != s.n)
    return fail(SetReport::Failure::Shape, 0, 0,
                "expected " + std::to_string(s.n) + " circuits, got " + std::to_string(s.circuits.size()));
  for (Vertex i = 1; i <= s.n; ++i) {
    const Circuit& c = s.T(i);
    if (c.excluded != i || c.order != s.n || c.multiplicity != s.m)
      return fail(SetReport::Failure::Shape, i, 0,
                  "T_" + std::to_string(i) + " has the wrong excluded vertex or ambient graph");
    const EulerianReport e = validate_eulerian(c);
    if (!e.ok) return fail(SetReport::Failure::Eulerian, i, 0, "T_" + std::to_string(i) + ": " + e.message);
  }

  std::vector<TransitionIndex> index;
  index.reserve(s.circuits.size());
  for (const Circuit& c : s.circuits) index.emplace_back(c);

  if (auto bad = kernels::first_failing_pair_parallel(index, false)) {
    const auto [i, j] = *bad;
    fail(SetReport::Failure::Compatibility, i, j,
         "T_" + std::to_string(i) + " and T_" + std::to_string(j) + " are not compatible");
    rep.witness = compatibility_witness(s.T(i), s.T(j), false);
    if (rep.witness) rep.message += " (transition " + to_string(*rep.witness) + ")";
    rep.failing_pairs = all_failing_pairs(index, false);
    return rep;
  }
  if (require_strong) {
    if (auto bad = kernels::first_failing_pair_parallel(index, true)) {
      const auto [i, j] = *bad;
      fail(SetReport::Failure::Strength, i, j,
           "T_" + std::to_string(i) + " and T_" + std::to_string(j) + " are not strongly compatible");
      rep.witness = compatibility_witness(s.T(i), s.T(j), true);
      if (rep.witness) rep.message += " (transition " + to_string(*rep.witness) + ")";
      rep.failing_pairs = all_failing_pairs(index, true);
      return rep;
    }
  }
  return rep;
}

std::optional<std::vector<bool>> strong_orientation(const EmbeddingSet& s) {
  const int n = s.n;
  std::vector<TransitionIndex> fwd, rev;
  for (const Circuit& c : s.circuits) {
    fwd.emplace_back(c);
    rev.emplace_back(c.reversed());
  }
  // Each pair forces equal or opposite directions; 2-colour the constraints.
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        const bool same = strong_pair(fwd[a], fwd[b]);
        const bool opposite = strong_pair(fwd[a], rev[b]);
        if (!same && !opposite) return std::nullopt;
        if (same && opposite) continue;
        const int want = same ? side[a] : 1 - side[a];
        if (side[b] < 0) {
          side[b] = want;
          stack.push_back(b);
        } else if (side[b] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = side[i] == 1;
  return out;
}

EmbeddingSet reoriented(const EmbeddingSet& s, const std::vector<bool>& reverse) {
  EmbeddingSet out = s;
  for (std::size_t i = 0; i < out.circuits.size() && i < reverse.size(); ++i)
    if (reverse[i]) out.circuits[i] = out.circuits[i].reversed();
  return out;
}

namespace kernels {

std::optional<std::pair<Vertex, Vertex>> first_failing_pair_serial(
    const std::vector<TransitionIndex>& index, bool strong) {
  const int n = static_cast<int>(index.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool ok = strong ? strong_pair(index[a], index[b]) : compatible_pair(index[a], index[b]);
      if (!ok) return std::pair<Vertex, Vertex>{index[a].excluded(), index[b].excluded()};
    }
  return std::nullopt;
}

}  // namespace kernels

}  // namespace kn3
