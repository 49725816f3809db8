#include "kn3/builder.hpp"

#include <algorithm>
#include <numeric>

#include "fixtures_data.hpp"
#include "kn3/error.hpp"
#include "kn3/io.hpp"

namespace kn3 {

EmbeddingSet base_set(BaseKind kind) {
  switch (kind) {
    case BaseKind::Orientable4: return io::parse_set(fixtures_data::orientable_4);
    case BaseKind::Nonorientable6: return io::parse_set(fixtures_data::nonorientable_6);
    case BaseKind::MultiNonorientable4: return io::parse_set(fixtures_data::multi_nonorientable_4);
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown base kind");
}

EmbeddingSet strong_example_6() { return io::parse_set(fixtures_data::strong_6); }

std::vector<Vertex> build_sigma(Vertex i, int n) {
  if (n % 2 != 0 || n < 4 || i % 2 == 0 || i < 1 || i > n - 1)
    throw Error(ErrorCode::PreconditionViolated,
                "sigma needs odd i in [1, n-1] and even n (i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (v != i && v != i + 1) out.push_back(v);
  // The pairs below i are listed as 2,1,4,3,...
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(i - 1); k += 2) std::swap(out[k], out[k + 1]);
  return out;
}

InsertionTrail build_insertion(Vertex i, int n) {
  if (n % 2 != 0 || n < 4 || i < 1 || i > n)
    throw Error(ErrorCode::PreconditionViolated, "insertion trail needs 1 <= i <= n with n even");
  const Vertex x = n + 1, y = n + 2;
  const bool odd = i % 2 == 1;
  const auto sigma = build_sigma(odd ? i : i - 1, n);
  // Odd i: x,s1,y,s2,...,x,y,i+1.  Even i: y,s1,x,s2,...,y,x,i-1.
  const Vertex lead = odd ? x : y, other = odd ? y : x;
  InsertionTrail e{i, n, {}};
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    e.seq.push_back(k % 2 == 0 ? lead : other);
    e.seq.push_back(sigma[k]);
  }
  e.seq.push_back(lead);
  e.seq.push_back(other);
  e.seq.push_back(odd ? i + 1 : i - 1);
  return e;
}

std::pair<Circuit, Circuit> build_apex_circuits(int n) {
  if (n % 2 != 0 || n < 4) throw Error(ErrorCode::PreconditionViolated, "apex circuits need even n >= 4");
  const Vertex x = n + 1, y = n + 2;
  Circuit tx{x, n + 2, 1, {}}, ty{y, n + 2, 1, {}};

  // Subtrails A_1..A_{n/2}, each opening at y (the closing y is the next opening).
  auto& a = tx.seq;
  a.insert(a.end(), {y, 1, n, 2, n - 1, n});
  for (Vertex i = 3; i <= n - 3; i += 2) {
    a.insert(a.end(), {y, i, n, i + 1});
    for (int j = 1; j <= (i - 1) / 2; ++j) a.insert(a.end(), {n + 1 - 2 * j, i - 2 * j, n - 2 * j, i + 1 - 2 * j});
    a.insert(a.end(), {n - i, n + 1 - i});
  }
  a.push_back(y);
  for (int j = 1; j <= n / 2; ++j) a.push_back(n + 1 - 2 * j);
  a.push_back(2);

  // Subtrails B_1..B_{n/2}, each opening at x.
  auto& b = ty.seq;
  b.insert(b.end(), {x, 2, n, n - 1});
  for (Vertex i = 3; i <= n - 3; i += 2) {
    b.insert(b.end(), {x, i + 1, n});
    for (int j = 1; j <= (i - 1) / 2; ++j) b.insert(b.end(), {i - 2 * j, n + 1 - 2 * j, i + 1 - 2 * j, n - 2 * j});
    b.push_back(n - i);
  }
  b.insert(b.end(), {x, n, n - 3});
  for (int j = 1; j <= (n - 4) / 2; ++j) b.insert(b.end(), {n + 1 - 2 * j, n - 2 * j, n - 2 * j - 3});
  b.insert(b.end(), {3, 2, 1});
  return {tx, ty};
}

EmbeddingSet relabel(const EmbeddingSet& s, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != s.n)
    throw Error(ErrorCode::PreconditionViolated, "relabelling must be a permutation of [n]");
  std::vector<char> hit(static_cast<std::size_t>(s.n) + 1, 0);
  for (Vertex v : perm) {
    if (v < 1 || v > s.n || hit[v]) throw Error(ErrorCode::PreconditionViolated, "relabelling is not a permutation");
    hit[v] = 1;
  }
  auto img = [&](Vertex v) { return v >= 1 && v <= s.n ? perm[v - 1] : v; };
  EmbeddingSet out = s;
  for (Vertex i = 1; i <= s.n; ++i) {
    Circuit c = s.T(i);
    c.excluded = img(i);
    for (Vertex& v : c.seq) v = img(v);
    out.T(img(i)) = std::move(c);
  }
  return out;
}

namespace {

std::vector<std::size_t> positions_of(const Circuit& c, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < c.seq.size(); ++p)
    if (c.seq[p] == v) out.push_back(p);
  return out;
}

// Insert `trail` right after position p.
void insert_after(Circuit& c, std::size_t p, const std::vector<Vertex>& trail) {
  c.seq.insert(c.seq.begin() + static_cast<std::ptrdiff_t>(p + 1), trail.begin(), trail.end());
}

// The standard step on consecutive pairs (1,2),(3,4),...
StepResult extend_consecutive(const EmbeddingSet& s, const std::vector<std::size_t>& pick) {
  const int n = s.n;
  StepResult r;
  r.broken.assign(static_cast<std::size_t>(n), {});
  r.flipped.assign(static_cast<std::size_t>(n), false);
  EmbeddingSet out;
  out.n = n + 2;
  out.m = 1;
  out.strong = s.strong;
  out.circuits = s.circuits;

  for (Vertex i = 1; i < n; i += 2) {
    Circuit& ti = out.T(i);
    Circuit& tn = out.T(i + 1);
    const auto occ = positions_of(ti, i + 1);
    const std::size_t k = static_cast<std::size_t>((i - 1) / 2);
    const std::size_t which = k < pick.size() ? pick[k] : 0;
    if (which >= occ.size())
      throw Error(ErrorCode::PreconditionViolated, "transition pick " + std::to_string(which) +
                                                       " out of range for T_" + std::to_string(i));
    const std::size_t p = occ[which];
    const Vertex a = ti.at(static_cast<std::ptrdiff_t>(p) - 1), b = ti.at(static_cast<std::ptrdiff_t>(p) + 1);

    // Partner (b, i, a) in T_{i+1}; a non-strong set may hold it reversed.
    auto find_partner = [&](const Circuit& c) -> std::optional<std::size_t> {
      for (std::size_t q : positions_of(c, i))
        if (c.at(static_cast<std::ptrdiff_t>(q) - 1) == b && c.at(static_cast<std::ptrdiff_t>(q) + 1) == a) return q;
      return std::nullopt;
    };
    auto q = find_partner(tn);
    if (!q) {
      tn = tn.reversed();
      r.flipped[static_cast<std::size_t>(i)] = true;
      q = find_partner(tn);
    }
    if (!q) throw Error(ErrorCode::NotAnEmbeddingSet, "T_" + std::to_string(i + 1) + " has no partner transition");

    r.broken[static_cast<std::size_t>(i - 1)] = {a, i + 1, b};
    r.broken[static_cast<std::size_t>(i)] = {b, i, a};
    insert_after(ti, p, build_insertion(i, n).seq);
    insert_after(tn, *q, build_insertion(i + 1, n).seq);
  }
  for (Circuit& c : out.circuits) c.order = n + 2;
  auto [tx, ty] = build_apex_circuits(n);
  out.circuits.push_back(std::move(tx));
  out.circuits.push_back(std::move(ty));
  r.set = std::move(out);
  return r;
}

}  // namespace

StepResult extend_by_two(const EmbeddingSet& s, const StepChoice& choice) {
  if (s.m != 1) throw Error(ErrorCode::PreconditionViolated, "the order induction works on K_n^3 only");
  if (s.n % 2 != 0) throw Error(ErrorCode::OddOrder, "the order induction needs even n");
  if (choice.relabel.empty() && !choice.swap_apex) return extend_consecutive(s, choice.pick);

  std::vector<Vertex> perm = choice.relabel;
  if (perm.empty()) {
    perm.resize(static_cast<std::size_t>(s.n));
    std::iota(perm.begin(), perm.end(), 1);
  }
  StepResult r = extend_consecutive(relabel(s, perm), choice.pick);

  // Undo the relabelling on [n]; optionally exchange the apex labels.
  std::vector<Vertex> back(static_cast<std::size_t>(s.n + 2));
  for (Vertex v = 1; v <= s.n; ++v) back[perm[v - 1] - 1] = v;
  back[s.n] = choice.swap_apex ? s.n + 2 : s.n + 1;
  back[s.n + 1] = choice.swap_apex ? s.n + 1 : s.n + 2;
  StepResult out;
  out.set = relabel(r.set, back);
  out.broken.assign(static_cast<std::size_t>(s.n), {});
  out.flipped.assign(static_cast<std::size_t>(s.n), false);
  for (Vertex w = 1; w <= s.n; ++w) {
    const Transition t = r.broken[w - 1];
    out.broken[back[w - 1] - 1] = {back[t.a - 1], back[t.mid - 1], back[t.b - 1]};
    out.flipped[back[w - 1] - 1] = r.flipped[w - 1];
  }
  return out;
}

EmbeddingSet build_even(int n, bool orientable, const BuildOptions& options) {
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "n must be at least 4");
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "construction needs even n (n=" + std::to_string(n) + ")");
  if (!orientable && n == 4)
    throw Error(ErrorCode::UnsupportedCase, "K_4^3 has no non-orientable quadrilateral embedding");

  EmbeddingSet cur = base_set(orientable ? BaseKind::Orientable4 : BaseKind::Nonorientable6);
  if (options.choice && !options.choice->base_relabel.empty()) cur = relabel(cur, options.choice->base_relabel);
  std::optional<Rng> rng;
  if (options.seed) rng.emplace(*options.seed);
  for (std::size_t step = 0; cur.n < n; ++step) {
    StepChoice choice;
    if (options.choice && step < options.choice->steps.size()) {
      choice = options.choice->steps[step];
    } else if (rng) {
      const std::size_t candidates = static_cast<std::size_t>(cur.n - 2) / 2;
      for (Vertex i = 1; i < cur.n; i += 2) choice.pick.push_back(draw_below(*rng, candidates));
    }
    cur = extend_by_two(cur, choice).set;
  }
  cur.strong = orientable;
  return cur;
}

namespace {

struct Splice {
  std::size_t target_pos;
  std::size_t fresh_pos;
  bool reverse_fresh;
};

// Occurrences of `mid` in target whose transition, read as (prev, mid, next),
// also occurs in fresh (or in reversed fresh when `allow_reverse`).
std::vector<Splice> common_transitions(const Circuit& target, const Circuit& fresh, Vertex mid,
                                       bool allow_reverse, std::optional<std::pair<Vertex, Vertex>> ends) {
  std::vector<Splice> out;
  const auto fresh_occ = positions_of(fresh, mid);
  for (std::size_t p : positions_of(target, mid)) {
    const Vertex a = target.at(static_cast<std::ptrdiff_t>(p) - 1), b = target.at(static_cast<std::ptrdiff_t>(p) + 1);
    if (ends && !((a == ends->first && b == ends->second) || (a == ends->second && b == ends->first))) continue;
    for (std::size_t f : fresh_occ) {
      const Vertex fa = fresh.at(static_cast<std::ptrdiff_t>(f) - 1), fb = fresh.at(static_cast<std::ptrdiff_t>(f) + 1);
      if (fa == a && fb == b) {
        out.push_back({p, f, false});
        break;
      }
      if (allow_reverse && fa == b && fb == a) {
        // In the reversed circuit the same vertex sits at len-1-f.
        out.push_back({p, fresh.size() - 1 - f, true});
        break;
      }
    }
  }
  return out;
}

// target: ..., a, v, b, ...  fresh: ..., a, v, b, ...  ->  ..., a, v, [b ... a, v], b, ...
void splice_into(Circuit& target, std::size_t target_pos, const Circuit& fresh, std::size_t fresh_pos) {
  const Circuit block = fresh.rotated(fresh_pos + 1);
  insert_after(target, target_pos, block.seq);
}

}  // namespace

EmbeddingSet splice_layer(const EmbeddingSet& target, const EmbeddingSet& fresh, std::optional<std::uint64_t> seed) {
  if (target.n != fresh.n || fresh.m != 1)
    throw Error(ErrorCode::MismatchedAmbient, "splice needs a K_n^3 embedding set of the same order");
  if (target.n % 2 != 0) throw Error(ErrorCode::OddOrder, "the multiplicity induction needs even n");
  const int n = target.n;
  const bool allow_reverse = !target.strong;
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  auto choose = [&](const std::vector<Splice>& c) { return rng ? c[draw_below(*rng, c.size())] : c.front(); };

  EmbeddingSet out = target;
  out.m = target.m + 1;
  for (Vertex i = 1; i < n; i += 2) {
    const Circuit& ti = target.T(i);
    const auto options = common_transitions(ti, fresh.T(i), i + 1, allow_reverse, std::nullopt);
    if (options.empty())
      throw Error(ErrorCode::NoCommonTransition, "T_" + std::to_string(i) + " shares no transition through " +
                                                     std::to_string(i + 1) + " with the fresh layer");
    const Splice si = choose(options);
    const Vertex a = ti.at(static_cast<std::ptrdiff_t>(si.target_pos) - 1);
    const Vertex b = ti.at(static_cast<std::ptrdiff_t>(si.target_pos) + 1);

    const Circuit& tn = target.T(i + 1);
    auto partner = common_transitions(tn, fresh.T(i + 1), i, allow_reverse, std::pair{a, b});
    if (partner.empty())
      throw Error(ErrorCode::NoCommonTransition, "T_" + std::to_string(i + 1) + " shares no partner of " +
                                                     to_string(Transition{a, i + 1, b}) + " with the fresh layer");
    const Splice sn = choose(partner);

    const Circuit fi = si.reverse_fresh ? fresh.T(i).reversed() : fresh.T(i);
    const Circuit fn = sn.reverse_fresh ? fresh.T(i + 1).reversed() : fresh.T(i + 1);
    splice_into(out.T(i), si.target_pos, fi, si.fresh_pos);
    splice_into(out.T(i + 1), sn.target_pos, fn, sn.fresh_pos);
  }
  for (Circuit& c : out.circuits) c.multiplicity = out.m;
  return out;
}

EmbeddingSet build_multi(int n, int m, bool orientable, std::optional<std::uint64_t> seed) {
  HypergraphSpec{n, m}.validate();
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "construction needs even n (n=" + std::to_string(n) + ")");
  if (!orientable && n == 4 && m == 1)
    throw Error(ErrorCode::UnsupportedCase, "K_4^3 has no non-orientable quadrilateral embedding");

  // For n = 4 only the planar layer exists; the Klein-bottle set of 2K_4^3
  // seeds the non-orientable side.
  const bool fresh_orientable = orientable || n == 4;
  BuildOptions opts;
  opts.seed = seed;
  const EmbeddingSet fresh = build_even(n, fresh_orientable, opts);
  EmbeddingSet cur = (!orientable && n == 4) ? base_set(BaseKind::MultiNonorientable4) : fresh;
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed ^ 0x9e3779b97f4a7c15ULL);
  while (cur.m < m) {
    std::optional<std::uint64_t> layer_seed;
    if (rng) layer_seed = (*rng)();
    cur = splice_layer(cur, fresh, layer_seed);
  }
  cur.strong = orientable;
  return cur;
}

}  // namespace kn3
