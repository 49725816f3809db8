#include "kn3/census.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "kn3/error.hpp"
#include "kn3/io.hpp"
#include "kn3/levi.hpp"
#include "kn3/scheme.hpp"

namespace kn3 {

namespace {

// Start index of the least rotation (two-pointer minimum expression).
std::size_t least_rotation(std::span<const Vertex> s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Vertex a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::vector<Vertex> rotation_from(std::span<const Vertex> s, std::size_t start) {
  std::vector<Vertex> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[(start + k) % s.size()];
  return out;
}

}  // namespace

std::vector<Vertex> canonical_cycle(std::span<const Vertex> seq) {
  if (seq.empty()) return {};
  std::vector<Vertex> rev(seq.rbegin(), seq.rend());
  auto a = rotation_from(seq, least_rotation(seq));
  auto b = rotation_from(rev, least_rotation(rev));
  return std::min(a, b);
}

std::uint64_t CanonicalSet::hash() const {
  // FNV-1a over the header and every entry.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  mix(static_cast<std::uint64_t>(m));
  for (const auto& c : circuits) {
    mix(0xffffffffULL);
    for (Vertex v : c) mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

CanonicalSet canonicalize(const EmbeddingSet& s) {
  CanonicalSet c{s.n, s.m, {}};
  c.circuits.reserve(s.circuits.size());
  for (const Circuit& t : s.circuits) c.circuits.push_back(canonical_cycle(t.seq));
  return c;
}

bool sets_equivalent(const EmbeddingSet& a, const EmbeddingSet& b) {
  return a.n == b.n && a.m == b.m && canonicalize(a) == canonicalize(b);
}

EmbeddingSet to_set(const CanonicalSet& c, bool strong) {
  EmbeddingSet s;
  s.n = c.n;
  s.m = c.m;
  s.strong = strong;
  for (int i = 1; i <= c.n; ++i) s.circuits.push_back(Circuit{i, c.n, c.m, c.circuits[static_cast<std::size_t>(i - 1)]});
  return s;
}

std::optional<std::vector<Vertex>> sets_isomorphic(const EmbeddingSet& a, const EmbeddingSet& b, int bound) {
  if (a.n != b.n || a.m != b.m) return std::nullopt;
  if (a.n > bound)
    throw Error(ErrorCode::BoundExceeded,
                "isomorphism search limited to n <= " + std::to_string(bound) + " (n=" + std::to_string(a.n) + ")");
  const int n = a.n;
  const CanonicalSet target = canonicalize(b);
  const auto& src = a.T(1).seq;

  // sigma(1) = j and sigma(T_1) read along some rotation/direction of T_j
  // fix sigma on every other vertex, since T_1 visits all of them.
  for (Vertex j = 1; j <= n; ++j) {
    const auto& dst = b.T(j).seq;
    if (dst.size() != src.size()) continue;
    const std::size_t len = dst.size();
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < len; ++r) {
        std::vector<Vertex> sigma(static_cast<std::size_t>(n), 0);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        sigma[0] = j;
        used[j] = 1;
        bool ok = true;
        for (std::size_t k = 0; k < len && ok; ++k) {
          const Vertex from = src[k];
          const Vertex to = dir == 0 ? dst[(r + k) % len] : dst[(r + len - k) % len];
          Vertex& slot = sigma[from - 1];
          if (slot == 0) {
            if (used[to]) ok = false;
            slot = to;
            used[to] = 1;
          } else if (slot != to) {
            ok = false;
          }
        }
        if (!ok || std::count(sigma.begin(), sigma.end(), 0) != 0) continue;
        if (canonicalize(relabel(a, sigma)) == target) return sigma;
      }
    }
  }
  return std::nullopt;
}

TransitionChoice random_choice(int n, bool orientable, Rng& rng) {
  auto shuffled = [&](int size) {
    std::vector<Vertex> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[draw_below(rng, k)]);
    return perm;
  };
  TransitionChoice tc;
  const int base = orientable ? 4 : 6;
  tc.base_relabel = shuffled(base);
  for (int cur = base; cur < n; cur += 2) {
    StepChoice step;
    const std::size_t per_pair = static_cast<std::size_t>(cur - 2) / 2;
    for (int i = 1; i < cur; i += 2) step.pick.push_back(draw_below(rng, per_pair));
    step.relabel = shuffled(cur);
    step.swap_apex = draw_below(rng, 2) == 1;
    tc.steps.push_back(std::move(step));
  }
  return tc;
}

bool verified_minimum(const EmbeddingSet& s, bool orientable) {
  if (!is_embedding_set(s, orientable).ok) return false;
  const FaceReport f = trace_faces(set_to_scheme(s));
  return f.quadrilateral() && f.orientable == orientable && f.euler_genus == euler_genus_lower_bound(s.spec());
}

namespace kernels {

std::optional<EmbeddingSet> build_attempt(int n, bool orientable, std::uint64_t seed, std::size_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  Rng rng(seq);
  BuildOptions opts;
  opts.choice = random_choice(n, orientable, rng);
  try {
    EmbeddingSet s = build_even(n, orientable, opts);
    if (!verified_minimum(s, orientable)) return std::nullopt;
    return s;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<std::optional<EmbeddingSet>> build_attempts_serial(int n, bool orientable, std::uint64_t seed,
                                                               std::size_t first, std::size_t count) {
  std::vector<std::optional<EmbeddingSet>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(build_attempt(n, orientable, seed, first + k));
  return out;
}

}  // namespace kernels

EnumerationResult enumerate_variants(int n, bool orientable, std::size_t count, const EnumerateOptions& options) {
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "enumeration needs even n");
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "n must be at least 4");
  if (!orientable && n == 4)
    throw Error(ErrorCode::UnsupportedCase, "K_4^3 has no non-orientable quadrilateral embedding");

  EnumerationResult res;
  std::vector<CanonicalSet> forms;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  auto admit = [&](const EmbeddingSet& s) {
    CanonicalSet c = canonicalize(s);
    auto& bucket = seen[c.hash()];
    for (std::size_t idx : bucket)
      if (forms[idx] == c) return false;
    bucket.push_back(forms.size());
    forms.push_back(std::move(c));
    res.sets.push_back(s);
    return true;
  };
  for (const EmbeddingSet& s : options.resume)
    if (res.sets.size() < count) admit(s);

  const std::size_t budget = options.budget ? options.budget : 50 * std::max<std::size_t>(count, 1);
  const std::size_t batch = std::max<std::size_t>(options.batch, 1);
  while (res.sets.size() < count && res.attempts < budget) {
    const std::size_t todo = std::min(batch, budget - res.attempts);
    const auto built = options.parallel
                           ? kernels::build_attempts_parallel(n, orientable, options.seed, res.attempts, todo)
                           : kernels::build_attempts_serial(n, orientable, options.seed, res.attempts, todo);
    for (const auto& s : built) {
      if (res.sets.size() >= count) break;
      ++res.attempts;
      if (!s) {
        ++res.rejected;
      } else if (!admit(*s)) {
        ++res.duplicates;
      }
    }
  }
  res.budget_exhausted = res.sets.size() < count;
  return res;
}

namespace {

// All Eulerian circuits of K_n - excluded, one per rotation/reversal class.
std::vector<std::vector<Vertex>> eulerian_classes(int n, Vertex excluded) {
  std::vector<Vertex> verts;
  for (Vertex v = 1; v <= n; ++v)
    if (v != excluded) verts.push_back(v);
  std::map<std::pair<Vertex, Vertex>, bool> used;
  std::vector<std::vector<Vertex>> found;
  const std::size_t edges = verts.size() * (verts.size() - 1) / 2;
  std::vector<Vertex> walk{verts.front()};
  auto key = [](Vertex a, Vertex b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  auto dfs = [&](auto&& self) -> void {
    if (walk.size() == edges + 1) {
      if (walk.back() == walk.front()) {
        std::vector<Vertex> cyc(walk.begin(), walk.end() - 1);
        found.push_back(canonical_cycle(cyc));
      }
      return;
    }
    for (Vertex w : verts) {
      if (w == walk.back() || used[key(walk.back(), w)]) continue;
      used[key(walk.back(), w)] = true;
      walk.push_back(w);
      self(self);
      walk.pop_back();
      used[key(walk.back(), w)] = false;
    }
  };
  dfs(dfs);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

std::vector<CanonicalSet> exhaustive_classes(int n) {
  if (n != 4) throw Error(ErrorCode::BoundExceeded, "exhaustive search is only tractable for n = 4");
  std::vector<std::vector<std::vector<Vertex>>> options;
  for (Vertex i = 1; i <= n; ++i) options.push_back(eulerian_classes(n, i));

  std::vector<CanonicalSet> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    EmbeddingSet s;
    s.n = n;
    s.strong = false;
    for (Vertex i = 1; i <= n; ++i) s.circuits.push_back(Circuit{i, n, 1, options[i - 1][idx[i - 1]]});
    // Each class is closed under reversal, so orientation choices are free.
    if (is_embedding_set(s, false).ok) out.push_back(canonicalize(s));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt double_factorial(int k) {
  BigInt r = 1;
  for (int v = k; v > 1; v -= 2) r *= v;
  return r;
}

namespace {

void check_even_order(int n) {
  if (n < 4) throw Error(ErrorCode::InvalidSpec, "n must be at least 4");
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "the counting bounds need even n");
}

}  // namespace

BigInt count_lower_bound(int n) {
  check_even_order(n);
  BigInt r = 1;
  for (int k = 6; k <= n; k += 2) {
    const int half = (k - 2) / 2;
    BigInt factor = boost::multiprecision::pow(BigInt((k - 4) / 2), static_cast<unsigned>(half));
    factor *= double_factorial(k - 3);
    factor <<= half;
    r = r * factor / 2;
  }
  return r;
}

BigInt count_lower_bound_product(int n) {
  check_even_order(n);
  BigInt r = 1;
  for (int k = 2; k <= (n - 2) / 2; ++k) {
    r *= boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(k));
    r *= double_factorial(2 * k - 1);
    r <<= k - 1;
  }
  return r;
}

BigInt count_upper_bound(int n) {
  check_even_order(n);
  return boost::multiprecision::pow(double_factorial(n - 3), static_cast<unsigned>(n * (n - 1) / 2));
}

namespace census {

std::string digest(const CanonicalSet& c) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(c.hash()));
  return buf;
}

std::string write(const std::vector<EmbeddingSet>& sets) {
  std::string out;
  for (const EmbeddingSet& s : sets) {
    out += std::string(kDigestPrefix) + digest(canonicalize(s)) + "\n";
    out += io::write_set(s);
  }
  return out;
}

std::vector<EmbeddingSet> parse(std::string_view text) {
  std::vector<EmbeddingSet> out;
  std::size_t pos = 0;
  int line = 1;
  std::optional<std::string> pending;
  int record_line = 0;
  std::size_t record_start = std::string_view::npos;

  auto flush = [&](std::size_t end) {
    if (record_start == std::string_view::npos) return;
    const std::string_view body = text.substr(record_start, end - record_start);
    EmbeddingSet s;
    try {
      s = io::parse_set(body);
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      const auto cut = msg.find(": ");
      throw ParseError(record_line + e.line(), cut == std::string::npos ? msg : msg.substr(cut + 2));
    }
    if (digest(canonicalize(s)) != *pending) throw ParseError(record_line, "digest does not match the record that follows");
    out.push_back(std::move(s));
  };

  while (pos <= text.size()) {
    const std::size_t cut = std::min(text.find('\n', pos), text.size());
    std::string_view l = text.substr(pos, cut - pos);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (l.substr(0, kDigestPrefix.size()) == kDigestPrefix) {
      flush(pos);
      pending = std::string(l.substr(kDigestPrefix.size()));
      record_line = line;
      record_start = cut + 1 <= text.size() ? cut + 1 : text.size();
    } else if (!pending && !l.empty()) {
      throw ParseError(line, "expected '" + std::string(kDigestPrefix) + "<hex>' before a record");
    }
    if (cut >= text.size()) break;
    pos = cut + 1;
    ++line;
  }
  flush(text.size());
  return out;
}

}  // namespace census

}  // namespace kn3
