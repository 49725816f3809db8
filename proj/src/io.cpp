#include "kn3/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "kn3/error.hpp"

namespace kn3::io {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    const auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({++number, line});
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  while (p < s.size()) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
    const std::size_t q = p;
    while (p < s.size() && s[p] != ' ' && s[p] != '\t') ++p;
    if (p > q) out.push_back(s.substr(q, p - q));
  }
  return out;
}

int to_int(std::string_view s, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  return value;
}

// Drops blank lines and checks the versioned header.
std::vector<Line> content_lines(std::string_view text, std::string_view header, const char* kind) {
  std::vector<Line> lines;
  for (const Line& l : split_lines(text))
    if (!trim(l.text).empty()) lines.push_back({l.number, trim(l.text)});
  if (lines.empty()) throw ParseError(1, std::string("empty ") + kind + " file");
  if (lines.front().text != header) {
    const std::string prefix = std::string(header.substr(0, header.rfind(' ')));
    if (lines.front().text.substr(0, prefix.size()) == prefix)
      throw ParseError(lines.front().number, "unsupported version '" + std::string(lines.front().text) + "'");
    throw ParseError(lines.front().number, std::string("missing header '") + std::string(header) + "'");
  }
  lines.erase(lines.begin());
  return lines;
}

}  // namespace

std::string format_circuit(const Circuit& c) {
  std::string out = "T " + std::to_string(c.excluded) + ":";
  for (Vertex v : c.seq) out += " " + std::to_string(v);
  return out;
}

std::string write_set(const EmbeddingSet& s) {
  std::string out(kSetHeader);
  out += "\nn=" + std::to_string(s.n) + " m=" + std::to_string(s.m) +
         " orientable=" + (s.strong ? "1" : "0") + "\n";
  for (const Circuit& c : s.circuits) out += format_circuit(c) + "\n";
  return out;
}

EmbeddingSet parse_set(std::string_view text) {
  const auto lines = content_lines(text, kSetHeader, "embedding-set");
  if (lines.empty()) throw ParseError(1, "missing metadata line");

  EmbeddingSet s;
  const Line& meta = lines.front();
  const auto fields = tokens(meta.text);
  if (fields.size() != 3) throw ParseError(meta.number, "metadata must read 'n=<n> m=<m> orientable=<0|1>'");
  auto field = [&](std::string_view tok, std::string_view key) {
    if (tok.substr(0, key.size()) != key) throw ParseError(meta.number, "expected '" + std::string(key) + "'");
    return to_int(tok.substr(key.size()), meta.number, key.data());
  };
  s.n = field(fields[0], "n=");
  s.m = field(fields[1], "m=");
  const int orientable = field(fields[2], "orientable=");
  if (orientable != 0 && orientable != 1) throw ParseError(meta.number, "orientable must be 0 or 1");
  s.strong = orientable == 1;
  if (s.n < 4 || s.m < 1) throw ParseError(meta.number, "need n >= 4 and m >= 1");

  s.circuits.assign(static_cast<std::size_t>(s.n), Circuit{});
  std::vector<char> seen(static_cast<std::size_t>(s.n) + 1, 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto colon = l.text.find(':');
    if (l.text.substr(0, 2) != "T " || colon == std::string_view::npos)
      throw ParseError(l.number, "expected 'T <i>: v1 v2 ...'");
    const int i = to_int(trim(l.text.substr(2, colon - 2)), l.number, "circuit index");
    if (i < 1 || i > s.n) throw ParseError(l.number, "circuit index " + std::to_string(i) + " out of range");
    if (seen[i]) throw ParseError(l.number, "duplicate circuit T " + std::to_string(i));
    seen[i] = 1;
    Circuit c{i, s.n, s.m, {}};
    for (auto tok : tokens(l.text.substr(colon + 1))) c.seq.push_back(to_int(tok, l.number, "vertex"));
    if (c.seq.empty()) throw ParseError(l.number, "empty circuit");
    s.circuits[static_cast<std::size_t>(i - 1)] = std::move(c);
  }
  for (int i = 1; i <= s.n; ++i)
    if (!seen[i]) throw ParseError(lines.back().number, "missing circuit T " + std::to_string(i));
  return s;
}

std::string write_scheme(const EmbeddingScheme& sch) {
  const LeviGraph& g = sch.graph;
  std::ostringstream out;
  out << kSchemeHeader << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << g.vertex_name(v) << ":";
    for (int e : sch.rotation[v]) out << " " << g.vertex_name(g.other_end(e, v));
    out << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e)
    out << "sig " << g.vertex_name(g.edge_x(e)) << " " << g.vertex_name(g.edge_y(e))
        << (sch.signature[e] > 0 ? ": +1\n" : ": -1\n");
  return out.str();
}

namespace {

struct VertexName {
  bool is_triple = false;
  Vertex label = 0;
  Vertex v[3] = {0, 0, 0};
  int copy = -1;  // -1 when the suffix is absent
};

VertexName parse_vertex_name(std::string_view s, int line) {
  VertexName out;
  if (s.empty()) throw ParseError(line, "empty vertex name");
  if (s.front() != 'e') {
    out.label = to_int(s, line, "vertex");
    return out;
  }
  out.is_triple = true;
  if (s.size() < 3 || s[1] != '{') throw ParseError(line, "bad triple vertex '" + std::string(s) + "'");
  const auto close = s.find('}');
  if (close == std::string_view::npos) throw ParseError(line, "bad triple vertex '" + std::string(s) + "'");
  std::string_view body = s.substr(2, close - 2);
  for (int k = 0; k < 3; ++k) {
    const auto comma = body.find(',');
    if ((k < 2) != (comma != std::string_view::npos))
      throw ParseError(line, "triple vertex needs three labels: '" + std::string(s) + "'");
    out.v[k] = to_int(body.substr(0, comma), line, "triple label");
    if (k < 2) body.remove_prefix(comma + 1);
  }
  std::string_view rest = s.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != '#') throw ParseError(line, "bad copy suffix in '" + std::string(s) + "'");
    out.copy = to_int(rest.substr(1), line, "copy index");
  }
  if (!(out.v[0] < out.v[1] && out.v[1] < out.v[2]))
    throw ParseError(line, "triple labels must be strictly increasing: '" + std::string(s) + "'");
  return out;
}

}  // namespace

EmbeddingScheme parse_scheme(std::string_view text) {
  const auto lines = content_lines(text, kSchemeHeader, "scheme");

  struct RotLine {
    int number;
    std::string_view vertex;
    std::vector<std::string_view> neighbours;
  };
  struct SigLine {
    int number;
    std::string_view a, b;
    int sign;
  };
  std::vector<RotLine> rots;
  std::vector<SigLine> sigs;
  int n = 0, max_copy = -1;
  bool any_suffix = false, any_plain = false;
  auto note = [&](std::string_view name, int line) {
    const VertexName v = parse_vertex_name(name, line);
    if (!v.is_triple) n = std::max(n, v.label);
    else {
      n = std::max(n, v.v[2]);
      (v.copy >= 0 ? any_suffix : any_plain) = true;
      max_copy = std::max(max_copy, v.copy);
    }
  };

  for (const Line& l : lines) {
    const auto colon = l.text.rfind(':');
    if (colon == std::string_view::npos) throw ParseError(l.number, "expected ':'");
    const auto head = tokens(l.text.substr(0, colon));
    const auto tail = tokens(l.text.substr(colon + 1));
    if (!head.empty() && head[0] == "rot") {
      if (head.size() != 2) throw ParseError(l.number, "expected 'rot <vertex>: ...'");
      if (!sigs.empty()) throw ParseError(l.number, "rot lines must precede sig lines");
      note(head[1], l.number);
      for (auto t : tail) note(t, l.number);
      rots.push_back({l.number, head[1], tail});
    } else if (!head.empty() && head[0] == "sig") {
      if (head.size() != 3 || tail.size() != 1 || (tail[0] != "+1" && tail[0] != "-1"))
        throw ParseError(l.number, "expected 'sig <u> <w>: +1|-1'");
      sigs.push_back({l.number, head[1], head[2], tail[0] == "+1" ? 1 : -1});
    } else {
      throw ParseError(l.number, "unknown record '" + std::string(l.text) + "'");
    }
  }
  if (any_suffix && any_plain) throw ParseError(lines.front().number, "mixed triple names with and without copy index");
  if (n < 4) throw ParseError(lines.front().number, "scheme must describe a Levi graph with n >= 4");
  const int m = any_suffix ? max_copy + 1 : 1;
  if (any_suffix && m < 2) throw ParseError(lines.front().number, "copy suffix is only written when m > 1");

  EmbeddingScheme sch{LeviGraph(HypergraphSpec{n, m})};
  const LeviGraph& g = sch.graph;
  std::unordered_map<std::string, int> vid;
  for (int v = 0; v < g.vertex_count(); ++v) vid.emplace(g.vertex_name(v), v);
  auto lookup = [&](std::string_view name, int line) {
    auto it = vid.find(std::string(name));
    if (it == vid.end()) throw ParseError(line, "unknown vertex '" + std::string(name) + "'");
    return it->second;
  };
  auto edge_between = [&](int a, int b, int line) {
    for (int e : g.incident(a))
      if (g.other_end(e, a) == b) return e;
    throw ParseError(line, g.vertex_name(a) + " and " + g.vertex_name(b) + " are not adjacent");
  };

  std::vector<char> has_rot(g.vertex_count(), 0);
  for (const RotLine& r : rots) {
    const int v = lookup(r.vertex, r.number);
    if (has_rot[v]) throw ParseError(r.number, "duplicate rotation for " + std::string(r.vertex));
    has_rot[v] = 1;
    std::vector<int> rot;
    for (auto name : r.neighbours) rot.push_back(edge_between(v, lookup(name, r.number), r.number));
    std::vector<int> sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.incident(v))
      throw ParseError(r.number, "rotation at " + std::string(r.vertex) + " must list every neighbour exactly once");
    sch.rotation[v] = std::move(rot);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!has_rot[v]) throw ParseError(lines.back().number, "missing rotation for " + g.vertex_name(v));

  std::vector<char> has_sig(g.edge_count(), 0);
  for (const SigLine& s : sigs) {
    const int e = edge_between(lookup(s.a, s.number), lookup(s.b, s.number), s.number);
    if (has_sig[e]) throw ParseError(s.number, "duplicate signature line");
    has_sig[e] = 1;
    sch.signature[e] = s.sign;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!has_sig[e])
      throw ParseError(lines.back().number,
                       "missing signature for " + g.vertex_name(g.edge_x(e)) + " " + g.vertex_name(g.edge_y(e)));
  return sch;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << content;
}

}  // namespace kn3::io
