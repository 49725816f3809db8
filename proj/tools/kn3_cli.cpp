#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kn3/builder.hpp"
#include "kn3/census.hpp"
#include "kn3/error.hpp"
#include "kn3/io.hpp"
#include "kn3/scheme.hpp"

using nlohmann::json;
using namespace kn3;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  int n = 0;
  int m = 1;
  bool orientable = false;
  bool nonorientable = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;
  std::string in;
  std::string out;
  std::string scheme_out;
  std::string resume;
  bool strict_strong = false;
  bool serial = false;
  bool json = false;
};

std::string pairs_text(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::string s;
  for (const auto& [i, j] : pairs) s += (s.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  return s;
}

json pairs_json(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  json a = json::array();
  for (const auto& [i, j] : pairs) a.push_back({i, j});
  return a;
}

std::string histogram_text(const FaceReport& f) {
  std::string s;
  for (const auto& [len, cnt] : f.histogram()) s += (s.empty() ? "" : " ") + std::to_string(len) + "x" + std::to_string(cnt);
  return s;
}

json histogram_json(const FaceReport& f) {
  json h = json::object();
  for (const auto& [len, cnt] : f.histogram()) h[std::to_string(len)] = cnt;
  return h;
}

void print_surface(std::ostream& os, const FaceReport& f) {
  os << "faces: " << f.face_count << " (" << histogram_text(f) << ")\n";
  os << "euler genus: " << f.euler_genus << "\n";
  os << "surface: " << (f.orientable ? "orientable" : "non-orientable") << "\n";
  if (f.orientable)
    os << "genus: " << f.euler_genus / 2 << "\n";
  else
    os << "crosscap: " << f.euler_genus << "\n";
}

int cmd_build(const Config& c) {
  const bool orientable = !c.nonorientable;
  const EmbeddingSet s = build_multi(c.n, c.m, orientable, c.seed);
  const SetReport rep = is_embedding_set(s, orientable);
  const EmbeddingScheme sch = set_to_scheme(s);
  const FaceReport f = trace_faces(sch);
  const auto bound = euler_genus_lower_bound(s.spec());
  const bool ok = rep.ok && f.quadrilateral() && f.orientable == orientable && f.euler_genus == bound;
  if (!c.out.empty()) io::write_file(c.out, io::write_set(s));
  if (!c.scheme_out.empty()) io::write_file(c.scheme_out, io::write_scheme(sch));
  if (c.json) {
    json j = {{"n", s.n},
              {"m", s.m},
              {"orientable", f.orientable},
              {"strong", rep.ok && orientable},
              {"faces", f.face_count},
              {"face_lengths", histogram_json(f)},
              {"euler_genus", f.euler_genus},
              {"verified", ok}};
    j[f.orientable ? "genus" : "crosscap"] = f.orientable ? f.euler_genus / 2 : f.euler_genus;
    if (c.out.empty() && c.scheme_out.empty()) j["set"] = io::write_set(s);
    std::cout << j.dump(2) << "\n";
  } else {
    if (c.out.empty() && c.scheme_out.empty()) std::cout << io::write_set(s);
    std::cout << "n: " << s.n << "\nm: " << s.m << "\n";
    print_surface(std::cout, f);
    std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
  }
  if (!ok) std::cerr << "error: built set failed verification: " << rep.message << "\n";
  return ok ? kOk : kFailed;
}

int cmd_verify(const Config& c) {
  const EmbeddingSet s = io::parse_set(io::read_file(c.in));
  const bool want_strong = c.strict_strong || s.strong;

  struct Row {
    std::string check;
    bool ok;
    std::string detail;
  };
  std::vector<Row> rows;
  bool eulerian = true;
  std::string euler_detail;
  for (const Circuit& t : s.circuits) {
    const EulerianReport e = validate_eulerian(t);
    if (!e.ok && eulerian) {
      eulerian = false;
      euler_detail = "T_" + std::to_string(t.excluded) + ": " + e.message;
    }
  }
  rows.push_back({"eulerian", eulerian, euler_detail});

  const SetReport compat = is_embedding_set(s, false);
  rows.push_back({"compatibility", compat.ok, compat.ok ? "" : compat.message});

  const SetReport strong = compat.ok ? is_embedding_set(s, true) : compat;
  std::string strong_detail;
  if (compat.ok && !strong.ok) strong_detail = strong.message + "; non-strong pairs: " + pairs_text(strong.failing_pairs);
  rows.push_back({"strength", !want_strong || (compat.ok && strong.ok),
                  compat.ok ? (strong.ok ? "strong" : "not strong: " + strong_detail) : "skipped"});

  std::optional<FaceReport> faces;
  if (compat.ok) {
    try {
      faces = trace_faces(set_to_scheme(s));
    } catch (const Error& e) {
      rows.push_back({"scheme", false, e.what()});
    }
  }
  const auto bound = euler_genus_lower_bound(s.spec());
  if (faces) {
    rows.push_back({"quadrilateral", faces->quadrilateral(), histogram_text(*faces)});
    rows.push_back({"genus", faces->euler_genus == bound,
                    "euler genus " + std::to_string(faces->euler_genus) + " (minimum " + std::to_string(bound) + ")"});
    if (s.strong) rows.push_back({"orientable", faces->orientable, faces->orientable ? "" : "metadata says orientable=1"});
  }

  bool all = true;
  for (const Row& r : rows) all = all && r.ok;
  if (c.json) {
    json j = {{"file", c.in}, {"n", s.n}, {"m", s.m}, {"ok", all}, {"strong", compat.ok && strong.ok}};
    json checks = json::array();
    for (const Row& r : rows) checks.push_back({{"check", r.check}, {"ok", r.ok}, {"detail", r.detail}});
    j["checks"] = checks;
    if (compat.ok && !strong.ok) j["non_strong_pairs"] = pairs_json(strong.failing_pairs);
    if (faces) {
      j["faces"] = faces->face_count;
      j["face_lengths"] = histogram_json(*faces);
      j["euler_genus"] = faces->euler_genus;
      j["orientable"] = faces->orientable;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << s.n << "  m: " << s.m << "\n";
    for (const Row& r : rows)
      std::cout << (r.ok ? "PASS " : "FAIL ") << r.check << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    if (faces) print_surface(std::cout, *faces);
  }
  return all ? kOk : kFailed;
}

int cmd_genus(const Config& c) {
  const EmbeddingScheme sch = io::parse_scheme(io::read_file(c.in));
  const FaceReport f = trace_faces(sch);
  if (c.json) {
    json j = {{"faces", f.face_count},
              {"face_lengths", histogram_json(f)},
              {"euler_genus", f.euler_genus},
              {"orientable", f.orientable},
              {"quadrilateral", f.quadrilateral()}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_surface(std::cout, f);
  }
  return kOk;
}

int cmd_enumerate(const Config& c) {
  const bool orientable = !c.nonorientable;
  EnumerateOptions opts;
  opts.seed = c.seed.value_or(0);
  opts.parallel = !c.serial;
  if (!c.resume.empty()) opts.resume = census::parse(io::read_file(c.resume));
  const EnumerationResult r = enumerate_variants(c.n, orientable, c.count, opts);
  if (!c.out.empty()) io::write_file(c.out, census::write(r.sets));

  const std::string lower = count_lower_bound(c.n).str();
  const std::string upper = count_upper_bound(c.n).str();
  if (c.json) {
    json j = {{"n", c.n},
              {"orientable", orientable},
              {"requested", c.count},
              {"classes", r.sets.size()},
              {"attempts", r.attempts},
              {"duplicates", r.duplicates},
              {"rejected", r.rejected},
              {"budget_exhausted", r.budget_exhausted},
              {"count_lower_bound", lower},
              {"count_upper_bound", upper}};
    std::cout << j.dump(2) << "\n";
  } else {
    if (c.out.empty()) std::cout << census::write(r.sets);
    std::cout << "classes: " << r.sets.size() << " of " << c.count << "\n";
    std::cout << "attempts: " << r.attempts << " (duplicates " << r.duplicates << ", rejected " << r.rejected << ")\n";
    std::cout << "count lower bound: " << lower << "\n";
    std::cout << "count upper bound: " << upper << "\n";
  }
  if (r.budget_exhausted)
    std::cerr << "warning: sampling budget exhausted after " << r.attempts << " attempts; output is partial\n";
  return kOk;
}

int cmd_formula(const Config& c) {
  const HypergraphSpec spec{c.n, c.m};
  spec.validate();
  const auto lower = euler_genus_lower_bound(spec);
  json j = {{"n", c.n}, {"m", c.m}, {"euler_genus_lower_bound", lower}};
  std::string og, ng;
  if (c.n % 2 != 0) {
    og = ng = "out of scope (odd)";
  } else {
    og = std::to_string(genus_formula(spec, true));
    try {
      ng = std::to_string(genus_formula(spec, false));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedCase) throw;
      ng = "n/a (no non-orientable quadrilateral embedding)";
    }
  }
  if (c.json) {
    j["orientable_genus"] = og;
    j["nonorientable_genus"] = ng;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "euler genus lower bound: " << lower << "\n";
    std::cout << "orientable genus: " << og << "\n";
    std::cout << "non-orientable genus: " << ng << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum genus embeddings of complete 3-uniform hypergraphs"};
  app.require_subcommand(1);
  Config c;

  auto add_orientation = [&](CLI::App* sub) {
    auto* o = sub->add_flag("--orientable", c.orientable, "orientable surface (default)");
    auto* no = sub->add_flag("--nonorientable", c.nonorientable, "non-orientable surface");
    o->excludes(no);
  };

  auto* build = app.add_subcommand("build", "build a minimum genus embedding set");
  build->add_option("--n", c.n, "order (even, >= 4)")->required();
  build->add_option("--multiplicity", c.m, "copies of every triple")->check(CLI::PositiveNumber);
  add_orientation(build);
  build->add_option("--seed", c.seed, "randomise transition picks");
  build->add_option("--out", c.out, "embedding set output file");
  build->add_option("--scheme-out", c.scheme_out, "embedding scheme output file");
  build->add_flag("--json", c.json);

  auto* verify = app.add_subcommand("verify", "check an embedding set file");
  verify->add_option("file", c.in)->required();
  verify->add_flag("--strict-strong", c.strict_strong, "require every pair to be strongly compatible");
  verify->add_flag("--json", c.json);

  auto* genus = app.add_subcommand("genus", "trace the faces of an embedding scheme file");
  genus->add_option("file", c.in)->required();
  genus->add_flag("--json", c.json);

  auto* enumerate = app.add_subcommand("enumerate", "sample pairwise inequivalent embedding sets");
  enumerate->add_option("--n", c.n)->required();
  add_orientation(enumerate);
  enumerate->add_option("--count", c.count)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--seed", c.seed);
  enumerate->add_option("--out", c.out, "census output file");
  enumerate->add_option("--resume", c.resume, "census file with classes found earlier");
  enumerate->add_flag("--serial", c.serial, "use the serial reference kernel");
  enumerate->add_flag("--json", c.json);

  auto* formula = app.add_subcommand("formula", "print the genus formulas");
  formula->add_option("--n", c.n)->required();
  formula->add_option("--multiplicity", c.m)->check(CLI::PositiveNumber);
  formula->add_flag("--json", c.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(c);
    if (*verify) return cmd_verify(c);
    if (*genus) return cmd_genus(c);
    if (*enumerate) return cmd_enumerate(c);
    if (*formula) return cmd_formula(c);
  } catch (const ParseError& e) {
    std::cerr << "error: " << (c.in.empty() ? c.resume : c.in) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::NotAnEmbeddingSet || e.code() == ErrorCode::NotQuadrilateral ? kFailed : kUsage;
  }
  return kUsage;
}
