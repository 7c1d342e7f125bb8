// Command-line front end. Exit codes: 0 success, 1 usage or runtime error,
// 2 some audit failed, 3 malformed input file.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "flowroots/audits.hpp"
#include "flowroots/io.hpp"
#include "flowroots/report.hpp"
#include "flowroots/search.hpp"

using namespace flowroots;

namespace {

constexpr int kExitAuditFail = 2;
constexpr int kExitParse = 3;

struct Globals {
  std::string format = "text";
  std::string tol = "1/1000000";
  int workers = 1;

  bool json() const { return format == "json"; }
  Rational tolerance() const {
    const Rational t = parse_rational(tol);
    if (t <= 0) throw std::invalid_argument("--tol must be positive");
    return t;
  }
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_flow(const Globals& gl, const std::string& file, bool want_trace) {
  const MultiGraph g = load_edge_list(file);
  ReductionTrace trace;
  FlowEngine engine;
  const IntPoly f = engine.flow_poly(g, want_trace ? &trace : nullptr);
  Json j{{"polynomial", "flow"}, {"coeffs", poly_json(f)}};
  std::string text = "F = " + f.to_string("L") + "\n";
  if (want_trace) {
    j["trace"] = trace.to_text();
    text += trace.to_text();
  }
  emit(gl, j, text);
  return 0;
}

int cmd_chromatic(const Globals& gl, const std::string& file) {
  const IntPoly p = chromatic_poly(load_edge_list(file));
  emit(gl, Json{{"polynomial", "chromatic"}, {"coeffs", poly_json(p)}}, "P = " + p.to_string("L") + "\n");
  return 0;
}

int cmd_roots(const Globals& gl, const std::string& file, const std::string& which) {
  const MultiGraph g = load_edge_list(file);
  const IntPoly p = which == "chromatic" ? chromatic_poly(g) : flow_poly(g);
  if (p.is_zero()) {
    emit(gl, Json{{"polynomial", which}, {"coeffs", Json::array()}, {"roots", nullptr}},
         "polynomial is identically zero\n");
    return 0;
  }
  const RootProfile prof = root_profile(p, gl.tolerance());
  emit(gl, Json{{"polynomial", which}, {"coeffs", poly_json(p)}, {"roots", roots_json(prof)}},
       which + " polynomial " + p.to_string("L") + "\n" + roots_text(prof));
  return 0;
}

int cmd_invariants(const Globals& gl, const std::string& file) {
  const Invariants inv = compute_invariants(load_edge_list(file));
  emit(gl, invariants_json(inv), invariants_text(inv));
  return 0;
}

int cmd_classify(const Globals& gl, const std::string& file) {
  const MultiGraph g = load_edge_list(file);
  const IntPoly f = flow_poly(g);
  const RootProfile prof = f.is_zero() ? RootProfile{} : root_profile(f, gl.tolerance());
  const Classification c = classify(g, f, prof);
  emit(gl, classification_json(c), classification_text(c));
  return 0;
}

int cmd_audit(const Globals& gl, const std::string& file, const std::string& faces_file) {
  const MultiGraph g = load_edge_list(file);
  AuditOptions opts;
  opts.tol = gl.tolerance();
  if (!faces_file.empty()) opts.faces = load_faces(faces_file);
  const AuditReport rep = run_audit(g, opts);
  emit(gl, report_json(rep), report_text(rep));
  return rep.any_fail() ? kExitAuditFail : 0;
}

int cmd_dual(const Globals& gl, const std::string& file, const std::string& faces_file, bool check) {
  const MultiGraph g = load_edge_list(file);
  const FaceStructure faces = load_faces(faces_file);
  validate_faces(g, faces);
  const MultiGraph d = build_dual(g, faces);
  Json j{{"dual", graph_json(d)}};
  std::string text = format_edge_list(d);
  int code = 0;
  if (check) {
    const IntPoly p = chromatic_poly(g);
    const IntPoly rhs = IntPoly::monomial(1, 1) * flow_poly(d);
    const bool ok = p == rhs;
    j["check"] = {{"chromatic", poly_json(p)}, {"lambda_times_dual_flow", poly_json(rhs)}, {"equal", ok}};
    text += std::string("# check P(G) = L * F(G*): ") + (ok ? "pass" : "FAIL") + "\n";
    if (!ok) code = kExitAuditFail;
  }
  emit(gl, j, text);
  return code;
}

int cmd_search(const Globals& gl, SearchConfig cfg, const std::vector<std::string>& filter_names) {
  for (const auto& name : filter_names) {
    const auto f = parse_filter(name);
    if (!f) throw std::invalid_argument("unknown filter '" + name + "'");
    cfg.filters.push_back(*f);
  }
  cfg.workers = gl.workers;
  cfg.tol = gl.tolerance();
  const SearchSummary sum = run_search(cfg, [&](const AuditReport& rep) {
    if (gl.json()) {
      std::cout << report_json(rep).dump() << '\n';
    } else {
      std::cout << "graph";
      for (const Edge& e : rep.graph.edges()) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << " | F = " << rep.flow.to_string("L") << (rep.any_fail() ? " | AUDIT FAIL" : "") << '\n';
    }
  });

  Json cands = Json::array();
  for (const auto& c : sum.candidates)
    cands.push_back({{"kind", c.kind}, {"graph", graph_json(c.graph)}, {"detail", c.detail}});
  Json stages = Json::array();
  for (const auto& [name, count] : sum.stages) stages.push_back({{"filter", name}, {"passed", count}});
  if (gl.json()) {
    Json s{{"candidates", cands},
           {"enumerated", sum.enumerated},
           {"stages", stages},
           {"survivors", sum.survivors},
           {"audit_failures", sum.audit_failures},
           {"estimated_work", sum.estimated_work}};
    std::cout << Json{{"summary", s}}.dump() << '\n';
  } else {
    std::cout << "summary\n";
    for (const auto& c : sum.candidates) {
      std::cout << "CANDIDATE " << c.kind << ":";
      for (const Edge& e : c.graph.edges()) std::cout << ' ' << e.u << '-' << e.v;
      std::cout << " (" << c.detail << ")\n";
    }
    std::cout << "enumerated " << sum.enumerated << '\n';
    for (const auto& [name, count] : sum.stages) std::cout << "passed " << name << ' ' << count << '\n';
    std::cout << "survivors " << sum.survivors << "\naudit failures " << sum.audit_failures << '\n';
  }
  return sum.audit_failures > 0 ? kExitAuditFail : 0;
}

int cmd_constants(const Globals& gl, const std::string& kind, int k) {
  if (kind == "nroot") {
    const int v = nroot(k);
    emit(gl, Json{{"kind", "nroot"}, {"k", k}, {"value", v}}, std::to_string(v) + "\n");
    return 0;
  }
  if (kind != "xi") throw std::invalid_argument("constants kind must be xi or nroot");
  if (k < 3) throw std::invalid_argument("xi needs k >= 3");
  if (k >= 6) {
    emit(gl, Json{{"kind", "xi"}, {"k", k}, {"lower_bound", "32/27"}}, "lower bound 32/27\n");
    return 0;
  }
  const Rational tol = std::min(gl.tolerance(), Rational(1, 1000000000));
  const Interval iv = isolate_root_of_cubic(xi_cubic(k), Rational(1), Rational(2), tol);
  emit(gl, Json{{"kind", "xi"}, {"k", k}, {"enclosure", interval_json(iv)}},
       "[" + format_decimal(iv.lo, 12) + ", " + format_decimal(iv.hi, 12) + "]\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact flow polynomials, root audits and small-graph searches"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", gl.tol, "Root enclosure tolerance (rational or decimal)");
  app.add_option("--workers", gl.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string file, faces_file, poly = "flow", kind;
  bool trace = false, check = false;
  int k = 0;

  auto* flow = app.add_subcommand("flow", "Flow polynomial");
  flow->add_option("file", file, "Edge-list file")->required();
  flow->add_flag("--trace", trace, "Print the reduction trace");

  auto* chrom = app.add_subcommand("chromatic", "Chromatic polynomial");
  chrom->add_option("file", file)->required();

  auto* roots = app.add_subcommand("roots", "Real roots of the flow or chromatic polynomial");
  roots->add_option("file", file)->required();
  roots->add_option("--poly", poly, "flow or chromatic")->check(CLI::IsMember({"flow", "chromatic"}));

  auto* inv = app.add_subcommand("invariants", "Cycle rank, cut counts and degree data");
  inv->add_option("file", file)->required();

  auto* cls = app.add_subcommand("classify", "Family membership");
  cls->add_option("file", file)->required();

  auto* audit = app.add_subcommand("audit", "Check every applicable inequality on one graph");
  audit->add_option("file", file)->required();
  audit->add_option("--faces", faces_file, "Faces file for the plane-dual checks");

  auto* dual = app.add_subcommand("dual", "Plane dual from a face structure");
  dual->add_option("file", file)->required();
  dual->add_option("faces", faces_file)->required();
  dual->add_flag("--check", check, "Verify P(G) = L * F(G*)");

  SearchConfig cfg;
  std::vector<std::string> filters;
  bool no_loops = false;
  auto* search = app.add_subcommand("search", "Enumerate small connected multigraphs and audit them");
  search->add_option("--max-vertices", cfg.bounds.max_vertices)->check(CLI::PositiveNumber);
  search->add_option("--max-edges", cfg.bounds.max_edges)->check(CLI::NonNegativeNumber);
  search->add_option("--max-multiplicity", cfg.bounds.max_multiplicity)->check(CLI::PositiveNumber);
  search->add_option("--filter", filters, "bridgeless, three-edge-connected, in-G, in-G0, nonintegral-roots");
  search->add_option("--work-cap", cfg.work_cap, "Refuse bounds whose estimated work is larger");
  search->add_flag("--no-loops", no_loops, "Leave out loops");

  auto* consts = app.add_subcommand("constants", "Zero-free bounds and root-count thresholds");
  consts->add_option("kind", kind, "xi or nroot")->required()->check(CLI::IsMember({"xi", "nroot"}));
  consts->add_option("k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*flow) return cmd_flow(gl, file, trace);
    if (*chrom) return cmd_chromatic(gl, file);
    if (*roots) return cmd_roots(gl, file, poly);
    if (*inv) return cmd_invariants(gl, file);
    if (*cls) return cmd_classify(gl, file);
    if (*audit) return cmd_audit(gl, file, faces_file);
    if (*dual) return cmd_dual(gl, file, faces_file, check);
    if (*search) {
      cfg.bounds.loops = !no_loops;
      return cmd_search(gl, cfg, filters);
    }
    if (*consts) return cmd_constants(gl, kind, k);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
