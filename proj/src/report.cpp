#include "flowroots/report.hpp"

#include <sstream>

namespace flowroots {

Json poly_json(const IntPoly& p) {
  Json out = Json::array();
  for (const Integer& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>()));
  return IntPoly(std::move(coeffs));
}

Json rational_json(const Rational& q) { return q.get_str(); }

Json interval_json(const Interval& iv) {
  return Json{{"lo", rational_json(iv.lo)},
              {"hi", rational_json(iv.hi)},
              {"lo_decimal", format_decimal(iv.lo, 12)},
              {"hi_decimal", format_decimal(iv.hi, 12)}};
}

Json graph_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

Json invariants_json(const Invariants& inv) {
  Json hist = Json::object();
  for (const auto& [d, c] : inv.degree_histogram) hist[std::to_string(d)] = c;
  Json out{{"n", inv.n},         {"m", inv.m}, {"r", inv.r}, {"alpha", inv.alpha},
           {"gamma", inv.gamma}, {"k", inv.k}, {"b", inv.b}, {"degree_histogram", hist}};
  out["mean_degree_W"] = inv.mean_degree_W ? rational_json(*inv.mean_degree_W) : Json(nullptr);
  return out;
}

Json roots_json(const RootProfile& prof) {
  Json ints = Json::array();
  for (const auto& [v, mult] : prof.integer_roots) ints.push_back({{"value", v.get_str()}, {"multiplicity", mult}});
  Json others = Json::array();
  for (const auto& ri : prof.isolating_intervals) {
    Json j = interval_json(ri.interval);
    j["multiplicity"] = ri.multiplicity;
    others.push_back(j);
  }
  return Json{{"degree", prof.degree},
              {"integer_roots", ints},
              {"other_real_roots", others},
              {"real_root_count", prof.real_root_count},
              {"count_in_1_2", prof.count_in_1_2},
              {"count_above_2", prof.count_above_2},
              {"real_rooted", prof.real_rooted},
              {"omega", interval_json(prof.omega)}};
}

Json classification_json(const Classification& c) {
  return Json{{"bridgeless", c.bridgeless},
              {"real_rooted", c.real_rooted},
              {"in_G", c.in_G},
              {"nonseparable", c.nonseparable},
              {"three_edge_connected", c.three_edge_connected},
              {"has_proper_three_cut", c.has_proper_three_cut},
              {"every_deletion_nonseparable", c.every_deletion_nonseparable},
              {"in_G0", c.in_G0},
              {"integral_roots", c.integral_roots}};
}

Json claims_json(const std::vector<ClaimRecord>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return out;
}

Json report_json(const AuditReport& rep) {
  static const char* hex = "0123456789abcdef";
  std::string code;
  for (unsigned char c : rep.code) {
    code += hex[c >> 4];
    code += hex[c & 15];
  }
  Json out;
  out["graph"] = graph_json(rep.graph);
  out["graph"]["code"] = code;
  out["invariants"] = rep.inv ? invariants_json(*rep.inv) : Json(nullptr);
  out["flow"] = Json{{"coeffs", poly_json(rep.flow)}};
  out["roots"] = roots_json(rep.roots);
  out["classification"] = classification_json(rep.cls);
  out["audits"] = claims_json(rep.audits);
  return out;
}

std::string roots_text(const RootProfile& prof) {
  std::ostringstream os;
  os << "degree " << prof.degree << "\ninteger roots:";
  if (prof.integer_roots.empty()) os << " none";
  for (const auto& [v, mult] : prof.integer_roots) {
    os << ' ' << v.get_str();
    if (mult > 1) os << '^' << mult;
  }
  os << '\n';
  for (const auto& ri : prof.isolating_intervals) {
    os << "real root in [" << format_decimal(ri.interval.lo, 12) << ", " << format_decimal(ri.interval.hi, 12) << ']';
    if (ri.multiplicity > 1) os << " multiplicity " << ri.multiplicity;
    os << '\n';
  }
  os << "real roots (with multiplicity): " << prof.real_root_count << (prof.real_rooted ? " (real-rooted)" : "")
     << "\nroots in (1,2): " << prof.count_in_1_2 << "\nroots above 2: " << prof.count_above_2 << "\nomega in ["
     << format_decimal(prof.omega.lo, 12) << ", " << format_decimal(prof.omega.hi, 12) << "]\n";
  return os.str();
}

std::string invariants_text(const Invariants& inv) {
  std::ostringstream os;
  os << "n " << inv.n << "\nm " << inv.m << "\nr " << inv.r << "\nalpha " << inv.alpha << "\ngamma " << inv.gamma
     << "\nk " << inv.k << "\nb " << inv.b << "\ndegrees";
  for (const auto& [d, c] : inv.degree_histogram) os << ' ' << d << ':' << c;
  os << "\nmean degree of W " << (inv.mean_degree_W ? inv.mean_degree_W->get_str() : std::string("undefined")) << '\n';
  return os.str();
}

std::string classification_text(const Classification& c) {
  std::ostringstream os;
  auto line = [&](const char* name, bool v) { os << name << ' ' << (v ? "yes" : "no") << '\n'; };
  line("bridgeless", c.bridgeless);
  line("real-rooted", c.real_rooted);
  line("in-G", c.in_G);
  line("nonseparable", c.nonseparable);
  line("3-edge-connected", c.three_edge_connected);
  line("proper-3-edge-cut", c.has_proper_three_cut);
  line("every-deletion-nonseparable", c.every_deletion_nonseparable);
  line("in-G0", c.in_G0);
  line("integral-roots", c.integral_roots);
  return os.str();
}

std::string claims_text(const std::vector<ClaimRecord>& claims) {
  std::ostringstream os;
  for (const auto& c : claims) os << c.id << ' ' << status_name(c.status) << ": " << c.detail << '\n';
  return os.str();
}

std::string report_text(const AuditReport& rep) {
  std::ostringstream os;
  os << "graph n=" << rep.graph.vertex_count() << " m=" << rep.graph.edge_count() << '\n'
     << "F = " << rep.flow.to_string("L") << '\n';
  if (rep.inv) os << invariants_text(*rep.inv);
  if (!rep.flow.is_zero()) os << roots_text(rep.roots);
  os << classification_text(rep.cls) << claims_text(rep.audits);
  return os.str();
}

}  // namespace flowroots
