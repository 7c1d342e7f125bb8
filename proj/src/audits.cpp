#include "flowroots/audits.hpp"

#include <algorithm>
#include <sstream>

namespace flowroots {

namespace {

std::string str(const Rational& q) { return q.get_str(); }

ClaimRecord not_applicable(std::string id, std::string why) {
  return {std::move(id), Status::not_applicable, std::move(why)};
}

ClaimRecord verdict(std::string id, bool ok, std::string detail) {
  return {std::move(id), ok ? Status::pass : Status::fail, std::move(detail)};
}

// Compares an exact value against a threshold known only as an enclosure.
// Returns pass when value >= hi (or > hi when strict), fail when value < lo
// (or <= lo when strict), inconclusive otherwise.
Status compare_at_least(const Rational& value, const Interval& threshold, bool strict) {
  if (strict ? value > threshold.hi : value >= threshold.hi) return Status::pass;
  if (strict ? value <= threshold.lo : value < threshold.lo) return Status::fail;
  return Status::inconclusive;
}

Interval sqrt2_enclosure(const Rational& tol) {
  return refine_root(IntPoly{-2, 0, 1}, {Rational(1), Rational(2)}, tol);
}

const std::string& code_of(const MultiGraph& g) {
  thread_local std::string cache;
  cache = canonical_code(g);
  return cache;
}

bool every_deletion_nonseparable(const MultiGraph& g) {
  for (int i = 0; i < g.edge_count(); ++i)
    if (!is_nonseparable(delete_edge(g, i))) return false;
  return true;
}

bool is_even_graph(const MultiGraph& g) {
  for (int d : g.degrees())
    if (d % 2 != 0) return false;
  return true;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not-applicable";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

Invariants compute_invariants(const MultiGraph& g) {
  if (!is_connected(g)) throw GraphError("invariants need a connected graph");
  if (!is_bridgeless(g)) throw GraphError("invariants need a bridgeless graph");
  Invariants inv;
  inv.n = g.vertex_count();
  inv.m = g.edge_count();
  inv.r = inv.m - inv.n + 1;
  inv.alpha = 2 * inv.m - 3 * inv.n;
  inv.gamma = static_cast<int>(edge_cuts(g, 3).size());
  inv.b = block_count(g);
  int min_degree = inv.m > 0 || inv.n > 0 ? 1 << 30 : 0;
  for (int d : g.degrees()) {
    inv.degree_histogram[d]++;
    if (d > 3) ++inv.k;
    min_degree = std::min(min_degree, d);
  }
  if (inv.k > 0) inv.mean_degree_W = ratio(2 * inv.m - 3 * (inv.n - inv.k), inv.k);

  if (inv.n != 2 * inv.r - 2 - inv.alpha || inv.m != 3 * inv.r - 3 - inv.alpha)
    throw std::logic_error("rank identities violated");
  if (min_degree >= 3) {
    int hist_alpha = 0;
    for (const auto& [d, c] : inv.degree_histogram) hist_alpha += (d - 3) * c;
    if (hist_alpha != inv.alpha) throw std::logic_error("alpha identity violated");
    if (inv.k != inv.n - inv.count_of_degree(3)) throw std::logic_error("k identity violated");
  }
  return inv;
}

bool is_exceptional_member(const MultiGraph& g) {
  static const std::string l = canonical_code(make_loop_graph());
  static const std::string z3 = canonical_code(make_bond(3));
  static const std::string k4 = canonical_code(make_complete(4));
  if (g.vertex_count() > 4) return false;
  const std::string& c = code_of(g);
  return c == l || c == z3 || c == k4;
}

Classification classify(const MultiGraph& g, const IntPoly& flow, const RootProfile& prof) {
  Classification c;
  c.bridgeless = is_bridgeless(g);
  c.real_rooted = !flow.is_zero() && prof.real_rooted;
  c.in_G = c.bridgeless && c.real_rooted;
  c.nonseparable = is_nonseparable(g);
  c.three_edge_connected = is_3_edge_connected(g);
  c.has_proper_three_cut = is_connected(g) && find_proper_three_cut(g);
  c.every_deletion_nonseparable = every_deletion_nonseparable(g);
  c.in_G0 = c.in_G && c.nonseparable && c.three_edge_connected && !c.has_proper_three_cut &&
            c.every_deletion_nonseparable;
  c.integral_roots = !flow.is_zero() && prof.integral_roots();
  return c;
}

ClaimRecord audit_le0(const AuditInput& in) {
  if (!in.inv || in.inv->m == 0) return not_applicable("le0", "needs a connected bridgeless graph with edges");
  const int r = in.inv->r;
  std::ostringstream d;
  d << "r=" << r;
  bool ok = r >= 1;
  if (in.cls.three_edge_connected && in.cls.in_G) {
    const bool is_l = in.graph.vertex_count() == 1 && in.graph.edge_count() == 1;
    d << ", r==1: " << (r == 1 ? "yes" : "no") << ", G is L: " << (is_l ? "yes" : "no");
    ok = ok && ((r == 1) == is_l);
  }
  return verdict("le0", ok, d.str());
}

ClaimRecord audit_le00(const AuditInput& in) {
  if (!in.cls.three_edge_connected || !in.inv) return not_applicable("le00", "not 3-edge-connected");
  const Invariants& inv = *in.inv;
  const IntPoly& f = in.flow;
  std::ostringstream d;
  bool ok = f.degree() == inv.r;
  d << "deg=" << f.degree() << " r=" << inv.r;
  if (ok) {
    ok = ok && f.coeff(inv.r) == 1;
    d << "; b_r=" << f.coeff(inv.r).get_str();
    if (inv.r >= 1) {
      ok = ok && f.coeff(inv.r - 1) == -inv.m;
      d << "; b_{r-1}=" << f.coeff(inv.r - 1).get_str() << " (want " << -inv.m << ")";
    }
    if (inv.r >= 2) {
      const long want = static_cast<long>(inv.m) * (inv.m - 1) / 2 - inv.gamma;
      ok = ok && f.coeff(inv.r - 2) == want;
      d << "; b_{r-2}=" << f.coeff(inv.r - 2).get_str() << " (want C(" << inv.m << ",2)-" << inv.gamma << "="
        << want << ")";
    }
  }
  return verdict("le00", ok, d.str());
}

ClaimRecord audit_sect3_le1(const AuditInput& in) {
  if (!in.cls.three_edge_connected || !in.inv || in.inv->n < 3)
    return not_applicable("sect3-le1-iii", "needs a 3-edge-connected graph with |V| >= 3");
  const int v3 = in.inv->count_of_degree(3);
  const int gamma = in.inv->gamma;
  const bool ok = gamma >= v3 && ((gamma == v3) == !in.cls.has_proper_three_cut);
  std::ostringstream d;
  d << "gamma=" << gamma << " v3=" << v3 << " proper-3-cut=" << (in.cls.has_proper_three_cut ? "yes" : "no");
  return verdict("sect3-le1-iii", ok, d.str());
}

std::vector<ClaimRecord> audit_le1(const AuditInput& in) {
  std::vector<ClaimRecord> out;
  if (!in.cls.in_G || !in.cls.three_edge_connected || !in.inv || in.inv->n < 2) {
    out.push_back(not_applicable("le1-i", "needs G in the real-rooted family, 3-edge-connected, |V| >= 2"));
    out.push_back(not_applicable("le1-ii", "needs G in the real-rooted family, 3-edge-connected, |V| >= 2"));
    return out;
  }
  const long m = in.inv->m, r = in.inv->r, gamma = in.inv->gamma;
  {
    // gamma >= (m - r)(m - 1) / (2r - 2)
    const Rational bound = ratio((m - r) * (m - 1), 2 * r - 2);
    const bool strict = (m - 1) % (r - 1) != 0;
    const bool ok = strict ? Rational(gamma) > bound : Rational(gamma) >= bound;
    std::ostringstream d;
    d << "gamma=" << gamma << (strict ? " > " : " >= ") << str(bound);
    out.push_back(verdict("le1-i", ok, d.str()));
  }
  if (r < 3 || is_even_graph(in.graph)) {
    out.push_back(not_applicable("le1-ii", r < 3 ? "r < 3" : "G is even"));
  } else {
    const Rational bound = ratio((m - r) * (m - 4) + r - 1, 2 * r - 4);
    const bool strict = (m - 3) % (r - 2) != 0;
    const bool ok = strict ? Rational(gamma) > bound : Rational(gamma) >= bound;
    std::ostringstream d;
    d << "gamma=" << gamma << (strict ? " > " : " >= ") << str(bound);
    out.push_back(verdict("le1-ii", ok, d.str()));
  }
  return out;
}

std::vector<ClaimRecord> audit_lem30(const AuditInput& in, const XiTable& xi) {
  static const char* ids[] = {"lem30-i", "lem30-ii", "lem30-iii", "lem30-iv", "lem30-v", "lem30-vi", "lem30-vii"};
  std::vector<ClaimRecord> out;
  if (!in.cls.in_G || !in.cls.three_edge_connected || !in.inv || in.inv->n < 3 || in.cls.has_proper_three_cut) {
    for (const char* id : ids)
      out.push_back(not_applicable(id, "needs G in the real-rooted family, 3-edge-connected, |V| >= 3, no proper 3-edge-cut"));
    return out;
  }
  const Invariants& inv = *in.inv;
  const long n = inv.n, m = inv.m, r = inv.r, k = inv.k, b = inv.b;

  // (i)
  {
    std::ostringstream d;
    d << "r=" << r << " >= 3, |V|=" << n << " >= 2k+1=" << 2 * k + 1;
    out.push_back(verdict(ids[0], r >= 3 && n >= 2 * k + 1, d.str()));
  }
  // (ii)
  if (n - 2 * k <= 0) {
    out.push_back(verdict(ids[1], false, "|V| - 2k <= 0"));
  } else {
    const Rational bound = Rational(2 * n + 2 * k - 3) + ratio(4 * (k - 1) * (k - 1), n - 2 * k);
    const bool strict = r > 2 && (m - 3) % (r - 2) != 0;
    const bool ok = strict ? Rational(m) > bound : Rational(m) >= bound;
    std::ostringstream d;
    d << "|E|=" << m << (strict ? " > " : " >= ") << str(bound);
    out.push_back(verdict(ids[1], ok, d.str()));
  }
  // (iii)
  {
    const long bound = n + 8 * k - 7;
    const bool strict = n != 4 * k - 2;
    std::ostringstream d;
    d << "|E|=" << m << (strict ? " > " : " >= ") << bound;
    out.push_back(verdict(ids[2], strict ? m > bound : m >= bound, d.str()));
  }
  // (iv): 9 + 4 sqrt2 - 2 (sqrt2 + 1)^2 / k = (9 - 6/k) + (4 - 4/k) sqrt2
  if (k == 0) {
    out.push_back(not_applicable(ids[3], "k = 0, mean degree of W(G) undefined"));
  } else {
    const Rational dbar = *inv.mean_degree_W;
    const Rational a = Rational(9) - ratio(6, k);
    const Rational c = Rational(4) - ratio(4, k);
    const Rational weak = ratio(14656, 1000) - ratio(11656, 1000 * k);
    Status st = Status::inconclusive;
    Interval threshold;
    for (Rational tol(1, 1000000); tol > Rational(1, Integer("1000000000000000000000000000000")); tol /= 1000000) {
      const Interval s = sqrt2_enclosure(tol);
      threshold = {a + c * s.lo, a + c * s.hi};
      st = compare_at_least(dbar, threshold, false);
      if (st != Status::inconclusive) break;
    }
    if (st == Status::pass && !(dbar > weak)) st = Status::fail;
    std::ostringstream d;
    d << "dbar=" << str(dbar) << " vs [" << format_decimal(threshold.lo, 6) << ", "
      << format_decimal(threshold.hi, 6) << "]; > 14.656-11.656/k=" << str(weak);
    out.push_back({ids[3], st, d.str()});
  }
  // (v): omega >= |E| - 2|V| + 2 - b, strict when there are roots in (2, inf)
  {
    const Rational bound(m - 2 * n + 2 - b);
    const bool strict = in.roots.count_above_2 > 0;
    Interval omega = in.roots.omega;
    Status st = compare_at_least(bound, {omega.lo, omega.hi}, false);  // placeholder, replaced below
    auto decide = [&](const Interval& w) {
      if (strict ? w.lo > bound : w.lo >= bound) return Status::pass;
      if (strict ? w.hi <= bound : w.hi < bound) return Status::fail;
      return Status::inconclusive;
    };
    st = decide(omega);
    Rational tol = omega.width() / 1000;
    for (int attempt = 0; st == Status::inconclusive && attempt < 3 && tol > 0; ++attempt) {
      omega = root_profile(in.flow, tol).omega;
      st = decide(omega);
      tol /= 1000;
    }
    std::ostringstream d;
    d << "omega in [" << format_decimal(omega.lo, 9) << ", " << format_decimal(omega.hi, 9) << "]"
      << (strict ? " > " : " >= ") << str(bound);
    out.push_back({ids[4], st, d.str()});
  }
  // (vi): |E| <= n + b + (n - 2)/(xi_k - 1), and |E| < b + (32n - 54)/5
  {
    const Rational weak = Rational(b) + ratio(32 * n - 54, 5);
    const bool weak_ok = Rational(m) < weak;
    std::ostringstream d;
    Status st;
    if (k >= 6) {
      st = weak_ok ? Status::pass : Status::fail;
      d << "k >= 6 uses xi_k > 32/27 only; ";
    } else {
      auto bound_at = [&](const Rational& x) -> Rational { return Rational(n + b) + Rational(n - 2) / (x - 1); };
      Interval xe = xi.enclosure(static_cast<int>(k));
      st = Status::inconclusive;
      Rational tol = xe.width() / 1000;
      for (int attempt = 0; attempt < 4; ++attempt) {
        // Decreasing in xi for n > 2.
        const Interval bound{bound_at(xe.hi), bound_at(xe.lo)};
        if (Rational(m) <= bound.lo) st = Status::pass;
        else if (Rational(m) > bound.hi) st = Status::fail;
        d.str("");
        d << "|E|=" << m << " <= [" << format_decimal(bound.lo, 6) << ", " << format_decimal(bound.hi, 6) << "]; ";
        if (st != Status::inconclusive || xe.is_point()) break;
        xe = isolate_root_of_cubic(xi_cubic(static_cast<int>(k)), Rational(1), Rational(2), tol);
        tol /= 1000;
      }
      if (st == Status::pass && !weak_ok) st = Status::fail;
    }
    d << "|E| < b + (32|V|-54)/5 = " << str(weak);
    out.push_back({ids[5], st, d.str()});
  }
  // (vii)
  {
    const Rational bound = ratio(11 * n, 27) + ratio(b + 9, 54);
    std::ostringstream d;
    d << "k=" << k << " < " << str(bound);
    out.push_back(verdict(ids[6], Rational(k) < bound, d.str()));
  }
  return out;
}

std::vector<ClaimRecord> audit_main_theorems(const AuditInput& in, const std::optional<FaceStructure>& faces) {
  std::vector<ClaimRecord> out;
  const RootProfile& prof = in.roots;
  const int n = in.graph.vertex_count();
  const int m = in.graph.edge_count();
  const int small_roots = prof.multiplicity_of(1) + prof.multiplicity_of(2) + prof.multiplicity_of(3);
  const bool outside_123 = in.cls.in_G && small_roots < prof.degree;

  if (!in.cls.in_G) {
    out.push_back(not_applicable("main-th-i", "G not in the real-rooted bridgeless family"));
  } else if (!outside_123) {
    out.push_back(not_applicable("main-th-i", "all flow roots in {1,2,3}"));
  } else {
    std::ostringstream d;
    d << "|E|=" << m << " >= |V|+17=" << n + 17 << ", roots in (1,2)=" << prof.count_in_1_2 << " >= 9";
    out.push_back(verdict("main-th-i", m >= n + 17 && prof.count_in_1_2 >= 9, d.str()));
  }

  const bool exceptional = is_exceptional_member(in.graph);
  if (!in.cls.in_G0 || exceptional || !in.inv) {
    const std::string why = !in.cls.in_G0 ? "G not in the reduced family" : "G is L, Z_3 or K_4";
    out.push_back(not_applicable("main-lem1-i", why));
    out.push_back(not_applicable("main-lem1-ii", why));
    out.push_back(not_applicable("main-th-ii", why));
  } else {
    const Invariants& inv = *in.inv;
    const int k = inv.k;
    out.push_back(verdict("main-lem1-i", k >= 3, "k=" + std::to_string(k) + " >= 3"));
    if (k < 3) {
      out.push_back(verdict("main-lem1-ii", false, "k < 3"));
      out.push_back(verdict("main-th-ii", false, "k < 3"));
    } else {
      const int need = nroot(k);
      std::ostringstream d;
      d << "roots in (1,2)=" << prof.count_in_1_2 << " >= nroot(" << k << ")=" << need;
      out.push_back(verdict("main-lem1-ii", prof.count_in_1_2 >= need, d.str()));
      // (ii.1) k < 11n/27 + 5/27, (ii.3) dbar > 14.656 - 11.656/k, (ii.4) n + 8k - 7 <= m < (32n - 49)/5
      const Rational dbar = *inv.mean_degree_W;
      const bool ok1 = Rational(k) < ratio(11 * n + 5, 27);
      const bool ok3 = dbar > ratio(14656, 1000) - ratio(11656, 1000 * k);
      const bool ok4 = n + 8 * k - 7 <= m && Rational(m) < ratio(32 * n - 49, 5);
      std::ostringstream e;
      e << "(ii.1) " << (ok1 ? "ok" : "violated") << ", (ii.2) " << (prof.count_in_1_2 >= need ? "ok" : "violated")
        << ", (ii.3) " << (ok3 ? "ok" : "violated") << ", (ii.4) " << (ok4 ? "ok" : "violated");
      out.push_back(verdict("main-th-ii", ok1 && ok3 && ok4 && prof.count_in_1_2 >= need, e.str()));
    }
  }

  if (!in.cls.in_G0) {
    out.push_back(not_applicable("cor-main-lem1-cor0", "G not in the reduced family"));
  } else {
    std::ostringstream d;
    d << "integral roots=" << (in.cls.integral_roots ? "yes" : "no") << ", G in {L,Z_3,K_4}="
      << (exceptional ? "yes" : "no");
    out.push_back(verdict("cor-main-lem1-cor0", in.cls.integral_roots == exceptional, d.str()));
  }

  if (!in.cls.in_G) {
    out.push_back(not_applicable("sect1-cor", "G not in the real-rooted bridgeless family"));
  } else {
    const bool none_in_window = prof.count_in_1_2 == 0;
    const bool all_small = small_roots == prof.degree;
    bool ok = none_in_window == all_small;
    std::ostringstream d;
    d << "no root in (1,2)=" << (none_in_window ? "yes" : "no") << ", all roots in {1,2,3}="
      << (all_small ? "yes" : "no");
    if (faces) {
      const MultiGraph primal = build_dual(in.graph, *faces);
      const bool chordal = is_chordal(primal);
      d << ", dual of a chordal plane graph=" << (chordal ? "yes" : "no");
      ok = ok && chordal == all_small;
    } else {
      d << ", chordal-dual leg skipped (no faces)";
    }
    out.push_back(verdict("sect1-cor", ok, d.str()));
  }

  if (faces) out.push_back(audit_cor3_th1(build_dual(in.graph, *faces)));
  return out;
}

std::vector<ClaimRecord> audit_wakelin(const AuditInput& in) {
  std::vector<ClaimRecord> out;
  if (!in.inv || in.inv->m == 0) {
    for (const char* id : {"wakelin-i", "wakelin-ii", "wakelin-iii"})
      out.push_back(not_applicable(id, "needs a connected bridgeless graph with edges"));
    return out;
  }
  const IntPoly& f = in.flow;
  const int r = in.inv->r;
  const int want = r % 2 == 0 ? 1 : -1;
  {
    bool ok = true;
    std::ostringstream d;
    d << "want sign " << want << ":";
    for (long x : {0L, -1L, -10L}) {
      const int s = sgn(f.evaluate(Integer(x)));
      d << " F(" << x << ") sign " << s;
      ok = ok && s == want;
    }
    out.push_back(verdict("wakelin-i", ok, d.str()));
  }
  {
    const int mult = in.roots.multiplicity_of(1);
    std::ostringstream d;
    d << "multiplicity of 1 = " << mult << ", blocks = " << in.inv->b;
    out.push_back(verdict("wakelin-ii", mult == in.inv->b, d.str()));
  }
  {
    const int c = sturm_count(f, Rational(1), Rational(32, 27));
    out.push_back(verdict("wakelin-iii", c == 0, "roots in (1, 32/27] = " + std::to_string(c)));
  }
  return out;
}

ClaimRecord audit_cor3_th1(const MultiGraph& h) {
  const std::string id = "cor3-th1";
  if (h.has_loop() || !is_connected(h)) return not_applicable(id, "plane graph must be connected and loopless");
  const IntPoly p = chromatic_poly(h);
  const RootProfile prof = root_profile(p, Rational(1, 1000000));
  if (!prof.real_rooted) return not_applicable(id, "chromatic roots not all real");
  if (is_chordal(h)) return not_applicable(id, "plane graph is chordal");
  const int n = h.vertex_count();
  const int m = h.edge_count();
  bool ok = n >= 19 && prof.count_in_1_2 >= 9;
  std::ostringstream d;
  d << "n=" << n << " >= 19, chromatic roots in (1,2)=" << prof.count_in_1_2 << " >= 9";
  // Second part: when no vertex cut induces a clique, 32n/27 - 5/9 < m <= 2n - 8.
  if (n <= 20) {
    const MultiGraph s = simplify(h);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (const Edge& e : s.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    bool clique_cut = false;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n) && !clique_cut; ++mask) {
      std::vector<int> keep;
      bool clique = true;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) {
          for (int w = v + 1; w < n; ++w)
            if ((mask & (1u << w)) && !adj[v][w]) clique = false;
        } else {
          keep.push_back(v);
        }
      }
      if (!clique || keep.size() < 2) continue;
      if (!is_connected(induced_subgraph(s, keep))) clique_cut = true;
    }
    if (!clique_cut) {
      const bool range = ratio(32 * n, 27) - ratio(5, 9) < Rational(m) && m <= 2 * n - 8;
      d << "; no clique vertex cut: 32n/27-5/9 < m=" << m << " <= 2n-8 " << (range ? "holds" : "violated");
      ok = ok && range;
    }
  }
  return verdict(id, ok, d.str());
}

bool AuditReport::any_fail() const {
  return std::any_of(audits.begin(), audits.end(), [](const ClaimRecord& r) { return r.status == Status::fail; });
}

const ClaimRecord* AuditReport::find(const std::string& id) const {
  for (const auto& r : audits)
    if (r.id == id) return &r;
  return nullptr;
}

AuditReport run_audit(const MultiGraph& g, const AuditOptions& opts, FlowEngine* engine) {
  if (opts.faces) validate_faces(g, *opts.faces);
  AuditReport rep;
  rep.graph = g;
  rep.code = canonical_code(g);
  FlowEngine local;
  rep.flow = (engine ? engine : &local)->flow_poly(g);
  if (!rep.flow.is_zero()) rep.roots = root_profile(rep.flow, opts.tol);
  if (is_connected(g) && is_bridgeless(g)) rep.inv = compute_invariants(g);
  rep.cls = classify(g, rep.flow, rep.roots);

  const AuditInput in{rep.graph, rep.flow, rep.roots, rep.cls, rep.inv};
  auto append = [&](std::vector<ClaimRecord> recs) {
    for (auto& r : recs) rep.audits.push_back(std::move(r));
  };
  rep.audits.push_back(audit_le0(in));
  rep.audits.push_back(audit_le00(in));
  rep.audits.push_back(audit_sect3_le1(in));
  append(audit_le1(in));
  append(audit_lem30(in, default_xi_table()));
  append(audit_main_theorems(in, opts.faces));
  append(audit_wakelin(in));
  return rep;
}

}  // namespace flowroots
