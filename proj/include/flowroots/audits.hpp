#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowroots/flow.hpp"
#include "flowroots/multigraph.hpp"
#include "flowroots/polyalg.hpp"

namespace flowroots {

struct Invariants {
  int n = 0;
  int m = 0;
  int r = 0;      // cycle rank m - n + 1
  int alpha = 0;  // 2m - 3n
  int gamma = 0;  // number of 3-edge-cuts, counted as edge subsets
  int k = 0;      // vertices of degree > 3
  int b = 0;      // blocks
  std::map<int, int> degree_histogram;
  std::optional<Rational> mean_degree_W;  // only when k > 0

  int count_of_degree(int d) const {
    auto it = degree_histogram.find(d);
    return it == degree_histogram.end() ? 0 : it->second;
  }
};

/// Invariants of a connected bridgeless graph. Throws GraphError otherwise.
Invariants compute_invariants(const MultiGraph& g);

struct Classification {
  bool bridgeless = false;
  bool real_rooted = false;
  bool in_G = false;
  bool nonseparable = false;
  bool three_edge_connected = false;
  bool has_proper_three_cut = false;
  bool every_deletion_nonseparable = false;
  bool in_G0 = false;
  bool integral_roots = false;
};

Classification classify(const MultiGraph& g, const IntPoly& flow, const RootProfile& prof);

/// True when g is isomorphic to L, Z_3 or K_4.
bool is_exceptional_member(const MultiGraph& g);

// ---- constants ------------------------------------------------------------

/// Enclosures of the zero-free bounds for k = 3, 4, 5 and the general
/// lower bound 32/27.
struct XiTable {
  Interval xi3;
  Interval xi4;
  Interval xi5;
  Rational lower_bound_k_ge_6{32, 27};

  /// Enclosure of the bound for 0 <= k <= 5 ([2, 2] for k <= 2).
  Interval enclosure(int k) const;
};

/// The cubic whose root in (1, 2) is the bound for k = 3, 4, 5.
IntPoly xi_cubic(int k);
XiTable compute_xi_table(const Rational& tol);
/// Table computed once at width 1e-15.
const XiTable& default_xi_table();

/// 1 for x > 0, else 0.
int mu(const Rational& x);
/// ceil(x) written as floor(x) + mu(x - floor(x)).
Integer ceiling(const Rational& x);

/// Published values for k = 3..10.
std::optional<int> nroot_table_value(int k);
/// ceil((2k - 1) / (2 - xi_k)), using the certified enclosure for k <= 5
/// and 32/27 for k >= 6.
int nroot_formula(int k);
/// Table value for 3 <= k <= 10, formula beyond.
int nroot(int k);

// ---- audits ---------------------------------------------------------------

enum class Status { pass, fail, not_applicable, inconclusive };
const char* status_name(Status s);

struct ClaimRecord {
  std::string id;
  Status status = Status::not_applicable;
  std::string detail;
};

struct AuditInput {
  const MultiGraph& graph;
  const IntPoly& flow;
  const RootProfile& roots;
  const Classification& cls;
  const std::optional<Invariants>& inv;
};

ClaimRecord audit_le0(const AuditInput& in);
ClaimRecord audit_le00(const AuditInput& in);
ClaimRecord audit_sect3_le1(const AuditInput& in);
std::vector<ClaimRecord> audit_le1(const AuditInput& in);
std::vector<ClaimRecord> audit_lem30(const AuditInput& in, const XiTable& xi);
std::vector<ClaimRecord> audit_main_theorems(const AuditInput& in, const std::optional<FaceStructure>& faces);
std::vector<ClaimRecord> audit_wakelin(const AuditInput& in);
/// Claims about a plane graph H with real chromatic roots only.
ClaimRecord audit_cor3_th1(const MultiGraph& plane_graph);

struct AuditOptions {
  Rational tol{1, 1000000};
  std::optional<FaceStructure> faces;
};

struct AuditReport {
  MultiGraph graph;
  std::string code;
  std::optional<Invariants> inv;
  IntPoly flow;
  RootProfile roots;
  Classification cls;
  std::vector<ClaimRecord> audits;

  bool any_fail() const;
  const ClaimRecord* find(const std::string& id) const;
};

/// Computes everything for one graph. Uses `engine` (and its cache) when given.
AuditReport run_audit(const MultiGraph& g, const AuditOptions& opts = {}, FlowEngine* engine = nullptr);

}  // namespace flowroots
