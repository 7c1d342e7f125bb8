#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flowroots/audits.hpp"
#include "flowroots/enumerate.hpp"

namespace flowroots {

enum class Filter { bridgeless, three_edge_connected, in_G, in_G0, nonintegral_roots };

const char* filter_name(Filter f);
std::optional<Filter> parse_filter(const std::string& name);

struct SearchConfig {
  EnumerationBounds bounds;
  std::vector<Filter> filters;
  int workers = 1;
  Rational tol{1, 1000000};
  double work_cap = 1e8;
  int min_edges = 1;  // the edgeless single vertex is skipped by default
};

struct Candidate {
  std::string kind;  // "problem-1", "problem-2" or "audit-fail"
  std::string code;
  MultiGraph graph;
  std::string detail;
};

struct SearchSummary {
  std::uint64_t enumerated = 0;
  std::vector<std::pair<std::string, std::uint64_t>> stages;  // cumulative survivors per filter
  std::uint64_t survivors = 0;
  std::uint64_t audit_failures = 0;
  std::vector<Candidate> candidates;
  double estimated_work = 0;
};

/// Enumerates, filters and audits. Survivors reach `on_report` ordered by
/// edge count, then canonical code, for any worker count. Throws
/// WorkCapExceeded before doing any work if the estimate is above the cap.
SearchSummary run_search(const SearchConfig& cfg, const std::function<void(const AuditReport&)>& on_report = {});

}  // namespace flowroots
