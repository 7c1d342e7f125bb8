#include "flowroots/search.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace flowroots {

namespace {

constexpr Filter kFilterOrder[] = {Filter::bridgeless, Filter::three_edge_connected, Filter::in_G, Filter::in_G0,
                                   Filter::nonintegral_roots};
constexpr std::size_t kChunk = 2048;
constexpr std::size_t kMemoLimit = 200000;

struct Outcome {
  std::vector<bool> passed;  // per selected filter, cumulative
  std::optional<AuditReport> report;
};

Outcome examine(const std::string& code, const std::vector<Filter>& filters, const SearchConfig& cfg,
                FlowEngine& engine) {
  Outcome out;
  const MultiGraph g = graph_from_code(code);
  std::optional<IntPoly> flow;
  std::optional<RootProfile> prof;
  std::optional<Classification> cls;
  auto need_classification = [&]() -> const Classification& {
    if (!cls) {
      flow = engine.flow_poly(g);
      prof = flow->is_zero() ? RootProfile{} : root_profile(*flow, cfg.tol);
      cls = classify(g, *flow, *prof);
    }
    return *cls;
  };
  for (Filter f : filters) {
    bool ok = false;
    switch (f) {
      case Filter::bridgeless: ok = is_bridgeless(g); break;
      case Filter::three_edge_connected: ok = is_3_edge_connected(g); break;
      case Filter::in_G: ok = is_bridgeless(g) && need_classification().in_G; break;
      case Filter::in_G0: ok = is_bridgeless(g) && need_classification().in_G0; break;
      case Filter::nonintegral_roots: ok = is_bridgeless(g) && !need_classification().integral_roots; break;
    }
    if (!ok) return out;
    out.passed.push_back(true);
  }
  AuditOptions opts;
  opts.tol = cfg.tol;
  out.report = run_audit(g, opts, &engine);
  if (engine.cache_size() > kMemoLimit) engine.clear_cache();
  return out;
}

void flag(const AuditReport& rep, SearchSummary& sum) {
  auto add = [&](std::string kind, std::string detail) {
    sum.candidates.push_back({std::move(kind), rep.code, rep.graph, std::move(detail)});
  };
  if (rep.cls.in_G && !rep.cls.integral_roots) add("problem-1", "real-rooted bridgeless graph with a non-integral root");
  if (rep.cls.in_G && rep.inv && rep.inv->k >= 3 && rep.roots.count_in_1_2 >= nroot(rep.inv->k)) {
    std::ostringstream d;
    d << rep.roots.count_in_1_2 << " roots in (1,2) >= nroot(" << rep.inv->k << ")";
    add("problem-2", d.str());
  }
  for (const auto& c : rep.audits) {
    if (c.status != Status::fail) continue;
    ++sum.audit_failures;
    add("audit-fail", c.id + ": " + c.detail);
  }
}

}  // namespace

const char* filter_name(Filter f) {
  switch (f) {
    case Filter::bridgeless: return "bridgeless";
    case Filter::three_edge_connected: return "three-edge-connected";
    case Filter::in_G: return "in-G";
    case Filter::in_G0: return "in-G0";
    case Filter::nonintegral_roots: return "nonintegral-roots";
  }
  return "?";
}

std::optional<Filter> parse_filter(const std::string& name) {
  for (Filter f : kFilterOrder)
    if (name == filter_name(f)) return f;
  return std::nullopt;
}

SearchSummary run_search(const SearchConfig& cfg, const std::function<void(const AuditReport&)>& on_report) {
  if (cfg.bounds.max_vertices < 1 || cfg.bounds.max_edges < 0 || cfg.bounds.max_multiplicity < 1)
    throw std::invalid_argument("search bounds must be positive");
  SearchSummary sum;
  sum.estimated_work = estimate_work(cfg.bounds);
  if (sum.estimated_work > cfg.work_cap) {
    std::ostringstream os;
    os << "estimated work " << sum.estimated_work << " exceeds the cap " << cfg.work_cap;
    throw WorkCapExceeded(os.str());
  }

  std::vector<Filter> filters;
  for (Filter f : kFilterOrder)
    if (std::find(cfg.filters.begin(), cfg.filters.end(), f) != cfg.filters.end()) filters.push_back(f);
  for (Filter f : filters) sum.stages.emplace_back(filter_name(f), 0);

  const int workers = std::max(1, cfg.workers);
  std::vector<FlowEngine> engines(static_cast<std::size_t>(workers));

  enumerate_connected(
      cfg.bounds,
      [&](int m, const std::vector<std::string>& codes) {
        if (m < cfg.min_edges) return;
        sum.enumerated += codes.size();
        for (std::size_t start = 0; start < codes.size(); start += kChunk) {
          const std::size_t end = std::min(codes.size(), start + kChunk);
          std::vector<Outcome> outcomes(end - start);
          auto work = [&](int w) {
            for (std::size_t i = start + static_cast<std::size_t>(w); i < end; i += static_cast<std::size_t>(workers))
              outcomes[i - start] = examine(codes[i], filters, cfg, engines[static_cast<std::size_t>(w)]);
          };
          if (workers == 1) {
            work(0);
          } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
          }
          for (auto& o : outcomes) {
            for (std::size_t s = 0; s < o.passed.size(); ++s) sum.stages[s].second++;
            if (!o.report) continue;
            ++sum.survivors;
            flag(*o.report, sum);
            if (on_report) on_report(*o.report);
          }
        }
      },
      workers);
  return sum;
}

}  // namespace flowroots
