#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "critplanar/coloring.hpp"
#include "critplanar/graph.hpp"
#include "critplanar/planarity.hpp"

namespace critplanar {

struct EdgeWitness {
  Edge edge;
  /// A proper (k-1)-coloring of g - edge.
  Coloring coloring;
};

/// Evidence for or against k-criticality, checkable edge by edge.
struct CriticalityReport {
  int k = 0;
  /// chi(g) when chromatic_exceeds_bound is false, otherwise a strict lower bound of k+1.
  int chromatic = 0;
  bool chromatic_exceeds_bound = false;
  std::vector<Edge> failing_edges;
  bool planar = false;
  bool is_k_critical = false;
  std::vector<EdgeWitness> witnesses;
};

struct VerifyOptions {
  SolverOptions solver;
  /// Worker threads for the per-edge deletions; 0 means hardware concurrency.
  unsigned jobs = 1;
};

namespace detail {

inline unsigned resolve_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work, 1)));
}

}  // namespace detail

inline CriticalityReport verify_k_critical(const SimpleGraph& g, int k, const VerifyOptions& opts = {}) {
  if (k < 2) throw std::invalid_argument("criticality needs k >= 2");
  detail::check_size(g, opts.solver);

  CriticalityReport report;
  report.k = k;
  if (g.vertex_count() == 0) {
    report.chromatic = 0;
  } else {
    try {
      report.chromatic = chromatic_number(g, k + 1, opts.solver);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      report.chromatic = k + 1;
      report.chromatic_exceeds_bound = true;
    }
  }
  report.planar = planarity_test(g).planar;

  const auto edges = g.edges();
  std::vector<std::optional<Coloring>> outcome(edges.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < edges.size(); i = next++)
        outcome[i] = find_k_coloring(remove_edge(g, edges[i]), k - 1, {}, opts.solver);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned jobs = detail::resolve_jobs(opts.jobs, edges.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  // edges() is lexicographic, so both lists come out ordered
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (outcome[i]) report.witnesses.push_back({edges[i], std::move(*outcome[i])});
    else report.failing_edges.push_back(edges[i]);
  }
  report.is_k_critical = !report.chromatic_exceeds_bound && report.chromatic == k && report.failing_edges.empty();
  return report;
}

/// Cross-checks criticality edge by edge: every (k-1)-coloring of g - e must
/// agree on the endpoints of e. Requires a k-critical input.
inline bool forced_equal_all_edges(const SimpleGraph& g, int k, const VerifyOptions& opts = {}) {
  if (!verify_k_critical(g, k, opts).is_k_critical)
    throw Error(ErrorCode::NotCritical, "graph is not " + std::to_string(k) + "-critical");
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return forced_equal(g, e, k - 1, opts.solver); });
}

/// O(E) re-check of a report against its graph, usable by any third party.
inline bool report_is_consistent(const SimpleGraph& g, const CriticalityReport& r) {
  if (r.is_k_critical != (!r.chromatic_exceeds_bound && r.chromatic == r.k && r.failing_edges.empty()))
    return false;
  if (r.failing_edges.size() + r.witnesses.size() != g.edge_count()) return false;
  for (const auto& w : r.witnesses) {
    if (!g.has_edge(w.edge) || w.coloring.colors.size() != g.vertex_count()) return false;
    for (const auto& e : g.edges()) {
      if (e == w.edge) continue;
      if (w.coloring[e.u] == w.coloring[e.v]) return false;
    }
    for (Color c : w.coloring.colors)
      if (c < 0 || c >= r.k - 1) return false;
  }
  return true;
}

}  // namespace critplanar
