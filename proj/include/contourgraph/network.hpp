#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/contour.hpp"

namespace cng {

enum class ThresholdMode { smaller_than, greater_than };

inline std::string to_string(ThresholdMode m) {
  return m == ThresholdMode::smaller_than ? "smaller_than" : "greater_than";
}

/// All-pairs Euclidean distance matrix over contour points, normalized so the
/// largest off-diagonal weight is exactly 1. Symmetric, zero diagonal.
class WeightedNet {
 public:
  WeightedNet(int n, std::vector<double> w) : n_(n), w_(std::move(w)) {}

  int size() const { return n_; }
  double weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<double> w_;
};

inline WeightedNet build_weighted(const Contour& c) {
  validate_contour(c);
  const int n = static_cast<int>(c.size());
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  double dmax = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = distance(c.points[i], c.points[j]);
      w[static_cast<std::size_t>(i) * n + j] = d;
      w[static_cast<std::size_t>(j) * n + i] = d;
      if (d > dmax) dmax = d;
    }
  }
  require(dmax > 0.0, "network: all contour points coincide, cannot normalize");
  for (double& v : w) v /= dmax;
  return WeightedNet(n, std::move(w));
}

/// Unweighted undirected graph produced by one threshold transformation.
/// Adjacency lists are kept sorted ascending (canonical form), so two graphs
/// over the same node set are equal iff their lists compare equal.
struct ThresholdGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> degree;
  double threshold = 0.0;
  ThresholdMode mode = ThresholdMode::smaller_than;

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int d : degree) twice += static_cast<std::size_t>(d);
    return twice / 2;
  }
};

namespace detail {

inline void check_threshold(double t, ThresholdMode mode) {
  if (mode == ThresholdMode::smaller_than) {
    // Values above 1 are legal and simply yield the complete graph.
    require(t >= 0.0, "threshold: t must be >= 0 for smaller_than");
  } else {
    require(t >= 0.0 && t < 1.0, "threshold: t must lie in [0,1) for greater_than");
  }
}

inline void finalize_graph(ThresholdGraph& g) {
  g.degree.resize(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) {
    std::sort(g.adj[static_cast<std::size_t>(i)].begin(), g.adj[static_cast<std::size_t>(i)].end());
    g.degree[static_cast<std::size_t>(i)] = static_cast<int>(g.adj[static_cast<std::size_t>(i)].size());
  }
}

}  // namespace detail

/// One delta (smaller_than) or Delta (greater_than) transformation. Strict
/// inequality on both modes: a weight exactly equal to t joins neither graph.
/// The zero diagonal never produces self-loops.
inline ThresholdGraph threshold(const WeightedNet& wnet, double t, ThresholdMode mode) {
  detail::check_threshold(t, mode);
  const int n = wnet.size();
  ThresholdGraph g;
  g.n = n;
  g.threshold = t;
  g.mode = mode;
  g.adj.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = wnet.weight(i, j);
      const bool edge = (mode == ThresholdMode::smaller_than) ? (w < t) : (w > t);
      if (edge) {
        g.adj[static_cast<std::size_t>(i)].push_back(j);
        g.adj[static_cast<std::size_t>(j)].push_back(i);
      }
    }
  }
  detail::finalize_graph(g);
  return g;
}

/// Ordered threshold schedule over (0,1].
struct SweepPlan {
  std::vector<double> thresholds;
  ThresholdMode mode = ThresholdMode::smaller_than;
};

inline void validate_plan(const SweepPlan& plan) {
  require(!plan.thresholds.empty(), "sweep: threshold list is empty");
  double prev = 0.0;
  for (double t : plan.thresholds) {
    require(t > prev, "sweep: thresholds must be strictly increasing and > 0");
    require(t <= 1.0, "sweep: thresholds must lie in (0,1]");
    prev = t;
  }
  if (plan.mode == ThresholdMode::greater_than) {
    require(plan.thresholds.back() < 1.0, "sweep: greater_than needs thresholds < 1");
  }
}

/// Default equally spaced schedule with n_thresholds values. smaller_than
/// uses t_l = l / n_T (ends at 1); greater_than must stay below 1, so it uses
/// the interior grid t_l = l / (n_T + 1). Both modes get the same vector
/// length, keeping descriptors comparable across modes.
inline SweepPlan uniform_plan(int n_thresholds, ThresholdMode mode) {
  require(n_thresholds >= 1, "sweep: need at least one threshold");
  SweepPlan plan;
  plan.mode = mode;
  const int denom =
      (mode == ThresholdMode::greater_than) ? n_thresholds + 1 : n_thresholds;
  for (int l = 1; l <= n_thresholds; ++l) {
    plan.thresholds.push_back(static_cast<double>(l) / denom);
  }
  return plan;
}

struct SweepStats {
  std::uint64_t edge_insertions = 0;  // edges added to the evolving adjacency
};

/// Threshold sweep. Equivalent to calling threshold() per value (bit-equal
/// adjacency), but the pair list is sorted by weight once and each edge is
/// inserted into the evolving graph exactly once as its threshold is crossed,
/// so total construction work is O(n^2 log n + total edges) instead of
/// O(n_T * n^2). greater_than runs the same insertion scheme from the largest
/// threshold downward, then reports graphs in plan order.
inline std::vector<ThresholdGraph> sweep(const WeightedNet& wnet, const SweepPlan& plan,
                                         SweepStats* stats = nullptr) {
  validate_plan(plan);
  const int n = wnet.size();
  const bool smaller = plan.mode == ThresholdMode::smaller_than;

  struct Pair {
    double w;
    int i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({wnet.weight(i, j), i, j});
  }
  if (smaller) {
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.w < b.w; });
  } else {
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.w > b.w; });
  }

  std::vector<double> schedule = plan.thresholds;
  if (!smaller) std::reverse(schedule.begin(), schedule.end());

  std::vector<std::vector<int>> running(static_cast<std::size_t>(n));
  std::vector<ThresholdGraph> out(plan.thresholds.size());
  std::size_t next_pair = 0;
  std::uint64_t insertions = 0;
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    const double t = schedule[s];
    while (next_pair < pairs.size() &&
           (smaller ? pairs[next_pair].w < t : pairs[next_pair].w > t)) {
      const Pair& p = pairs[next_pair++];
      running[static_cast<std::size_t>(p.i)].push_back(p.j);
      running[static_cast<std::size_t>(p.j)].push_back(p.i);
      ++insertions;
    }
    ThresholdGraph g;
    g.n = n;
    g.threshold = t;
    g.mode = plan.mode;
    g.adj = running;
    detail::finalize_graph(g);
    const std::size_t slot = smaller ? s : plan.thresholds.size() - 1 - s;
    out[slot] = std::move(g);
  }
  if (stats) stats->edge_insertions = insertions;
  return out;
}

/// Debug dump: one "i j" line per edge, 0-based ids, i < j.
inline std::string edge_list_text(const ThresholdGraph& g) {
  std::string out;
  for (int i = 0; i < g.n; ++i) {
    for (int j : g.adj[static_cast<std::size_t>(i)]) {
      if (j > i) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace cng
