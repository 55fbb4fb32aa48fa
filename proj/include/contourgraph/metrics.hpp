#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "contourgraph/common.hpp"
#include "contourgraph/network.hpp"

namespace cng {

/// The scalar structural measurements of one thresholded graph. The seven
/// fields excluding max_degree form, in this order, one block of the
/// generalized descriptor; max_degree is used by the degree-only descriptor.
struct MeasurementSet {
  double avg_degree = 0.0;
  double max_degree = 0.0;
  double hier_degree_2 = 0.0;
  double hier_degree_3 = 0.0;
  double avg_clustering = 0.0;
  double avg_path_length = 0.0;
  double assortativity = 0.0;
  double avg_betweenness = 0.0;
  double threshold = 0.0;
  ThresholdMode mode = ThresholdMode::smaller_than;

  std::array<double, 7> descriptor_block() const {
    return {avg_degree,      hier_degree_2,   hier_degree_3, avg_clustering,
            avg_path_length, assortativity,   avg_betweenness};
  }
};

/// Per-node measurement vectors (the color-map data).
struct NodeProfile {
  std::vector<int> degree;
  std::vector<double> clustering;
  std::vector<double> betweenness;
  std::vector<int> hier_degree_2;
  std::vector<int> hier_degree_3;
};

namespace detail {

/// Flat adjacency for tight traversal loops.
struct Csr {
  std::vector<int> offset;
  std::vector<int> neighbor;

  explicit Csr(const ThresholdGraph& g) {
    offset.resize(static_cast<std::size_t>(g.n) + 1, 0);
    std::size_t total = 0;
    for (int i = 0; i < g.n; ++i) {
      total += g.adj[static_cast<std::size_t>(i)].size();
      offset[static_cast<std::size_t>(i) + 1] = static_cast<int>(total);
    }
    neighbor.reserve(total);
    for (int i = 0; i < g.n; ++i) {
      neighbor.insert(neighbor.end(), g.adj[static_cast<std::size_t>(i)].begin(),
                      g.adj[static_cast<std::size_t>(i)].end());
    }
  }
};

struct PathStats {
  // Sum of d(i,j) over ordered pairs i != j; unreachable pairs count as n,
  // one more than the largest possible geodesic.
  long long distance_sum = 0;
  // Sum of (d(i,j) - 1) over connected ordered pairs: the total unnormalized
  // betweenness mass, since every geodesic of length d has d-1 interior nodes.
  long long interior_sum = 0;
  std::vector<double> betweenness_unnorm;
};

/// Per-source BFS over all sources, accumulating distance totals and, when
/// requested, Brandes dependency sums. The integer accumulators are exact, so
/// the totals do not depend on node labeling or traversal order.
inline PathStats shortest_path_stats(const ThresholdGraph& g, bool with_betweenness) {
  const int n = g.n;
  const Csr csr(g);
  PathStats ps;
  if (with_betweenness) ps.betweenness_unnorm.assign(static_cast<std::size_t>(n), 0.0);

  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> sigma(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    if (with_betweenness) std::fill(sigma.begin(), sigma.end(), 0.0);
    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      const int dv = dist[static_cast<std::size_t>(v)];
      for (int e = csr.offset[static_cast<std::size_t>(v)];
           e < csr.offset[static_cast<std::size_t>(v) + 1]; ++e) {
        const int w = csr.neighbor[static_cast<std::size_t>(e)];
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dv + 1;
          order.push_back(w);
        }
        if (with_betweenness && dist[static_cast<std::size_t>(w)] == dv + 1) {
          sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      const int d = dist[static_cast<std::size_t>(t)];
      ps.distance_sum += (d >= 0) ? d : n;
      if (d > 0) ps.interior_sum += d - 1;
    }
    if (with_betweenness) {
      std::fill(delta.begin(), delta.end(), 0.0);
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int w = *it;
        const int dw = dist[static_cast<std::size_t>(w)];
        for (int e = csr.offset[static_cast<std::size_t>(w)];
             e < csr.offset[static_cast<std::size_t>(w) + 1]; ++e) {
          const int v = csr.neighbor[static_cast<std::size_t>(e)];
          if (dist[static_cast<std::size_t>(v)] == dw - 1) {
            delta[static_cast<std::size_t>(v)] +=
                sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
                (1.0 + delta[static_cast<std::size_t>(w)]);
          }
        }
        if (w != s) ps.betweenness_unnorm[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
      }
    }
  }
  return ps;
}

/// Sum in ascending value order: the result depends only on the multiset of
/// values, never on node labeling.
inline double label_free_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace detail

struct DegreeStats {
  double avg = 0.0;
  int max = 0;
  std::vector<int> degree;
};

inline DegreeStats degree_stats(const ThresholdGraph& g) {
  require(g.n >= 1, "metrics: graph has no nodes");
  DegreeStats out;
  out.degree = g.degree;
  long long total = 0;
  for (int d : g.degree) {
    total += d;
    if (d > out.max) out.max = d;
  }
  out.avg = static_cast<double>(total) / g.n;
  return out;
}

struct HierDegree {
  double avg = 0.0;
  std::vector<int> values;
};

/// Hierarchical degree: k_i^h sums the degrees of nodes at geodesic distance
/// exactly h-1 from i. Level 2 is the sum over direct neighbors; level 3 sums
/// over the two-hop ring.
inline HierDegree hierarchical_degree(const ThresholdGraph& g, int level) {
  require(level == 2 || level == 3, "metrics: hierarchy level must be 2 or 3");
  const int n = g.n;
  require(n >= 1, "metrics: graph has no nodes");
  HierDegree out;
  out.values.assign(static_cast<std::size_t>(n), 0);
  long long total = 0;
  if (level == 2) {
    for (int i = 0; i < n; ++i) {
      long long sum = 0;
      for (int j : g.adj[static_cast<std::size_t>(i)]) sum += g.degree[static_cast<std::size_t>(j)];
      out.values[static_cast<std::size_t>(i)] = static_cast<int>(sum);
      total += sum;
    }
  } else {
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
      stamp[static_cast<std::size_t>(i)] = i;
      for (int j : g.adj[static_cast<std::size_t>(i)]) stamp[static_cast<std::size_t>(j)] = i;
      long long sum = 0;
      for (int j : g.adj[static_cast<std::size_t>(i)]) {
        for (int k : g.adj[static_cast<std::size_t>(j)]) {
          if (stamp[static_cast<std::size_t>(k)] != i) {
            stamp[static_cast<std::size_t>(k)] = i;
            sum += g.degree[static_cast<std::size_t>(k)];
          }
        }
      }
      out.values[static_cast<std::size_t>(i)] = static_cast<int>(sum);
      total += sum;
    }
  }
  out.avg = static_cast<double>(total) / n;
  return out;
}

struct ClusteringResult {
  double avg = 0.0;
  std::vector<double> values;
};

/// Watts-Strogatz clustering coefficient, cc_i = 2 e_i / (k_i (k_i - 1)),
/// with cc_i = 0 for degree < 2. The average is taken in sorted order so it
/// is independent of node labeling.
inline ClusteringResult clustering(const ThresholdGraph& g) {
  const int n = g.n;
  require(n >= 1, "metrics: graph has no nodes");
  ClusteringResult out;
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int k = g.degree[static_cast<std::size_t>(i)];
    if (k < 2) continue;
    for (int j : g.adj[static_cast<std::size_t>(i)]) stamp[static_cast<std::size_t>(j)] = i;
    long long e = 0;
    for (int j : g.adj[static_cast<std::size_t>(i)]) {
      for (int k2 : g.adj[static_cast<std::size_t>(j)]) {
        if (k2 > j && stamp[static_cast<std::size_t>(k2)] == i) ++e;
      }
    }
    out.values[static_cast<std::size_t>(i)] =
        2.0 * static_cast<double>(e) /
        (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  out.avg = detail::label_free_mean(out.values);
  return out;
}

/// Mean geodesic distance over ordered pairs. A disconnected pair contributes
/// n, one more than the largest possible geodesic n-1.
inline double avg_path_length(const ThresholdGraph& g) {
  require(g.n >= 2, "metrics: average path length needs at least 2 nodes");
  const auto ps = detail::shortest_path_stats(g, false);
  return static_cast<double>(ps.distance_sum) /
         (static_cast<double>(g.n) * (g.n - 1));
}

/// Pearson degree-degree correlation over edges, with M the edge count.
/// Returns 0 when the denominator falls below 1e-12 (regular graphs, M = 0).
inline double assortativity(const ThresholdGraph& g) {
  long long m = 0;
  long long s_prod = 0, s_sum = 0, s_sq = 0;
  for (int i = 0; i < g.n; ++i) {
    const long long ki = g.degree[static_cast<std::size_t>(i)];
    for (int j : g.adj[static_cast<std::size_t>(i)]) {
      if (j <= i) continue;
      const long long kj = g.degree[static_cast<std::size_t>(j)];
      ++m;
      s_prod += ki * kj;
      s_sum += ki + kj;
      s_sq += ki * ki + kj * kj;
    }
  }
  if (m == 0) return 0.0;
  const double dm = static_cast<double>(m);
  const double mean = static_cast<double>(s_sum) / (2.0 * dm);
  const double num = static_cast<double>(s_prod) / dm - mean * mean;
  const double den = static_cast<double>(s_sq) / (2.0 * dm) - mean * mean;
  if (den < 1e-12 && den > -1e-12) return 0.0;
  return num / den;
}

struct BetweennessResult {
  double avg = 0.0;
  std::vector<double> values;
};

/// Betweenness centrality over ordered pairs excluding endpoints, normalized
/// by 1/n^2. Per-node values come from Brandes dependency accumulation. The
/// average is computed from the exact identity sum_i b_i = sum over connected
/// ordered pairs of (d-1) / n^2, in integer arithmetic, so it is independent
/// of node labeling.
inline BetweennessResult betweenness(const ThresholdGraph& g) {
  const int n = g.n;
  require(n >= 1, "metrics: graph has no nodes");
  const auto ps = detail::shortest_path_stats(g, true);
  BetweennessResult out;
  const double n2 = static_cast<double>(n) * n;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = ps.betweenness_unnorm[static_cast<std::size_t>(i)] / n2;
  }
  out.avg = static_cast<double>(ps.interior_sum) / (n2 * static_cast<double>(n));
  return out;
}

/// All measurements in one traversal pass over the graph. Scalar fields equal
/// the individual operations' outputs bit-for-bit (the same helpers run
/// underneath).
inline std::pair<MeasurementSet, NodeProfile> measure_all(const ThresholdGraph& g) {
  require(g.n >= 2, "metrics: need at least 2 nodes");
  const DegreeStats ds = degree_stats(g);
  const HierDegree h2 = hierarchical_degree(g, 2);
  const HierDegree h3 = hierarchical_degree(g, 3);
  const ClusteringResult cc = clustering(g);
  const double rho = assortativity(g);
  const auto ps = detail::shortest_path_stats(g, true);

  MeasurementSet ms;
  ms.avg_degree = ds.avg;
  ms.max_degree = static_cast<double>(ds.max);
  ms.hier_degree_2 = h2.avg;
  ms.hier_degree_3 = h3.avg;
  ms.avg_clustering = cc.avg;
  ms.avg_path_length = static_cast<double>(ps.distance_sum) /
                       (static_cast<double>(g.n) * (g.n - 1));
  ms.assortativity = rho;
  const double n2 = static_cast<double>(g.n) * g.n;
  ms.avg_betweenness = static_cast<double>(ps.interior_sum) / (n2 * static_cast<double>(g.n));
  ms.threshold = g.threshold;
  ms.mode = g.mode;

  NodeProfile profile;
  profile.degree = ds.degree;
  profile.clustering = cc.values;
  profile.hier_degree_2 = h2.values;
  profile.hier_degree_3 = h3.values;
  profile.betweenness.resize(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) {
    profile.betweenness[static_cast<std::size_t>(i)] =
        ps.betweenness_unnorm[static_cast<std::size_t>(i)] / n2;
  }
  return {ms, profile};
}

}  // namespace cng
