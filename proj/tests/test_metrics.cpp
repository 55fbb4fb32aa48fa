#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "contourgraph/metrics.hpp"
#include "contourgraph/network.hpp"
#include "contourgraph/shapes.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cng;

namespace {

ThresholdGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return oracle::make_graph(n, edges);
}

ThresholdGraph path3() { return oracle::make_graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("degree stats on reference graphs") {
  const auto k5 = complete_graph(5);
  auto ds = degree_stats(k5);
  CHECK(ds.avg == 4.0);
  CHECK(ds.max == 4);

  const auto empty = oracle::make_graph(4, {});
  ds = degree_stats(empty);
  CHECK(ds.avg == 0.0);
  CHECK(ds.max == 0);

  ds = degree_stats(path3());
  CHECK(ds.avg == Catch::Approx(4.0 / 3.0));
  CHECK(ds.max == 2);
}

TEST_CASE("hierarchical degree on reference graphs") {
  const auto k3 = complete_graph(3);
  const auto h2 = hierarchical_degree(k3, 2);
  for (int v : h2.values) CHECK(v == 4);

  const auto p3 = path3();
  const auto p2 = hierarchical_degree(p3, 2);
  CHECK(p2.values == std::vector<int>{2, 2, 2});
  CHECK(p2.avg == 2.0);
  const auto p3h3 = hierarchical_degree(p3, 3);
  CHECK(p3h3.values == std::vector<int>{1, 0, 1});
  CHECK(p3h3.avg == Catch::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(hierarchical_degree(p3, 4), std::invalid_argument);
}

TEST_CASE("hierarchical degree matches BFS-ring oracle on random graphs") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_graph(rng, 20, 0.2 + 0.03 * trial);
    for (int level : {2, 3}) {
      const auto got = hierarchical_degree(g, level);
      const auto want = oracle::hierarchical_degree(g, level);
      CHECK(got.values == want);
    }
  }
}

TEST_CASE("clustering coefficient on reference graphs") {
  const auto k3 = complete_graph(3);
  const auto cc = clustering(k3);
  for (double v : cc.values) CHECK(v == 1.0);
  CHECK(cc.avg == 1.0);

  const auto star = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto sc = clustering(star);
  for (double v : sc.values) CHECK(v == 0.0);
  CHECK(sc.avg == 0.0);
}

TEST_CASE("clustering matches triple-counting oracle on a square contour") {
  const auto square = support::polygon(4, 30);
  const auto wnet = build_weighted(square);
  const auto g = threshold(wnet, 0.3, ThresholdMode::smaller_than);
  const auto got = clustering(g);
  const auto want = oracle::clustering(g);
  REQUIRE(got.values.size() == want.per_node.size());
  for (std::size_t i = 0; i < got.values.size(); ++i) {
    CHECK(got.values[i] == want.per_node[i]);
  }
  CHECK(got.avg == want.avg);
}

TEST_CASE("average path length on reference graphs") {
  CHECK(avg_path_length(complete_graph(6)) == 1.0);
  CHECK(avg_path_length(path3()) == Catch::Approx(4.0 / 3.0));
  // All-disconnected convention: every ordered pair contributes n.
  CHECK(avg_path_length(oracle::make_graph(4, {})) == 4.0);
  CHECK_THROWS_AS(avg_path_length(oracle::make_graph(1, {})), std::invalid_argument);
}

TEST_CASE("assortativity on reference graphs") {
  const auto s3 = oracle::make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(assortativity(s3) == -1.0);
  // Regular graph: zero variance in endpoint degrees -> sentinel.
  CHECK(assortativity(complete_graph(4)) == 0.0);
  CHECK(assortativity(oracle::make_graph(3, {})) == 0.0);
}

TEST_CASE("assortativity matches the ordered-pair Pearson oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 15, 0.15 + 0.02 * trial);
    CHECK(assortativity(g) == oracle::assortativity(g));
  }
}

TEST_CASE("betweenness on reference graphs") {
  const auto k5 = complete_graph(5);
  const auto bk = betweenness(k5);
  for (double v : bk.values) CHECK(v == 0.0);
  CHECK(bk.avg == 0.0);

  const auto p3 = path3();
  const auto bp = betweenness(p3);
  CHECK(bp.values[0] == 0.0);
  CHECK(bp.values[1] == Catch::Approx(2.0 / 9.0).margin(1e-15));
  CHECK(bp.values[2] == 0.0);
  CHECK(bp.avg == Catch::Approx(2.0 / 27.0).margin(1e-15));
}

TEST_CASE("betweenness matches exhaustive geodesic enumeration on C6") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  const auto c6 = oracle::make_graph(6, edges);
  const auto got = betweenness(c6);
  const auto want = oracle::betweenness(c6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(got.values[i] - want.per_node[i]) < 1e-12);
  }
  CHECK(std::abs(got.avg - want.avg) < 1e-12);
}

TEST_CASE("unnormalized betweenness mass equals interior path mass") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(9));
    const auto g = oracle::random_graph(rng, n, 0.3 + 0.4 * rng.next_double());
    const auto got = betweenness(g);
    const auto want = oracle::betweenness(g);
    double mass = 0.0;
    for (double v : got.values) mass += v;
    const double n2 = static_cast<double>(n) * n;
    CHECK(std::abs(mass * n2 - static_cast<double>(want.interior_sum)) < 1e-9);
  }
}

TEST_CASE("measure_all equals the individual operations bit for bit") {
  Rng rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_graph(rng, 18, 0.1 + 0.08 * trial);
    const auto [ms, profile] = measure_all(g);
    const auto ds = degree_stats(g);
    CHECK(ms.avg_degree == ds.avg);
    CHECK(ms.max_degree == static_cast<double>(ds.max));
    CHECK(ms.hier_degree_2 == hierarchical_degree(g, 2).avg);
    CHECK(ms.hier_degree_3 == hierarchical_degree(g, 3).avg);
    CHECK(ms.avg_clustering == clustering(g).avg);
    CHECK(ms.avg_path_length == avg_path_length(g));
    CHECK(ms.assortativity == assortativity(g));
    const auto b = betweenness(g);
    CHECK(ms.avg_betweenness == b.avg);
    CHECK(profile.betweenness == b.values);
    CHECK(profile.degree == ds.degree);
  }

  const auto star_contour = support::star(5, 0.5, 40);
  const auto g = threshold(build_weighted(star_contour), 0.325, ThresholdMode::smaller_than);
  const auto [ms, profile] = measure_all(g);
  CHECK(ms.avg_degree == degree_stats(g).avg);
  CHECK(ms.avg_clustering == clustering(g).avg);
  CHECK(ms.avg_path_length == avg_path_length(g));
  CHECK(ms.assortativity == assortativity(g));
  CHECK(ms.avg_betweenness == betweenness(g).avg);
}

TEST_CASE("measure_all on K5 and the empty graph") {
  const auto [k5, k5p] = measure_all(complete_graph(5));
  CHECK(k5.avg_degree == 4.0);
  CHECK(k5.max_degree == 4.0);
  CHECK(k5.hier_degree_2 == 16.0);
  CHECK(k5.hier_degree_3 == 0.0);
  CHECK(k5.avg_clustering == 1.0);
  CHECK(k5.avg_path_length == 1.0);
  CHECK(k5.assortativity == 0.0);
  CHECK(k5.avg_betweenness == 0.0);

  const auto [e5, e5p] = measure_all(oracle::make_graph(5, {}));
  CHECK(e5.avg_degree == 0.0);
  CHECK(e5.max_degree == 0.0);
  CHECK(e5.hier_degree_2 == 0.0);
  CHECK(e5.hier_degree_3 == 0.0);
  CHECK(e5.avg_clustering == 0.0);
  CHECK(e5.avg_path_length == 5.0);
  CHECK(e5.assortativity == 0.0);
  CHECK(e5.avg_betweenness == 0.0);
}

TEST_CASE("scalar measurements are invariant under node relabeling") {
  Rng rng(5150);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8 + static_cast<int>(rng.next_below(8));
    const auto g = oracle::random_graph(rng, n, 0.2 + 0.5 * rng.next_double());
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j : g.adj[static_cast<std::size_t>(i)]) {
        if (j > i) edges.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
    const auto h = oracle::make_graph(n, edges);
    const auto [ma, pa] = measure_all(g);
    const auto [mb, pb] = measure_all(h);
    CHECK(ma.avg_degree == mb.avg_degree);
    CHECK(ma.max_degree == mb.max_degree);
    CHECK(ma.hier_degree_2 == mb.hier_degree_2);
    CHECK(ma.hier_degree_3 == mb.hier_degree_3);
    CHECK(ma.avg_clustering == mb.avg_clustering);
    CHECK(ma.avg_path_length == mb.avg_path_length);
    CHECK(ma.assortativity == mb.assortativity);
    CHECK(ma.avg_betweenness == mb.avg_betweenness);
    // Per-node vectors map through the permutation (exact for the integer
    // metrics and clustering, small tolerance for Brandes accumulation).
    for (int i = 0; i < n; ++i) {
      const auto pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
      CHECK(pa.degree[static_cast<std::size_t>(i)] == pb.degree[pi]);
      CHECK(pa.clustering[static_cast<std::size_t>(i)] == pb.clustering[pi]);
      CHECK(pa.hier_degree_2[static_cast<std::size_t>(i)] == pb.hier_degree_2[pi]);
      CHECK(std::abs(pa.betweenness[static_cast<std::size_t>(i)] - pb.betweenness[pi]) < 1e-12);
    }
  }
}

TEST_CASE("average degree grows with the threshold on a contour network") {
  Rng rng(31337);
  const auto c = support::random_contour(rng, 80);
  const auto wnet = build_weighted(c);
  const auto graphs = sweep(wnet, uniform_plan(13, ThresholdMode::smaller_than));
  double prev = -1.0;
  for (const auto& g : graphs) {
    const double k = degree_stats(g).avg;
    CHECK(k >= prev);
    prev = k;
  }
}

TEST_CASE("clustering rises with the threshold on the square contour") {
  const auto square = support::polygon(4, 120);
  const auto wnet = build_weighted(square);
  const auto low = clustering(threshold(wnet, 0.2, ThresholdMode::smaller_than)).avg;
  const auto high = clustering(threshold(wnet, 0.8, ThresholdMode::smaller_than)).avg;
  CHECK(high > low);
}
