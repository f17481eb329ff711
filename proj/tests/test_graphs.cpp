#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar/graphs.hpp"
#include "planar/scalar.hpp"

using namespace planar;

TEST_CASE("path graph weights are quantum integers at delta = 2cos(pi/(m+1))") {
  for (int m : {3, 5, 8}) {
    auto g = PointedBipartiteGraph::path(m);
    auto pf = pf_weights(g);
    double want_delta = 2.0 * std::cos(M_PI / (m + 1));
    CHECK(std::abs(pf.delta - want_delta) < 1e-10);
    CHECK(pf.weights[0] == 1.0);
    // [j+1] at q = exp(i pi/(m+1)): sin ratios
    for (int j = 0; j < m; ++j) {
      double want = std::sin((j + 1) * M_PI / (m + 1)) / std::sin(M_PI / (m + 1));
      CHECK(std::abs(pf.weights[static_cast<size_t>(j)] - want) < 1e-9);
    }
    // eigen equation residual at every vertex
    std::vector<double> unnorm = pf.weights;
    for (int v = 0; v < m; ++v)
      CHECK(std::abs(local_eigen_residual(g, unnorm, pf.delta, v)) < 1e-10);
    for (double w : pf.weights) CHECK(w > 0.0);
  }
}

TEST_CASE("two-vertex graph") {
  auto g = PointedBipartiteGraph::path(2);
  auto pf = pf_weights(g);
  CHECK(std::abs(pf.delta - 1.0) < 1e-12);
  CHECK(std::abs(pf.weights[0] - 1.0) < 1e-12);
  CHECK(std::abs(pf.weights[1] - 1.0) < 1e-12);
}

TEST_CASE("graph json parsing and validation") {
  const char* text = R"({
    "vertices": [{"id":"*","class":0,"star":true},{"id":"a","class":1},{"id":"b","class":0}],
    "edges": [["*","a"],["a","b",2]]
  })";
  auto g = PointedBipartiteGraph::from_json_text(text);
  CHECK(g.vertices.size() == 3);
  CHECK(g.edges[1][2] == 2);
  auto pf = pf_weights(g);
  for (size_t v = 0; v < g.vertices.size(); ++v)
    CHECK(std::abs(local_eigen_residual(g, pf.weights, pf.delta, static_cast<int>(v))) < 1e-10);

  const char* bad = R"({
    "vertices": [{"id":"*","class":0,"star":true},{"id":"a","class":0}],
    "edges": [["*","a"]]
  })";
  CHECK_THROWS_AS(PointedBipartiteGraph::from_json_text(bad), std::invalid_argument);
  const char* disconnected = R"({
    "vertices": [{"id":"*","class":0,"star":true},{"id":"a","class":1},{"id":"b","class":1}],
    "edges": [["*","a"]]
  })";
  CHECK_THROWS_AS(PointedBipartiteGraph::from_json_text(disconnected), std::invalid_argument);
}

TEST_CASE("pg1 accepts exactly rv = [n+2]/[n]") {
  for (int n : {2, 4, 6}) {
    for (double q : {1.3, 1.45}) {
      double rv = detail::qi(q, n + 2) / detail::qi(q, n);
      auto ok = check_pg1(n, q, rv);
      CHECK(ok.accepted);
      CHECK(std::abs(ok.residual) < 1e-12);
      auto off = check_pg1(n, q, rv + 1e-3);
      CHECK_FALSE(off.accepted);
      // the second-graph shape fails the same equation
      auto pg2 = check_pg2(n, q, rv);
      CHECK_FALSE(pg2.accepted);
    }
  }
}

TEST_CASE("partition dimensions") {
  CHECK(partition_dims(5, 3) == 5);
  CHECK(partition_dims(7, 4) == 15);
  CHECK(partition_dims(9, 5) == 52);
  // Bell numbers once k >= n
  CHECK(partition_dims(10, 6) == 203);
  // matches the explicit orbit enumeration for all k, n <= 5
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(partition_dims(k, n) == orbit_count_brute(k, n));
    }
}

TEST_CASE("leading multiplicity") {
  // partition planar algebra dims: supertransitivity 3, e = 1, next 0
  std::vector<mpz_class> dims{1, 1, 2, 5, 15, 52};
  auto lm = leading_multiplicity(dims);
  CHECK(lm.supertransitivity == 3);
  CHECK(lm.excess == 1);
  CHECK(lm.next_term == 0);
  CHECK(lm.critical_depth == 4);
  // a Haagerup-type shape *101...
  std::vector<mpz_class> dims2{1, 1, 2, 5, 15, 53};
  CHECK(leading_multiplicity(dims2).next_term == 1);
  // pure TL: no excess
  std::vector<mpz_class> tl{1, 1, 2, 5, 14, 42};
  CHECK_THROWS_AS(leading_multiplicity(tl), std::invalid_argument);
  std::vector<mpz_class> below{1, 1, 2, 4};
  CHECK_THROWS_AS(leading_multiplicity(below), std::invalid_argument);
}

TEST_CASE("partition level-4 trace weights") {
  double d2 = 6.0;
  auto [ap, bp] = partition_level4_traces(d2, '+');
  CHECK(ap == (d2 * d2 - 3 * d2) / 2);
  CHECK(bp == (d2 * d2 - 3 * d2 + 2) / 2);
  auto [am, bm] = partition_level4_traces(d2, '-');
  CHECK(am == d2 - 2);
  CHECK(bm == d2 * d2 - 4 * d2 + 3);
  CHECK(std::abs(ap + bp - (d2 * d2 - 3 * d2 + 1)) < 1e-12);
  CHECK(std::abs(am + bm - (d2 * d2 - 3 * d2 + 1)) < 1e-12);
  // ratio beta/alpha on the minus side equals [6]/[4]
  for (double dd : {5.0, 6.0, 7.3}) {
    auto [a, b] = partition_level4_traces(dd, '-');
    double q = (std::sqrt(dd) + std::sqrt(dd - 4.0)) / 2.0;
    CHECK(std::abs(b / a - detail::qi(q, 6) / detail::qi(q, 4)) < 1e-10);
  }
}
