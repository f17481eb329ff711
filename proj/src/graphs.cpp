#include "planar/graphs.hpp"

#include <json.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "planar/scalar.hpp"

namespace planar {

int PointedBipartiteGraph::star_index() const {
  int found = -1;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].star) {
      if (found >= 0) throw std::invalid_argument("graph: more than one star vertex");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw std::invalid_argument("graph: no star vertex");
  return found;
}

void PointedBipartiteGraph::validate() const {
  star_index();
  int m = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  for (const auto& e : edges) {
    if (e[0] < 0 || e[0] >= m || e[1] < 0 || e[1] >= m || e[2] <= 0)
      throw std::invalid_argument("graph: bad edge");
    if (vertices[static_cast<size_t>(e[0])].cls == vertices[static_cast<size_t>(e[1])].cls)
      throw std::invalid_argument("graph: edge within one class");
    adj[static_cast<size_t>(e[0])].push_back(e[1]);
    adj[static_cast<size_t>(e[1])].push_back(e[0]);
  }
  std::vector<char> seen(static_cast<size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<size_t>(v)]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  if (count != m) throw std::invalid_argument("graph: disconnected");
}

PointedBipartiteGraph PointedBipartiteGraph::path(int vertices_count) {
  PointedBipartiteGraph g;
  for (int i = 0; i < vertices_count; ++i)
    g.vertices.push_back({"v" + std::to_string(i), i % 2, i == 0});
  for (int i = 0; i + 1 < vertices_count; ++i) g.edges.push_back({i, i + 1, 1});
  return g;
}

PointedBipartiteGraph PointedBipartiteGraph::from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PointedBipartiteGraph g;
  std::map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    Vertex vert;
    vert.id = v.at("id").get<std::string>();
    vert.cls = v.at("class").get<int>();
    vert.star = v.value("star", false);
    index[vert.id] = static_cast<int>(g.vertices.size());
    g.vertices.push_back(vert);
  }
  for (const auto& e : j.at("edges")) {
    int a = index.at(e.at(0).get<std::string>());
    int b = index.at(e.at(1).get<std::string>());
    int mult = e.size() > 2 ? e.at(2).get<int>() : 1;
    g.edges.push_back({a, b, mult});
  }
  g.validate();
  return g;
}

PFResult pf_weights(const PointedBipartiteGraph& g) {
  g.validate();
  std::vector<int> class0, class1;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    (g.vertices[i].cls == 0 ? class0 : class1).push_back(static_cast<int>(i));
  std::map<int, int> pos0, pos1;
  for (size_t i = 0; i < class0.size(); ++i) pos0[class0[i]] = static_cast<int>(i);
  for (size_t i = 0; i < class1.size(); ++i) pos1[class1[i]] = static_cast<int>(i);

  Eigen::MatrixXd lambda =
      Eigen::MatrixXd::Zero(static_cast<long>(class0.size()), static_cast<long>(class1.size()));
  for (const auto& e : g.edges) {
    int a = e[0], b = e[1];
    if (g.vertices[static_cast<size_t>(a)].cls != 0) std::swap(a, b);
    lambda(pos0[a], pos1[b]) += e[2];
  }

  // power iteration on Lambda^t Lambda for the class-1 eigenvector v; the
  // full weight vector is (Lambda v, delta v)
  Eigen::MatrixXd m = lambda.transpose() * lambda;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(m.rows());
  if (m.rows() == 0) {
    // single-class graph: only the star vertex
    PFResult res;
    res.weights.assign(g.vertices.size(), 1.0);
    res.delta = 0.0;
    return res;
  }
  double lam = 0;
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd next = m * v;
    double nn = next.norm();
    if (nn == 0) throw std::domain_error("graph: zero iterate in power iteration");
    next /= nn;
    double diff = (next - v).norm();
    v = next;
    lam = v.dot(m * v);
    if (diff < 1e-14 && it > 3) break;
  }
  double delta = std::sqrt(lam);
  PFResult res;
  res.weights.assign(g.vertices.size(), 0.0);
  Eigen::VectorXd w0 = lambda * v;
  for (size_t i = 0; i < class0.size(); ++i) res.weights[static_cast<size_t>(class0[i])] = w0(static_cast<long>(i));
  for (size_t i = 0; i < class1.size(); ++i)
    res.weights[static_cast<size_t>(class1[i])] = delta * v(static_cast<long>(i));
  double at_star = res.weights[static_cast<size_t>(g.star_index())];
  if (at_star <= 0) throw std::domain_error("graph: nonpositive weight at *");
  for (auto& x : res.weights) x /= at_star;
  res.delta = delta;
  return res;
}

double local_eigen_residual(const PointedBipartiteGraph& g, const std::vector<double>& weights,
                            double delta, int v) {
  double acc = delta * weights.at(static_cast<size_t>(v));
  for (const auto& e : g.edges) {
    if (e[0] == v) acc -= e[2] * weights.at(static_cast<size_t>(e[1]));
    if (e[1] == v) acc -= e[2] * weights.at(static_cast<size_t>(e[0]));
  }
  return acc;
}

namespace {
PgCheck pg_check(int n, double q, double rv, double tol, bool univalent_is_e) {
  double qn = detail::qi(q, n), qn1 = detail::qi(q, n + 1);
  double delta = q + 1.0 / q;
  double tr_e = qn1 / (1.0 + rv);
  double tr_f = rv * qn1 / (1.0 + rv);
  double weight = univalent_is_e ? tr_e : tr_f;
  PgCheck out;
  out.residual = delta * weight - qn;
  out.accepted = std::abs(out.residual) <= tol;
  return out;
}
}  // namespace

PgCheck check_pg1(int n, double q, double rv, double tol) {
  return pg_check(n, q, rv, tol, /*univalent_is_e=*/true);
}

PgCheck check_pg2(int n, double q, double rv, double tol) {
  return pg_check(n, q, rv, tol, /*univalent_is_e=*/false);
}

mpz_class partition_dims(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("partition_dims: need k >= 1, n >= 0");
  // Stirling partition numbers S(n, j), summed over j <= k
  std::vector<std::vector<mpz_class>> s(static_cast<size_t>(n + 1),
                                        std::vector<mpz_class>(static_cast<size_t>(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          mpz_class(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  mpz_class total = 0;
  for (int j = 0; j <= std::min(k, n); ++j) total += s[static_cast<size_t>(n)][static_cast<size_t>(j)];
  if (n == 0) total = 1;
  return total;
}

long orbit_count_brute(int k, int n) {
  if (n == 0) return 1;
  std::set<std::vector<int>> canon;
  std::vector<int> tuple(static_cast<size_t>(n), 0);
  while (true) {
    // canonical form: relabel values by first occurrence
    std::map<int, int> relabel;
    std::vector<int> c;
    for (int x : tuple) {
      auto [it, fresh] = relabel.try_emplace(x, static_cast<int>(relabel.size()));
      c.push_back(it->second);
    }
    canon.insert(c);
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == k - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<size_t>(pos)];
  }
  return static_cast<long>(canon.size());
}

mpz_class catalan(int n) {
  mpz_class num, den;
  mpz_bin_uiui(num.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  return num / (n + 1);
}

LeadingMultiplicity leading_multiplicity(const std::vector<mpz_class>& dims) {
  if (dims.empty() || dims[0] != 1) throw std::invalid_argument("dims must start at dim P_0 = 1");
  LeadingMultiplicity out;
  int gap = -1;
  for (size_t m = 0; m < dims.size(); ++m) {
    mpz_class c = catalan(static_cast<int>(m));
    if (dims[m] < c)
      throw std::invalid_argument("dims[" + std::to_string(m) + "] below the TL dimension");
    if (dims[m] > c) {
      gap = static_cast<int>(m);
      break;
    }
  }
  if (gap < 0) throw std::invalid_argument("no excess over TL found in the given range");
  out.critical_depth = gap;
  out.supertransitivity = gap - 1;
  out.excess = mpz_class(dims[static_cast<size_t>(gap)] - catalan(gap)).get_si();
  if (static_cast<size_t>(gap + 1) < dims.size()) {
    mpz_class next = dims[static_cast<size_t>(gap + 1)] - catalan(gap + 1) -
                     mpz_class(2 * gap + 2) * out.excess;
    out.next_term = next.get_si();
  } else {
    out.next_term = -1;
  }
  return out;
}

std::pair<double, double> partition_level4_traces(double delta_sq, char side) {
  if (delta_sq <= 4.0) throw std::domain_error("need delta^2 > 4");
  double sum = delta_sq * delta_sq - 3.0 * delta_sq + 1.0;  // alpha + beta
  if (side == '+') {
    // second relation: alpha - beta + 2 + (delta^2 - 1) = delta^2
    double alpha = (sum - 1.0) / 2.0;
    return {alpha, sum - alpha};
  }
  if (side == '-') {
    // second relation: 2 + alpha = delta^2
    double alpha = delta_sq - 2.0;
    return {alpha, sum - alpha};
  }
  throw std::invalid_argument("side must be '+' or '-'");
}

}  // namespace planar
