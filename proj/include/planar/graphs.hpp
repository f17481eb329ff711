#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace planar {

// Pointed bipartite graph (principal-graph shape): vertices carry a class bit
// and one vertex is the base point *.
struct PointedBipartiteGraph {
  struct Vertex {
    std::string id;
    int cls = 0;
    bool star = false;
  };
  std::vector<Vertex> vertices;
  // (vertex index, vertex index, multiplicity), endpoints in opposite classes
  std::vector<std::array<int, 3>> edges;

  int star_index() const;
  void validate() const;  // connected, exactly one star, bipartite edges

  static PointedBipartiteGraph path(int vertices_count);  // A_m from *
  static PointedBipartiteGraph from_json_text(const std::string& text);
};

struct PFResult {
  std::vector<double> weights;  // normalized so weight(*) = 1
  double delta = 0;             // Perron-Frobenius norm of the graph
};

// Weights from the Perron-Frobenius eigenvector of Lambda^t Lambda (the block
// construction), normalized at *; power iteration to 1e-12.
PFResult pf_weights(const PointedBipartiteGraph& g);

// delta * w(v) - sum of neighbor weights (with multiplicity).
double local_eigen_residual(const PointedBipartiteGraph& g, const std::vector<double>& weights,
                            double delta, int v);

// First-graph test at the top univalent vertex: path weights [j+1] up to
// distance n-1, then the fork carries Tr(e) = [n+1]/(1+rv), Tr(f) =
// rv [n+1]/(1+rv); the eigenvector equation at the univalent vertex reads
// delta Tr(e) = [n] and holds iff rv = [n+2]/[n].
struct PgCheck {
  double residual = 0;
  bool accepted = false;
};
PgCheck check_pg1(int n, double q, double rv, double tol = 1e-8);
// Second-graph shape: the depth-(n+1) vertex hangs off e instead, so the
// univalent vertex is f and the same equation fails for rv = [n+2]/[n].
PgCheck check_pg2(int n, double q, double rv, double tol = 1e-8);

// Orbits of S_k on {1..k}^n: sum of Stirling partition numbers, Bell(n) once
// k >= n.
mpz_class partition_dims(int k, int n);
// Independent oracle: canonicalize every tuple in {0..k-1}^n and count.
long orbit_count_brute(int k, int n);

mpz_class catalan(int n);

struct LeadingMultiplicity {
  int supertransitivity = 0;
  long excess = 0;     // e = dims[n] - C_n at the first gap
  long next_term = 0;  // dims[n+1] - C_{n+1} - (2n+2) e
  int critical_depth = 0;
};
// Requires delta > 2 so TL has full Catalan dimension and the 2n+2 annular
// consequences of each new lowest-weight vector stay independent.
LeadingMultiplicity leading_multiplicity(const std::vector<mpz_class>& dims);

// Level-4 trace weights of the partition planar algebra, both shadings.
// side '+': alpha = (d^4-3d^2)/2, beta = (d^4-3d^2+2)/2;
// side '-': alpha = d^2-2, beta = d^4-4d^2+3. Both solve the linear systems
// {alpha+beta = d^4-3d^2+1, <shading-specific relation>}.
std::pair<double, double> partition_level4_traces(double delta_sq, char side);

}  // namespace planar
