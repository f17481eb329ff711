#include "planar/tl.hpp"

#include <map>

namespace planar {

namespace {

// Non-crossing pairings in lexicographic order of pair[]: the first free point
// matches each admissible partner in increasing order and we recurse.
void build(std::vector<int>& partner, int points, std::vector<TLDiagram>& out, int n, Shading s) {
  int a = -1;
  for (int p = 0; p < points; ++p) {
    if (partner[p] < 0) {
      a = p;
      break;
    }
  }
  if (a < 0) {
    TLDiagram d = TLDiagram::blank(n, s);
    for (int p = 0; p < points; ++p) d.pair[p] = static_cast<uint8_t>(partner[p]);
    out.push_back(d);
    return;
  }
  for (int b = a + 1; b < points; b += 2) {
    if (partner[b] >= 0) continue;
    bool crossing = false;
    for (int p = a + 1; p < b && !crossing; ++p) {
      if (partner[p] >= 0 && (partner[p] < a || partner[p] > b)) crossing = true;
    }
    // all points strictly inside (a,b) must be free or paired inside
    if (crossing) continue;
    partner[a] = b;
    partner[b] = a;
    build(partner, points, out, n, s);
    partner[a] = -1;
    partner[b] = -1;
  }
}

}  // namespace

const std::vector<TLDiagram>& enumerate_basis(int n, Shading s) {
  static std::map<std::pair<int, int>, std::vector<TLDiagram>> cache;
  auto key = std::make_pair(n, static_cast<int>(s));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (n < 0 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  std::vector<TLDiagram> out;
  if (n == 0) {
    out.push_back(TLDiagram::blank(0, s));
  } else {
    std::vector<int> partner(static_cast<size_t>(2 * n), -1);
    build(partner, 2 * n, out, n, s);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

TLDiagram e_diagram(int i, int n, Shading s) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("E_i needs 1 <= i <= n-1");
  TLDiagram d = TLDiagram::blank(n, s);
  for (int p = 0; p < n; ++p) d.link(p, 2 * n - 1 - p);
  d.link(i - 1, i);
  d.link(2 * n - 1 - (i - 1), 2 * n - 1 - i);
  return d;
}

TLDiagram hook_diagram(int m, int a, int b, Shading s) {
  if (a < 1 || a > m - 1 || b < 1 || b > m - 1)
    throw std::invalid_argument("hook positions out of range");
  TLDiagram d = TLDiagram::blank(m, s);
  d.link(a - 1, a);                        // bottom cup at positions (a, a+1)
  d.link(2 * m - b - 1, 2 * m - b);        // top cap at positions (b, b+1)
  std::vector<int> bottoms, tops;
  for (int p = 0; p < m; ++p)
    if (p != a - 1 && p != a) bottoms.push_back(p);
  for (int p = 2 * m - 1; p >= m; --p)
    if (p != 2 * m - b - 1 && p != 2 * m - b) tops.push_back(p);
  for (size_t k = 0; k < bottoms.size(); ++k) d.link(bottoms[k], tops[k]);
  return d;
}

GlueResult glue(const TLDiagram& x, const TLDiagram& y) {
  const int n = x.n;
  const int two_n = 2 * n;
  // ids: y points 0..2n-1, x points 2n..4n-1
  int diag[4 * kMaxStrands];
  int aux[4 * kMaxStrands];
  for (int p = 0; p < two_n; ++p) {
    diag[p] = y.pair[p];
    diag[two_n + p] = two_n + x.pair[p];
    aux[p] = -1;
    aux[two_n + p] = -1;
  }
  for (int i = 0; i < n; ++i) {
    aux[two_n + i] = two_n - 1 - i;  // x bottom i <-> y top slot above i
    aux[two_n - 1 - i] = two_n + i;
  }

  GlueResult res;
  res.diagram = TLDiagram::blank(n, x.shading);
  std::vector<char> seen(static_cast<size_t>(4 * n), 0);
  auto is_boundary = [&](int v) {
    return (v < n) || (v >= two_n + n);
  };
  auto out_label = [&](int v) { return v < n ? v : v - two_n; };
  for (int v = 0; v < 4 * n; ++v) {
    if (!is_boundary(v) || seen[v]) continue;
    seen[v] = 1;
    int cur = diag[v];
    while (!is_boundary(cur)) {
      seen[cur] = 1;
      int g = aux[cur];
      seen[g] = 1;
      cur = diag[g];
    }
    seen[cur] = 1;
    res.diagram.link(out_label(v), out_label(cur));
  }
  // remaining unvisited interior points lie on closed loops
  for (int v = 0; v < 4 * n; ++v) {
    if (seen[v]) continue;
    ++res.loops;
    int cur = v;
    while (!seen[cur]) {
      seen[cur] = 1;
      int d = diag[cur];
      seen[d] = 1;
      cur = aux[d];
    }
  }
  return res;
}

int closure_loops(const TLDiagram& d) {
  const int m = d.points();
  std::vector<char> seen(static_cast<size_t>(m), 0);
  int loops = 0;
  for (int v = 0; v < m; ++v) {
    if (seen[v]) continue;
    ++loops;
    int cur = v;
    while (!seen[cur]) {
      seen[cur] = 1;
      int p = d.pair[cur];
      seen[p] = 1;
      cur = m - 1 - p;  // closure arc
    }
  }
  return loops;
}

int stacked_closure_loops(const TLDiagram& xadj, const TLDiagram& y) {
  GlueResult g = glue(xadj, y);
  return g.loops + closure_loops(g.diagram);
}

std::string TLDiagram::str() const {
  std::string s = "{";
  for (int p = 0; p < points(); ++p) {
    if (p < pair[p]) {
      if (s.size() > 1) s += ",";
      s += "(" + std::to_string(p) + "," + std::to_string(pair[p]) + ")";
    }
  }
  return s + "}";
}

}  // namespace planar
