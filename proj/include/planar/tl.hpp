#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "planar/scalar.hpp"

namespace planar {

enum class Shading : uint8_t { unshaded, shaded };

inline Shading flip(Shading s) {
  return s == Shading::unshaded ? Shading::shaded : Shading::unshaded;
}

constexpr int kMaxStrands = 12;
constexpr int kMaxPoints = 2 * kMaxStrands;

// Planar pairing diagram on 2n boundary points. Points are numbered
// counterclockwise from the marked interval: 0..n-1 along the bottom left to
// right, n..2n-1 back along the top right to left. pair[p] is the partner of
// p; the pairing is a fixed-point-free non-crossing involution.
struct TLDiagram {
  uint8_t n = 0;
  Shading shading = Shading::unshaded;
  std::array<uint8_t, kMaxPoints> pair{};

  int points() const { return 2 * n; }

  bool operator==(const TLDiagram& o) const {
    if (n != o.n || shading != o.shading) return false;
    for (int p = 0; p < points(); ++p)
      if (pair[p] != o.pair[p]) return false;
    return true;
  }
  bool operator<(const TLDiagram& o) const {
    if (n != o.n) return n < o.n;
    if (shading != o.shading) return shading < o.shading;
    for (int p = 0; p < points(); ++p)
      if (pair[p] != o.pair[p]) return pair[p] < o.pair[p];
    return false;
  }

  static TLDiagram identity(int n, Shading s = Shading::unshaded) {
    TLDiagram d = blank(n, s);
    for (int p = 0; p < n; ++p) {
      d.pair[p] = static_cast<uint8_t>(2 * n - 1 - p);
      d.pair[2 * n - 1 - p] = static_cast<uint8_t>(p);
    }
    return d;
  }

  static TLDiagram blank(int n, Shading s) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
    TLDiagram d;
    d.n = static_cast<uint8_t>(n);
    d.shading = s;
    return d;
  }

  void link(int a, int b) {
    pair[a] = static_cast<uint8_t>(b);
    pair[b] = static_cast<uint8_t>(a);
  }

  TLDiagram adjoint() const {
    TLDiagram d = blank(n, shading);
    int m = points();
    for (int p = 0; p < m; ++p) d.pair[m - 1 - p] = static_cast<uint8_t>(m - 1 - pair[p]);
    return d;
  }

  // One boundary click counterclockwise: p -> p+1 (mod 2n), shading flips.
  TLDiagram fourier() const {
    TLDiagram d = blank(n, flip(shading));
    int m = points();
    for (int p = 0; p < m; ++p) d.pair[(p + 1) % m] = static_cast<uint8_t>((pair[p] + 1) % m);
    return d;
  }

  std::string str() const;
};

// All C_n non-crossing pairings for fixed (n, shading), lexicographic in pair[].
const std::vector<TLDiagram>& enumerate_basis(int n, Shading s = Shading::unshaded);

TLDiagram e_diagram(int i, int n, Shading s = Shading::unshaded);
// Hook diagram: cup at bottom positions (a, a+1), cap at top positions (b, b+1),
// 1-based, everything else through. a = 1 or b = 1 gives the families whose
// Jones-Wenzl coefficients have the single-ratio closed form.
TLDiagram hook_diagram(int m, int a, int b, Shading s = Shading::unshaded);

// Stacks x above y (x bottom glued to y top) and counts closed loops.
struct GlueResult {
  TLDiagram diagram;
  int loops = 0;
};
GlueResult glue(const TLDiagram& x, const TLDiagram& y);

int closure_loops(const TLDiagram& d);                        // full trace closure
int stacked_closure_loops(const TLDiagram& xadj, const TLDiagram& y);  // loops of Tr(xadj . y)

template <class S>
struct TLElement {
  uint8_t n = 0;
  Shading shading = Shading::unshaded;
  std::map<TLDiagram, S> terms;

  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
};

namespace detail {
inline bool prune_zero(const ExactCtx&, const Exact& v) { return v.is_zero(); }
inline bool prune_zero(const NumericCtx&, const std::complex<double>& v) {
  return std::abs(v) <= 1e-14;
}
}  // namespace detail

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> tl_element(const Ctx&, const TLDiagram& d, S coeff) {
  TLElement<S> e;
  e.n = d.n;
  e.shading = d.shading;
  e.terms.emplace(d, std::move(coeff));
  return e;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> tl_identity(const Ctx& ctx, int n, Shading s = Shading::unshaded) {
  TLElement<S> e;
  e.n = static_cast<uint8_t>(n);
  e.shading = s;
  e.terms.emplace(TLDiagram::identity(n, s), ctx.one());
  return e;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> e_generator(const Ctx& ctx, int i, int n, Shading s = Shading::unshaded) {
  TLElement<S> e;
  e.n = static_cast<uint8_t>(n);
  e.shading = s;
  e.terms.emplace(e_diagram(i, n, s), ctx.one());
  return e;
}

template <class Ctx, class S>
void add_term(const Ctx& ctx, TLElement<S>& x, const TLDiagram& d, const S& c) {
  auto it = x.terms.find(d);
  if (it == x.terms.end()) {
    if (!detail::prune_zero(ctx, c)) x.terms.emplace(d, c);
  } else {
    it->second += c;
    if (detail::prune_zero(ctx, it->second)) x.terms.erase(it);
  }
}

template <class Ctx, class S>
TLElement<S> add(const Ctx& ctx, const TLElement<S>& x, const TLElement<S>& y) {
  if (x.n != y.n || x.shading != y.shading) throw std::invalid_argument("TL shape mismatch in add");
  TLElement<S> r = x;
  for (const auto& [d, c] : y.terms) add_term(ctx, r, d, c);
  return r;
}

template <class Ctx, class S>
TLElement<S> scale(const Ctx& ctx, const TLElement<S>& x, const S& k) {
  TLElement<S> r;
  r.n = x.n;
  r.shading = x.shading;
  if (detail::prune_zero(ctx, k)) return r;
  for (const auto& [d, c] : x.terms) {
    S v = c * k;
    if (!detail::prune_zero(ctx, v)) r.terms.emplace(d, std::move(v));
  }
  return r;
}

template <class Ctx, class S>
TLElement<S> negate(const Ctx& ctx, const TLElement<S>& x) {
  return scale(ctx, x, ctx.from_int(-1));
}

template <class Ctx, class S>
TLElement<S> sub(const Ctx& ctx, const TLElement<S>& x, const TLElement<S>& y) {
  return add(ctx, x, negate(ctx, y));
}

namespace detail {

// delta^0 .. delta^n as scalars
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<S> delta_powers(const Ctx& ctx, int n) {
  std::vector<S> p(static_cast<size_t>(n) + 1);
  p[0] = ctx.one();
  for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * ctx.delta();
  return p;
}

// Exact multiplication for large elements: put each factor over a single
// common denominator so the pair loop is pure polynomial arithmetic, memoize
// the scaled numerator products (Jones-Wenzl elements carry few distinct
// coefficient values), and divide out the denominators once per output term.
struct MemoSide {
  std::vector<const TLDiagram*> diagrams;
  std::vector<int> idx;
  std::vector<Laurent> scaled_num;
  Laurent den = Laurent::one();
};

inline MemoSide build_memo_side(const TLElement<Exact>& e) {
  MemoSide s;
  std::map<Exact, int> interned;
  std::vector<Exact> vals;
  for (const auto& [d, c] : e.terms) {
    Exact r = c;
    r.reduce();
    auto [it, fresh] = interned.try_emplace(r, static_cast<int>(vals.size()));
    if (fresh) vals.push_back(r);
    s.diagrams.push_back(&d);
    s.idx.push_back(it->second);
  }
  for (const auto& v : vals) s.den = Laurent::lcm(s.den, v.den());
  s.scaled_num.reserve(vals.size());
  for (const auto& v : vals) {
    Laurent rem;
    Laurent quot = Laurent::divmod(s.den, v.den(), &rem);
    s.scaled_num.push_back(v.num() * quot);
  }
  return s;
}

// Untrimmed dense accumulator; avoids per-add reallocation in the pair loop.
struct PolyAcc {
  int lo = 0;
  std::vector<Cyclo> c;
  bool used = false;

  void add(const Laurent& p) {
    if (p.is_zero()) return;
    if (!used) {
      lo = p.lo() - 8;
      c.assign(static_cast<size_t>(p.terms()) + 16, Cyclo());
      used = true;
    }
    if (p.lo() < lo || p.hi() >= lo + static_cast<int>(c.size())) {
      int nlo = std::min(lo, p.lo() - 8);
      int nhi = std::max(lo + static_cast<int>(c.size()) - 1, p.hi() + 8);
      std::vector<Cyclo> nc(static_cast<size_t>(nhi - nlo + 1));
      for (size_t i = 0; i < c.size(); ++i) nc[static_cast<size_t>(lo - nlo) + i] = std::move(c[i]);
      c = std::move(nc);
      lo = nlo;
    }
    for (int e = p.lo(); e <= p.hi(); ++e) {
      const Cyclo& v = p.at(e);
      if (!v.is_zero()) c[static_cast<size_t>(e - lo)].add_in_place(v);
    }
  }
};

template <class Ctx>
TLElement<Exact> multiply_memo(const Ctx&, const TLElement<Exact>& x, const TLElement<Exact>& y) {
  MemoSide sx = build_memo_side(x);
  MemoSide sy = build_memo_side(y);
  const size_t ux = sx.scaled_num.size(), uy = sy.scaled_num.size();
  const size_t lmax = static_cast<size_t>(x.n) + 1;

  const auto& basis = enumerate_basis(x.n, x.shading);
  std::map<TLDiagram, int> basis_index;
  for (size_t i = 0; i < basis.size(); ++i) basis_index.emplace(basis[i], static_cast<int>(i));

  std::vector<Laurent> table(ux * uy);
  std::vector<bool> have(ux * uy, false);
  std::vector<PolyAcc> acc(basis.size() * lmax);

  for (size_t a = 0; a < sx.diagrams.size(); ++a) {
    for (size_t b = 0; b < sy.diagrams.size(); ++b) {
      GlueResult g = glue(*sx.diagrams[a], *sy.diagrams[b]);
      size_t key = static_cast<size_t>(sx.idx[a]) * uy + static_cast<size_t>(sy.idx[b]);
      if (!have[key]) {
        table[key] = sx.scaled_num[static_cast<size_t>(sx.idx[a])] *
                     sy.scaled_num[static_cast<size_t>(sy.idx[b])];
        have[key] = true;
      }
      int di = basis_index.at(g.diagram);
      acc[static_cast<size_t>(di) * lmax + static_cast<size_t>(g.loops)].add(table[key]);
    }
  }

  std::vector<Laurent> dpow(lmax);
  dpow[0] = Laurent::one();
  for (size_t l = 1; l < lmax; ++l) dpow[l] = dpow[l - 1] * qint_poly(2);

  TLElement<Exact> r;
  r.n = x.n;
  r.shading = x.shading;
  Laurent den = sx.den * sy.den;
  for (size_t i = 0; i < basis.size(); ++i) {
    Laurent num;
    for (size_t l = 0; l < lmax; ++l) {
      PolyAcc& pa = acc[i * lmax + l];
      if (!pa.used) continue;
      num.add_in_place(Laurent::from_dense(pa.lo, std::move(pa.c)) * dpow[l]);
    }
    if (!num.is_zero()) r.terms.emplace(basis[i], Exact(std::move(num), den));
  }
  return r;
}

}  // namespace detail

// Exact inner product via the same common-denominator strategy; the closed
// diagram only contributes a loop count, so one accumulator per count is
// enough.
template <class Ctx>
Exact inner_memo(const Ctx&, const TLElement<Exact>& x, const TLElement<Exact>& y) {
  detail::MemoSide sx = detail::build_memo_side(x);
  detail::MemoSide sy = detail::build_memo_side(y);
  for (auto& p : sx.scaled_num) p = p.conj();
  Laurent den = sx.den.conj() * sy.den;
  const size_t ux = sx.scaled_num.size(), uy = sy.scaled_num.size();
  const size_t lmax = static_cast<size_t>(x.n) + 1;
  std::vector<Laurent> table(ux * uy);
  std::vector<bool> have(ux * uy, false);
  std::vector<detail::PolyAcc> acc(lmax);
  std::vector<TLDiagram> adj(sx.diagrams.size());
  for (size_t a = 0; a < sx.diagrams.size(); ++a) adj[a] = sx.diagrams[a]->adjoint();
  for (size_t a = 0; a < sx.diagrams.size(); ++a) {
    for (size_t b = 0; b < sy.diagrams.size(); ++b) {
      int loops = stacked_closure_loops(adj[a], *sy.diagrams[b]);
      size_t key = static_cast<size_t>(sx.idx[a]) * uy + static_cast<size_t>(sy.idx[b]);
      if (!have[key]) {
        table[key] = sx.scaled_num[static_cast<size_t>(sx.idx[a])] *
                     sy.scaled_num[static_cast<size_t>(sy.idx[b])];
        have[key] = true;
      }
      acc[static_cast<size_t>(loops)].add(table[key]);
    }
  }
  Laurent num, dpow = Laurent::one();
  for (size_t l = 0; l < lmax; ++l) {
    if (acc[l].used) num.add_in_place(Laurent::from_dense(acc[l].lo, std::move(acc[l].c)) * dpow);
    dpow = dpow * qint_poly(2);
  }
  if (num.is_zero()) return {};
  return Exact(std::move(num), std::move(den));
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> multiply(const Ctx& ctx, const TLElement<S>& x, const TLElement<S>& y) {
  if (x.n != y.n || x.shading != y.shading)
    throw std::invalid_argument("TL shape mismatch in multiply");
  if constexpr (std::is_same_v<S, Exact>) {
    if (x.size() * y.size() >= 4096) return detail::multiply_memo(ctx, x, y);
  }
  auto dpow = detail::delta_powers(ctx, x.n);
  TLElement<S> r;
  r.n = x.n;
  r.shading = x.shading;
  for (const auto& [dx, cx] : x.terms) {
    for (const auto& [dy, cy] : y.terms) {
      GlueResult g = glue(dx, dy);
      add_term(ctx, r, g.diagram, S(cx * cy * dpow[static_cast<size_t>(g.loops)]));
    }
  }
  return r;
}

// Markov trace: close every strand around the side; delta per loop.
template <class Ctx, class S = typename Ctx::Scalar>
S trace(const Ctx& ctx, const TLElement<S>& x) {
  auto dpow = detail::delta_powers(ctx, x.n);
  S acc = ctx.zero();
  for (const auto& [d, c] : x.terms) acc += c * dpow[static_cast<size_t>(closure_loops(d))];
  return acc;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> adjoint(const Ctx& ctx, const TLElement<S>& x) {
  TLElement<S> r;
  r.n = x.n;
  r.shading = x.shading;
  for (const auto& [d, c] : x.terms) r.terms.emplace(d.adjoint(), ctx.conj(c));
  return r;
}

// <x, y> = Tr(x* y): antilinear in x, linear in y.
template <class Ctx, class S = typename Ctx::Scalar>
S inner(const Ctx& ctx, const TLElement<S>& x, const TLElement<S>& y) {
  if (x.n != y.n || x.shading != y.shading)
    throw std::invalid_argument("TL shape mismatch in inner");
  if constexpr (std::is_same_v<S, Exact>) {
    if (x.size() * y.size() >= 4096) return inner_memo(ctx, x, y);
  }
  auto dpow = detail::delta_powers(ctx, x.n);
  S acc = ctx.zero();
  for (const auto& [dx, cx] : x.terms) {
    TLDiagram da = dx.adjoint();
    for (const auto& [dy, cy] : y.terms) {
      int loops = stacked_closure_loops(da, dy);
      acc += ctx.conj(cx) * cy * dpow[static_cast<size_t>(loops)];
    }
  }
  return acc;
}

// Closes the last strand (bottom-right to top-right); lands in TL_{n-1}.
template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> cond_expectation(const Ctx& ctx, const TLElement<S>& x) {
  if (x.n == 0) throw std::invalid_argument("conditional expectation needs n >= 1");
  int n = x.n;
  TLElement<S> r;
  r.n = static_cast<uint8_t>(n - 1);
  r.shading = x.shading;
  for (const auto& [d, c] : x.terms) {
    TLDiagram out = TLDiagram::blank(n - 1, d.shading);
    int bottom = n - 1, top = n;  // the two points being joined
    S v = c;
    TLDiagram t = d;
    if (t.pair[bottom] == top) {
      v = v * ctx.delta();
    } else {
      t.link(t.pair[bottom], t.pair[top]);
    }
    auto relabel = [n](int p) { return p < n - 1 ? p : p - 2; };
    for (int p = 0; p < 2 * n; ++p) {
      if (p == bottom || p == top) continue;
      out.pair[relabel(p)] = static_cast<uint8_t>(relabel(t.pair[p]));
    }
    add_term(ctx, r, out, v);
  }
  return r;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> fourier(const Ctx&, const TLElement<S>& x) {
  if (x.n == 0) throw std::invalid_argument("fourier needs n >= 1");
  TLElement<S> r;
  r.n = x.n;
  r.shading = flip(x.shading);
  for (const auto& [d, c] : x.terms) r.terms.emplace(d.fourier(), c);
  return r;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> fourier_pow(const Ctx& ctx, const TLElement<S>& x, int k) {
  TLElement<S> r = x;
  int m = 2 * x.n;
  k %= m;
  if (k < 0) k += m;
  for (int i = 0; i < k; ++i) r = fourier(ctx, r);
  return r;
}

template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> rotation(const Ctx& ctx, const TLElement<S>& x) {
  return fourier(ctx, fourier(ctx, x));
}

// Reads an element as living in the other shading (TL as an unshaded algebra).
template <class S>
TLElement<S> reshade(const TLElement<S>& x, Shading s) {
  TLElement<S> r;
  r.n = x.n;
  r.shading = s;
  for (const auto& [d, c] : x.terms) {
    TLDiagram nd = d;
    nd.shading = s;
    r.terms.emplace(nd, c);
  }
  return r;
}

// TL_n -> TL_m by adding through strands on the right.
template <class Ctx, class S = typename Ctx::Scalar>
TLElement<S> embed(const Ctx&, const TLElement<S>& x, int m) {
  if (m < x.n) throw std::invalid_argument("embed target too small");
  if (m == x.n) return x;
  int n = x.n;
  TLElement<S> r;
  r.n = static_cast<uint8_t>(m);
  r.shading = x.shading;
  for (const auto& [d, c] : x.terms) {
    TLDiagram out = TLDiagram::blank(m, d.shading);
    auto relabel = [&](int p) { return p < n ? p : p + 2 * (m - n); };
    for (int p = 0; p < 2 * n; ++p) out.pair[relabel(p)] = static_cast<uint8_t>(relabel(d.pair[p]));
    for (int k = n; k < m; ++k) out.link(k, 2 * m - 1 - k);
    r.terms.emplace(out, c);
  }
  return r;
}

template <class Ctx, class S = typename Ctx::Scalar>
bool equal(const Ctx& ctx, const TLElement<S>& x, const TLElement<S>& y) {
  TLElement<S> d = sub(ctx, x, y);
  if constexpr (std::is_same_v<S, Exact>) {
    return d.terms.empty();
  } else {
    for (const auto& [dg, c] : d.terms)
      if (!ctx.is_zero(c)) return false;
    return true;
  }
}

}  // namespace planar
