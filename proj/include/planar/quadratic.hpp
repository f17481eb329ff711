#pragma once

#include <functional>
#include <random>

#include "planar/annular.hpp"
#include "planar/jones_wenzl.hpp"

namespace planar {

// Trace tables a[r][s][t] = Tr(RST) and b[r][s][t] = Tr(Rv Sv Tv) over a label
// set with common weight n (v marking the Fourier-dual generators).
template <class S>
struct StructureConstants {
  std::vector<LowestWeightLabel> labels;
  std::vector<S> a, b;

  int size() const { return static_cast<int>(labels.size()); }
  int n() const { return labels.at(0).n; }

  static StructureConstants zeros(std::vector<LowestWeightLabel> ls, const S& z) {
    StructureConstants sc;
    sc.labels = std::move(ls);
    size_t m = sc.labels.size();
    sc.a.assign(m * m * m, z);
    sc.b.assign(m * m * m, z);
    return sc;
  }

  size_t idx(int r, int s, int t) const {
    size_t m = labels.size();
    return (static_cast<size_t>(r) * m + static_cast<size_t>(s)) * m + static_cast<size_t>(t);
  }
  const S& aval(int r, int s, int t) const { return a[idx(r, s, t)]; }
  const S& bval(int r, int s, int t) const { return b[idx(r, s, t)]; }
  S& aref(int r, int s, int t) { return a[idx(r, s, t)]; }
  S& bref(int r, int s, int t) { return b[idx(r, s, t)]; }
};

// Validates cyclicity, the star symmetry conj(a[r][s][t]) = a[r][t][s], and,
// for odd n, b[r][s][t] = (sigma_r sigma_s sigma_t)^n a[r][t][s].
template <class Ctx, class S = typename Ctx::Scalar>
void validate_structure_constants(const Ctx& ctx, const StructureConstants<S>& sc) {
  int m = sc.size(), n = sc.n();
  for (const auto& l : sc.labels)
    if (l.n != n) throw std::invalid_argument("structure constants: mixed weights");
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        if (!ctx.equal(sc.aval(r, s, t), sc.aval(s, t, r)) ||
            !ctx.equal(sc.bval(r, s, t), sc.bval(s, t, r)))
          throw std::invalid_argument("structure constants: cyclicity violated");
        if (!ctx.equal(ctx.conj(sc.aval(r, s, t)), sc.aval(r, t, s)) ||
            !ctx.equal(ctx.conj(sc.bval(r, s, t)), sc.bval(r, t, s)))
          throw std::invalid_argument("structure constants: star symmetry violated");
        if (n % 2 == 1) {
          RootOfUnity f = (sc.labels[r].sigma * sc.labels[s].sigma * sc.labels[t].sigma).pow(n);
          if (!ctx.equal(sc.bval(r, s, t), ctx.root(f) * sc.aval(r, t, s)))
            throw std::invalid_argument("structure constants: odd-n dual trace relation violated");
        }
      }
}

enum class TangleKind { circ, star };

// S o T or S * T rotated by rho^j; s, t index the label set.
struct QuadraticRef {
  TangleKind kind = TangleKind::circ;
  int s = 0;
  int t = 0;
  int j = 0;
};

inline void check_rotation_range(const QuadraticRef& ref, int n) {
  if (ref.kind == TangleKind::circ) {
    if (ref.j < 0 || 2 * ref.j > n) throw std::invalid_argument("circ rotation needs 0 <= 2j <= n");
  } else {
    if (ref.j < 0 || 2 * ref.j >= n) throw std::invalid_argument("star rotation needs 0 <= 2j < n");
  }
}

// Projection onto the annular consequence space, expressed per label in the
// dual basis. Only two slots per label are hit:
//   circ: sigma_r^n a[r][s][t] on slot n+1 and sigma_t^-1 sigma_s b[r][s][t] on slot 0;
//   star: sigma_s sigma_t { sigma_r^n b[r][s][t] on n+2, sigma_t^-1 sigma_s a[r][s][t] on 1 }.
// A rotation by rho^j shifts every slot by 2j.
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<AnnularVector<S>> project_annular(const Ctx& ctx, const StructureConstants<S>& sc,
                                              const QuadraticRef& ref) {
  int n = sc.n();
  check_rotation_range(ref, n);
  std::vector<AnnularVector<S>> out;
  const auto& ls = sc.labels[static_cast<size_t>(ref.s)];
  const auto& lt = sc.labels[static_cast<size_t>(ref.t)];
  for (int r = 0; r < sc.size(); ++r) {
    const auto& lr = sc.labels[static_cast<size_t>(r)];
    auto v = AnnularVector<S>::zero(lr, AnnularBasis::dual, ctx.zero());
    S sig_rn = ctx.root(lr.sigma.pow(n));
    S sig_ts = ctx.root(lt.sigma.inverse() * ls.sigma);
    if (ref.kind == TangleKind::circ) {
      v.c[static_cast<size_t>(n + 1)] = sig_rn * sc.aval(r, ref.s, ref.t);
      v.c[0] = sig_ts * sc.bval(r, ref.s, ref.t);
    } else {
      S outer = ctx.root(ls.sigma * lt.sigma);
      v.c[static_cast<size_t>(n + 2)] = outer * sig_rn * sc.bval(r, ref.s, ref.t);
      v.c[1] = outer * sig_ts * sc.aval(r, ref.s, ref.t);
    }
    if (ref.j != 0) v = half_rotation(v, 2 * ref.j);
    out.push_back(std::move(v));
  }
  return out;
}

enum class MasterForm {
  printed,  // the star diagonal terms carry conj(sigma_p) sigma_q and sigma_s conj(sigma_t)
  derived,  // ... carry conj(sigma_q) sigma_p and sigma_t conj(sigma_s)
};

// Closed-form <P_A(S o T), rho^j(P o Q)> / <P_A(S o T), rho^j(P * Q)>.
template <class Ctx, class S = typename Ctx::Scalar>
S master_inner(const Ctx& ctx, const StructureConstants<S>& sc, const QuadraticRef& x,
               const QuadraticRef& y, MasterForm form = MasterForm::derived) {
  if (x.kind != TangleKind::circ || x.j != 0)
    throw std::invalid_argument("master formula wants x = S o T unrotated");
  int n = sc.n();
  check_rotation_range(y, n);
  int j = y.j;
  const auto& lS = sc.labels[static_cast<size_t>(x.s)];
  const auto& lT = sc.labels[static_cast<size_t>(x.t)];
  const auto& lP = sc.labels[static_cast<size_t>(y.s)];
  const auto& lQ = sc.labels[static_cast<size_t>(y.t)];
  S sign_n1 = ctx.from_int((n + 1) % 2 == 0 ? 1 : -1);  // (-1)^(n+1)

  S total = ctx.zero();
  for (int r = 0; r < sc.size(); ++r) {
    const auto& lr = sc.labels[static_cast<size_t>(r)];
    S w = w_poly(ctx, 2 * n + 2, lr.omega);
    S om_j = ctx.root(lr.omega.pow(j));
    S om = ctx.root(lr.omega);
    S om_inv = ctx.root(lr.omega.inverse());
    S ax = ctx.conj(sc.aval(r, x.s, x.t));
    S bx = ctx.conj(sc.bval(r, x.s, x.t));
    S ay = sc.aval(r, y.s, y.t);
    S by = sc.bval(r, y.s, y.t);
    S st = ctx.root(lT.sigma * lS.sigma.inverse());        // sigma_t conj(sigma_s)
    S qp = ctx.root(lQ.sigma.inverse() * lP.sigma);        // conj(sigma_q) sigma_p

    if (y.kind == TangleKind::circ) {
      S aa = ax * ay + st * qp * bx * by;
      S cross = qp * ax * by + st * bx * ay;
      S f1 = om_inv * ctx.qint(2 * j) + ctx.qint(2 * (n - j) + 2);
      S f2 = om_inv * ctx.qint(n + 2 * j + 1) + ctx.qint(n - 2 * j + 1);
      total += om_j * (aa * f1 + sign_n1 * ctx.root(lr.sigma) * cross * f2) / w;
    } else {
      S cross = st * qp * bx * ay + ax * by;
      S diag = (form == MasterForm::printed)
                   ? S(ctx.root(lP.sigma.inverse() * lQ.sigma) * ax * ay +
                       ctx.root(lS.sigma * lT.sigma.inverse()) * bx * by)
                   : S(qp * ax * ay + st * bx * by);
      S f1 = om * ctx.qint(2 * (n - j) + 1) + ctx.qint(2 * j + 1);
      S f2 = om * ctx.qint(n - 2 * j) + ctx.qint(n + 2 * j + 2);
      S inner_sum = ctx.root(lr.sigma.inverse()) * cross * f1 + sign_n1 * diag * f2;
      total += ctx.root(lP.sigma * lQ.sigma) * (ctx.from_int(-1) * om_j) * inner_sum / w;
    }
  }
  return total;
}

namespace detail {

// Gaussian elimination; exact scalars pivot on the first nonzero entry,
// numeric ones on the largest magnitude.
template <class Ctx, class S = typename Ctx::Scalar>
Matrix<S> invert_matrix(const Ctx& ctx, Matrix<S> m) {
  int d = static_cast<int>(m.rows());
  Matrix<S> inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv(i, j) = i == j ? ctx.one() : ctx.zero();
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    if constexpr (std::is_same_v<S, Exact>) {
      for (int r = col; r < d; ++r)
        if (!m(r, col).is_zero()) {
          piv = r;
          break;
        }
    } else {
      double best = 0;
      for (int r = col; r < d; ++r)
        if (std::abs(m(r, col)) > best) {
          best = std::abs(m(r, col));
          piv = r;
        }
    }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    S scale = m(col, col);
    for (int c = 0; c < d; ++c) {
      m(col, c) = m(col, c) / scale;
      inv(col, c) = inv(col, c) / scale;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      S f = m(r, col);
      if (ctx.is_zero(f)) continue;
      for (int c = 0; c < d; ++c) {
        m(r, c) = m(r, c) - f * m(col, c);
        inv(r, c) = inv(r, c) - f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace detail

// Inverse Gram matrices per label, cached because the oracle is called in
// sweeps over many (x, y) pairs with a fixed label set.
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<Matrix<S>> gram_inverses(const Ctx& ctx, const std::vector<LowestWeightLabel>& labels) {
  std::vector<Matrix<S>> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(detail::invert_matrix(ctx, gram_matrix(ctx, l)));
  return out;
}

// Independent evaluation: expand both sides in the dual basis via
// project_annular (+ index shifts) and contract with the inverse Gram matrix,
// using <dual_i, dual_j> = (G^-1)_ij. Shares no code with master_inner's
// closed form beyond the projection coefficients themselves.
template <class Ctx, class S = typename Ctx::Scalar>
S oracle_inner(const Ctx& ctx, const StructureConstants<S>& sc, const QuadraticRef& x,
               const QuadraticRef& y, const std::vector<Matrix<S>>* ginvs = nullptr) {
  auto xs = project_annular(ctx, sc, x);
  auto ys = project_annular(ctx, sc, y);
  std::vector<Matrix<S>> local;
  if (!ginvs) {
    local = gram_inverses(ctx, sc.labels);
    ginvs = &local;
  }
  S total = ctx.zero();
  for (int r = 0; r < sc.size(); ++r) {
    const Matrix<S>& ginv = (*ginvs)[static_cast<size_t>(r)];
    int d = sc.labels[static_cast<size_t>(r)].space_dim();
    for (int i = 0; i < d; ++i) {
      if (ctx.is_zero(xs[static_cast<size_t>(r)].c[static_cast<size_t>(i)])) continue;
      for (int k = 0; k < d; ++k) {
        if (ctx.is_zero(ys[static_cast<size_t>(r)].c[static_cast<size_t>(k)])) continue;
        total += ctx.conj(xs[static_cast<size_t>(r)].c[static_cast<size_t>(i)]) *
                 ys[static_cast<size_t>(r)].c[static_cast<size_t>(k)] * ginv(i, k);
      }
    }
  }
  return total;
}

// <P_T(x), P_T(y)>: both TL projections are multiples of the (n+1)-strand
// Jones-Wenzl idempotent (rotated), so everything reduces to jw_rot_inner.
// Zero unless x.s == x.t and y.s == y.t.
template <class Ctx, class S = typename Ctx::Scalar>
S tl_inner(const Ctx& ctx, const std::vector<LowestWeightLabel>& labels, const QuadraticRef& x,
           const QuadraticRef& y) {
  if (x.s != x.t || y.s != y.t) return ctx.zero();
  int n = labels.at(0).n;
  int m = n + 1;
  S norm = ctx.qint(n + 2) * ctx.qint(n + 2);
  int ix = 2 * x.j + (x.kind == TangleKind::star ? 1 : 0);
  int iy = 2 * y.j + (y.kind == TangleKind::star ? 1 : 0);
  S phase = ctx.one();
  if (x.kind == TangleKind::star)
    phase = phase * ctx.root(labels[static_cast<size_t>(x.s)].omega.inverse());
  if (y.kind == TangleKind::star)
    phase = phase * ctx.root(labels[static_cast<size_t>(y.s)].omega);
  int i = iy - ix;
  if (i < 0) return ctx.conj(tl_inner(ctx, labels, y, x));
  if (i > m) throw std::invalid_argument("tl_inner: rotation out of closed-form range");
  return phase * jw_rot_inner(ctx, m, i) / norm;
}

// Deterministic random tables. generic: cyclicity + star only (b free for even
// n, derived from a for odd n). physical_even additionally imposes the parity
// relation a[r][p][q] = (omega_r omega_p omega_q)^(n/2) a[r][q][p] that holds
// in a planar algebra when n is even; it forces entries real or imaginary.
enum class TableMode { generic, physical_even };

inline StructureConstants<std::complex<double>> random_structure_constants(
    const NumericCtx& ctx, const std::vector<LowestWeightLabel>& labels, std::mt19937_64& rng,
    TableMode mode = TableMode::generic) {
  int n = labels.at(0).n;
  int m = static_cast<int>(labels.size());
  auto sc = StructureConstants<std::complex<double>>::zeros(labels, ctx.zero());
  auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };

  auto fill = [&](std::vector<std::complex<double>>& tab) {
    std::vector<bool> done(tab.size(), false);
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          size_t id = sc.idx(r, s, t);
          if (done[id]) continue;
          size_t orbit[3] = {sc.idx(r, s, t), sc.idx(s, t, r), sc.idx(t, r, s)};
          size_t rev[3] = {sc.idx(r, t, s), sc.idx(t, s, r), sc.idx(s, r, t)};
          bool self_conjugate = false;
          for (size_t o : orbit)
            for (size_t v : rev)
              if (o == v) self_conjugate = true;
          std::complex<double> val{uniform(), self_conjugate ? 0.0 : uniform()};
          if (mode == TableMode::physical_even) {
            RootOfUnity parity =
                (labels[static_cast<size_t>(r)].omega * labels[static_cast<size_t>(s)].omega *
                 labels[static_cast<size_t>(t)].omega)
                    .pow(n / 2);
            bool plus = parity.is_one();
            if (plus)
              val = {val.real(), 0.0};  // real entry
            else if (self_conjugate)
              val = {0.0, 0.0};  // both real and imaginary
            else
              val = {0.0, val.imag()};  // imaginary entry
          }
          for (size_t o : orbit) {
            tab[o] = val;
            done[o] = true;
          }
          for (size_t v : rev) {
            tab[v] = std::conj(val);
            done[v] = true;
          }
        }
  };

  fill(sc.a);
  if (n % 2 == 1) {
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          RootOfUnity f = (labels[static_cast<size_t>(r)].sigma *
                           labels[static_cast<size_t>(s)].sigma *
                           labels[static_cast<size_t>(t)].sigma)
                              .pow(n);
          sc.bref(r, s, t) = ctx.root(f) * sc.aval(r, t, s);
        }
  } else {
    fill(sc.b);
  }
  validate_structure_constants(ctx, sc);
  return sc;
}

// Consistency identity for even n = 2k:
//   <S o T, rho^k(P o Q)> = omega_P^e omega_Q^k conj(<T o S, P * Q>)
// with both sides assembled from the annular part plus the TL part. Returns
// the residual for exponent e. The element-level identity
// rho^k(P o Q)* = omega_P^(k-1) omega_Q^k P * Q conjugates into the
// inner-product factor with e = k+1; the suite probes both exponents.
inline double nice_check_residual(const NumericCtx& ctx,
                                  const StructureConstants<std::complex<double>>& sc, int s, int t,
                                  int p, int q, long e, MasterForm form = MasterForm::derived) {
  int n = sc.n();
  if (n % 2 != 0) throw std::invalid_argument("consistency check needs even n");
  int k = n / 2;
  QuadraticRef xst{TangleKind::circ, s, t, 0};
  QuadraticRef ypq{TangleKind::circ, p, q, k};
  auto lhs = master_inner(ctx, sc, xst, ypq, form) + tl_inner(ctx, sc.labels, xst, ypq);
  QuadraticRef xts{TangleKind::circ, t, s, 0};
  QuadraticRef ystar{TangleKind::star, p, q, 0};
  auto rhs_inner = master_inner(ctx, sc, xts, ystar, form) + tl_inner(ctx, sc.labels, xts, ystar);
  auto phase = ctx.root(sc.labels[static_cast<size_t>(p)].omega.pow(e) *
                        sc.labels[static_cast<size_t>(q)].omega.pow(k));
  return std::abs(lhs - phase * std::conj(rhs_inner));
}

}  // namespace planar
