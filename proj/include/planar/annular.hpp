#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "planar/scalar.hpp"

namespace Eigen {
template <>
struct NumTraits<planar::Exact> {
  typedef planar::Exact Real;
  typedef planar::Exact NonInteger;
  typedef planar::Exact Nested;
  typedef planar::Exact Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return planar::Exact(); }
  static inline Real dummy_precision() { return planar::Exact(); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace planar {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

// Lowest-weight generator data (n, omega, sigma): rotation eigenvalue omega
// with omega^n = 1 and a chosen square root sigma with sigma^(2n) = 1.
struct LowestWeightLabel {
  int n = 0;
  RootOfUnity omega;
  RootOfUnity sigma;
  std::string name;

  LowestWeightLabel() = default;
  LowestWeightLabel(int n_, RootOfUnity omega_, RootOfUnity sigma_, std::string name_ = "R")
      : n(n_), omega(omega_), sigma(sigma_), name(std::move(name_)) {
    if (n < 1) throw std::invalid_argument("label weight must be >= 1");
    if (!(sigma.pow(2) == omega)) throw std::invalid_argument("sigma^2 != omega");
    if (!omega.pow(n).is_one()) throw std::invalid_argument("omega^n != 1");
    if (!sigma.pow(2 * n).is_one()) throw std::invalid_argument("sigma is not a 2n-th root of unity");
  }

  // label with the principal square root of omega
  static LowestWeightLabel principal(int n, RootOfUnity omega, std::string name = "R") {
    return LowestWeightLabel(n, omega, omega.principal_sqrt(), std::move(name));
  }

  int space_dim() const { return 2 * n + 2; }
};

enum class AnnularBasis { primal, dual };

// Coefficient vector over the cup_i (or dual) basis, i in Z/(2n+2).
template <class S>
struct AnnularVector {
  LowestWeightLabel label;
  AnnularBasis basis = AnnularBasis::primal;
  std::vector<S> c;

  static AnnularVector zero(const LowestWeightLabel& l, AnnularBasis b, const S& z) {
    AnnularVector v;
    v.label = l;
    v.basis = b;
    v.c.assign(static_cast<size_t>(l.space_dim()), z);
    return v;
  }
};

// Cyclic index shift by +k (the k-fold half rotation rho^(1/2)).
template <class S>
AnnularVector<S> half_rotation(const AnnularVector<S>& v, int k = 1) {
  AnnularVector<S> r = v;
  int d = static_cast<int>(v.c.size());
  k %= d;
  if (k < 0) k += d;
  for (int i = 0; i < d; ++i) r.c[static_cast<size_t>((i + k) % d)] = v.c[static_cast<size_t>(i)];
  return r;
}

// Gram matrix of the cup_i basis: delta on the diagonal, sigma one step above
// (cyclically), sigma^-1 below, zero elsewhere.
template <class Ctx, class S = typename Ctx::Scalar>
Matrix<S> gram_matrix(const Ctx& ctx, const LowestWeightLabel& l) {
  int d = l.space_dim();
  Matrix<S> g(d, d);
  S z = ctx.zero();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = z;
  S sig = ctx.root(l.sigma);
  S sig_inv = ctx.root(l.sigma.inverse());
  for (int i = 0; i < d; ++i) {
    g(i, i) = ctx.delta();
    g(i, (i + 1) % d) = sig;
    g((i + 1) % d, i) = sig_inv;
  }
  return g;
}

namespace detail {
template <class Ctx, class S = typename Ctx::Scalar>
S minus_sigma_pow(const Ctx& ctx, const LowestWeightLabel& l, long e) {
  // (-sigma)^e; sigma is a 2n-th root so -sigma lives among 4n-th roots
  RootOfUnity ms = l.sigma * RootOfUnity(1, 2);
  return ctx.root(ms.pow(((e % (4L * l.n)) + 4L * l.n) % (4L * l.n)));
}
}  // namespace detail

// Row 0 of the dual basis in cup coordinates:
// dual_0 = (1/W) { [2n+2] cup_0 + ((-s)^(n+1)+(-s)^(-n-1))[n+1] cup_{n+1} + X + X* },
// X = sum_{j=1..n} (-s)^(-j) (omega [j] + [2n+2-j]) cup_j.
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<S> dual_row0(const Ctx& ctx, const LowestWeightLabel& l) {
  int n = l.n, d = l.space_dim();
  S w = w_poly(ctx, 2 * n + 2, l.omega);
  if (ctx.is_zero(w)) throw std::domain_error("degenerate parameters: W(2n+2, omega) = 0");
  std::vector<S> row(static_cast<size_t>(d), ctx.zero());
  S om = ctx.root(l.omega);
  S om_inv = ctx.root(l.omega.inverse());
  row[0] = ctx.qint(2 * n + 2) / w;
  row[static_cast<size_t>(n + 1)] =
      (detail::minus_sigma_pow(ctx, l, n + 1) + detail::minus_sigma_pow(ctx, l, -(n + 1))) *
      ctx.qint(n + 1) / w;
  for (int j = 1; j <= n; ++j) {
    S base = om * ctx.qint(j) + ctx.qint(2 * n + 2 - j);
    row[static_cast<size_t>(j)] = detail::minus_sigma_pow(ctx, l, -j) * base / w;
    // X*: conjugated coefficient on cup_{-j}
    S base_c = om_inv * ctx.qint(j) + ctx.qint(2 * n + 2 - j);
    row[static_cast<size_t>(d - j)] = detail::minus_sigma_pow(ctx, l, j) * base_c / w;
  }
  return row;
}

// The same row from the single-sum closed form (terms indexed i = -n..n with
// coefficient (-s)^(n+i-1)([n+i+1] + omega [n-i+1]) on cup_{n-i+1}).
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<S> dual_row0_direct(const Ctx& ctx, const LowestWeightLabel& l) {
  int n = l.n, d = l.space_dim();
  S w = w_poly(ctx, 2 * n + 2, l.omega);
  std::vector<S> row(static_cast<size_t>(d), ctx.zero());
  S om = ctx.root(l.omega);
  row[0] = ctx.qint(2 * n + 2) / w;
  for (int i = -n; i <= n; ++i) {
    int idx = ((n - i + 1) % d + d) % d;
    S coeff = detail::minus_sigma_pow(ctx, l, n + i - 1) *
              (ctx.qint(n + i + 1) + om * ctx.qint(n - i + 1)) / w;
    row[static_cast<size_t>(idx)] += coeff;
  }
  return row;
}

// Row n+1 from its own closed form:
// dual_{n+1} = (1/W) { [2n+2] cup_{n+1} + ((-s)^(n+1)+(-s)^(-n-1))[n+1] cup_0 + Y + Y* },
// Y = sum_{j=1..n} (-s)^(n-j-1) (omega [n+j+1] + [n-j+1]) cup_j.
template <class Ctx, class S = typename Ctx::Scalar>
std::vector<S> dual_row_np1(const Ctx& ctx, const LowestWeightLabel& l) {
  int n = l.n, d = l.space_dim();
  S w = w_poly(ctx, 2 * n + 2, l.omega);
  std::vector<S> row(static_cast<size_t>(d), ctx.zero());
  S om = ctx.root(l.omega);
  S om_inv = ctx.root(l.omega.inverse());
  row[static_cast<size_t>(n + 1)] = ctx.qint(2 * n + 2) / w;
  row[0] = (detail::minus_sigma_pow(ctx, l, n + 1) + detail::minus_sigma_pow(ctx, l, -(n + 1))) *
           ctx.qint(n + 1) / w;
  for (int j = 1; j <= n; ++j) {
    S base = om * ctx.qint(n + j + 1) + ctx.qint(n - j + 1);
    row[static_cast<size_t>(j)] += detail::minus_sigma_pow(ctx, l, n - j - 1) * base / w;
    S base_c = om_inv * ctx.qint(n + j + 1) + ctx.qint(n - j + 1);
    row[static_cast<size_t>(d - j)] += detail::minus_sigma_pow(ctx, l, -(n - j - 1)) * base_c / w;
  }
  return row;
}

// Full dual-coefficient matrix: row i holds dual_i in cup coordinates; rows
// beyond 0 are cyclic shifts (the half rotation is unitary, so duality is
// shift-equivariant; shifting sidesteps the sigma-exponent bookkeeping).
template <class Ctx, class S = typename Ctx::Scalar>
Matrix<S> dual_coeffs(const Ctx& ctx, const LowestWeightLabel& l) {
  int d = l.space_dim();
  std::vector<S> row0 = dual_row0(ctx, l);
  Matrix<S> m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m(i, j) = row0[static_cast<size_t>(((j - i) % d + d) % d)];
    }
  }
  return m;
}

// gram . dual_coeffs^T, which duality says is the identity.
template <class Ctx, class S = typename Ctx::Scalar>
Matrix<S> duality_product(const Ctx& ctx, const LowestWeightLabel& l) {
  Matrix<S> g = gram_matrix(ctx, l);
  Matrix<S> m = dual_coeffs(ctx, l);
  int d = l.space_dim();
  Matrix<S> p(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      // G row i has three nonzero entries: i-1, i, i+1 (cyclically)
      S acc = ctx.zero();
      for (int k : {(i + d - 1) % d, i, (i + 1) % d}) acc += g(i, k) * m(j, k);
      p(i, j) = acc;
    }
  }
  return p;
}

template <class Ctx, class S = typename Ctx::Scalar>
bool duality_holds(const Ctx& ctx, const LowestWeightLabel& l) {
  Matrix<S> p = duality_product(ctx, l);
  int d = l.space_dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      S want = i == j ? ctx.one() : ctx.zero();
      if (!ctx.equal(p(i, j), want)) return false;
    }
  return true;
}

// All (omega, sigma) pairs for weight n: omega any n-th root, sigma either
// square root (both are automatically 2n-th roots).
inline std::vector<LowestWeightLabel> all_labels(int n) {
  std::vector<LowestWeightLabel> out;
  for (int a = 0; a < n; ++a) {
    RootOfUnity omega(a, n);
    RootOfUnity s0 = omega.principal_sqrt();
    out.emplace_back(n, omega, s0, "R" + std::to_string(a) + "+");
    out.emplace_back(n, omega, s0 * RootOfUnity(1, 2), "R" + std::to_string(a) + "-");
  }
  return out;
}

// Session cyclotomic order housing every omega (n-th roots), sigma and -sigma
// (4n-th roots), over 2n+2 cup indices.
inline unsigned annular_field_order(int n) {
  return static_cast<unsigned>(std::lcm(4L * n, 2L * n + 2));
}

}  // namespace planar
