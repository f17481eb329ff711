#pragma once

#include <optional>
#include <vector>

#include "planar/quadratic.hpp"

namespace planar {

// Solved data for a multiplicity-sequence *10 instance at supertransitivity
// n-1: closed-form traces of cubes, the projection trace ratios r, rcheck
// recovered from them, and the residuals of the two linear constraints.
struct Mult1Instance {
  int n = 0;
  double q = 0;
  RootOfUnity omega;
  RootOfUnity sigma;  // the square root of omega paired with alpha's sign
  double alpha = 0;   // Tr(R^3)
  double beta = 0;    // Tr(Rv^3)
  double r = 0;       // Tr(f)/Tr(e), >= 1
  double rcheck = 0;  // dual-side ratio
  double tr_e = 0, tr_f = 0;
  double resid_first = 0;       // first linear equation in (a^2+b^2, ab)
  double resid_second = 0;      // second linear equation
  double resid_rcheck = 0;      // |rcheck - [n+2]/[n]|
  double resid_requation = 0;   // |r + 1/r - 2 - (2+omega+omega^-1)/([n][n+2])|
  double resid_tr_split = 0;    // |tr_e + tr_f - [n+1]|
};

namespace detail {

// ratio from Tr(R~^3) scaling: x = alpha sqrt([n+1]) = sqrt(r) - 1/sqrt(r)
inline double ratio_from_cube_trace(double alpha, double qn1) {
  double x = alpha * std::sqrt(qn1);
  double s = (x + std::sqrt(x * x + 4.0)) / 2.0;
  return s * s;
}

}  // namespace detail

// Residuals of the two linear equations in (alpha^2 + beta^2, alpha beta).
// sig_half = omega^(1/2) + omega^(-1/2) with the sign matching alpha's.
inline std::pair<double, double> mult1_equation_residuals(int n, double q, RootOfUnity omega,
                                                          double alpha, double beta,
                                                          std::complex<double> sqrt_omega) {
  using C = std::complex<double>;
  double qn = detail::qi(q, n), qn1 = detail::qi(q, n + 1), qn2 = detail::qi(q, n + 2);
  double d3 = qn * qn1 * qn2;
  double t = std::pow(q, n + 1) + std::pow(q, -(n + 1));
  C om = omega.value();
  C shalf = sqrt_omega + 1.0 / sqrt_omega;
  double w = (w_poly(NumericCtx(q), 2 * n + 2, omega)).real();
  double sgn = (n + 1) % 2 == 0 ? 1.0 : -1.0;
  C first = C(w / d3) - sgn * 2.0 * alpha * beta * shalf / t - C(alpha * alpha + beta * beta);
  double delta = q + 1.0 / q;
  double sgn_n = n % 2 == 0 ? 1.0 : -1.0;
  C second = C(w) * (C(qn) + C(qn2) * om) / d3 -
             sgn_n * alpha * beta * sqrt_omega * (detail::qi(q, 2 * n + 2) * delta + 1.0 / om - om) +
             C(alpha * alpha + beta * beta) * (C(qn) * om + C(qn2));
  return {std::abs(first), std::abs(second)};
}

// Closed-form solution of the *10 constraints:
//   beta = (q^(n+1) + q^-(n+1)) / sqrt([n][n+1][n+2])
//   alpha = (omega^(1/2) + omega^(-1/2)) / sqrt([n][n+1][n+2]), alpha >= 0.
inline Mult1Instance mult1_solve(int n, double q, RootOfUnity omega) {
  if (n % 2 != 0)
    throw std::invalid_argument("infeasible: the multiplicity-one theorem forces n even");
  if (!omega.pow(n).is_one()) throw std::invalid_argument("omega must be an n-th root of unity");
  if (q <= 1.0) throw std::domain_error("need q > 1 (delta > 2)");
  if (omega == RootOfUnity(1, 2) && n % 4 != 0)
    throw std::invalid_argument("infeasible: omega = -1 forces n divisible by 4");

  Mult1Instance inst;
  inst.n = n;
  inst.q = q;
  inst.omega = omega;
  double qn = detail::qi(q, n), qn1 = detail::qi(q, n + 1), qn2 = detail::qi(q, n + 2);
  double d3 = qn * qn1 * qn2;
  double t = std::pow(q, n + 1) + std::pow(q, -(n + 1));
  // principal square root, flipped if needed so alpha >= 0
  inst.sigma = omega.principal_sqrt();
  double shalf = 2.0 * std::cos(M_PI * omega.num / omega.ord);
  if (shalf < 0) {
    inst.sigma = inst.sigma * RootOfUnity(1, 2);
    shalf = -shalf;
  }
  std::complex<double> sqrt_omega = inst.sigma.value();
  inst.beta = t / std::sqrt(d3);
  inst.alpha = shalf / std::sqrt(d3);
  inst.r = detail::ratio_from_cube_trace(inst.alpha, qn1);
  inst.rcheck = detail::ratio_from_cube_trace(inst.beta, qn1);
  inst.tr_e = qn1 / (1.0 + inst.r);
  inst.tr_f = inst.r * qn1 / (1.0 + inst.r);
  inst.resid_tr_split = std::abs(inst.tr_e + inst.tr_f - qn1);
  inst.resid_rcheck = std::abs(inst.rcheck - qn2 / qn);
  double om_re = 2.0 * std::cos(2.0 * M_PI * omega.num / omega.ord);
  inst.resid_requation = std::abs(inst.r + 1.0 / inst.r - 2.0 - (2.0 + om_re) / (qn * qn2));
  auto [f, s] = mult1_equation_residuals(n, q, omega, inst.alpha, inst.beta, sqrt_omega);
  inst.resid_first = f;
  inst.resid_second = s;
  return inst;
}

// Exact verification of both linear equations at the closed-form values of
// X = alpha^2 + beta^2 and Y = alpha beta (these live in the scalar ring even
// though alpha, beta individually need square roots).
inline bool mult1_exact_equations(int n, RootOfUnity omega) {
  if (n % 2 != 0) throw std::invalid_argument("need n even");
  ExactCtx ctx(annular_field_order(n));
  RootOfUnity sig = omega.principal_sqrt();
  Exact s = ctx.root(sig) + ctx.root(sig.inverse());
  Exact om = ctx.root(omega);
  Exact om_inv = ctx.root(omega.inverse());
  Exact t = ctx.qpow(n + 1) + ctx.qpow(-(n + 1));
  Exact d3 = ctx.qint(n) * ctx.qint(n + 1) * ctx.qint(n + 2);
  Exact w = w_poly(ctx, 2 * n + 2, omega);
  Exact sgn = ctx.from_int((n + 1) % 2 == 0 ? 1 : -1);
  Exact sgn_n = ctx.from_int(n % 2 == 0 ? 1 : -1);
  Exact x = (t * t + s * s) / d3;
  Exact y = sgn_n * s * t / d3;

  Exact first = w / d3 - sgn * ctx.from_int(2) * y * s / t - x;
  if (!first.is_zero()) return false;
  Exact second = w * (ctx.qint(n) + ctx.qint(n + 2) * om) / d3 -
                 sgn_n * y * ctx.root(sig) * (ctx.qint(2 * n + 2) * ctx.delta() + om_inv - om) +
                 x * (ctx.qint(n) * om + ctx.qint(n + 2));
  return second.is_zero();
}

// All n-th roots omega satisfying r + 1/r = 2 + (2 + omega + omega^-1)/([n][n+2]).
inline std::vector<RootOfUnity> chirality_from_r(int n, double q, double r, double tol = 1e-9) {
  std::vector<RootOfUnity> out;
  double qn = detail::qi(q, n), qn2 = detail::qi(q, n + 2);
  for (int a = 0; a < n; ++a) {
    double om_re = 2.0 * std::cos(2.0 * M_PI * a / n);
    if (std::abs(r + 1.0 / r - 2.0 - (2.0 + om_re) / (qn * qn2)) <= tol)
      out.emplace_back(a, n);
  }
  return out;
}

// The odd-n obstruction: q^(n+1) + q^-(n+1) = +-(omega^(1/2) + omega^(-1/2))
// has no solution with q > 1 (left side > 2, right side <= 2).
inline bool mult1_odd_rejected(int n, double q) {
  if (n % 2 != 1) throw std::invalid_argument("need n odd");
  double t = std::pow(q, n + 1) + std::pow(q, -(n + 1));
  for (int a = 0; a < n; ++a) {
    double shalf = std::abs(2.0 * std::cos(M_PI * a / n));
    if (std::abs(t - shalf) < 1e-12 || std::abs(t + shalf) < 1e-12) return false;
  }
  return t > 2.0;
}

// Decomposition check 1/[n] = <P_A part> + 1/[n+2] realized through the master
// formula with the closed-form alpha, beta as a one-label table.
inline double mult1_decomposition_residual(const Mult1Instance& inst) {
  NumericCtx ctx(inst.q);
  LowestWeightLabel l(inst.n, inst.omega, inst.sigma);
  auto sc = StructureConstants<std::complex<double>>::zeros({l}, ctx.zero());
  sc.aref(0, 0, 0) = inst.alpha;
  sc.bref(0, 0, 0) = inst.beta;
  QuadraticRef rr{TangleKind::circ, 0, 0, 0};
  auto total = master_inner(ctx, sc, rr, rr) + std::complex<double>(1.0, 0.0) / ctx.qint(inst.n + 2);
  return std::abs(total - std::complex<double>(1.0, 0.0) / ctx.qint(inst.n));
}

}  // namespace planar
