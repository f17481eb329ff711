#pragma once

#include <optional>
#include <random>

#include "planar/quadratic.hpp"

namespace planar {

// Multiplication data of the 3-dimensional quotient algebra span{S, T, p_n}:
//   S^2 = x S + u T + p_n/[n+1],  T^2 = v S + y T + p_n/[n+1],  ST = u S + v T
// with x = Tr(S^3), y = Tr(T^3), u = Tr(S^2 T), v = Tr(S T^2), all real.
struct Mult2Constants {
  int n = 0;
  double x = 0, y = 0, u = 0, v = 0;
};

// u^2 + v^2 - (x v + y u + 1/[n+1]); zero iff S^2 T associates both ways.
inline double associativity_residual(const Mult2Constants& c, double q) {
  double qn1 = detail::qi(q, c.n + 1);
  return c.u * c.u + c.v * c.v - (c.x * c.v + c.y * c.u + 1.0 / qn1);
}

// Model-algebra oracle: three orthogonal idempotents with positive rational
// trace weights summing to [n+1]; S, T are trace-orthonormalized against p_n.
// Every term of the constraint is rational in the unnormalized data (the
// square roots cancel in pairs), so the residual is checked exactly:
//   (T_uuv^2 - T_uuu T_uvv)/(T_uu^2 T_vv) + (T_uvv^2 - T_vvv T_uuv)/(T_uu T_vv^2) = 1/[n+1].
inline Exact mult2_model_residual_exact(int n, std::mt19937_64& rng) {
  ExactCtx ctx;
  auto rat = [&rng](long lo, long hi) {
    long num = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    long den = 1 + static_cast<long>(rng() % 7);
    mpq_class v(num, den);
    v.canonicalize();
    return v;
  };
  // weights w_i = c_i [n+1], c_i > 0 rational with sum 1
  mpq_class c1 = rat(1, 9), c2 = rat(1, 9), c3 = rat(1, 9);
  mpq_class tot = c1 + c2 + c3;
  c1 /= tot;
  c2 /= tot;
  c3 /= tot;

  // U rational, weighted-orthogonal to 1; V orthogonal to both 1 and U
  mpq_class s1, s2, s3;
  do {
    s1 = rat(-6, 6);
    s2 = rat(-6, 6);
  } while (s1 == s2);
  s3 = -(s1 * c1 + s2 * c2) / c3;
  // solve sum v_i c_i = 0, sum v_i s_i c_i = 0 with v3 = 1
  // =>  v1 c1 + v2 c2 = -c3,  v1 s1 c1 + v2 s2 c2 = -s3 c3
  mpq_class det = c1 * c2 * (s2 - s1);
  mpq_class v1 = (-c3 * s2 * c2 + s3 * c3 * c2) / det;
  mpq_class v2 = (-s3 * c3 * c1 + c3 * s1 * c1) / det;
  mpq_class v3 = 1;

  Exact qn1 = ctx.qint(n + 1);
  auto weighted = [&](mpq_class a1, mpq_class a2, mpq_class a3) {
    return Exact::from_rational(a1 * c1 + a2 * c2 + a3 * c3) * qn1;
  };
  Exact t_uu = weighted(s1 * s1, s2 * s2, s3 * s3);
  Exact t_vv = weighted(v1 * v1, v2 * v2, v3 * v3);
  Exact t_uuu = weighted(s1 * s1 * s1, s2 * s2 * s2, s3 * s3 * s3);
  Exact t_vvv = weighted(v1 * v1 * v1, v2 * v2 * v2, v3 * v3 * v3);
  Exact t_uuv = weighted(s1 * s1 * v1, s2 * s2 * v2, s3 * s3 * v3);
  Exact t_uvv = weighted(s1 * v1 * v1, s2 * v2 * v2, s3 * v3 * v3);
  if (t_uu.is_zero() || t_vv.is_zero()) throw std::logic_error("degenerate model draw");

  Exact lhs = (t_uuv * t_uuv - t_uuu * t_uvv) / (t_uu * t_uu * t_vv) +
              (t_uvv * t_uvv - t_vvv * t_uuv) / (t_uu * t_vv * t_vv);
  return lhs - Exact(1) / qn1;
}

// Numeric constants from the same model, for feeding associativity_residual.
inline Mult2Constants mult2_model_constants(int n, double q, std::mt19937_64& rng) {
  auto uniform = [&rng]() {
    return 2.0 * (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 1.0;
  };
  double qn1 = detail::qi(q, n + 1);
  double w[3];
  double tot = 0;
  for (auto& x : w) {
    x = 0.1 + std::abs(uniform());
    tot += x;
  }
  for (auto& x : w) x *= qn1 / tot;
  double s[3], v[3];
  for (auto& x : s) x = uniform();
  // orthogonalize s against 1, then v against 1 and s, in the weighted form
  double s_dot_1 = s[0] * w[0] + s[1] * w[1] + s[2] * w[2];
  double one_norm = w[0] + w[1] + w[2];
  for (int i = 0; i < 3; ++i) s[i] -= s_dot_1 / one_norm;
  double s_norm = std::sqrt(s[0] * s[0] * w[0] + s[1] * s[1] * w[1] + s[2] * s[2] * w[2]);
  for (auto& x : s) x /= s_norm;
  for (auto& x : v) x = uniform();
  double v_dot_1 = v[0] * w[0] + v[1] * w[1] + v[2] * w[2];
  for (int i = 0; i < 3; ++i) v[i] -= v_dot_1 / one_norm;
  double v_dot_s = v[0] * s[0] * w[0] + v[1] * s[1] * w[1] + v[2] * s[2] * w[2];
  for (int i = 0; i < 3; ++i) v[i] -= v_dot_s * s[i];
  double v_norm = std::sqrt(v[0] * v[0] * w[0] + v[1] * v[1] * w[1] + v[2] * v[2] * w[2]);
  for (auto& x : v) x /= v_norm;
  Mult2Constants c;
  c.n = n;
  auto tr3 = [&](const double* a, const double* b, const double* d) {
    return a[0] * b[0] * d[0] * w[0] + a[1] * b[1] * d[1] * w[1] + a[2] * b[2] * d[2] * w[2];
  };
  c.x = tr3(s, s, s);
  c.y = tr3(v, v, v);
  c.u = tr3(s, s, v);
  c.v = tr3(s, v, v);
  return c;
}

// Coefficients of a_S^2 and a_T^2 in <P_A(S o T), T o S> computed through the
// master formula with unit-impulse tables under the odd-n relation
// b[r][s][t] = (sigma_r sigma_s sigma_t)^n a[r][t][s].
struct EvenstCoefficients {
  std::complex<double> c_s, c_t;            // with the 1/W factors
  std::complex<double> bracket_s, bracket_t;  // multiplied back by W_S, W_T
  RootOfUnity mu;                            // n-th root with mu^2 = omega_S/omega_T
};

inline EvenstCoefficients evenst_coefficients(int n, double q, RootOfUnity omega_s,
                                              RootOfUnity omega_t, bool flip_sigma_s = false,
                                              bool flip_sigma_t = false) {
  if (n % 2 != 1 || n < 3) throw std::invalid_argument("the *20 obstruction needs odd n >= 3");
  if (!omega_s.pow(n).is_one() || !omega_t.pow(n).is_one())
    throw std::invalid_argument("omegas must be n-th roots of unity");
  NumericCtx ctx(q);
  RootOfUnity ss = omega_s.principal_sqrt(), st = omega_t.principal_sqrt();
  if (flip_sigma_s) ss = ss * RootOfUnity(1, 2);
  if (flip_sigma_t) st = st * RootOfUnity(1, 2);
  LowestWeightLabel ls(n, omega_s, ss, "S");
  LowestWeightLabel lt(n, omega_t, st, "T");
  using C = std::complex<double>;

  auto build = [&](double u, double v) {
    auto sc = StructureConstants<C>::zeros({ls, lt}, ctx.zero());
    // a entries: one T among (r,s,t) -> u, two T's -> v; cyclic + star hold
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          int tees = r + s + t;
          if (tees == 1) sc.aref(r, s, t) = u;
          if (tees == 2) sc.aref(r, s, t) = v;
        }
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          RootOfUnity f = (sc.labels[static_cast<size_t>(r)].sigma *
                           sc.labels[static_cast<size_t>(s)].sigma *
                           sc.labels[static_cast<size_t>(t)].sigma)
                              .pow(n);
          sc.bref(r, s, t) = ctx.root(f) * sc.aval(r, t, s);
        }
    validate_structure_constants(ctx, sc);
    return sc;
  };

  QuadraticRef x{TangleKind::circ, 0, 1, 0};
  QuadraticRef y{TangleKind::circ, 1, 0, 0};
  auto sc_u = build(1.0, 0.0);
  auto sc_v = build(0.0, 1.0);
  EvenstCoefficients out;
  out.c_s = master_inner(ctx, sc_u, x, y);
  out.c_t = master_inner(ctx, sc_v, x, y);
  C w_s = w_poly(ctx, 2 * n + 2, omega_s);
  C w_t = w_poly(ctx, 2 * n + 2, omega_t);
  out.bracket_s = out.c_s * w_s;
  out.bracket_t = out.c_t * w_t;
  // square root of omega_S omega_T^-1 that is itself an n-th root (n odd)
  RootOfUnity ratio = omega_s * omega_t.inverse();
  out.mu = ratio.pow((n + 1) / 2);
  return out;
}

struct ObstructionWitness {
  bool obstructed = true;
  RootOfUnity omega_s, omega_t;
  std::complex<double> failing_value;
  bool inequality_chain = false;  // q^(n+1) >= 4n/3 and [2n+2] > 2[n+1]/sin(pi/2n)
};

// True iff for every pair of n-th roots the rotated bracket coefficients have
// strictly same-signed real parts (their common leading term is
// (mu + mu^-1)[2n+2] = 2cos(2r pi/n)[2n+2], never zero for odd n), which
// forces the cubic traces to vanish and contradicts associativity. Valid in
// the proof's regime delta^2 >= 4.5.
inline ObstructionWitness evenst_obstructed(int n, double q) {
  double delta = q + 1.0 / q;
  if (delta * delta < 4.5 - 1e-12)
    throw std::domain_error("index below 4.5: outside the obstruction's regime");
  ObstructionWitness w;
  for (int a = 0; a < n && w.obstructed; ++a) {
    for (int b = 0; b < n; ++b) {
      auto co = evenst_coefficients(n, q, RootOfUnity(a, n), RootOfUnity(b, n));
      auto mu = co.mu.value();
      auto rs = mu * co.bracket_s;
      auto rt = mu * co.bracket_t;
      bool definite = (rs.real() > 0.0 && rt.real() > 0.0) ||
                      (rs.real() < 0.0 && rt.real() < 0.0);
      if (!definite) {
        w.obstructed = false;
        w.omega_s = RootOfUnity(a, n);
        w.omega_t = RootOfUnity(b, n);
        w.failing_value = rs;
        break;
      }
    }
  }
  double qn1 = detail::qi(q, n + 1), q2n2 = detail::qi(q, 2 * n + 2);
  bool ineq_q = std::pow(q, n + 1) >= 4.0 * n / 3.0 - 1e-12;
  bool ineq_sin = q2n2 > 2.0 * qn1 / std::sin(M_PI / (2.0 * n));
  w.inequality_chain = ineq_q && ineq_sin;
  return w;
}

inline bool chirality_distinct(const RootOfUnity& omega_s, const RootOfUnity& omega_t) {
  return !(omega_s == omega_t);
}

}  // namespace planar
