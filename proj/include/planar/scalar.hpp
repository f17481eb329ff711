#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "planar/exact.hpp"

namespace planar {

// exp(2*pi*i * num/ord), stored reduced with 0 <= num < ord.
struct RootOfUnity {
  long num = 0;
  long ord = 1;

  RootOfUnity() = default;
  RootOfUnity(long a, long m) {
    if (m <= 0) throw std::invalid_argument("root of unity needs positive order");
    a %= m;
    if (a < 0) a += m;
    long g = std::gcd(a, m);
    if (a == 0) {
      num = 0;
      ord = 1;
    } else {
      num = a / g;
      ord = m / g;
    }
  }

  RootOfUnity inverse() const { return {ord - num, ord}; }
  RootOfUnity operator*(const RootOfUnity& o) const {
    long m = std::lcm(ord, o.ord);
    return {num * (m / ord) + o.num * (m / o.ord), m};
  }
  RootOfUnity pow(long e) const {
    long a = ((num * (e % ord)) % ord + ord) % ord;
    return {a, ord};
  }
  // The square root exp(pi*i*num/ord); a 2*ord-th root of unity.
  RootOfUnity principal_sqrt() const { return {num, 2 * ord}; }

  bool is_one() const { return num == 0; }
  bool operator==(const RootOfUnity& o) const { return num == o.num && ord == o.ord; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    return ord != o.ord ? ord < o.ord : num < o.num;
  }

  std::complex<double> value() const {
    double ang = 2.0 * M_PI * num / ord;
    return {std::cos(ang), std::sin(ang)};
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(ord); }

  // Parses "a/m" (angle as fraction of a full turn).
  static RootOfUnity parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("root of unity: want a/m, got " + s);
    long a = std::stol(s.substr(0, slash));
    long m = std::stol(s.substr(slash + 1));
    return {a, m};
  }
};

// Exact backend context. The cyclotomic order N is fixed per session; pure-q
// computations run with N = 1 (plain rational coefficients).
struct ExactCtx {
  using Scalar = Exact;

  const CycloField* field = nullptr;

  ExactCtx() = default;
  explicit ExactCtx(unsigned N) : field(N > 1 ? CycloField::get(N) : nullptr) {}

  Scalar zero() const { return {}; }
  Scalar one() const { return Exact(1); }
  Scalar from_int(long v) const { return Exact(v); }
  Scalar qpow(long k) const { return Exact::monomial(static_cast<int>(k)); }
  Scalar qint(long r) const { return Exact(qint_poly(r)); }
  Scalar delta() const { return qint(2); }

  Scalar root(const RootOfUnity& w) const {
    if (w.is_one()) return one();
    if (!field || field->N() % w.ord != 0)
      throw std::invalid_argument("root of unity " + w.str() + " outside session field");
    return Exact(Cyclo::zeta(field, w.num * static_cast<long>(field->N()) / w.ord));
  }

  Scalar conj(const Scalar& s) const { return s.conj(); }
  bool is_zero(const Scalar& s) const { return s.is_zero(); }
  bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
};

// Numeric backend: complex double at a concrete real q > 1 (q = 1 is the
// degenerate quantum-integer limit and is rejected).
struct NumericCtx {
  using Scalar = std::complex<double>;

  double q = 0.0;
  double tol = 1e-9;

  NumericCtx() = default;
  explicit NumericCtx(double q_, double tol_ = 1e-9) : q(q_), tol(tol_) {}

  static NumericCtx from_delta_sq(double delta_sq, double tol_ = 1e-9) {
    double d = std::sqrt(delta_sq);
    if (d <= 2.0) throw std::domain_error("need delta > 2");
    return NumericCtx((d + std::sqrt(delta_sq - 4.0)) / 2.0, tol_);
  }

  Scalar zero() const { return {0.0, 0.0}; }
  Scalar one() const { return {1.0, 0.0}; }
  Scalar from_int(long v) const { return {static_cast<double>(v), 0.0}; }
  Scalar qpow(long k) const { return {std::pow(q, static_cast<double>(k)), 0.0}; }
  Scalar qint(long r) const {
    if (q == 1.0) throw std::domain_error("quantum integer degenerate at q = 1");
    double num = std::pow(q, static_cast<double>(r)) - std::pow(q, static_cast<double>(-r));
    return {num / (q - 1.0 / q), 0.0};
  }
  Scalar delta() const { return {q + 1.0 / q, 0.0}; }

  Scalar root(const RootOfUnity& w) const { return w.value(); }

  Scalar conj(const Scalar& s) const { return std::conj(s); }
  bool is_zero(const Scalar& s) const { return std::abs(s) <= tol; }
  bool equal(const Scalar& a, const Scalar& b) const { return std::abs(a - b) <= tol; }
};

// [m]! / ([i]! [m-i]!); always polynomial-valued.
template <class Ctx>
typename Ctx::Scalar qbinom(const Ctx& ctx, long m, long i) {
  if (i < 0 || i > m) throw std::invalid_argument("qbinom: need 0 <= i <= m");
  typename Ctx::Scalar num = ctx.one(), den = ctx.one();
  if (i > m - i) i = m - i;
  for (long k = 0; k < i; ++k) {
    num = num * ctx.qint(m - k);
    den = den * ctx.qint(k + 1);
  }
  return num / den;
}

// W_{k,omega}(q) = q^k + q^-k - omega - omega^-1.
template <class Ctx>
typename Ctx::Scalar w_poly(const Ctx& ctx, long k, const RootOfUnity& omega) {
  return ctx.qpow(k) + ctx.qpow(-k) - ctx.root(omega) - ctx.root(omega.inverse());
}

namespace detail {
// real quantum integer at a concrete q, for plain-double formula work
inline double qi(double q, long r) {
  return (std::pow(q, static_cast<double>(r)) - std::pow(q, static_cast<double>(-r))) /
         (q - 1.0 / q);
}
}  // namespace detail

inline std::complex<double> to_complex(const NumericCtx&, const std::complex<double>& s) { return s; }
inline std::complex<double> to_complex(const ExactCtx& ctx, const Exact& s, double q_probe = 1.3) {
  (void)ctx;
  return s.eval(q_probe);
}

}  // namespace planar
