#pragma once

#include <complex>
#include <string>

#include "planar/laurent.hpp"

namespace planar {

// Exact scalar: ratio of Laurent polynomials in q over Q(zeta_N). The
// denominator is kept as a monic polynomial with nonzero constant term (q is
// a unit, so any power of q is absorbed into the numerator). Values are kept
// gcd-reduced except along the += fast path on equal denominators, which the
// TL multiplication hot loop relies on; zero is always structurally the empty
// numerator.
class Exact {
 public:
  Exact() = default;
  Exact(long v) : num_(0, Cyclo(v)) {}  // NOLINT: implicit by design
  explicit Exact(Cyclo c) : num_(0, std::move(c)) {}
  explicit Exact(Laurent num) : num_(std::move(num)) {}
  Exact(Laurent num, Laurent den, bool reduce_now = true);

  static Exact from_rational(const mpq_class& r) { return Exact(Cyclo(r)); }
  static Exact monomial(int exp, Cyclo c = Cyclo(1)) { return Exact(Laurent(exp, std::move(c))); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  Exact operator+(const Exact& o) const;
  Exact operator-(const Exact& o) const;
  Exact operator*(const Exact& o) const;
  Exact operator/(const Exact& o) const;
  Exact operator-() const;
  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Exact& o) { return *this = *this * o; }
  Exact& operator/=(const Exact& o) { return *this = *this / o; }

  bool operator==(const Exact& o) const;
  bool operator!=(const Exact& o) const { return !(*this == o); }
  int cmp(const Exact& o) const;  // canonical order on reduced forms
  bool operator<(const Exact& o) const { return cmp(o) < 0; }

  Exact conj() const;
  Exact inverse() const;
  Exact pow(long e) const;

  void reduce();
  std::complex<double> eval(double q) const;
  std::string str() const;

 private:
  void normalize_den();

  Laurent num_;
  Laurent den_ = Laurent::one();
  bool reduced_ = true;  // false only along the equal-denominator += fast path
};

}  // namespace planar
