#include "planar/exact.hpp"

#include <stdexcept>

namespace planar {

Exact::Exact(Laurent num, Laurent den, bool reduce_now)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize_den();
  reduced_ = den_.is_one();
  if (reduce_now) reduce();
}

void Exact::normalize_den() {
  if (num_.is_zero()) {
    den_ = Laurent::one();
    return;
  }
  int shift = den_.lo();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (!den_.is_one()) {
    const Cyclo& lead = den_.lead();
    if (!(lead == Cyclo(1))) {
      Cyclo inv = lead.inverse();
      den_.scale(inv);
      num_.scale(inv);
    }
  }
}

void Exact::reduce() {
  if (reduced_) return;
  reduced_ = true;
  if (num_.is_zero() || den_.is_one()) {
    normalize_den();
    return;
  }
  Laurent n0 = num_.shifted(-num_.lo());
  Laurent g = Laurent::gcd(n0, den_);
  if (!g.is_one()) {
    Laurent rem;
    Laurent qn = Laurent::divmod(n0, g, &rem);
    if (!rem.is_zero()) throw std::logic_error("gcd does not divide numerator");
    Laurent qd = Laurent::divmod(den_, g, &rem);
    if (!rem.is_zero()) throw std::logic_error("gcd does not divide denominator");
    num_ = qn.shifted(num_.lo());
    den_ = qd;
  }
  normalize_den();
}

Exact Exact::operator+(const Exact& o) const {
  Exact r = *this;
  r += o;
  return r;
}

Exact& Exact::operator+=(const Exact& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_.add_in_place(o.num_);
    if (num_.is_zero()) {
      den_ = Laurent::one();
      reduced_ = true;
    } else if (!den_.is_one()) {
      reduced_ = false;
    }
    return *this;
  }
  Laurent n = num_ * o.den_ + o.num_ * den_;
  Laurent d = den_ * o.den_;
  *this = Exact(std::move(n), std::move(d));
  return *this;
}

Exact& Exact::operator-=(const Exact& o) {
  Exact t = o;
  t.num_.negate();
  return *this += t;
}

Exact Exact::operator-(const Exact& o) const {
  Exact r = *this;
  r -= o;
  return r;
}

Exact Exact::operator-() const {
  Exact r = *this;
  r.num_.negate();
  return r;
}

Exact Exact::operator*(const Exact& o) const {
  // lazy: gcd reduction is deferred to reduce()/cmp()/serialization; equality
  // and zero tests stay valid on unreduced values
  if (is_zero() || o.is_zero()) return {};
  return Exact(num_ * o.num_, den_ * o.den_, /*reduce_now=*/false);
}

Exact Exact::operator/(const Exact& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (is_zero()) return {};
  int shift = o.num_.lo();
  Laurent on = o.num_.shifted(-shift);
  return Exact(num_ * o.den_.shifted(-shift), den_ * on);
}

Exact Exact::inverse() const {
  return Exact(1) / *this;
}

Exact Exact::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Exact acc(1);
  Exact base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Exact::operator==(const Exact& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

int Exact::cmp(const Exact& o) const {
  if (reduced_ && o.reduced_) {
    int c = num_.cmp(o.num_);
    if (c != 0) return c;
    return den_.cmp(o.den_);
  }
  Exact a = *this, b = o;
  a.reduce();
  b.reduce();
  int c = a.num_.cmp(b.num_);
  if (c != 0) return c;
  return a.den_.cmp(b.den_);
}

Exact Exact::conj() const {
  Exact r;
  r.num_ = num_.conj();
  r.den_ = den_.conj();
  r.normalize_den();
  r.reduced_ = reduced_;  // conjugation is a ring automorphism
  return r;
}

std::complex<double> Exact::eval(double q) const {
  return num_.eval(q) / den_.eval(q);
}

std::string Exact::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace planar
