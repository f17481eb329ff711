#pragma once

#include <complex>
#include <string>
#include <vector>

#include "planar/cyclotomic.hpp"

namespace planar {

// Laurent polynomial in q with Q(zeta_N) coefficients, stored densely from
// the lowest exponent. Always kept trimmed (no zero leading/trailing slots,
// empty vector == 0).
class Laurent {
 public:
  Laurent() = default;
  Laurent(int exp, Cyclo coeff);
  static Laurent constant(Cyclo c) { return Laurent(0, std::move(c)); }
  static Laurent one() { return Laurent(0, Cyclo(1)); }
  static Laurent from_dense(int lo, std::vector<Cyclo> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  size_t terms() const { return c_.size(); }
  const Cyclo& at(int exp) const;  // zero outside range

  void add_in_place(const Laurent& o);
  void sub_in_place(const Laurent& o);
  void negate();
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent shifted(int d) const;  // multiply by q^d
  Laurent conj() const;          // conjugate coefficients, q fixed

  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  int cmp(const Laurent& o) const;

  const Cyclo& lead() const { return c_.back(); }
  void scale(const Cyclo& k);

  // Polynomial remainder/quotient treating *this as a poly in q (requires lo >= 0).
  static Laurent divmod(const Laurent& a, const Laurent& b, Laurent* rem);
  static Laurent gcd(Laurent a, Laurent b);  // monic gcd of the polynomial parts
  static Laurent lcm(const Laurent& a, const Laurent& b);

  std::complex<double> eval(double q) const;
  std::string str() const;

  const CycloField* field() const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<Cyclo> c_;
};

// [r] = (q^r - q^-r)/(q - q^-1) as a Laurent polynomial; [-r] = -[r].
Laurent qint_poly(long r);

}  // namespace planar
