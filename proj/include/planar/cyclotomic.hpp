#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace planar {

// Q(zeta_N): rational vectors of length phi(N), reduced modulo the N-th
// cyclotomic polynomial. Field objects are interned per N and live for the
// whole session, so Cyclo values hold a plain pointer.
class CycloField {
 public:
  static const CycloField* get(unsigned n);

  unsigned N() const { return n_; }
  unsigned degree() const { return degree_; }

  // zeta^e reduced mod Phi_N, e taken mod N.
  const std::vector<mpq_class>& zeta_pow(long e) const;

  // Reduces a coefficient vector of arbitrary length in place to length degree().
  void reduce(std::vector<mpq_class>& c) const;

  // Inverse in Q[x]/Phi_N, c must be nonzero and of length degree().
  std::vector<mpq_class> invert(const std::vector<mpq_class>& c) const;

  std::complex<double> embed(const std::vector<mpq_class>& c) const;

 private:
  explicit CycloField(unsigned n);

  unsigned n_ = 1;
  unsigned degree_ = 1;
  std::vector<mpq_class> phi_;                       // monic Phi_N coefficients
  std::vector<std::vector<mpq_class>> xpow_;         // x^(degree+k) mod Phi_N
  std::vector<std::vector<mpq_class>> zpow_;         // zeta^e for e in [0, N)
  std::vector<std::complex<double>> basis_embed_;    // zeta^j numerically
};

// One element of Q(zeta_N); field == nullptr means plain rational (N = 1).
class Cyclo {
 public:
  Cyclo() : c_(1) {}
  explicit Cyclo(const mpq_class& r) : c_{r} {}
  explicit Cyclo(long r) : c_{mpq_class(r)} {}
  Cyclo(const CycloField* f, std::vector<mpq_class> c) : f_(f), c_(std::move(c)) {}

  static Cyclo zeta(const CycloField* f, long e);

  const CycloField* field() const { return f_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  const mpq_class& rational() const { return c_[0]; }  // valid when is_rational()

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inverse() const;
  Cyclo conj() const;
  void add_in_place(const Cyclo& o);
  void sub_in_place(const Cyclo& o);
  void negate();

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  // Total order used for canonical container keys; compares field N then coeffs.
  int cmp(const Cyclo& o) const;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  // Aligns *this and o to a common field; returns that field (may be null).
  static const CycloField* align(Cyclo& a, const Cyclo& b, std::vector<mpq_class>& bc);

  const CycloField* f_ = nullptr;
  std::vector<mpq_class> c_;
};

}  // namespace planar
