#include "planar/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace planar {

namespace {

using Vec = std::vector<mpq_class>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Exact division of integer-coefficient polynomials, used to build Phi_N from
// x^N - 1 = prod_{d | N} Phi_d.
Vec divexact(const Vec& a, const Vec& b) {
  Vec r = a;
  trim(r);
  Vec q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0);
  while (r.size() >= b.size() && !r.empty()) {
    mpq_class c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

Vec cyclotomic_poly(unsigned n, std::map<unsigned, Vec>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Vec p(n + 1);
  p[0] = -1;
  p[n] = 1;  // x^n - 1
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divexact(p, cyclotomic_poly(d, memo));
  }
  memo[n] = p;
  return p;
}

}  // namespace

const CycloField* CycloField::get(unsigned n) {
  static std::map<unsigned, std::unique_ptr<CycloField>> registry;
  auto it = registry.find(n);
  if (it == registry.end()) {
    it = registry.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
  }
  return it->second.get();
}

CycloField::CycloField(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::map<unsigned, Vec> memo;
  phi_ = cyclotomic_poly(n, memo);
  degree_ = static_cast<unsigned>(phi_.size() - 1);

  // x^(degree + k) mod Phi for k = 0 .. degree-2, enough to reduce products.
  xpow_.resize(degree_ > 1 ? degree_ - 1 : 1);
  Vec cur(degree_ + 1);
  for (unsigned k = 0; k < xpow_.size(); ++k) {
    cur.assign(degree_, 0);
    if (k == 0) {
      for (unsigned i = 0; i < degree_; ++i) cur[i] = -phi_[i];  // x^deg = -(lower part)
    } else {
      const Vec& prev = xpow_[k - 1];
      // multiply prev by x, reduce the single overflow term
      for (unsigned i = degree_ - 1; i > 0; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      const mpq_class& top = prev[degree_ - 1];
      if (top != 0) {
        for (unsigned i = 0; i < degree_; ++i) cur[i] += top * xpow_[0][i];
      }
    }
    xpow_[k] = cur;
  }

  // zeta^e built iteratively: multiply by x and fold the single overflow term.
  zpow_.resize(n_);
  Vec z(degree_, 0);
  z[0] = 1;
  zpow_[0] = z;
  for (unsigned e = 1; e < n_; ++e) {
    const Vec& prev = zpow_[e - 1];
    mpq_class top = prev[degree_ - 1];
    for (unsigned i = degree_ - 1; i > 0; --i) z[i] = prev[i - 1];
    z[0] = 0;
    if (top != 0) {
      for (unsigned i = 0; i < degree_; ++i) z[i] -= top * phi_[i];
    }
    zpow_[e] = z;
  }

  basis_embed_.resize(degree_);
  for (unsigned j = 0; j < degree_; ++j) {
    double ang = 2.0 * M_PI * j / n_;
    basis_embed_[j] = {std::cos(ang), std::sin(ang)};
  }
}

const std::vector<mpq_class>& CycloField::zeta_pow(long e) const {
  long m = e % static_cast<long>(n_);
  if (m < 0) m += n_;
  return zpow_[static_cast<size_t>(m)];
}

void CycloField::reduce(std::vector<mpq_class>& c) const {
  if (c.size() <= degree_) {
    c.resize(degree_);
    return;
  }
  for (size_t i = c.size(); i-- > degree_;) {
    if (c[i] == 0) continue;
    const Vec& row = xpow_[i - degree_];
    for (unsigned j = 0; j < degree_; ++j) {
      if (row[j] != 0) c[j] += c[i] * row[j];
    }
    c[i] = 0;
  }
  c.resize(degree_);
}

std::vector<mpq_class> CycloField::invert(const std::vector<mpq_class>& c) const {
  // Extended Euclid in Q[x] for gcd(c, Phi) = 1.
  Vec r0 = phi_, r1 = c;
  trim(r1);
  if (r1.empty()) throw std::domain_error("division by zero in Q(zeta)");
  Vec s0(1, 0), s1(1, 1);  // coefficients of c
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd not constant");
    if (r1.size() == 1) break;
    // r0 = q*r1 + r2
    Vec r2 = r0;
    Vec q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 1, 0);
    while (r2.size() >= r1.size()) {
      mpq_class f = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] += f;
      for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= f * r1[i];
      trim(r2);
      if (r2.empty()) break;
    }
    Vec s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size()), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  mpq_class inv_c = 1 / r1[0];
  Vec out = s1;
  for (auto& x : out) x *= inv_c;
  out.resize(degree_);
  return out;
}

std::complex<double> CycloField::embed(const std::vector<mpq_class>& c) const {
  std::complex<double> z{0.0, 0.0};
  for (unsigned j = 0; j < degree_ && j < c.size(); ++j) {
    if (c[j] != 0) z += c[j].get_d() * basis_embed_[j];
  }
  return z;
}

Cyclo Cyclo::zeta(const CycloField* f, long e) {
  if (f == nullptr || f->N() == 1) return Cyclo(1);
  return Cyclo(f, f->zeta_pow(e));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const CycloField* Cyclo::align(Cyclo& a, const Cyclo& b, std::vector<mpq_class>& bc) {
  const CycloField* f = a.f_ ? a.f_ : b.f_;
  if (a.f_ && b.f_ && a.f_ != b.f_)
    throw std::invalid_argument("mixed cyclotomic fields");
  if (f && a.c_.size() != f->degree()) a.c_.resize(f->degree());
  bc = b.c_;
  if (f && bc.size() != f->degree()) bc.resize(f->degree());
  a.f_ = f;
  return f;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  r.negate();
  return r;
}

void Cyclo::negate() {
  for (auto& x : c_) x = -x;
}

void Cyclo::add_in_place(const Cyclo& o) {
  std::vector<mpq_class> oc;
  align(*this, o, oc);
  for (size_t i = 0; i < oc.size(); ++i)
    if (oc[i] != 0) c_[i] += oc[i];
}

void Cyclo::sub_in_place(const Cyclo& o) {
  std::vector<mpq_class> oc;
  align(*this, o, oc);
  for (size_t i = 0; i < oc.size(); ++i)
    if (oc[i] != 0) c_[i] -= oc[i];
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r = *this;
  r.add_in_place(o);
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r = *this;
  r.sub_in_place(o);
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  Cyclo a = *this;
  std::vector<mpq_class> bc;
  const CycloField* f = align(a, o, bc);
  // sparse-aware convolution; most values in practice are rational multiples
  // of a single root power
  size_t na = a.c_.size(), nb = bc.size();
  std::vector<mpq_class> prod(na + nb - 1);
  for (size_t i = 0; i < na; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < nb; ++j) {
      if (bc[j] == 0) continue;
      prod[i + j] += a.c_[i] * bc[j];
    }
  }
  if (f) f->reduce(prod);
  prod.resize(f ? f->degree() : 1);
  return Cyclo(f, std::move(prod));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (!f_ || is_rational()) {
    Cyclo r = *this;
    r.c_.assign(r.c_.size(), 0);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  return Cyclo(f_, f_->invert(c_));
}

Cyclo Cyclo::conj() const {
  // zeta^j -> zeta^(N-j); rational part fixed
  if (!f_ || is_rational()) return *this;
  std::vector<mpq_class> out(f_->degree());
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& z = f_->zeta_pow(-static_cast<long>(j));
    for (size_t k = 0; k < out.size(); ++k)
      if (z[k] != 0) out[k] += c_[j] * z[k];
  }
  return Cyclo(f_, std::move(out));
}

bool Cyclo::operator==(const Cyclo& o) const {
  Cyclo a = *this;
  std::vector<mpq_class> bc;
  align(a, o, bc);
  for (size_t i = 0; i < bc.size(); ++i)
    if (a.c_[i] != bc[i]) return false;
  return true;
}

int Cyclo::cmp(const Cyclo& o) const {
  Cyclo a = *this;
  std::vector<mpq_class> bc;
  align(a, o, bc);
  for (size_t i = 0; i < bc.size(); ++i) {
    int c = ::cmp(a.c_[i], bc[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::complex<double> Cyclo::to_complex() const {
  if (!f_) return {c_[0].get_d(), 0.0};
  return f_->embed(c_);
}

std::string Cyclo::str() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

}  // namespace planar
