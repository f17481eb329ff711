#include "planar/laurent.hpp"

#include <stdexcept>

namespace planar {

Laurent::Laurent(int exp, Cyclo coeff) {
  if (!coeff.is_zero()) {
    lo_ = exp;
    c_.push_back(std::move(coeff));
  }
}

Laurent Laurent::from_dense(int lo, std::vector<Cyclo> coeffs) {
  Laurent p;
  p.lo_ = lo;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

bool Laurent::is_one() const {
  return c_.size() == 1 && lo_ == 0 && c_[0] == Cyclo(1);
}

const Cyclo& Laurent::at(int exp) const {
  static const Cyclo kZero{};
  int i = exp - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

void Laurent::trim() {
  size_t front = 0;
  while (front < c_.size() && c_[front].is_zero()) ++front;
  if (front == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t back = c_.size();
  while (back > front && c_[back - 1].is_zero()) --back;
  if (front > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(front));
  c_.resize(back - front);
  lo_ += static_cast<int>(front);
}

void Laurent::add_in_place(const Laurent& o) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = o;
    return;
  }
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::max(hi(), o.hi());
  if (nlo < lo_ || nhi > hi()) {
    std::vector<Cyclo> nc(static_cast<size_t>(nhi - nlo + 1));
    for (size_t i = 0; i < c_.size(); ++i) nc[static_cast<size_t>(lo_ - nlo) + i] = std::move(c_[i]);
    c_ = std::move(nc);
    lo_ = nlo;
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[static_cast<size_t>(o.lo_ - lo_) + i].add_in_place(o.c_[i]);
  }
  trim();
}

void Laurent::sub_in_place(const Laurent& o) {
  Laurent t = o;
  t.negate();
  add_in_place(t);
}

void Laurent::negate() {
  for (auto& x : c_) x.negate();
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r.add_in_place(o);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r.sub_in_place(o);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  r.negate();
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  Laurent r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, Cyclo());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j].add_in_place(c_[i] * o.c_[j]);
    }
  }
  r.trim();
  return r;
}

Laurent Laurent::shifted(int d) const {
  Laurent r = *this;
  r.lo_ += d;
  return r;
}

Laurent Laurent::conj() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = x.conj();
  r.trim();
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (lo_ != o.lo_ || c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

int Laurent::cmp(const Laurent& o) const {
  if (lo_ != o.lo_) return lo_ < o.lo_ ? -1 : 1;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int c = c_[i].cmp(o.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

void Laurent::scale(const Cyclo& k) {
  if (k.is_zero()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  for (auto& x : c_) x = x * k;
  trim();
}

Laurent Laurent::divmod(const Laurent& a, const Laurent& b, Laurent* rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.lo() < 0 || b.lo() < 0) throw std::invalid_argument("divmod expects polynomial parts");
  Laurent r = a;
  Laurent q;
  Cyclo binv = b.lead().inverse();
  while (!r.is_zero() && r.hi() >= b.hi()) {
    int shift = r.hi() - b.hi();
    Cyclo f = r.lead() * binv;
    Laurent t = b.shifted(shift);
    t.scale(f);
    r.sub_in_place(t);
    q.add_in_place(Laurent(shift, f));
    if (!r.is_zero() && r.hi() >= b.hi() + shift) throw std::logic_error("divmod did not reduce");
  }
  if (rem) *rem = r;
  return q;
}

namespace {

bool all_rational(const Laurent& p) {
  for (int e = p.lo(); e <= p.hi(); ++e)
    if (!p.at(e).is_zero() && !p.at(e).is_rational()) return false;
  return true;
}

// primitive integer vector: scale by the lcm of denominators, strip content
std::vector<mpz_class> to_primitive(const Laurent& p) {
  std::vector<mpz_class> v(static_cast<size_t>(p.hi() - p.lo() + 1));
  mpz_class den_lcm = 1;
  for (int e = p.lo(); e <= p.hi(); ++e) {
    if (!p.at(e).is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    p.at(e).rational().get_den_mpz_t());
  }
  for (int e = p.lo(); e <= p.hi(); ++e) {
    if (p.at(e).is_zero()) continue;
    mpq_class s = p.at(e).rational() * den_lcm;
    v[static_cast<size_t>(e - p.lo())] = s.get_num();
  }
  mpz_class content = 0;
  for (auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return v;
}

void ztrim(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void strip_content(std::vector<mpz_class>& v) {
  mpz_class content = 0;
  for (auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// primitive polynomial remainder sequence; avoids the rational coefficient
// blowup of straight Euclid over Q
Laurent gcd_rational(const Laurent& pa, const Laurent& pb) {
  std::vector<mpz_class> a = to_primitive(pa), b = to_primitive(pb);
  ztrim(a);
  ztrim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b: a <- lb*a - f*(b shifted) until deg drops
    const mpz_class lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
      mpz_class f = a.back();
      size_t shift = a.size() - b.size();
      for (auto& c : a) c *= lb;
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      ztrim(a);
    }
    strip_content(a);
    std::swap(a, b);
  }
  Laurent g;
  if (a.empty()) return g;
  mpq_class lead(a.back());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) g.add_in_place(Laurent(static_cast<int>(i), Cyclo(mpq_class(a[i]) / lead)));
  }
  return g;
}

}  // namespace

Laurent Laurent::gcd(Laurent a, Laurent b) {
  // q is a unit: normalize both to lo = 0 first
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  a = a.shifted(-a.lo());
  b = b.shifted(-b.lo());
  if (all_rational(a) && all_rational(b)) return gcd_rational(a, b);
  while (!b.is_zero()) {
    Laurent r;
    divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
    b = b.shifted(-b.lo());
    if (!b.is_zero()) {
      Cyclo inv = b.lead().inverse();
      b.scale(inv);
    }
  }
  Cyclo inv = a.lead().inverse();
  a.scale(inv);
  return a;
}

Laurent Laurent::lcm(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Laurent g = gcd(a, b);
  Laurent rem;
  Laurent q = divmod(b.shifted(-b.lo()), g, &rem);
  if (!rem.is_zero()) throw std::logic_error("lcm: gcd does not divide");
  return a.shifted(-a.lo()) * q;
}

std::complex<double> Laurent::eval(double q) const {
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    acc += c_[i].to_complex() * std::pow(q, lo_ + static_cast<int>(i));
  }
  return acc;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].str() + "*q^" + std::to_string(lo_ + static_cast<int>(i));
  }
  return s;
}

const CycloField* Laurent::field() const {
  for (const auto& x : c_)
    if (x.field()) return x.field();
  return nullptr;
}

Laurent qint_poly(long r) {
  if (r == 0) return {};
  bool neg = r < 0;
  long m = neg ? -r : r;
  Laurent p;
  for (long j = 0; j < m; ++j) {
    p.add_in_place(Laurent(static_cast<int>(m - 1 - 2 * j), Cyclo(neg ? -1 : 1)));
  }
  return p;
}

}  // namespace planar
