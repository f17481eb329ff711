#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planar/json_io.hpp"
#include "planar/scalar.hpp"

using namespace planar;

namespace {

// deterministic small random exact scalar over the given field
Exact random_exact(std::mt19937_64& rng, const ExactCtx& ctx) {
  Exact v = ctx.zero();
  for (int t = 0; t < 3; ++t) {
    long e = static_cast<long>(rng() % 7) - 3;
    long num = static_cast<long>(rng() % 9) - 4;
    long root = ctx.field ? static_cast<long>(rng() % ctx.field->N()) : 0;
    Exact c = ctx.field ? Exact(Cyclo::zeta(ctx.field, root)) : ctx.one();
    v += c * ctx.from_int(num) * ctx.qpow(e);
  }
  return v;
}

}  // namespace

TEST_CASE("quantum integers, exact") {
  ExactCtx ctx;
  CHECK(ctx.qint(0).is_zero());
  CHECK(ctx.qint(2) == ctx.delta());
  CHECK(ctx.qint(1) == ctx.one());
  CHECK(ctx.qint(-3) == -ctx.qint(3));
  // [r+1] = delta [r] - [r-1]
  for (long r = -30; r <= 30; ++r) {
    CHECK(ctx.qint(r + 1) == ctx.delta() * ctx.qint(r) - ctx.qint(r - 1));
  }
}

TEST_CASE("quantum integers, numeric") {
  NumericCtx ctx(1.3);
  CHECK(ctx.is_zero(ctx.qint(0)));
  CHECK(ctx.equal(ctx.qint(2), ctx.delta()));
  for (long r = 1; r <= 12; ++r) {
    CHECK(ctx.equal(ctx.qint(r + 1), ctx.delta() * ctx.qint(r) - ctx.qint(r - 1)));
  }
  CHECK_THROWS_AS(NumericCtx(1.0).qint(2), std::domain_error);
}

TEST_CASE("quantum binomials") {
  ExactCtx ctx;
  CHECK(qbinom(ctx, 5, 0) == ctx.one());
  CHECK(qbinom(ctx, 2, 1) == ctx.qint(2));
  // [6][5][4]/([3][2][1]) via an independent factorial-product evaluation
  Exact prod = ctx.qint(6) * ctx.qint(5) * ctx.qint(4) / (ctx.qint(3) * ctx.qint(2) * ctx.qint(1));
  CHECK(qbinom(ctx, 6, 3) == prod);
  CHECK(qbinom(ctx, 6, 3).is_polynomial());
  CHECK_THROWS_AS(qbinom(ctx, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(qbinom(ctx, 4, -1), std::invalid_argument);
}

TEST_CASE("W polynomial") {
  ExactCtx ctx(12);
  RootOfUnity one(0, 1);
  CHECK(w_poly(ctx, 0, one).is_zero());

  // W(2n+2, -1) = q^(2n+2) + q^-(2n+2) + 2 for n = 2
  RootOfUnity minus_one(1, 2);
  Exact expect = ctx.qpow(6) + ctx.qpow(-6) + ctx.from_int(2);
  CHECK(w_poly(ctx, 6, minus_one) == expect);

  // numeric value matches a separate complex evaluation
  NumericCtx nctx(1.2);
  RootOfUnity quarter(1, 4);  // i
  auto w = w_poly(nctx, 10, quarter);
  std::complex<double> direct = std::pow(1.2, 10) + std::pow(1.2, -10) -
                                std::complex<double>(0, 1) - std::complex<double>(0, -1);
  CHECK(std::abs(w - direct) < 1e-12);

  // positivity of W on the unit circle for q > 1, k >= 1
  for (double q : {1.05, 1.3, 2.0}) {
    NumericCtx c(q);
    for (int k = 1; k <= 8; ++k) {
      for (int a = 0; a < 12; ++a) {
        auto v = w_poly(c, k, RootOfUnity(a, 12));
        CHECK(v.real() > 0.0);
        CHECK(std::abs(v.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("conjugation is an involutive ring automorphism") {
  ExactCtx ctx(8);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    Exact x = random_exact(rng, ctx);
    Exact y = random_exact(rng, ctx);
    CHECK(ctx.conj(ctx.conj(x)) == x);
    CHECK(ctx.conj(x * y) == ctx.conj(x) * ctx.conj(y));
    CHECK(ctx.conj(x + y) == ctx.conj(x) + ctx.conj(y));
  }
  // conj fixes q, inverts roots
  RootOfUnity z(1, 8);
  CHECK(ctx.conj(ctx.root(z)) == ctx.root(z.inverse()));
  CHECK(ctx.conj(ctx.qpow(3)) == ctx.qpow(3));
}

TEST_CASE("exact arithmetic commutes with numeric evaluation") {
  ExactCtx ctx(8);
  std::mt19937_64 rng(7);
  double q0 = 1.37;
  for (int trial = 0; trial < 30; ++trial) {
    Exact x = random_exact(rng, ctx);
    Exact y = random_exact(rng, ctx);
    CHECK(std::abs((x * y).eval(q0) - x.eval(q0) * y.eval(q0)) < 1e-12);
    CHECK(std::abs((x + y).eval(q0) - (x.eval(q0) + y.eval(q0))) < 1e-12);
    if (!y.is_zero()) {
      CHECK(std::abs((x / y).eval(q0) - x.eval(q0) / y.eval(q0)) < 1e-10);
    }
  }
}

TEST_CASE("fraction field basics") {
  ExactCtx ctx;
  Exact a = ctx.qint(5) / ctx.qint(3);
  Exact b = ctx.qint(3) / ctx.qint(5);
  CHECK(a * b == ctx.one());
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / ctx.zero(), std::domain_error);
  // structural zero test after reduction
  Exact c = ctx.qint(4) / ctx.qint(2) - ctx.qint(4) / ctx.qint(2);
  CHECK(c.is_zero());
}

TEST_CASE("scalar json round trip") {
  ExactCtx ctx(12);
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    Exact x = random_exact(rng, ctx);
    if (t % 3 == 0 && !x.is_zero()) x = x / (ctx.qint(3) + ctx.qpow(-2));
    auto j = to_json(ctx, x);
    CHECK(exact_from_json(ctx, j) == x);
    CHECK(j.contains("N"));
    CHECK(j["N"] == 12);
  }
  // polynomial values carry no denominator field
  auto j = to_json(ctx, ctx.qint(5));
  CHECK(!j.contains("den_terms"));
}

TEST_CASE("roots of unity are gcd-reduced and invert by conjugation") {
  RootOfUnity w(4, 12);
  CHECK(w.num == 1);
  CHECK(w.ord == 3);
  CHECK(w.inverse() == RootOfUnity(2, 3));
  CHECK(RootOfUnity::parse("3/6") == RootOfUnity(1, 2));
  CHECK(w.pow(3).is_one());
  ExactCtx ctx(12);
  CHECK(ctx.root(w) * ctx.root(w.inverse()) == ctx.one());
  CHECK(ctx.conj(ctx.root(w)) == ctx.root(w.inverse()));
}
