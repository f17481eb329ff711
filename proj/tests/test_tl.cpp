#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "planar/json_io.hpp"
#include "planar/tl.hpp"

using namespace planar;

namespace {

const long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};

template <class Ctx>
TLElement<typename Ctx::Scalar> random_element(const Ctx& ctx, int n, std::mt19937_64& rng,
                                               int nterms = 4) {
  const auto& basis = enumerate_basis(n);
  TLElement<typename Ctx::Scalar> x;
  x.n = static_cast<uint8_t>(n);
  x.shading = Shading::unshaded;
  for (int t = 0; t < nterms; ++t) {
    const TLDiagram& d = basis[rng() % basis.size()];
    long c = static_cast<long>(rng() % 9) - 4;
    long e = static_cast<long>(rng() % 5) - 2;
    add_term(ctx, x, d, typename Ctx::Scalar(ctx.from_int(c) * ctx.qpow(e)));
  }
  return x;
}

}  // namespace

TEST_CASE("basis enumeration counts Catalan numbers") {
  CHECK(enumerate_basis(0).size() == 1);
  CHECK(enumerate_basis(3).size() == 5);
  CHECK(enumerate_basis(6).size() == 132);
  for (int n = 0; n <= 10; ++n) {
    CHECK(enumerate_basis(n).size() == static_cast<size_t>(kCatalan[n]));
  }
  // deterministic lexicographic order and valid non-crossing involutions
  const auto& b5 = enumerate_basis(5);
  for (size_t i = 0; i + 1 < b5.size(); ++i) CHECK(b5[i] < b5[i + 1]);
  for (const auto& d : b5) {
    for (int p = 0; p < 10; ++p) {
      CHECK(d.pair[d.pair[p]] == p);
      CHECK(d.pair[p] != p);
    }
    // no interleaved pairs a < c < b < d
    for (int a = 0; a < 10; ++a) {
      int b = d.pair[a];
      if (b < a) continue;
      for (int c = a + 1; c < b; ++c) CHECK(!(d.pair[c] < a || d.pair[c] > b));
    }
  }
}

TEST_CASE("E_i relations") {
  ExactCtx ctx;
  for (int n : {5, 6}) {
    for (int i = 1; i <= n - 1; ++i) {
      auto ei = e_generator(ctx, i, n);
      CHECK(equal(ctx, multiply(ctx, ei, ei), scale(ctx, ei, ctx.delta())));
      if (i + 1 <= n - 1) {
        auto ej = e_generator(ctx, i + 1, n);
        CHECK(equal(ctx, multiply(ctx, multiply(ctx, ei, ej), ei), ei));
        CHECK(equal(ctx, multiply(ctx, multiply(ctx, ej, ei), ej), ej));
      }
      for (int j = i + 2; j <= n - 1; ++j) {
        auto ej = e_generator(ctx, j, n);
        CHECK(equal(ctx, multiply(ctx, ei, ej), multiply(ctx, ej, ei)));
      }
    }
  }
  CHECK_THROWS_AS(e_generator(ExactCtx{}, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(e_generator(ExactCtx{}, 4, 4), std::invalid_argument);
}

TEST_CASE("multiplication: identity, loop rule, shape errors") {
  ExactCtx ctx;
  std::mt19937_64 rng(11);
  auto id = tl_identity(ctx, 4);
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(ctx, 4, rng);
    CHECK(equal(ctx, multiply(ctx, id, x), x));
    CHECK(equal(ctx, multiply(ctx, x, id), x));
  }
  auto x3 = tl_identity(ctx, 3);
  CHECK_THROWS_AS(multiply(ctx, id, x3), std::invalid_argument);
  auto shaded = tl_identity(ctx, 4, Shading::shaded);
  CHECK_THROWS_AS(multiply(ctx, id, shaded), std::invalid_argument);
}

TEST_CASE("multiplication is associative on random triples") {
  ExactCtx ctx;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto x = random_element(ctx, 4, rng, 3);
    auto y = random_element(ctx, 4, rng, 3);
    auto z = random_element(ctx, 4, rng, 3);
    CHECK(equal(ctx, multiply(ctx, multiply(ctx, x, y), z), multiply(ctx, x, multiply(ctx, y, z))));
  }
}

TEST_CASE("Markov trace") {
  ExactCtx ctx;
  auto id2 = tl_identity(ctx, 2);
  CHECK(trace(ctx, id2) == ctx.delta() * ctx.delta());
  for (int n : {3, 4, 5}) {
    for (int i = 1; i <= n - 1; ++i) {
      auto ei = e_generator(ctx, i, n);
      CHECK(trace(ctx, ei) == ctx.delta().pow(n - 1));
    }
  }
  // trace property Tr(xy) = Tr(yx)
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(ctx, 4, rng);
    auto y = random_element(ctx, 4, rng);
    CHECK(trace(ctx, multiply(ctx, x, y)) == trace(ctx, multiply(ctx, y, x)));
  }
  // Tr(x E_n) = Tr(x) for x in TL_n inside TL_{n+1}
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(ctx, 4, rng);
    auto xe = embed(ctx, x, 5);
    auto en = e_generator(ctx, 4, 5);
    CHECK(trace(ctx, multiply(ctx, xe, en)) == trace(ctx, x));
  }
}

TEST_CASE("adjoint and inner product") {
  ExactCtx ctx;
  std::mt19937_64 rng(17);
  for (int i = 1; i <= 3; ++i) {
    auto ei = e_generator(ctx, i, 4);
    CHECK(equal(ctx, adjoint(ctx, ei), ei));
  }
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(ctx, 4, rng);
    auto y = random_element(ctx, 4, rng);
    CHECK(equal(ctx, adjoint(ctx, adjoint(ctx, x)), x));
    CHECK(equal(ctx, adjoint(ctx, multiply(ctx, x, y)),
                multiply(ctx, adjoint(ctx, y), adjoint(ctx, x))));
    CHECK(inner(ctx, x, y) == inner(ctx, y, x).conj());
    CHECK(inner(ctx, x, y) == trace(ctx, multiply(ctx, adjoint(ctx, x), y)));
  }
  auto id4 = tl_identity(ctx, 4);
  CHECK(inner(ctx, id4, id4) == ctx.delta().pow(4));
}

TEST_CASE("Gram matrix of TL_3 basis is positive definite at q = 1.5") {
  NumericCtx ctx(1.5);
  const auto& basis = enumerate_basis(3);
  Eigen::MatrixXd g(basis.size(), basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      auto x = tl_element(ctx, basis[i], ctx.one());
      auto y = tl_element(ctx, basis[j], ctx.one());
      g(static_cast<long>(i), static_cast<long>(j)) = inner(ctx, x, y).real();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("conditional expectation") {
  ExactCtx ctx;
  for (int n : {2, 3, 4, 5}) {
    auto idn = tl_identity(ctx, n);
    auto e = cond_expectation(ctx, idn);
    CHECK(equal(ctx, e, scale(ctx, tl_identity(ctx, n - 1), ctx.delta())));
  }
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    auto x = random_element(ctx, 4, rng);
    CHECK(trace(ctx, cond_expectation(ctx, x)) == trace(ctx, x));
  }
  TLElement<Exact> zero0;
  zero0.n = 0;
  CHECK_THROWS_AS(cond_expectation(ctx, zero0), std::invalid_argument);
}

TEST_CASE("fourier and rotation") {
  ExactCtx ctx;
  std::mt19937_64 rng(31);
  // full rotation is the identity map on the basis
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_basis(n)) {
      auto x = tl_element(ctx, d, ctx.one());
      CHECK(equal(ctx, fourier_pow(ctx, x, 2 * n), x));
    }
  }
  // fourier is unitary for the trace-closure inner product
  NumericCtx nctx(1.4);
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(nctx, 4, rng);
    auto y = random_element(nctx, 4, rng);
    auto fx = fourier(nctx, x);
    auto fy = fourier(nctx, y);
    CHECK(std::abs(inner(nctx, fx, fy) - inner(nctx, x, y)) < 1e-10);
  }
  // the half turn F^n preserves the trace, and (Fx)* = F^{-1}(x*)
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(ctx, 5, rng);
    CHECK(trace(ctx, fourier_pow(ctx, x, 5)) == trace(ctx, x));
    auto lhs = adjoint(ctx, fourier(ctx, x));
    auto rhs = fourier_pow(ctx, adjoint(ctx, x), 2 * 5 - 1);
    CHECK(equal(ctx, lhs, rhs));
  }
  // the rotation relabels boundary points by two; on E_1 in TL_3 this is a
  // fixed point (the E_i are *not* permuted by the rotation tangle)
  auto e1 = e_generator(ctx, 1, 3);
  CHECK(equal(ctx, rotation(ctx, e1), e1));
  TLElement<Exact> zero0;
  zero0.n = 0;
  CHECK_THROWS_AS(fourier(ctx, zero0), std::invalid_argument);
}

TEST_CASE("element json round trip") {
  ExactCtx ctx;
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    auto x = random_element(ctx, 4, rng);
    auto j = to_json(ctx, x);
    CHECK(equal(ctx, tl_from_json<ExactCtx>(ctx, j), x));
    CHECK(j["sign"] == "+");
  }
  NumericCtx nctx(1.3);
  auto y = random_element(nctx, 3, rng);
  CHECK(equal(nctx, tl_from_json<NumericCtx>(nctx, to_json(nctx, y)), y));
}

TEST_CASE("fourier flips shading") {
  ExactCtx ctx;
  auto x = tl_identity(ctx, 3);
  auto fx = fourier(ctx, x);
  CHECK(fx.shading == Shading::shaded);
  CHECK(fourier(ctx, fx).shading == Shading::unshaded);
}
