#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "planar/quadratic.hpp"

using namespace planar;
using C = std::complex<double>;

namespace {

std::vector<LowestWeightLabel> sample_labels(int n, int count) {
  std::vector<LowestWeightLabel> out;
  for (int a = 0; a < count; ++a) {
    RootOfUnity omega(a % n, n);
    RootOfUnity sigma = omega.principal_sqrt();
    if (a >= n) sigma = sigma * RootOfUnity(1, 2);
    out.emplace_back(n, omega, sigma, "L" + std::to_string(a));
  }
  return out;
}

}  // namespace

TEST_CASE("structure constant validation") {
  NumericCtx ctx(1.3);
  std::mt19937_64 rng(1);
  for (int n : {3, 4}) {
    auto labels = sample_labels(n, 2);
    auto sc = random_structure_constants(ctx, labels, rng);
    CHECK_NOTHROW(validate_structure_constants(ctx, sc));
    auto bad = sc;
    bad.aref(0, 0, 1) += C{0.5, 0};
    CHECK_THROWS_AS(validate_structure_constants(ctx, bad), std::invalid_argument);
  }
}

TEST_CASE("projection coefficients land on the stated slots") {
  NumericCtx ctx(1.3);
  std::mt19937_64 rng(2);
  int n = 4;
  auto labels = sample_labels(n, 2);
  auto sc = random_structure_constants(ctx, labels, rng);
  auto vs = project_annular(ctx, sc, QuadraticRef{TangleKind::circ, 0, 1, 0});
  for (int r = 0; r < 2; ++r) {
    const auto& v = vs[static_cast<size_t>(r)];
    const auto& lr = labels[static_cast<size_t>(r)];
    C want_np1 = ctx.root(lr.sigma.pow(n)) * sc.aval(r, 0, 1);
    CHECK(std::abs(v.c[static_cast<size_t>(n + 1)] - want_np1) < 1e-12);
    C want_0 = ctx.root(labels[1].sigma.inverse() * labels[0].sigma) * sc.bval(r, 0, 1);
    CHECK(std::abs(v.c[0] - want_0) < 1e-12);
    for (int i = 0; i < v.label.space_dim(); ++i) {
      if (i != 0 && i != n + 1) CHECK(std::abs(v.c[static_cast<size_t>(i)]) < 1e-15);
    }
  }
  // zero tables project to zero
  auto zero_sc = StructureConstants<C>::zeros(labels, ctx.zero());
  auto zs = project_annular(ctx, zero_sc, QuadraticRef{TangleKind::circ, 0, 1, 0});
  for (const auto& v : zs)
    for (const auto& x : v.c) CHECK(std::abs(x) == 0.0);
  // rotation range errors
  CHECK_THROWS_AS(project_annular(ctx, sc, QuadraticRef{TangleKind::circ, 0, 1, n}),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_annular(ctx, sc, QuadraticRef{TangleKind::star, 0, 1, (n + 1) / 2}),
                  std::invalid_argument);
}

TEST_CASE("master formula equals the gram-inverse oracle across the sweep") {
  std::mt19937_64 rng(20240915);
  int printed_ok = 0, printed_bad = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int draw = 0; draw < 6; ++draw) {
      NumericCtx ctx(draw % 2 == 0 ? 1.3 : 1.17);
      auto labels = sample_labels(n, 2 + (draw % 2));
      auto sc = random_structure_constants(ctx, labels, rng);
      for (int s = 0; s < sc.size(); ++s)
        for (int t = 0; t < sc.size(); ++t) {
          QuadraticRef x{TangleKind::circ, s, t, 0};
          for (int j = 0; 2 * j <= n; ++j) {
            QuadraticRef y{TangleKind::circ, (s + 1) % sc.size(), t, j};
            C closed = master_inner(ctx, sc, x, y);
            C oracle = oracle_inner(ctx, sc, x, y);
            CAPTURE(n);
            CAPTURE(j);
            CHECK(std::abs(closed - oracle) < 1e-9);
          }
          for (int j = 0; 2 * j < n; ++j) {
            QuadraticRef y{TangleKind::star, (s + 1) % sc.size(), t, j};
            C closed = master_inner(ctx, sc, x, y);
            C oracle = oracle_inner(ctx, sc, x, y);
            CAPTURE(n);
            CAPTURE(j);
            CHECK(std::abs(closed - oracle) < 1e-9);
            C printed = master_inner(ctx, sc, x, y, MasterForm::printed);
            (std::abs(printed - oracle) < 1e-9 ? printed_ok : printed_bad)++;
          }
        }
    }
  }
  // the printed star form disagrees with the oracle whenever the label sigmas
  // differ; the derived form is the one the build uses
  CHECK(printed_bad > 0);
}

TEST_CASE("single label, symmetric case: master matches the worked closed form") {
  // <P_A(R o R), R o R> = (1/W)((a^2+b^2)[2n+2] + (-1)^(n+1) 2ab (s + 1/s)[n+1])
  for (int n : {3, 4, 5}) {
    NumericCtx ctx(1.22);
    for (int k = 0; k < n; ++k) {
      auto l = LowestWeightLabel::principal(n, RootOfUnity(k, n));
      auto sc = StructureConstants<C>::zeros({l}, ctx.zero());
      double alpha = 0.37, beta = -0.81;
      sc.aref(0, 0, 0) = alpha;
      sc.bref(0, 0, 0) = beta;
      if (n % 2 == 1) {
        // odd n: b is pinned to (sigma^3n) a
        sc.bref(0, 0, 0) = ctx.root(l.sigma.pow(3 * n)) * sc.aval(0, 0, 0);
        beta = sc.bval(0, 0, 0).real();
      }
      QuadraticRef rr{TangleKind::circ, 0, 0, 0};
      C got = master_inner(ctx, sc, rr, rr);
      C w = w_poly(ctx, 2 * n + 2, l.omega);
      C sig = ctx.root(l.sigma);
      double sgn = (n + 1) % 2 == 0 ? 1.0 : -1.0;
      C want = (C(alpha * alpha + beta * beta) * ctx.qint(2 * n + 2) +
                C(sgn * 2.0 * alpha * beta) * (sig + C(1.0) / sig) * ctx.qint(n + 1)) /
               w;
      CHECK(std::abs(got - want) < 1e-10);
      CHECK(std::abs(got - oracle_inner(ctx, sc, rr, rr)) < 1e-10);

      // <P_A(R o R), R * R> against the worked form
      QuadraticRef rstar{TangleKind::star, 0, 0, 0};
      C got2 = master_inner(ctx, sc, rr, rstar);
      C om = ctx.root(l.omega);
      double sgn_n = n % 2 == 0 ? 1.0 : -1.0;
      C want2 = (C(sgn_n) * om * C(alpha * alpha + beta * beta) *
                     (om * ctx.qint(n) + ctx.qint(n + 2)) -
                 C(2.0 * alpha * beta) * sig * (om * ctx.qint(2 * n + 1) + C(1.0))) /
                w;
      CHECK(std::abs(got2 - want2) < 1e-10);
      CHECK(std::abs(got2 - oracle_inner(ctx, sc, rr, rstar)) < 1e-10);
    }
  }
}

TEST_CASE("single label impulse tables: exact closed form equals exact oracle") {
  int n = 3;
  ExactCtx ctx(annular_field_order(n));
  for (int k = 0; k < n; ++k) {
    auto l = LowestWeightLabel::principal(n, RootOfUnity(k, n));
    for (auto impulse : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
      auto sc = StructureConstants<Exact>::zeros({l}, ctx.zero());
      sc.aref(0, 0, 0) = ctx.from_int(impulse.first);
      sc.bref(0, 0, 0) = ctx.from_int(impulse.second);
      if (n % 2 == 1 && impulse.first == 1 && impulse.second == 1) {
        sc.bref(0, 0, 0) = ctx.root(l.sigma.pow(3 * n));
      }
      QuadraticRef rr{TangleKind::circ, 0, 0, 0};
      for (int j = 0; 2 * j <= n; ++j) {
        QuadraticRef y{TangleKind::circ, 0, 0, j};
        CHECK(master_inner(ctx, sc, rr, y) == oracle_inner(ctx, sc, rr, y));
      }
      for (int j = 0; 2 * j < n; ++j) {
        QuadraticRef y{TangleKind::star, 0, 0, j};
        CHECK(master_inner(ctx, sc, rr, y) == oracle_inner(ctx, sc, rr, y));
      }
    }
  }
}

TEST_CASE("TL projections") {
  int n = 4;
  NumericCtx ctx(1.31);
  auto labels = sample_labels(n, 2);
  QuadraticRef ss{TangleKind::circ, 0, 0, 0};
  // <P_T(R o R), R o R> = 1/[n+2]
  C got = tl_inner(ctx, labels, ss, ss);
  CHECK(std::abs(got - C(1.0) / ctx.qint(n + 2)) < 1e-12);
  // S != T gives zero
  QuadraticRef st{TangleKind::circ, 0, 1, 0};
  CHECK(std::abs(tl_inner(ctx, labels, st, st)) == 0.0);
  // circ against star on the same label: (-1)^n omega / ([n+2][n+1])
  QuadraticRef sstar{TangleKind::star, 0, 0, 0};
  C got2 = tl_inner(ctx, labels, ss, sstar);
  double sgn = n % 2 == 0 ? 1.0 : -1.0;
  C want2 = C(sgn) * ctx.root(labels[0].omega) / (ctx.qint(n + 2) * ctx.qint(n + 1));
  CHECK(std::abs(got2 - want2) < 1e-12);
  // hermitian symmetry of the assembled TL part
  CHECK(std::abs(tl_inner(ctx, labels, sstar, ss) - std::conj(got2)) < 1e-12);
}

TEST_CASE("conjugate symmetry of the closed form") {
  // <X, Y> = conj(<Y, X>) with (S o T)* = T o S: check master against the
  // oracle contraction with swapped arguments
  std::mt19937_64 rng(99);
  int n = 4;
  NumericCtx ctx(1.3);
  auto labels = sample_labels(n, 2);
  auto sc = random_structure_constants(ctx, labels, rng);
  QuadraticRef x{TangleKind::circ, 0, 1, 0};
  QuadraticRef y{TangleKind::circ, 1, 0, 0};
  CHECK(std::abs(master_inner(ctx, sc, x, y) - std::conj(master_inner(ctx, sc, y, x))) < 1e-10);
}

TEST_CASE("even-n consistency identity, both omega exponents") {
  std::mt19937_64 rng(7);
  for (int n : {2, 4, 6}) {
    NumericCtx ctx(1.27);
    auto labels = sample_labels(n, 2);
    auto sc = random_structure_constants(ctx, labels, rng, TableMode::physical_even);
    int k = n / 2;
    bool km1_all = true;
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t)
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q) {
            CAPTURE(n);
            // the sesquilinear factor is omega_P^(k+1) omega_Q^k (conjugate of
            // the element-level omega_P^(k-1) omega_Q^k)
            CHECK(nice_check_residual(ctx, sc, s, t, p, q, k + 1) < 1e-9);
            if (nice_check_residual(ctx, sc, s, t, p, q, k - 1) > 1e-9) km1_all = false;
          }
    // e = k-1 is a genuinely different inner-product factor once omega^2 != 1
    if (n >= 4) CHECK(!km1_all);
  }
}
