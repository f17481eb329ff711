#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planar/mult_one.hpp"

using namespace planar;

namespace {
double q_from_delta(double delta) { return (delta + std::sqrt(delta * delta - 4.0)) / 2.0; }
}  // namespace

TEST_CASE("closed forms satisfy both equations: numeric sweep") {
  for (int n = 2; n <= 12; n += 2) {
    for (double q : {1.1, 1.3}) {
      for (int a = 0; a < n; ++a) {
        RootOfUnity omega(a, n);
        if (omega == RootOfUnity(1, 2) && n % 4 != 0) continue;  // infeasible combo
        auto inst = mult1_solve(n, q, omega);
        CAPTURE(n);
        CAPTURE(a);
        CHECK(inst.resid_first < 1e-9);
        CHECK(inst.resid_second < 1e-9);
        CHECK(inst.resid_rcheck < 1e-10);
        CHECK(inst.resid_requation < 1e-10);
        CHECK(inst.resid_tr_split < 1e-10);
        CHECK(inst.r >= 1.0);
        CHECK(inst.r <= inst.rcheck + 1e-12);
      }
    }
  }
}

TEST_CASE("closed forms satisfy both equations: exact, all omega, n <= 8") {
  for (int n = 2; n <= 8; n += 2) {
    for (int a = 0; a < n; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      CHECK(mult1_exact_equations(n, RootOfUnity(a, n)));
    }
  }
}

TEST_CASE("infeasible inputs rejected") {
  CHECK_THROWS_AS(mult1_solve(3, 1.3, RootOfUnity(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(mult1_solve(6, 1.3, RootOfUnity(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(mult1_solve(4, 0.9, RootOfUnity(0, 1)), std::domain_error);
  CHECK_THROWS_AS(mult1_solve(4, 1.3, RootOfUnity(1, 3)), std::invalid_argument);
  // odd-n rejection: the would-be constraint has no solution with q > 1
  for (int n = 3; n <= 11; n += 2) {
    for (double q : {1.05, 1.3, 2.0}) CHECK(mult1_odd_rejected(n, q));
  }
}

TEST_CASE("Fuss-Catalan fixture: n=2, delta=b sqrt(2), b=1.5") {
  double b = 1.5;
  double delta = b * std::sqrt(2.0);
  auto inst = mult1_solve(2, q_from_delta(delta), RootOfUnity(0, 1));
  CHECK(std::abs(inst.rcheck - 2.0 * (b * b - 1.0)) < 1e-10);
  CHECK(std::abs(inst.r - b * b / (b * b - 1.0)) < 1e-10);
  CHECK(inst.resid_first < 1e-10);
  CHECK(inst.resid_second < 1e-10);
  // chirality recovered from r is +1
  auto roots = chirality_from_r(2, inst.q, inst.r);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].is_one());
}

TEST_CASE("Haagerup fixture: n=4, delta^2=(5+sqrt(13))/2, omega=-1") {
  double delta2 = (5.0 + std::sqrt(13.0)) / 2.0;
  auto inst = mult1_solve(4, q_from_delta(std::sqrt(delta2)), RootOfUnity(1, 2));
  CHECK(std::abs(inst.alpha) < 1e-12);
  CHECK(std::abs(inst.r - 1.0) < 1e-10);
  CHECK(inst.resid_first < 1e-9);
  CHECK(inst.resid_second < 1e-9);
  // r = 1 forces 2 + omega + omega^-1 = 0, i.e. omega = -1
  auto roots = chirality_from_r(4, inst.q, 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == RootOfUnity(1, 2));
}

TEST_CASE("partition algebra fixture: n=4, delta^2=6, omega=1") {
  double delta2 = 6.0;
  double delta = std::sqrt(delta2);
  auto inst = mult1_solve(4, q_from_delta(delta), RootOfUnity(0, 1));
  double want_rcheck = (delta2 * delta2 - 4.0 * delta2 + 3.0) / (delta2 - 2.0);
  double want_r = (delta2 * delta2 - 3.0 * delta2 + 2.0) / (delta2 * delta2 - 3.0 * delta2);
  CHECK(std::abs(inst.rcheck - want_rcheck) < 1e-9);
  CHECK(std::abs(inst.r - want_r) < 1e-9);
  // rcheck = [6]/[4]
  double qn = detail::qi(inst.q, 4), qn2 = detail::qi(inst.q, 6);
  CHECK(std::abs(inst.rcheck - qn2 / qn) < 1e-10);
}

TEST_CASE("chirality from r: range bound") {
  int n = 4;
  double q = 1.3;
  double qn = detail::qi(q, n), qn2 = detail::qi(q, n + 2);
  double r_limit = 2.0 + 4.0 / (qn * qn2);
  // r beyond the equation's range admits no chirality
  double r_big = 10.0;
  CHECK(r_big + 1.0 / r_big > r_limit);
  CHECK(chirality_from_r(n, q, r_big).empty());
}

TEST_CASE("decomposition through the master formula: 1/[n] = annular + 1/[n+2]") {
  for (int n : {2, 4, 6}) {
    for (int a = 0; a < n; ++a) {
      RootOfUnity omega(a, n);
      if (omega == RootOfUnity(1, 2) && n % 4 != 0) continue;
      auto inst = mult1_solve(n, 1.3, omega);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(mult1_decomposition_residual(inst) < 1e-10);
    }
  }
}
