#include <cmath>
#include <doctest.h>

#include "ellsol/errors.hpp"
#include "ellsol/jacobi.hpp"
#include "ellsol/weierstrass.hpp"
#include "oracles.hpp"

using namespace ellsol;

namespace {
// sn(0.8, k^2 = 0.5), frozen from the quadrature-inversion oracle
constexpr double kSn08 = 0.69093485086643876;
constexpr double kQuarterPeriodHalf = 1.8540746773013719;  // K at k^2 = 0.5
// (5,1) bridge fixtures
constexpr double kModulus51 = 0.35924551796591853;
constexpr double kH106 = -0.54820346484615969;  // h1(0.6) for (5,1)
}  // namespace

TEST_CASE("trigonometric and hyperbolic limits are exact") {
  for (double x : {-1.3, -0.4, 0.0, 0.2, 0.9, 2.1}) {
    const auto t = sn_cn_dn(x, Modulus{0.0});
    CHECK(t.sn == doctest::Approx(std::sin(x)).epsilon(1e-15));
    CHECK(t.cn == doctest::Approx(std::cos(x)).epsilon(1e-15));
    CHECK(t.dn == 1.0);
    const auto h = sn_cn_dn(x, Modulus{1.0});
    CHECK(h.sn == doctest::Approx(std::tanh(x)).epsilon(1e-15));
    CHECK(h.cn == doctest::Approx(1.0 / std::cosh(x)).epsilon(1e-15));
    CHECK(h.dn == doctest::Approx(1.0 / std::cosh(x)).epsilon(1e-15));
  }
}

TEST_CASE("modulus is clamped near the endpoints and rejected beyond") {
  CHECK(sn_cn_dn(0.7, Modulus{1.0 + 5e-15}).sn == doctest::Approx(std::tanh(0.7)));
  CHECK(sn_cn_dn(0.7, Modulus{-5e-15}).sn == doctest::Approx(std::sin(0.7)));
  CHECK_THROWS_AS(sn_cn_dn(0.7, Modulus{1.1}), DomainError);
  CHECK_THROWS_AS(sn_cn_dn(0.7, Modulus{-0.1}), DomainError);
}

TEST_CASE("pythagorean identities hold at machine precision") {
  for (double m : {0.1, 0.35924551796591853, 0.5, 0.9, 0.99}) {
    for (int i = 0; i <= 40; ++i) {
      const double x = -3.0 + 6.0 * i / 40.0;
      const auto v = sn_cn_dn(x, Modulus{m});
      CHECK(std::abs(v.sn * v.sn + v.cn * v.cn - 1.0) < 1e-14);
      CHECK(std::abs(v.dn * v.dn + m * v.sn * v.sn - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("sn matches the quadrature inversion oracle") {
  CHECK(sn(0.8, Modulus{0.5}) == doctest::Approx(kSn08).epsilon(1e-13));
  CHECK(sn(0.8, Modulus{0.5}) ==
        doctest::Approx(oracle::sn_inverse(0.8, 0.5)).epsilon(1e-12));
  for (double u : {0.15, 0.5, 1.2}) {
    CHECK(sn(u, Modulus{0.3}) == doctest::Approx(oracle::sn_inverse(u, 0.3)).epsilon(1e-12));
  }
}

TEST_CASE("quarter period values") {
  const double kq = kQuarterPeriodHalf;
  const auto v = sn_cn_dn(kq, Modulus{0.5});
  CHECK(v.sn == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(v.cn) < 1e-12);
  CHECK(v.dn == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  // full period 4K
  const auto w = sn_cn_dn(0.37 + 4.0 * kq, Modulus{0.5});
  CHECK(w.sn == doctest::Approx(sn(0.37, Modulus{0.5})).epsilon(1e-10));
}

TEST_CASE("derivative of sn is cn dn") {
  const double h = 1e-5;
  for (double x : {0.2, 0.7, 1.5}) {
    const auto v = sn_cn_dn(x, Modulus{0.6});
    const double fd = (sn(x + h, Modulus{0.6}) - sn(x - h, Modulus{0.6})) / (2.0 * h);
    CHECK(fd == doctest::Approx(v.cn * v.dn).epsilon(1e-9));
  }
}

TEST_CASE("modulus from roots") {
  const auto roots = roots_from_invariants(Invariants{5.0, 1.0});
  CHECK(modulus_from_roots(roots).k_sq == doctest::Approx(kModulus51).epsilon(1e-14));
  const auto sym = roots_from_invariants(Invariants{4.0, 0.0});
  CHECK(modulus_from_roots(sym).k_sq == doctest::Approx(0.5).epsilon(1e-14));
  const auto neg = roots_from_invariants(Invariants{0.3, 0.7});
  CHECK_THROWS_AS(modulus_from_roots(neg), NonPositiveDiscriminant);
}

TEST_CASE("bounded branch h1: fixture, equation, derivative") {
  const auto roots = roots_from_invariants(Invariants{5.0, 1.0});
  CHECK(h1(0.6, roots) == doctest::Approx(kH106).epsilon(1e-13));

  // h1 solves the same quartic-free equation as wp
  for (double w : {-1.4, -0.3, 0.0, 0.5, 1.1, 2.0}) {
    const double h = h1(w, roots);
    const double hw = h1_derivative(w, roots);
    const double res = hw * hw - (4.0 * h * h * h - 5.0 * h - 1.0);
    CHECK(std::abs(res) < 1e-12 * (1.0 + std::abs(h * h * h)));
  }

  const double step = 1e-5;
  for (double w : {0.3, 0.9}) {
    const double fd = (h1(w + step, roots) - h1(w - step, roots)) / (2.0 * step);
    CHECK(fd == doctest::Approx(h1_derivative(w, roots)).epsilon(1e-8));
  }
}

TEST_CASE("unbounded branch agrees with the wp kernel") {
  const auto roots = roots_from_invariants(Invariants{5.0, 1.0});
  const Weierstrass wp(Invariants{5.0, 1.0});
  CHECK(wp_via_sn(0.6, roots) == doctest::Approx(2.8734250128857475).epsilon(1e-12));
  for (double w : {0.15, 0.4, 0.8, 1.1}) {
    CHECK(wp_via_sn(w, roots) == doctest::Approx(wp.wp(w)).epsilon(1e-9));
    const double step = 1e-5;
    const double fd = (wp_via_sn(w + step, roots) - wp_via_sn(w - step, roots)) / (2.0 * step);
    CHECK(fd == doctest::Approx(wp_via_sn_derivative(w, roots)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(wp_via_sn(0.0, roots), PoleProximity);
}

TEST_CASE("the two branches are a mobius pair") {
  const auto roots = roots_from_invariants(Invariants{5.0, 1.0});
  const MobiusCoeffs mc = mobius_coefficients(roots);
  CHECK(mc.det() != 0.0);
  for (double w : {0.2, 0.6, 1.3}) {
    CHECK(mobius_apply(mc, wp_via_sn(w, roots)) ==
          doctest::Approx(h1(w, roots)).epsilon(1e-11));
  }
}
