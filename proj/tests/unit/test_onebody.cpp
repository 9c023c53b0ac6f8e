#include <doctest.h>

#include <cmath>

#include "fewbody/onebody.hpp"

using namespace fewbody;

namespace {
const Grid kWide{-10.0, 10.0, 2001};
}

TEST_CASE("harmonic energies are n + 1/2") {
  const auto sol = solve_one_body(TrapSpec::Harmonic(), Grid{-10, 10, 1201}, 4);
  for (int n = 0; n < 4; ++n) CHECK(sol.energy(n) == doctest::Approx(n + 0.5).epsilon(1e-6));
}

TEST_CASE("infinite well energies follow (n+1)^2") {
  const double L = 3.14159265358979323846;
  const auto e = richardson_energies(TrapSpec::InfiniteWell(L), Grid{-2, 2, 2001}, 4);
  const double e0 = 0.5;
  for (int n = 0; n < 4; ++n)
    CHECK(e[n] == doctest::Approx(e0 * (n + 1) * (n + 1)).epsilon(1e-6));
}

TEST_CASE("double well doublet: reference solve on a 4x finer grid") {
  const TrapSpec trap = TrapSpec::DoubleWell();  // q^4 - 2 q^2
  const Grid grid{-4, 4, 801};
  const auto sol = solve_one_body(trap, grid, 3);
  const auto fine = solve_one_body(trap, Grid{-4, 4, 3201}, 3);
  for (int n = 0; n < 3; ++n)
    CHECK(sol.energy(n) == doctest::Approx(fine.energy(n)).epsilon(1e-5));
  const double split01 = sol.energy(1) - sol.energy(0);
  const double split12 = sol.energy(2) - sol.energy(1);
  CHECK(split01 > 0.0);
  CHECK(split01 < 0.05 * split12);
}

TEST_CASE("analytic energies") {
  CHECK(analytic_energy(TrapSpec::Harmonic(), 0) == doctest::Approx(0.5));
  CHECK(analytic_energy(TrapSpec::Harmonic(), 10) == doctest::Approx(10.5));
  const double L = 3.14159265358979323846;
  CHECK(analytic_energy(TrapSpec::InfiniteWell(L), 6) == doctest::Approx(24.5).epsilon(1e-12));
  CHECK_THROWS_AS(analytic_energy(TrapSpec::DoubleWell(), 0), UnsupportedKind);
}

TEST_CASE("parities alternate starting even") {
  const auto sol = solve_one_body(TrapSpec::Harmonic(), kWide, 6);
  REQUIRE(sol.has_parities());
  CHECK(parity_of(sol, 0) == 1);
  CHECK(parity_of(sol, 3) == -1);
  for (int n = 0; n < 6; ++n) CHECK(parity_of(sol, n) == ((n % 2 == 0) ? 1 : -1));
}

TEST_CASE("double well first excited state has odd reflection overlap") {
  const auto sol = solve_one_body(TrapSpec::DoubleWell(), Grid{-4, 4, 1601}, 2);
  const auto phi = sol.wavefunction(1);
  const int n = sol.grid().n_points;
  double ov = 0.0;
  for (int i = 0; i < n; ++i) ov += phi[i] * phi[n - 1 - i];
  ov *= sol.h();
  CHECK(ov < -0.999);
  CHECK(parity_of(sol, 1) == -1);
}

TEST_CASE("asymmetric trap has no parities") {
  const auto trap = TrapSpec::Polynomial({0.0, 0.3, 0.5, 0.0, 0.05});
  CHECK_FALSE(trap.is_symmetric());
  const auto sol = solve_one_body(trap, Grid{-8, 8, 1001}, 3);
  CHECK_FALSE(sol.has_parities());
  CHECK_THROWS_AS(parity_of(sol, 0), AsymmetricTrap);
}

TEST_CASE("orthonormality on the grid quadrature") {
  const auto sol = solve_one_body(TrapSpec::PowerLaw(1.0), Grid{-12, 12, 1501}, 8);
  const double h = sol.h();
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b) {
      const Eigen::VectorXd prod = sol.wavefunction(a).cwiseProduct(sol.wavefunction(b));
      const double ov = trapezoid(prod, h);
      CHECK(std::abs(ov - (a == b ? 1.0 : 0.0)) < 1e-8);
    }
}

TEST_CASE("power law softness ordering of E(11) vs E(02)") {
  auto two_body_energies = [](double z) {
    const auto sol = solve_one_body(TrapSpec::PowerLaw(z), Grid{-14, 14, 2001}, 3);
    return std::pair{2.0 * sol.energy(1), sol.energy(0) + sol.energy(2)};
  };
  {
    const auto [e11, e02] = two_body_energies(1.0);  // softer than harmonic
    CHECK(e11 > e02);
  }
  {
    const auto [e11, e02] = two_body_energies(4.0);  // harder than harmonic
    CHECK(e11 < e02);
  }
  {
    // z = 2 power law and the 1/2 q^2 convention both give equality
    const auto sol = solve_one_body(TrapSpec::Harmonic(), kWide, 3);
    CHECK(2.0 * sol.energy(1) ==
          doctest::Approx(sol.energy(0) + sol.energy(2)).epsilon(1e-8));
  }
}

TEST_CASE("solver errors") {
  CHECK_THROWS_AS(solve_one_body(TrapSpec::Harmonic(), Grid{-2, 2, 201}, 8), GridTooSmall);
  CHECK_THROWS_AS(solve_one_body(TrapSpec::Harmonic(), Grid{-10, 10, 101}, 40),
                  GridTooSmall);
  // deep symmetric double well: tunneling splitting far below degeneracy_tol
  CHECK_THROWS_AS(solve_one_body(TrapSpec::DoubleWell(1.0, 50.0), Grid{-9, 9, 1801}, 2),
                  DegenerateSpectrum);
}

TEST_CASE("derivatives are consistent with wavefunctions") {
  const auto sol = solve_one_body(TrapSpec::Harmonic(), kWide, 2);
  // harmonic ground state: phi' = -q phi
  const auto phi = sol.wavefunction(0);
  const auto dphi = sol.derivative(0);
  const auto q = sol.points();
  for (int i = 200; i < 1800; i += 57)
    CHECK(dphi[i] == doctest::Approx(-q[i] * phi[i]).epsilon(1e-4));
}

TEST_CASE("custom sampled trap reproduces its analytic original") {
  std::vector<double> qs, vs;
  for (int i = 0; i <= 4000; ++i) {
    const double q = -8.0 + 16.0 * i / 4000.0;
    qs.push_back(q);
    vs.push_back(0.5 * q * q);
  }
  const auto trap = TrapSpec::CustomSampled(qs, vs);
  CHECK(trap.is_symmetric());
  const auto sol = solve_one_body(trap, Grid{-8, 8, 1001}, 3);
  for (int n = 0; n < 3; ++n)
    CHECK(sol.energy(n) == doctest::Approx(n + 0.5).epsilon(1e-4));
}
