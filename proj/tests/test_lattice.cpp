#include "doctest.h"

#include "kummerlab/error.hpp"
#include "kummerlab/rigidity.hpp"
#include "kummerlab/spectral.hpp"
#include "kummerlab/wehler_action.hpp"

#include <cmath>

using namespace kummerlab;

TEST_SUITE("lattice") {

TEST_CASE("characteristic polynomial of small matrices") {
  CHECK(char_poly(IntMatrix{{2, 1}, {1, 1}}) == IntPolynomial{1, -3, 1});
  CHECK(char_poly(IntMatrix{{0, -1}, {1, 0}}) == IntPolynomial{1, 0, 1});
  // diag(2,3,5) + strictly upper part does not move the polynomial
  CHECK(char_poly(IntMatrix{{2, 7, -4}, {0, 3, 9}, {0, 0, 5}}) == IntPolynomial{-30, 31, -10, 1});
}

TEST_CASE("companion matrix round trip") {
  const IntPolynomial p = lehmer_polynomial();
  CHECK(char_poly(companion_matrix(p)) == p);
}

TEST_CASE("golden matrix") {
  const SpectralReport r = dynamical_degree(IntMatrix{{2, 1}, {1, 1}});
  CHECK(r.classification == Classification::ReciprocalQuadratic);
  CHECK(r.lambda_f == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  CHECK(r.min_poly_degree == 2);
  CHECK(r.kummer_possible);
}

TEST_CASE("finite order and unipotent matrices have degree one") {
  for (const IntMatrix& m : {IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 5}, {0, 1}}, IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}) {
    const SpectralReport r = dynamical_degree(m);
    CHECK(r.classification == Classification::One);
    CHECK(r.lambda_f == 1.0);
    CHECK(entropy_measure_verdict(r) == "zero entropy");
  }
}

TEST_CASE("singular matrix") {
  CHECK_THROWS_AS(dynamical_degree(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("Lehmer polynomial is Salem of degree 10") {
  const SpectralReport r = polynomial_report(lehmer_polynomial());
  CHECK(r.classification == Classification::Salem);
  CHECK(r.min_poly_degree == 10);
  CHECK_FALSE(r.kummer_possible);
  CHECK(r.lambda_f == doctest::Approx(1.17628081825991750654).epsilon(1e-13));
  CHECK(entropy_measure_verdict(r) == "μ_f singular");
}

TEST_CASE("smallest Pisot number") {
  const SpectralReport r = polynomial_report(IntPolynomial{-1, -1, 0, 1});
  CHECK(r.classification == Classification::Other);
  CHECK(std::fabs(r.lambda_f - 1.32471795724474602596) < 1e-12);
}

TEST_CASE("cyclotomic factors are peeled off") {
  // Phi_1 Phi_4 Phi_6 * (t^2 - 3t + 1)
  const IntPolynomial p = cyclotomic(1) * cyclotomic(4) * cyclotomic(6) * IntPolynomial{1, -3, 1};
  const auto f = cyclotomic_factors(p);
  std::vector<unsigned> o = f.orders;
  std::sort(o.begin(), o.end());
  CHECK(o == std::vector<unsigned>{1, 4, 6});
  CHECK(f.rest == IntPolynomial{1, -3, 1});
  const SpectralReport r = polynomial_report(p);
  CHECK(r.min_poly == IntPolynomial{1, -3, 1});
  CHECK(r.classification == Classification::ReciprocalQuadratic);
}

TEST_CASE("Salem factor hidden behind cyclotomic ones") {
  const IntPolynomial p = lehmer_polynomial() * cyclotomic(3) * cyclotomic(1) * cyclotomic(1);
  const SpectralReport r = polynomial_report(p);
  CHECK(r.classification == Classification::Salem);
  CHECK(r.min_poly == lehmer_polynomial());
}

TEST_CASE("Wehler involutions on the class lattice") {
  const WehlerAction a = wehler_cohomology_action();
  const IntMatrix id = IntMatrix::identity(3);
  for (const IntMatrix* m : {&a.m1, &a.m2, &a.m3}) {
    CHECK((*m) * (*m) == id);
    CHECK(isometry_check(*m, a.lattice));
  }
  const IntMatrix p = wehler_product(a);
  CHECK(char_poly(p) == IntPolynomial{1, 1} * IntPolynomial{1, -18, 1});
  const SpectralReport r = dynamical_degree(p);
  CHECK(r.lambda_f == doctest::Approx(9 + 4 * std::sqrt(5.0)).epsilon(1e-14));
  CHECK(r.classification == Classification::ReciprocalQuadratic);
  CHECK(r.kummer_possible);
  const Splitting s = nf_splitting(p, a.lattice);
  CHECK(s.psi == IntPolynomial{1, -18, 1});
  CHECK(s.cyclotomic_part == IntPolynomial{1, 1});
  CHECK(s.all_cyclotomic);
}

TEST_CASE("Lefschetz numbers of the Wehler map") {
  // independent: tr P^n = L_n + (-1)^n with L_n = lambda^n + lambda^-n
  const double lam = 9 + 4 * std::sqrt(5.0);
  for (int n = 1; n <= 6; ++n) {
    const double expect = 2 + std::round(std::pow(lam, n) + std::pow(lam, -n)) + (n % 2 ? -1 : 1) + (n % 2 ? -19 : 19);
    CHECK(wehler_lefschetz(n).convert_to<double>() == expect);
  }
  CHECK(wehler_lefschetz(1) == 0);
  CHECK(wehler_lefschetz(2) == 344);
  CHECK(wehler_lefschetz(3) == 5760);
}

TEST_CASE("multiplication by 1 + zeta5") {
  const IntMatrix z = zeta5_multiplication();
  CHECK(char_poly(z) == IntPolynomial{1, -2, 4, -3, 1});
  const SpectralReport r = dynamical_degree(zeta5_h2_action());
  CHECK(r.lambda_f == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-13));
}

TEST_CASE("Enriques lattice") {
  const QuadraticLattice e = enriques_lattice();
  CHECK(e.rank() == 10);
  CHECK(signature(e) == Signature{1, 9, 0});
  CHECK(e.determinant() == -1);
  CHECK(e.is_even());
}

TEST_CASE("rank two: hyperbolic plane") {
  const Rank2Analysis r = rank2_analysis(QuadraticLattice(IntMatrix{{0, 1}, {1, 0}}));
  CHECK(r.represents_zero);
  CHECK_FALSE(r.aut_infinite);
}

TEST_CASE("rank two: [[2,11],[11,2]] against the brute-force oracle") {
  // frozen from an independent search over |x|,|y| <= 10^4
  const Rank2Analysis r = rank2_analysis(QuadraticLattice(IntMatrix{{2, 11}, {11, 2}}));
  CHECK_FALSE(r.represents_zero);
  CHECK_FALSE(r.represents_minus_two);
  CHECK(r.aut_infinite);
  REQUIRE(r.lambda_psi);
  CHECK(*r.lambda_psi == doctest::Approx(10.908326913195983).epsilon(1e-13));
  CHECK(r.minus_two_complete);
  REQUIRE(r.fundamental_isometry);
  CHECK(isometry_check(*r.fundamental_isometry, QuadraticLattice(IntMatrix{{2, 11}, {11, 2}})));
}

TEST_CASE("rank two: a form representing -2") {
  // 2x^2 - 4y^2 = -2 at (1,1)
  const Rank2Analysis r = rank2_analysis(QuadraticLattice(IntMatrix{{2, 0}, {0, -4}}));
  CHECK_FALSE(r.represents_zero);
  CHECK(r.represents_minus_two);
  REQUIRE(r.minus_two_witness);
  const auto [x, y] = *r.minus_two_witness;
  CHECK(2 * x * x - 4 * y * y == -2);
}

TEST_CASE("non-symmetric Gram matrix is rejected") {
  CHECK_THROWS_AS(QuadraticLattice(IntMatrix{{1, 2}, {3, 4}}), Error);
}

}
