#include <doctest.h>

#include "torus/errors.hpp"
#include "torus/macdonald.hpp"
#include "torus/oracle.hpp"

using namespace torus;
using namespace torus::oracle;
using macdonald::qtA;

namespace {

const algebra::VarAlphabet& MACD = algebra::VarAlphabet::macd();

LaurentPolynomial one_minus(int q, int t) { return LaurentPolynomial::constant(MACD, 1).times_binomial(qtA(q, t)); }

LaurentPolynomial one_plus(int q, int t) {
  return LaurentPolynomial::constant(MACD, 1) + LaurentPolynomial::monomial(MACD, qtA(q, t));
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("rational function arithmetic") {
    const RationalFunction a(LaurentPolynomial::constant(MACD, 1), one_minus(1, 0));
    const RationalFunction b(LaurentPolynomial::constant(MACD, 1), one_minus(0, 1));
    const RationalFunction sum = a + b;
    CHECK(sum.num() == LaurentPolynomial::constant(MACD, 2) - LaurentPolynomial::monomial(MACD, qtA(1, 0)) -
                           LaurentPolynomial::monomial(MACD, qtA(0, 1)));
    CHECK(sum.den_factors().size() == 2);
    CHECK((a - a).is_zero());
    CHECK(RationalFunction(one_minus(1, 0)) * a == RationalFunction::constant(1));
    // (1 - q^2) / (1 - q) reduces to 1 + q
    CHECK(RationalFunction(one_minus(2, 0), one_minus(1, 0)).den_factors().empty());
    CHECK_THROWS_AS(RationalFunction(one_minus(1, 0), LaurentPolynomial(MACD)), UsageError);
  }

  TEST_CASE("small Macdonald polynomials") {
    const auto p1 = macdonald_P(Partition{1}, 3);
    REQUIRE(p1.terms.size() == 1);
    CHECK(p1.coefficient(Partition{1}) == RationalFunction::constant(1));

    const auto p11 = macdonald_P(Partition{1, 1}, 2);
    REQUIRE(p11.terms.size() == 1);
    CHECK(p11.coefficient(Partition{1, 1}) == RationalFunction::constant(1));

    const auto p2 = macdonald_P(Partition{2}, 2);
    CHECK(p2.coefficient(Partition{2}) == RationalFunction::constant(1));
    const RationalFunction c(one_plus(1, 0) * one_minus(0, 1), one_minus(1, 1));
    CHECK(p2.coefficient(Partition{1, 1}) == c);
    CHECK_FALSE(p2.coefficient(Partition{1, 1}) == RationalFunction(one_plus(1, 0) * one_minus(0, 1), one_minus(1, 2)));
  }

  TEST_CASE("truncation to few variables") {
    const auto p = macdonald_P(Partition{2, 1}, 2);
    CHECK(p.coefficient(Partition{1, 1, 1}).is_zero());
    CHECK_FALSE(macdonald_P(Partition{2, 1}, 3).coefficient(Partition{1, 1, 1}).is_zero());
  }

  TEST_CASE("desk-scale limits") {
    CHECK_THROWS_AS(macdonald_P(Partition{2, 1}, 1), UsageError);
    CHECK_THROWS_AS(macdonald_P(Partition{6}, 3), UsageError);
    CHECK_THROWS_AS(macdonald_P(Partition{1}, 7), UsageError);
  }

  TEST_CASE("power-sum transition and z") {
    CHECK(power_sum_coefficient(Partition{1, 1}, Partition{1, 1}) == 2);
    CHECK(power_sum_coefficient(Partition{1, 1}, Partition{2}) == 1);
    CHECK(power_sum_coefficient(Partition{2}, Partition{1, 1}) == 0);
    CHECK(power_sum_coefficient(Partition{2, 1}, Partition{3}) == 1);
    CHECK(power_sum_coefficient(Partition{1, 1, 1}, Partition{2, 1}) == 3);
    CHECK(z_factor(Partition{2, 1, 1}) == 4);
    CHECK(z_factor(Partition{3}) == 3);
    CHECK(z_factor(Partition{1, 1, 1}) == 6);
  }

  TEST_CASE("principal specialization of monomials") {
    CHECK(principal_monomial(Partition{1}, 3) ==
          LaurentPolynomial::constant(MACD, 1) + LaurentPolynomial::monomial(MACD, qtA(0, 1)) +
              LaurentPolynomial::monomial(MACD, qtA(0, 2)));
    CHECK(principal_monomial(Partition{1, 1}, 2) == LaurentPolynomial::monomial(MACD, qtA(0, 1)));
    CHECK(principal_monomial(Partition{1, 1, 1}, 2).is_zero());
  }

  TEST_CASE("dimension formula") {
    CHECK(verify_dimension(Partition{1}, 3));
    CHECK(verify_dimension(Partition{2}, 3));
    CHECK(verify_dimension(Partition{2, 1}, 4));
    for (int n = 1; n <= 4; ++n) {
      for (const auto& y : enumerate_partitions(n)) {
        for (int big_n : {3, 4, 5}) CHECK(verify_dimension(y, big_n));
      }
    }
  }

  TEST_CASE("power-sum expansion coefficients") {
    const auto e1 = verify_power_sum_expansion(1);
    CHECK(e1.coefficients.at(Partition{1}) == RationalFunction::constant(1));
    const auto e2 = verify_power_sum_expansion(2);
    CHECK(e2.coefficients.at(Partition{2}) == RationalFunction::constant(1));
    CHECK(e2.coefficients.at(Partition{1, 1}) ==
          -RationalFunction(one_plus(1, 0) * one_minus(0, 1), one_minus(1, 1)));
    for (int n = 1; n <= 4; ++n) CHECK(verify_power_sum_expansion(n).matches_closed_form);
  }

  TEST_CASE("cauchy identity") {
    CHECK(verify_cauchy(1, 1, 1));
    CHECK(verify_cauchy(2, 2, 2));
    CHECK(verify_cauchy(3, 3, 3));
    CHECK(verify_cauchy(3, 4, 3));
  }

  TEST_CASE("schur degeneration and orthogonality") {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& y : enumerate_partitions(n)) CHECK(verify_schur_degeneration(y));
    }
    for (int n = 1; n <= 4; ++n) CHECK(verify_orthogonality(n));
  }

  TEST_CASE("suite runner") {
    const auto checks = run_suites(3);
    CHECK(checks.size() > 10);
    for (const auto& c : checks) CHECK_MESSAGE(c.ok, c.name);
    CHECK_THROWS_AS(run_suites(6), UsageError);
  }
}
