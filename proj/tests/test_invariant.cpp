#include <doctest.h>

#include <numeric>

#include "classical_homfly.hpp"
#include "torus/errors.hpp"
#include "torus/invariant.hpp"
#include "torus/io.hpp"

using namespace torus;
using namespace torus::invariant;

namespace {

const VarAlphabet& KNOT = VarAlphabet::knot();

LaurentPolynomial knot_poly(std::initializer_list<std::tuple<int, int, int, int>> terms) {
  std::vector<LaurentPolynomial::Term> out;
  for (const auto& [a, q, t, c] : terms) out.emplace_back(Monomial{a, q, t}, c);
  return LaurentPolynomial::from_terms(KNOT, std::move(out));
}

Superpolynomial super(int n, int m, unsigned threads = 1) {
  auto r = compute(KnotRequest::make(n, m), ComputeOptions{threads});
  REQUIRE(std::holds_alternative<Superpolynomial>(r));
  return std::get<Superpolynomial>(std::move(r));
}

}  // namespace

TEST_SUITE("invariant") {
  TEST_CASE("request decomposition") {
    const auto req = KnotRequest::make(3, 11);
    CHECK(req.k() == 3);
    CHECK(req.r() == 2);
    CHECK_THROWS_AS(KnotRequest::make(0, 3), UsageError);
    CHECK_THROWS_AS(KnotRequest::make(2, 0), UsageError);
  }

  TEST_CASE("trefoil and (2,5)") {
    CHECK(super(2, 3).terms == knot_poly({{0, 0, 0, 1}, {0, 4, 2, 1}, {2, 2, 3, 1}}));
    CHECK(super(2, 5).terms ==
          knot_poly({{0, 0, 0, 1}, {0, 4, 2, 1}, {0, 8, 4, 1}, {2, 2, 3, 1}, {2, 6, 5, 1}}));
  }

  TEST_CASE("unknot") {
    for (int m = 1; m <= 6; ++m) CHECK(super(1, m).terms == knot_poly({{0, 0, 0, 1}}));
  }

  TEST_CASE("non-coprime pairs are not polynomial") {
    for (auto [n, m] : {std::pair{2, 4}, {2, 2}, {3, 3}, {3, 6}, {4, 6}}) {
      const auto r = compute(KnotRequest::make(n, m));
      REQUIRE(std::holds_alternative<NonPolynomial>(r));
      CHECK(std::get<NonPolynomial>(r).gcd == std::gcd(n, m));
    }
  }

  TEST_CASE("raw content is divided out exactly once") {
    const auto p = super(2, 3);
    CHECK(p.raw() == p.terms.shifted(p.raw_content));
    CHECK(p.terms.constant_term() == 1);
    CHECK(algebra::monomial_content(p.terms).is_identity());
  }

  TEST_CASE("property flags") {
    CHECK(super(3, 4).flags.all());
    CHECK(verify_properties(knot_poly({{0, 0, 0, 1}})).all());
    const auto negative = verify_properties(knot_poly({{0, 0, 0, 1}, {0, 1, 0, -1}}));
    CHECK_FALSE(negative.positive);
    CHECK(negative.integral);
    const auto laurent = verify_properties(knot_poly({{0, 0, 0, 1}, {0, -1, 0, 1}}));
    CHECK_FALSE(laurent.polynomial);
    CHECK_FALSE(laurent.normalized);
  }

  TEST_CASE("the a^6 block of (4,7)") {
    const auto p = super(4, 7);
    std::vector<Monomial> block;
    for (const auto& [m, c] : p.terms.terms()) {
      if (m[0] == 6) block.push_back(m);
    }
    CHECK(block == std::vector<Monomial>{{6, 12, 15}, {6, 16, 17}, {6, 18, 19}, {6, 20, 19}, {6, 24, 21}});
  }

  TEST_CASE("only even powers of a, top power 2(n-1)") {
    for (auto [n, m] : {std::pair{3, 4}, {4, 5}, {5, 6}, {3, 8}}) {
      const auto p = super(n, m);
      int top = 0;
      for (const auto& [mono, c] : p.terms.terms()) {
        CHECK(mono[0] % 2 == 0);
        top = std::max(top, mono[0]);
      }
      CHECK(top == 2 * (n - 1));
    }
  }

  TEST_CASE("one parity class of (q, t) per a-power") {
    const auto p = super(4, 7);
    std::map<int, std::pair<int, int>> parity;
    for (const auto& [m, c] : p.terms.terms()) {
      const std::pair<int, int> cls{(m[1] % 2 + 2) % 2, (m[2] % 2 + 2) % 2};
      const auto [it, fresh] = parity.emplace(m[0], cls);
      CHECK(it->second == cls);
    }
  }

  TEST_CASE("trefoil specializations") {
    const auto p = super(2, 3);
    const auto h = specialize(p, Specialization::homfly);
    CHECK(algebra::to_string(h) == "1 + q^4 - a^2*q^2");
    CHECK(algebra::to_string(specialize(p, Specialization::jones)) == "1 + q^4 - q^6");
    CHECK(algebra::to_string(specialize(p, Specialization::alexander)) == "1 - q^2 + q^4");
    CHECK(h.alphabet() == homfly_alphabet());
  }

  TEST_CASE("thread count does not change the result") {
    for (auto [n, m] : {std::pair{4, 7}, {5, 6}}) {
      CHECK(io::knot_json(super(n, m, 1)) == io::knot_json(super(n, m, 4)));
    }
  }

  TEST_CASE("generating functions match the series") {
    for (auto [n, r] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}}) {
      const auto gf = generating_function(n, r, 3);
      CHECK(gf.validated_through == 3);
      for (int k = 0; k <= 3; ++k) CHECK(gf.series_coefficient(k) == super(n, n * k + r).terms);
    }
  }

  TEST_CASE("F_{2,1} closed form") {
    const auto gf = generating_function(2, 1);
    CHECK(gf.denominator == std::vector<Monomial>{{0, 0, 0}, {0, 4, 2}});
    REQUIRE(gf.numerator.size() == 2);
    CHECK(gf.numerator[0] == knot_poly({{0, 0, 0, 1}}));
    CHECK(gf.numerator[1] == knot_poly({{2, 2, 3, 1}}));
    CHECK(gf.series_coefficient(2) == super(2, 5).terms);
  }

  TEST_CASE("rebase and equivalence") {
    const auto gf = generating_function(3, 1);
    auto wider = gf.denominator;
    wider.push_back(Monomial{0, 20, 10});
    const auto rebased = rebase(gf, wider);
    REQUIRE(rebased.has_value());
    GeneratingFunction other = gf;
    other.numerator = *rebased;
    other.denominator = wider;
    CHECK(equivalent(gf, other));
    CHECK_FALSE(rebase(gf, {Monomial{0, 0, 0}}).has_value());
    other.numerator[0] = other.numerator[0] + knot_poly({{0, 1, 1, 1}});
    CHECK_FALSE(equivalent(gf, other));
  }

  TEST_CASE("generating function preconditions") {
    CHECK_THROWS_AS(generating_function(4, 2), CalibrationError);
    CHECK_THROWS_AS(generating_function(3, 0), UsageError);
    CHECK_THROWS_AS(generating_function(3, 3), UsageError);
  }

  TEST_CASE("scan over a small range") {
    const auto report = scan(4, 13, ComputeOptions{2});
    CHECK(report.failures() == 0);
    std::size_t coprime = 0;
    for (const auto& e : report.entries) {
      CHECK(e.ok);
      if (e.gcd == 1) {
        ++coprime;
        CHECK(e.status == "polynomial");
        CHECK(e.a_max == 2 * (e.n - 1));
      } else {
        CHECK(e.status == "nonpolynomial");
      }
    }
    CHECK(coprime > 0);
    const auto csv = to_csv(report);
    CHECK(csv.rfind("n,m,gcd,status,a_max,q_max,t_max,term_count,millis\n", 0) == 0);
    CHECK(csv.find("\n2,3,1,polynomial,2,4,3,3,") != std::string::npos);
    CHECK(csv.find("\n2,4,2,nonpolynomial,") != std::string::npos);
  }

  TEST_CASE("t = -1 reproduces the Rosso-Jones HOMFLY for two-strand knots") {
    for (int m : {3, 5, 7}) {
      const auto p = std::get<Superpolynomial>(compute(KnotRequest::make(2, m)));
      CHECK(specialize(p, Specialization::homfly) == torus::testing::classical_homfly(2, m));
    }
  }
}
