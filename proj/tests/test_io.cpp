#include <doctest.h>

#include "torus/errors.hpp"
#include "torus/io.hpp"

using namespace torus;

namespace {

invariant::Superpolynomial trefoil() {
  return std::get<invariant::Superpolynomial>(invariant::compute(invariant::KnotRequest::make(2, 3)));
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("canonical knot JSON") {
    const auto json = io::knot_json(trefoil());
    CHECK(json == R"({"n":2,"m":3,"normalized":true,"terms":[[0,0,0,"1"],[0,4,2,"1"],[2,2,3,"1"]]})");
    const auto back = io::parse_knot_json(json);
    CHECK(back.n == 2);
    CHECK(back.m == 3);
    CHECK(back.normalized);
    CHECK(back.terms == trefoil().terms);
    CHECK(io::knot_json(back.n, back.m, back.terms) == json);
  }

  TEST_CASE("raw JSON carries the content") {
    CHECK(io::raw_knot_json(trefoil()) ==
          R"({"n":2,"m":3,"normalized":false,"content":[0,4,-8],"terms":[[0,4,-8,"1"],[0,8,-6,"1"],[2,6,-5,"1"]]})");
  }

  TEST_CASE("schema violations") {
    CHECK_THROWS_AS(io::parse_knot_json("{"), UsageError);
    CHECK_THROWS_AS(io::parse_knot_json(R"({"n":2,"m":3})"), UsageError);
    CHECK_THROWS_AS(io::parse_knot_json(R"({"n":2,"m":3,"normalized":true,"terms":[[0,0,"1"]]})"), UsageError);
    CHECK_THROWS_AS(io::parse_knot_json(R"({"n":2,"m":3,"normalized":true,"terms":[[0,0,0,"x"]]})"), UsageError);
  }

  TEST_CASE("generating function JSON round-trips") {
    const auto gf = invariant::generating_function(3, 2);
    const auto json = io::genfun_json(gf);
    const auto back = io::parse_genfun_json(json);
    CHECK(back.n == 3);
    CHECK(back.r == 2);
    CHECK(back.denominator == gf.denominator);
    CHECK(invariant::equivalent(gf, back));
    CHECK(io::genfun_json(back) == json);
  }

  TEST_CASE("grouped and LaTeX layouts") {
    CHECK(io::grouped_text(trefoil().terms) == "a^0: 1 + q^4*t^2\na^2: q^2*t^3\n");
    const auto latex = io::latex_table(trefoil().terms);
    CHECK(latex.find("\\hline \\textbf{a}^0 & 1+\\textbf{q}^4 \\textbf{t}^2 &") != std::string::npos);
    CHECK(latex.find("\\hline \\textbf{a}^2 & \\textbf{q}^2 \\textbf{t}^3 &") != std::string::npos);
    CHECK(latex.rfind("\\[\n\\begin{array}{c|lll}", 0) == 0);
  }

  TEST_CASE("two-digit exponents are braced in LaTeX") {
    const auto p = std::get<invariant::Superpolynomial>(invariant::compute(invariant::KnotRequest::make(2, 7)));
    CHECK(io::latex_table(p.terms).find("\\textbf{q}^{12} \\textbf{t}^6") != std::string::npos);
  }

  TEST_CASE("term diff") {
    const auto a = trefoil().terms;
    const auto b = a + algebra::LaurentPolynomial::monomial(a.alphabet(), algebra::Monomial{0, 1, 1});
    CHECK(io::term_diff(a, a).empty());
    CHECK(io::term_diff(a, b) == "+ 0 1 1 1\n");
    CHECK(io::term_diff(b, a) == "- 0 1 1 1\n");
  }

  TEST_CASE("missing files") { CHECK_THROWS_AS(io::read_file("/nonexistent/torus/file"), IoError); }
}
