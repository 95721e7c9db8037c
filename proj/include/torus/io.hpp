#pragma once

#include <string>
#include <string_view>

#include "torus/invariant.hpp"

namespace torus::io {

using algebra::LaurentPolynomial;

/// A transcribed (or computed) knot table.
struct KnotFixture {
  int n = 0;
  int m = 0;
  bool normalized = true;
  LaurentPolynomial terms{algebra::VarAlphabet::knot()};
};

/// {"n":N,"m":M,"normalized":true,"terms":[[a,q,t,"coeff"],...]} with terms
/// ascending by (a, q, t) and no whitespace. Bit-identical for equal inputs.
std::string knot_json(const invariant::Superpolynomial& p);
std::string knot_json(int n, int m, const LaurentPolynomial& terms);
/// The unnormalized sum: "normalized":false plus the "content" monomial
/// [a,q,t] that normalization would divide out.
std::string raw_knot_json(const invariant::Superpolynomial& p);
/// Throws UsageError on malformed JSON or a schema violation.
KnotFixture parse_knot_json(std::string_view text);

/// {"n":N,"r":R,"numerator":[{"z":j,"terms":[...]},...],"denominator":[[a,q,t],...]}
std::string genfun_json(const invariant::GeneratingFunction& gf);
invariant::GeneratingFunction parse_genfun_json(std::string_view text);

/// One line per a-degree: "a^2: q^2*t^3 + q^6*t^5".
std::string grouped_text(const LaurentPolynomial& p);

/// An a-degree / coefficient array in the layout of the published tables.
std::string latex_table(const LaurentPolynomial& p);

/// Term-level difference, "-" for expected-only and "+" for actual-only
/// lines in the canonical text form. Empty when equal.
std::string term_diff(const LaurentPolynomial& expected, const LaurentPolynomial& actual);

std::string read_file(const std::string& path);

}  // namespace torus::io
