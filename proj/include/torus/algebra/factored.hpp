#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "torus/algebra/laurent.hpp"

namespace torus::algebra {

/// coeff * prefactor * prod (1 - b)^multiplicity.
///
/// Binomials are stored canonically: the first nonzero exponent of b is
/// positive (1 - 1/b is rewritten as -(1/b)(1 - b)). No binomial has
/// multiplicity zero and none equals (1 - 1).
class FactoredRational {
 public:
  explicit FactoredRational(VarAlphabet alphabet);

  static FactoredRational monomial(VarAlphabet alphabet, const Monomial& m,
                                   const Rational& coeff = 1);
  /// (1 - b)^multiplicity. Throws UsageError when b is the identity.
  static FactoredRational binomial(VarAlphabet alphabet, const Monomial& b,
                                   int multiplicity = 1);

  const VarAlphabet& alphabet() const { return alphabet_; }
  const Rational& coeff() const { return coeff_; }
  const Monomial& prefactor() const { return prefactor_; }
  const std::map<Monomial, int>& factors() const { return factors_; }

  /// Multiplicity of (1 - b) after canonicalizing b; 0 when absent.
  int multiplicity(const Monomial& b) const;
  bool is_polynomial() const;

  FactoredRational operator*(const FactoredRational& other) const;
  FactoredRational operator/(const FactoredRational& other) const;
  FactoredRational inverse() const;
  FactoredRational pow(int e) const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  void multiply_binomial(Monomial b, int multiplicity);

  VarAlphabet alphabet_;
  Rational coeff_ = 1;
  Monomial prefactor_;
  std::map<Monomial, int> factors_;
};

struct ExpandedRational {
  LaurentPolynomial numerator;
  LaurentPolynomial denominator;
};

/// Numerator collects coeff * prefactor * (1 - b)^m over positive m;
/// denominator collects (1 - b)^-m over negative m.
ExpandedRational expand(const FactoredRational& r);

/// A polynomial weight times a factored rational: one summand of a sum of
/// rational functions.
struct WeightedTerm {
  LaurentPolynomial weight;
  FactoredRational factor;
};

/// Result of summing rational functions over a common binomial denominator.
struct RationalSum {
  LaurentPolynomial numerator;
  /// (b, multiplicity) pairs; the denominator is prod (1 - b)^multiplicity.
  std::vector<std::pair<Monomial, int>> denominator_factors;

  LaurentPolynomial denominator() const;
};

/// Sums the rational functions over the least common multiple of their
/// factored denominators (binomial-wise maximum multiplicity). Term
/// numerators may be expanded on up to `threads` workers; the result does not
/// depend on the thread count.
RationalSum sum_rationals(std::span<const FactoredRational> rs, unsigned threads = 1);
RationalSum sum_rationals(std::span<const WeightedTerm> terms, unsigned threads = 1);

}  // namespace torus::algebra
