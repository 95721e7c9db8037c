#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torus/algebra/monomial.hpp"

namespace torus::algebra {

using Rational = mpq_class;

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted ascending lexicographically by exponent vector and
/// never hold a zero coefficient, so two equal polynomials always have
/// identical term sequences. Values are immutable once built.
class LaurentPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  /// The zero polynomial over `alphabet`.
  explicit LaurentPolynomial(VarAlphabet alphabet);

  /// Builds from unsorted terms; duplicate monomials are summed, zeros dropped.
  static LaurentPolynomial from_terms(VarAlphabet alphabet, std::vector<Term> terms);
  static LaurentPolynomial constant(VarAlphabet alphabet, const Rational& c);
  static LaurentPolynomial monomial(VarAlphabet alphabet, const Monomial& m,
                                    const Rational& c = 1);
  static LaurentPolynomial variable(VarAlphabet alphabet, std::string_view name);

  const VarAlphabet& alphabet() const { return alphabet_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coefficient(const Monomial& m) const;
  /// Coefficient of the identity monomial.
  Rational constant_term() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial operator+(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-(const LaurentPolynomial& other) const;
  LaurentPolynomial operator*(const LaurentPolynomial& other) const;

  LaurentPolynomial scaled(const Rational& c) const;
  /// Multiplies by a monomial. Preserves term order.
  LaurentPolynomial shifted(const Monomial& m) const;
  /// (*this) * (1 - b)^e for e >= 0.
  LaurentPolynomial times_binomial(const Monomial& b, int e = 1) const;
  LaurentPolynomial pow(unsigned e) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  LaurentPolynomial(VarAlphabet alphabet, std::vector<Term> sorted_terms);

  void require_same_alphabet(const LaurentPolynomial& other) const;

  VarAlphabet alphabet_;
  std::vector<Term> terms_;
};

/// Returns h with f == g * h, or nullopt when g does not divide f in the
/// Laurent ring. Throws UsageError when g is zero or the alphabets differ.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g);

namespace detail {
/// Lexicographic sparse division after shifting both operands to ordinary
/// polynomials. Always usable; exact_divide prefers faster routes when the
/// divisor shape allows.
std::optional<LaurentPolynomial> divide_lex(const LaurentPolynomial& f,
                                            const LaurentPolynomial& g);
/// Division by a two-term divisor via the recurrence along m * b^Z cosets.
std::optional<LaurentPolynomial> divide_two_term(const LaurentPolynomial& f,
                                                 const LaurentPolynomial& g);
}  // namespace detail

/// Componentwise minimum over the exponent vectors of f's terms.
/// Throws UsageError on the zero polynomial.
Monomial monomial_content(const LaurentPolynomial& f);

/// Canonical text form: one `<exp_1> ... <exp_n> <coeff>` line per term,
/// ascending lexicographic order. The zero polynomial serializes to "".
std::string to_text(const LaurentPolynomial& f);
/// Inverse of to_text. Throws UsageError on malformed input.
LaurentPolynomial parse_text(const VarAlphabet& alphabet, std::string_view text);

/// Human-readable rendering, e.g. "1 + q^4*t^2 - 2*a^2".
std::string to_string(const LaurentPolynomial& f);

}  // namespace torus::algebra
