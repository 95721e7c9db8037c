#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "torus/algebra/factored.hpp"
#include "torus/algebra/laurent.hpp"

namespace torus::algebra {

/// Ring homomorphism between Laurent rings given on generators: each source
/// variable maps to sign * monomial over the target alphabet.
class SubstitutionMap {
 public:
  struct Image {
    int sign = 1;
    Monomial monomial;
  };

  SubstitutionMap(VarAlphabet source, VarAlphabet target);

  /// Sets the image of `variable`. Throws UsageError for unknown names, a
  /// sign other than +-1, or an image of the wrong size.
  SubstitutionMap& set(std::string_view variable, int sign, const Monomial& image);

  /// q -> t^2 q^2, t -> q^2, A -> -a^2 t, from (q, t, A) into (a, q, t).
  static const SubstitutionMap& to_knot_variables();

  const VarAlphabet& source() const { return source_; }
  const VarAlphabet& target() const { return target_; }

  /// Image of a source monomial. Throws UsageError if a variable with nonzero
  /// exponent has no image.
  Image apply(const Monomial& m) const;

 private:
  VarAlphabet source_;
  VarAlphabet target_;
  std::vector<std::optional<Image>> images_;
};

LaurentPolynomial substitute(const LaurentPolynomial& f, const SubstitutionMap& sigma);

/// Maps a factored rational factor by factor. Throws UsageError when a
/// binomial's image carries a minus sign, since (1 + m) has no binomial form.
FactoredRational substitute(const FactoredRational& r, const SubstitutionMap& sigma);

}  // namespace torus::algebra
