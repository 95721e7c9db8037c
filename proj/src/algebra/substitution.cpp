#include "torus/algebra/substitution.hpp"

#include "torus/errors.hpp"

namespace torus::algebra {

SubstitutionMap::SubstitutionMap(VarAlphabet source, VarAlphabet target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_.size()) {}

SubstitutionMap& SubstitutionMap::set(std::string_view variable, int sign, const Monomial& image) {
  auto idx = source_.index_of(variable);
  if (!idx) throw UsageError("substitution: unknown source variable '" + std::string(variable) + "'");
  if (sign != 1 && sign != -1) throw UsageError("substitution sign must be +1 or -1");
  if (image.size() != target_.size()) throw UsageError("substitution image has wrong size");
  images_[*idx] = Image{sign, image};
  return *this;
}

const SubstitutionMap& SubstitutionMap::to_knot_variables() {
  static const SubstitutionMap sigma = [] {
    SubstitutionMap s(VarAlphabet::macd(), VarAlphabet::knot());
    //                 a  q  t
    s.set("q", +1, {0, 2, 2});
    s.set("t", +1, {0, 2, 0});
    s.set("A", -1, {2, 0, 1});
    return s;
  }();
  return sigma;
}

SubstitutionMap::Image SubstitutionMap::apply(const Monomial& m) const {
  Image out{1, Monomial(target_.size())};
  for (std::size_t i = 0; i < source_.size(); ++i) {
    const int e = m[i];
    if (e == 0) continue;
    if (!images_[i]) {
      throw UsageError("substitution has no image for '" + source_.name(i) + "'");
    }
    if (images_[i]->sign < 0 && e % 2 != 0) out.sign = -out.sign;
    out.monomial = out.monomial * images_[i]->monomial.pow(e);
  }
  return out;
}

LaurentPolynomial substitute(const LaurentPolynomial& f, const SubstitutionMap& sigma) {
  if (!(f.alphabet() == sigma.source())) throw UsageError("substitution source alphabet mismatch");
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    auto image = sigma.apply(m);
    terms.emplace_back(image.monomial, image.sign > 0 ? c : Rational(-c));
  }
  return LaurentPolynomial::from_terms(sigma.target(), std::move(terms));
}

FactoredRational substitute(const FactoredRational& r, const SubstitutionMap& sigma) {
  if (!(r.alphabet() == sigma.source())) throw UsageError("substitution source alphabet mismatch");
  auto pre = sigma.apply(r.prefactor());
  FactoredRational out = FactoredRational::monomial(
      sigma.target(), pre.monomial, pre.sign > 0 ? r.coeff() : Rational(-r.coeff()));
  for (const auto& [b, m] : r.factors()) {
    auto image = sigma.apply(b);
    if (image.sign < 0) {
      throw UsageError("substituted binomial (1 + " + to_string(image.monomial, sigma.target()) +
                       ") has no (1 - b) form");
    }
    out = out * FactoredRational::binomial(sigma.target(), image.monomial, m);
  }
  return out;
}

}  // namespace torus::algebra
