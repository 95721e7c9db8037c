#include "torus/algebra/factored.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "torus/errors.hpp"

namespace torus::algebra {

FactoredRational::FactoredRational(VarAlphabet alphabet)
    : alphabet_(std::move(alphabet)), prefactor_(alphabet_.size()) {}

FactoredRational FactoredRational::monomial(VarAlphabet alphabet, const Monomial& m,
                                            const Rational& coeff) {
  if (m.size() != alphabet.size()) throw UsageError("monomial size does not match alphabet");
  FactoredRational r(std::move(alphabet));
  r.coeff_ = coeff;
  r.prefactor_ = m;
  return r;
}

FactoredRational FactoredRational::binomial(VarAlphabet alphabet, const Monomial& b,
                                            int multiplicity) {
  if (b.size() != alphabet.size()) throw UsageError("monomial size does not match alphabet");
  FactoredRational r(std::move(alphabet));
  r.multiply_binomial(b, multiplicity);
  return r;
}

void FactoredRational::multiply_binomial(Monomial b, int multiplicity) {
  if (b.is_identity()) throw UsageError("binomial (1 - 1) is zero");
  if (multiplicity == 0) return;
  std::size_t i = 0;
  while (b[i] == 0) ++i;
  if (b[i] < 0) {
    // (1 - b)^k = (-b)^k (1 - 1/b)^k
    if (multiplicity % 2 != 0) coeff_ = -coeff_;
    prefactor_ = prefactor_ * b.pow(multiplicity);
    b = b.inverse();
  }
  auto [it, inserted] = factors_.try_emplace(b, 0);
  it->second += multiplicity;
  if (it->second == 0) factors_.erase(it);
}

int FactoredRational::multiplicity(const Monomial& b) const {
  Monomial key = b;
  std::size_t i = 0;
  while (i < key.size() && key[i] == 0) ++i;
  if (i == key.size()) return 0;
  if (key[i] < 0) key = key.inverse();
  auto it = factors_.find(key);
  return it == factors_.end() ? 0 : it->second;
}

bool FactoredRational::is_polynomial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.second > 0; });
}

FactoredRational FactoredRational::operator*(const FactoredRational& other) const {
  if (!(alphabet_ == other.alphabet_)) throw UsageError("factored rational alphabets differ");
  FactoredRational out = *this;
  out.coeff_ *= other.coeff_;
  out.prefactor_ = out.prefactor_ * other.prefactor_;
  for (const auto& [b, m] : other.factors_) {
    auto [it, inserted] = out.factors_.try_emplace(b, 0);
    it->second += m;
    if (it->second == 0) out.factors_.erase(it);
  }
  return out;
}

FactoredRational FactoredRational::operator/(const FactoredRational& other) const {
  return *this * other.inverse();
}

FactoredRational FactoredRational::inverse() const {
  if (sgn(coeff_) == 0) throw UsageError("inverse of zero");
  FactoredRational out(alphabet_);
  out.coeff_ = Rational(1) / coeff_;
  out.prefactor_ = prefactor_.inverse();
  for (const auto& [b, m] : factors_) out.factors_.emplace(b, -m);
  return out;
}

FactoredRational FactoredRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FactoredRational out(alphabet_);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), coeff_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), coeff_.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.coeff_ = Rational(num, den);
  out.prefactor_ = prefactor_.pow(e);
  if (e != 0) {
    for (const auto& [b, m] : factors_) out.factors_.emplace(b, m * e);
  }
  return out;
}

ExpandedRational expand(const FactoredRational& r) {
  const auto& alphabet = r.alphabet();
  LaurentPolynomial num = LaurentPolynomial::monomial(alphabet, r.prefactor(), r.coeff());
  LaurentPolynomial den = LaurentPolynomial::constant(alphabet, 1);
  for (const auto& [b, m] : r.factors()) {
    if (m > 0) {
      num = num.times_binomial(b, m);
    } else {
      den = den.times_binomial(b, -m);
    }
  }
  return {std::move(num), std::move(den)};
}

LaurentPolynomial RationalSum::denominator() const {
  LaurentPolynomial den = LaurentPolynomial::constant(numerator.alphabet(), 1);
  for (const auto& [b, m] : denominator_factors) den = den.times_binomial(b, m);
  return den;
}

RationalSum sum_rationals(std::span<const FactoredRational> rs, unsigned threads) {
  if (rs.empty()) throw UsageError("sum_rationals needs at least one term");
  std::vector<WeightedTerm> terms;
  terms.reserve(rs.size());
  for (const auto& r : rs) {
    terms.push_back({LaurentPolynomial::constant(r.alphabet(), 1), r});
  }
  return sum_rationals(std::span<const WeightedTerm>(terms), threads);
}

RationalSum sum_rationals(std::span<const WeightedTerm> terms, unsigned threads) {
  if (terms.empty()) throw UsageError("sum_rationals needs at least one term");
  const VarAlphabet alphabet = terms.front().factor.alphabet();
  std::map<Monomial, int> lcm;
  for (const auto& term : terms) {
    if (!(term.factor.alphabet() == alphabet) || !(term.weight.alphabet() == alphabet)) {
      throw UsageError("sum_rationals terms use different alphabets");
    }
    for (const auto& [b, m] : term.factor.factors()) {
      if (m < 0) {
        int& slot = lcm[b];
        slot = std::max(slot, -m);
      }
    }
  }

  auto expand_term = [&](const WeightedTerm& term) {
    const auto& f = term.factor;
    LaurentPolynomial num = term.weight.shifted(f.prefactor()).scaled(f.coeff());
    for (const auto& [b, m] : f.factors()) {
      if (m > 0) num = num.times_binomial(b, m);
    }
    for (const auto& [b, total] : lcm) {
      const int own = std::max(0, -f.multiplicity(b));
      num = num.times_binomial(b, total - own);
    }
    return num;
  };

  std::vector<LaurentPolynomial> expanded(terms.size(), LaurentPolynomial(alphabet));
  const unsigned workers = std::min<unsigned>(std::max(1U, threads), terms.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < terms.size(); ++i) expanded[i] = expand_term(terms[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < terms.size(); i = next++) {
          expanded[i] = expand_term(terms[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  LaurentPolynomial numerator(alphabet);
  for (const auto& e : expanded) numerator = numerator + e;
  return {std::move(numerator), {lcm.begin(), lcm.end()}};
}

}  // namespace torus::algebra
