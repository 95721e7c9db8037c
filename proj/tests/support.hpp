#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "torus/algebra/laurent.hpp"

namespace torus::testing {

inline algebra::LaurentPolynomial random_poly(const algebra::VarAlphabet& alphabet, std::mt19937_64& rng,
                                              int max_terms = 6, int spread = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> exp(-spread, spread);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<algebra::LaurentPolynomial::Term> terms;
  for (int i = count(rng); i > 0; --i) {
    algebra::Monomial m(alphabet.size());
    for (std::size_t v = 0; v < alphabet.size(); ++v) m.set(v, exp(rng));
    int c = 0;
    while (c == 0) c = coeff(rng);
    terms.emplace_back(m, c);
  }
  auto p = algebra::LaurentPolynomial::from_terms(alphabet, std::move(terms));
  return p.is_zero() ? algebra::LaurentPolynomial::constant(alphabet, 1) : p;
}

/// A fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("torus-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace torus::testing
