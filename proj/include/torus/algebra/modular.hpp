#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "torus/algebra/laurent.hpp"

namespace torus::algebra {

/// Arithmetic modulo the Mersenne prime 2^61 - 1, used for spot checks.
struct PrimeField {
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  static std::uint64_t add(std::uint64_t a, std::uint64_t b);
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b);
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b);
  static std::uint64_t pow(std::uint64_t a, std::int64_t e);
  static std::uint64_t inverse(std::uint64_t a);
  static std::uint64_t reduce(const mpz_class& z);
  /// Residue of a rational; throws UsageError if its denominator vanishes mod p.
  static std::uint64_t reduce(const Rational& r);
};

/// Evaluates f at `point` (one nonzero residue per variable) modulo 2^61 - 1.
/// Throws UsageError for a zero coordinate or a size mismatch.
std::uint64_t eval_mod_p(const LaurentPolynomial& f, std::span<const std::uint64_t> point);

/// Uniform nonzero residues, one per variable.
std::vector<std::uint64_t> random_point(std::size_t size, std::mt19937_64& rng);

}  // namespace torus::algebra
