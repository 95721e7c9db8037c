#include "torus/algebra/modular.hpp"

#include "torus/errors.hpp"

namespace torus::algebra {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 PrimeField::add(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

u64 PrimeField::sub(u64 a, u64 b) { return a >= b ? a - b : a + kModulus - b; }

u64 PrimeField::mul(u64 a, u64 b) {
  const u128 p = static_cast<u128>(a) * b;
  // 2^61 == 1 (mod p)
  u64 lo = static_cast<u64>(p) & kModulus;
  u64 hi = static_cast<u64>(p >> 61);
  u64 s = lo + hi;
  return s >= kModulus ? s - kModulus : s;
}

u64 PrimeField::pow(u64 a, std::int64_t e) {
  if (e < 0) return pow(inverse(a), -e);
  u64 result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

u64 PrimeField::inverse(u64 a) {
  if (a % kModulus == 0) throw UsageError("inverse of zero in the prime field");
  return pow(a, static_cast<std::int64_t>(kModulus - 2));
}

u64 PrimeField::reduce(const mpz_class& z) {
  static const mpz_class modulus = [] {
    mpz_class m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &kModulus);
    return m;
  }();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

u64 PrimeField::reduce(const Rational& r) {
  const u64 den = reduce(mpz_class(r.get_den()));
  if (den == 0) throw UsageError("rational denominator vanishes modulo the prime");
  return mul(reduce(mpz_class(r.get_num())), inverse(den));
}

u64 eval_mod_p(const LaurentPolynomial& f, std::span<const u64> point) {
  if (point.size() != f.alphabet().size()) throw UsageError("evaluation point has wrong size");
  for (u64 v : point) {
    if (v % PrimeField::kModulus == 0) throw UsageError("evaluation point has a zero coordinate");
  }
  u64 acc = 0;
  for (const auto& [m, c] : f.terms()) {
    u64 term = PrimeField::reduce(c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] != 0) term = PrimeField::mul(term, PrimeField::pow(point[i] % PrimeField::kModulus, m[i]));
    }
    acc = PrimeField::add(acc, term);
  }
  return acc;
}

std::vector<u64> random_point(std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(1, PrimeField::kModulus - 1);
  std::vector<u64> point(size);
  for (auto& v : point) v = dist(rng);
  return point;
}

}  // namespace torus::algebra
