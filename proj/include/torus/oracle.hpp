#pragma once

#include <map>
#include <string>
#include <vector>

#include "torus/algebra/laurent.hpp"
#include "torus/partitions.hpp"

/// Brute-force Macdonald polynomials in the monomial basis, used to check the
/// closed-form ingredients on small partitions. Desk scale only: |Y| <= 5 and
/// at most 6 variables.
namespace torus::oracle {

using algebra::LaurentPolynomial;
using algebra::Rational;

inline constexpr int kMaxSize = 5;
inline constexpr int kMaxVariables = 6;

/// num / prod (1 - b)^k over (q, t, A). Common binomials are cancelled after
/// every operation, which keeps sums over many partitions small.
class RationalFunction {
 public:
  using Factors = std::map<algebra::Monomial, int>;

  RationalFunction();
  explicit RationalFunction(LaurentPolynomial num);
  RationalFunction(LaurentPolynomial num, Factors den);
  /// Splits den into binomials. Whatever is left must divide num, otherwise
  /// IntegrityError.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  static RationalFunction constant(const Rational& c);

  const LaurentPolynomial& num() const { return num_; }
  const Factors& den_factors() const { return den_; }
  LaurentPolynomial den() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction operator-(const RationalFunction& other) const;
  RationalFunction operator*(const RationalFunction& other) const;
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void cancel();

  LaurentPolynomial num_;
  Factors den_;
};

std::string to_string(const RationalFunction& f);

/// Symmetric polynomial in nx variables, sum of coeff * m_mu over partitions
/// of length <= nx.
struct SymmetricPoly {
  int nx = 0;
  std::map<Partition, RationalFunction> terms;

  /// Zero when mu is absent.
  RationalFunction coefficient(const Partition& mu) const;
};

/// Coefficient of m_lambda in the power sum p_rho.
long power_sum_coefficient(const Partition& rho, const Partition& lambda);

/// z_rho = prod_k k^{m_k} m_k!.
Rational z_factor(const Partition& rho);

/// Monic, dominance-triangular P_Y orthogonal under
/// <p_l, p_m> = delta z_l prod (1 - q^{l_i}) / (1 - t^{l_i}).
/// Throws UsageError when nx < length(Y) or the desk-scale caps are exceeded.
SymmetricPoly macdonald_P(const Partition& y, int nx);

/// m_mu(1, t, ..., t^{n-1}).
LaurentPolynomial principal_monomial(const Partition& mu, int n);

/// Compares P_Y(1, t, ..., t^{N-1}) with the product formula at A = t^N.
bool verify_dimension(const Partition& y, int n_concrete);

struct PowerSumExpansion {
  /// C_Y solving p_n = sum C_Y P_Y.
  std::map<Partition, RationalFunction> coefficients;
  /// Whether every C_Y equals the closed-form expansion coefficient.
  bool matches_closed_form = false;
};

PowerSumExpansion verify_power_sum_expansion(int n);

/// Cauchy identity through order Lambda^d in nx and ly variables, with the
/// closed-form norm. Also replays the t^L -> 1 limit (symbolic A, then
/// A = 1) and the principal-specialized identity at L = ly.
bool verify_cauchy(int d, int nx, int ly);

/// P_Y at q = t against a Jacobi-Trudi Schur function.
bool verify_schur_degeneration(const Partition& y);

/// <P_Y, P_mu> = 0 for distinct partitions of n.
bool verify_orthogonality(int n);

struct Check {
  std::string name;
  bool ok = false;
};

/// Every oracle check for partitions up to max_size.
std::vector<Check> run_suites(int max_size);

}  // namespace torus::oracle
