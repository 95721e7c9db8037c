#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torus/algebra/factored.hpp"
#include "torus/algebra/laurent.hpp"
#include "torus/algebra/substitution.hpp"

namespace torus::invariant {

using algebra::LaurentPolynomial;
using algebra::Monomial;
using algebra::VarAlphabet;

/// Torus knot winding numbers with m = n k + r, 0 <= r < n.
struct KnotRequest {
  int n = 1;
  int m = 1;

  /// Throws UsageError unless n, m >= 1.
  static KnotRequest make(int n, int m);
  int k() const { return m / n; }
  int r() const { return m % n; }
};

struct PropertyFlags {
  bool polynomial = false;  ///< no negative exponents
  bool integral = false;    ///< every coefficient an integer
  bool positive = false;    ///< every coefficient > 0
  bool normalized = false;  ///< content 1 and constant term +1

  bool all() const { return polynomial && integral && positive && normalized; }
  friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

/// Normalized invariant P_{n,m}(a, q, t) over VarAlphabet::knot().
struct Superpolynomial {
  int n = 0;
  int m = 0;
  LaurentPolynomial terms{VarAlphabet::knot()};
  PropertyFlags flags;
  /// The monomial divided out of the raw sum during normalization.
  Monomial raw_content{0, 0, 0};

  /// terms * raw_content: the sum exactly as the formula produces it.
  LaurentPolynomial raw() const { return terms.shifted(raw_content); }
};

/// Exact division left a remainder: the sum is not a Laurent polynomial.
struct NonPolynomial {
  int n = 0;
  int m = 0;
  int gcd = 0;
  std::string message;
};

using ComputeResult = std::variant<Superpolynomial, NonPolynomial>;

struct ComputeOptions {
  unsigned threads = 1;
};

/// One summand per partition Y of n: weight gamma_Y^(r), factor
/// const * T_Y^k * C_Y * dim(Y) / dim([1]), all over (q, t, A).
std::vector<algebra::WeightedTerm> partition_terms(const KnotRequest& req);

/// The overall constant (1 - q)/(1 - q^n) t^m q^{rn + r(r-1)/2 - n(n-1)/2}.
algebra::FactoredRational normalization_constant(const KnotRequest& req);

/// Sums the partition terms, maps to (a, q, t), divides out the binomial
/// denominator, and normalizes by monomial content. Returns NonPolynomial when
/// the division is inexact. Throws IntegrityError when the normalized result
/// does not have constant term +1.
ComputeResult compute(const KnotRequest& req, const ComputeOptions& options = {});

/// Sets the flags by inspecting coefficients and exponents; never alters terms.
PropertyFlags verify_properties(const LaurentPolynomial& p);
PropertyFlags verify_properties(const Superpolynomial& p);

/// (a, q): HOMFLY variables.
const VarAlphabet& homfly_alphabet();
/// (q): Jones / Alexander variable.
const VarAlphabet& single_alphabet();

enum class Specialization { homfly, jones, alexander };

/// homfly: t = -1 (result over (a, q)); jones: additionally a = q^2;
/// alexander: additionally a = 1 (both over (q)).
LaurentPolynomial specialize(const Superpolynomial& p, Specialization target);
LaurentPolynomial specialize(const LaurentPolynomial& p, Specialization target);

/// F_{n,r}(z) = sum_k P_{n, nk+r} z^k as N(z) / prod_i (1 - z alpha_i).
struct GeneratingFunction {
  int n = 0;
  int r = 0;
  /// numerator[j] is the coefficient of z^j, over VarAlphabet::knot().
  std::vector<LaurentPolynomial> numerator;
  /// Pole monomials alpha_i, distinct, ascending.
  std::vector<Monomial> denominator;
  /// Raw content at k = 0 and the per-k content ratio.
  Monomial offset{0, 0, 0};
  Monomial ratio{0, 0, 0};
  /// Largest k for which the series was compared against compute().
  int validated_through = -1;

  /// Taylor coefficient of z^k.
  LaurentPolynomial series_coefficient(int k) const;
};

/// Closed-form generating function of the (n, nk + r) family, validated
/// against compute() for k = 0..k_check. Throws CalibrationError if the
/// content ratio between consecutive k = 0..3 is not constant (or a family
/// member is not polynomial), IntegrityError if the series check fails.
GeneratingFunction generating_function(int n, int r, int k_check = 3,
                                       const ComputeOptions& options = {});

/// Expresses gf over `target` poles (a superset of its own). Returns the
/// numerator coefficients, or nullopt when gf has a pole not in target.
std::optional<std::vector<LaurentPolynomial>> rebase(const GeneratingFunction& gf,
                                                     const std::vector<Monomial>& target);

/// True when both describe the same rational function of z
/// (cross-multiplied numerators agree).
bool equivalent(const GeneratingFunction& a, const GeneratingFunction& b);

struct ScanEntry {
  int n = 0;
  int m = 0;
  int gcd = 0;
  /// polynomial | nonpolynomial | unexpected_polynomial |
  /// unexpected_nonpolynomial | flags_failed | integrity_error
  std::string status;
  bool ok = false;
  PropertyFlags flags;
  int a_max = 0;
  int q_max = 0;
  int t_max = 0;
  std::size_t term_count = 0;
  double millis = 0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  std::size_t failures() const;
};

/// Runs compute() for 2 <= n <= n_max, n < m <= m_max. Coprime pairs must be
/// fully flagged polynomials, the others NonPolynomial. Entries come back in
/// (n, m) order whatever the thread count.
ScanReport scan(int n_max, int m_max, const ComputeOptions& options = {});

/// n,m,gcd,status,a_max,q_max,t_max,term_count,millis
std::string to_csv(const ScanReport& report);

}  // namespace torus::invariant
