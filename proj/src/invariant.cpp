#include "torus/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "torus/errors.hpp"
#include "torus/macdonald.hpp"
#include "torus/partitions.hpp"

namespace torus::invariant {

using algebra::FactoredRational;
using algebra::RationalSum;
using algebra::SubstitutionMap;
using algebra::WeightedTerm;
using macdonald::qtA;

namespace {

// Polynomials in z with (a, q, t) coefficients, index = power of z.
using ZPoly = std::vector<LaurentPolynomial>;

ZPoly times_pole_factor(const ZPoly& p, const Monomial& alpha) {
  ZPoly out(p.size() + 1, LaurentPolynomial(VarAlphabet::knot()));
  for (std::size_t j = 0; j < p.size(); ++j) {
    out[j] = out[j] + p[j];
    out[j + 1] = out[j + 1] - p[j].shifted(alpha);
  }
  return out;
}

ZPoly trimmed(ZPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

// 1 - sigma(b), as a polynomial over the target alphabet.
LaurentPolynomial substituted_binomial(const Monomial& b, const SubstitutionMap& sigma) {
  auto image = sigma.apply(b);
  auto one = LaurentPolynomial::constant(sigma.target(), 1);
  auto mono = LaurentPolynomial::monomial(sigma.target(), image.monomial, image.sign);
  return one - mono;
}

// Divides num by prod (1 - sigma(b))^mult one binomial at a time.
std::optional<LaurentPolynomial> divide_by_factors(
    LaurentPolynomial num, const std::vector<std::pair<Monomial, int>>& factors,
    const SubstitutionMap& sigma) {
  for (const auto& [b, mult] : factors) {
    const auto divisor = substituted_binomial(b, sigma);
    for (int i = 0; i < mult; ++i) {
      auto q = algebra::exact_divide(num, divisor);
      if (!q) return std::nullopt;
      num = std::move(*q);
    }
  }
  return num;
}

Superpolynomial& expect_polynomial(ComputeResult& r, int n, int m) {
  if (auto* p = std::get_if<Superpolynomial>(&r)) return *p;
  throw CalibrationError("family member (" + std::to_string(n) + "," + std::to_string(m) +
                         ") is not polynomial");
}

}  // namespace

KnotRequest KnotRequest::make(int n, int m) {
  if (n < 1 || m < 1) throw UsageError("winding numbers must be positive");
  return {n, m};
}

FactoredRational normalization_constant(const KnotRequest& req) {
  const auto& alphabet = VarAlphabet::macd();
  const int n = req.n;
  const int r = req.r();
  const int q_power = r * n + r * (r - 1) / 2 - n * (n - 1) / 2;
  return FactoredRational::binomial(alphabet, qtA(1, 0)) *
         FactoredRational::binomial(alphabet, qtA(n, 0), -1) *
         FactoredRational::monomial(alphabet, qtA(q_power, req.m));
}

std::vector<WeightedTerm> partition_terms(const KnotRequest& req) {
  const FactoredRational constant = normalization_constant(req);
  const FactoredRational inv_fundamental = macdonald::dimension(Partition{1}).inverse();
  const auto& alphabet = VarAlphabet::macd();
  std::vector<WeightedTerm> terms;
  for (const Partition& y : enumerate_partitions(req.n)) {
    FactoredRational factor =
        constant * FactoredRational::monomial(alphabet, macdonald::framing(y).pow(req.k())) *
        macdonald::expansion_coefficient(y) * macdonald::dimension(y) * inv_fundamental;
    terms.push_back({macdonald::gamma(y, req.r()), std::move(factor)});
  }
  return terms;
}

PropertyFlags verify_properties(const LaurentPolynomial& p) {
  PropertyFlags flags;
  flags.polynomial = true;
  flags.integral = true;
  flags.positive = !p.is_zero();
  for (const auto& [m, c] : p.terms()) {
    for (auto e : m.exponents()) {
      if (e < 0) flags.polynomial = false;
    }
    if (c.get_den() != 1) flags.integral = false;
    if (sgn(c) <= 0) flags.positive = false;
  }
  flags.normalized = !p.is_zero() && algebra::monomial_content(p).is_identity() &&
                     p.constant_term() == 1;
  return flags;
}

PropertyFlags verify_properties(const Superpolynomial& p) { return verify_properties(p.terms); }

ComputeResult compute(const KnotRequest& req, const ComputeOptions& options) {
  const auto terms = partition_terms(req);
  const RationalSum sum = algebra::sum_rationals(std::span<const WeightedTerm>(terms), options.threads);
  const auto& sigma = SubstitutionMap::to_knot_variables();
  auto quotient = divide_by_factors(algebra::substitute(sum.numerator, sigma),
                                    sum.denominator_factors, sigma);
  const int g = std::gcd(req.n, req.m);
  if (!quotient) {
    return NonPolynomial{req.n, req.m, g,
                         "P(" + std::to_string(req.n) + "," + std::to_string(req.m) +
                             ") is not a polynomial: gcd(n,m) = " + std::to_string(g)};
  }
  if (quotient->is_zero()) {
    throw IntegrityError("partition sum vanished for (" + std::to_string(req.n) + "," +
                         std::to_string(req.m) + ")");
  }
  Superpolynomial out;
  out.n = req.n;
  out.m = req.m;
  out.raw_content = algebra::monomial_content(*quotient);
  out.terms = quotient->shifted(out.raw_content.inverse());
  if (out.terms.constant_term() != 1) {
    throw IntegrityError("normalized (" + std::to_string(req.n) + "," + std::to_string(req.m) +
                         ") has constant term " + out.terms.constant_term().get_str() +
                         " after removing content " +
                         algebra::to_string(out.raw_content, VarAlphabet::knot()));
  }
  out.flags = verify_properties(out.terms);
  return out;
}

const VarAlphabet& homfly_alphabet() {
  static const VarAlphabet alphabet({"a", "q"});
  return alphabet;
}

const VarAlphabet& single_alphabet() {
  static const VarAlphabet alphabet({"q"});
  return alphabet;
}

LaurentPolynomial specialize(const LaurentPolynomial& p, Specialization target) {
  static const SubstitutionMap to_homfly = [] {
    SubstitutionMap s(VarAlphabet::knot(), homfly_alphabet());
    s.set("a", 1, {1, 0}).set("q", 1, {0, 1}).set("t", -1, {0, 0});
    return s;
  }();
  static const SubstitutionMap to_jones = [] {
    SubstitutionMap s(homfly_alphabet(), single_alphabet());
    s.set("a", 1, {2}).set("q", 1, {1});
    return s;
  }();
  static const SubstitutionMap to_alexander = [] {
    SubstitutionMap s(homfly_alphabet(), single_alphabet());
    s.set("a", 1, {0}).set("q", 1, {1});
    return s;
  }();
  const auto homfly = algebra::substitute(p, to_homfly);
  switch (target) {
    case Specialization::homfly:
      return homfly;
    case Specialization::jones:
      return algebra::substitute(homfly, to_jones);
    case Specialization::alexander:
      return algebra::substitute(homfly, to_alexander);
  }
  throw UsageError("unknown specialization");
}

LaurentPolynomial specialize(const Superpolynomial& p, Specialization target) {
  return specialize(p.terms, target);
}

LaurentPolynomial GeneratingFunction::series_coefficient(int k) const {
  if (k < 0) throw UsageError("series coefficient index must be nonnegative");
  const auto size = static_cast<std::size_t>(k) + 1;
  ZPoly s(size, LaurentPolynomial(VarAlphabet::knot()));
  for (std::size_t j = 0; j < std::min(size, numerator.size()); ++j) s[j] = numerator[j];
  // Multiply by 1 / (1 - z alpha) = sum alpha^i z^i, one pole at a time.
  for (const Monomial& alpha : denominator) {
    for (std::size_t j = 1; j < size; ++j) s[j] = s[j] + s[j - 1].shifted(alpha);
  }
  return s.back();
}

GeneratingFunction generating_function(int n, int r, int k_check, const ComputeOptions& options) {
  if (n < 2 || r < 1 || r >= n) throw UsageError("generating function needs 1 <= r < n");
  const auto& sigma = SubstitutionMap::to_knot_variables();
  const int probe = std::max(3, k_check);
  std::vector<Superpolynomial> family;
  for (int k = 0; k <= probe; ++k) {
    auto result = compute(KnotRequest::make(n, n * k + r), options);
    family.push_back(std::move(expect_polynomial(result, n, n * k + r)));
  }

  GeneratingFunction gf;
  gf.n = n;
  gf.r = r;
  gf.offset = family[0].raw_content;
  gf.ratio = family[1].raw_content / family[0].raw_content;
  for (int k = 1; k < 3; ++k) {
    const Monomial step = family[k + 1].raw_content / family[k].raw_content;
    if (step != gf.ratio) {
      throw CalibrationError(
          "content ratio for (" + std::to_string(n) + ", " + std::to_string(n) + "k+" +
          std::to_string(r) + ") changes between k=" + std::to_string(k - 1) + " and k=" +
          std::to_string(k) + ": " + algebra::to_string(gf.ratio, VarAlphabet::knot()) + " vs " +
          algebra::to_string(step, VarAlphabet::knot()));
    }
  }

  // Per-partition coefficient c_Y / offset and pole alpha_Y = sigma(t^n T_Y) / ratio.
  struct PartitionPart {
    LaurentPolynomial numerator;
    FactoredRational denominator;
    Monomial pole;
  };
  std::vector<PartitionPart> parts;
  const auto partitions = enumerate_partitions(n);
  const auto terms = partition_terms(KnotRequest::make(n, r));
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    const auto& factor = terms[i].factor;
    FactoredRational den_only(VarAlphabet::macd());
    FactoredRational num_only = FactoredRational::monomial(VarAlphabet::macd(), factor.prefactor(),
                                                           factor.coeff());
    for (const auto& [b, mult] : factor.factors()) {
      auto piece = FactoredRational::binomial(VarAlphabet::macd(), b, mult);
      if (mult < 0) {
        den_only = den_only * piece;
      } else {
        num_only = num_only * piece;
      }
    }
    auto num = algebra::substitute(terms[i].weight * algebra::expand(num_only).numerator, sigma)
                   .shifted(gf.offset.inverse());
    auto pole_image = sigma.apply(qtA(0, n) * macdonald::framing(partitions[i]));
    if (pole_image.sign < 0) throw IntegrityError("pole monomial picked up a sign");
    parts.push_back({std::move(num), algebra::substitute(den_only, sigma),
                     pole_image.monomial / gf.ratio});
  }

  for (const auto& p : parts) gf.denominator.push_back(p.pole);
  std::sort(gf.denominator.begin(), gf.denominator.end());
  gf.denominator.erase(std::unique(gf.denominator.begin(), gf.denominator.end()),
                       gf.denominator.end());

  // numerator(z) = sum_Y c_Y prod_{alpha != alpha_Y} (1 - z alpha)
  const std::size_t degree = gf.denominator.size();
  std::vector<std::vector<WeightedTerm>> by_power(degree);
  for (const auto& p : parts) {
    ZPoly others{LaurentPolynomial::constant(VarAlphabet::knot(), 1)};
    for (const Monomial& alpha : gf.denominator) {
      if (alpha != p.pole) others = times_pole_factor(others, alpha);
    }
    for (std::size_t j = 0; j < others.size(); ++j) {
      if (!others[j].is_zero()) by_power[j].push_back({p.numerator * others[j], p.denominator});
    }
  }
  static const SubstitutionMap identity_knot = [] {
    SubstitutionMap s(VarAlphabet::knot(), VarAlphabet::knot());
    s.set("a", 1, {1, 0, 0}).set("q", 1, {0, 1, 0}).set("t", 1, {0, 0, 1});
    return s;
  }();
  for (std::size_t j = 0; j < degree; ++j) {
    if (by_power[j].empty()) {
      gf.numerator.emplace_back(VarAlphabet::knot());
      continue;
    }
    auto sum = algebra::sum_rationals(std::span<const WeightedTerm>(by_power[j]), options.threads);
    auto coeff = divide_by_factors(sum.numerator, sum.denominator_factors, identity_knot);
    if (!coeff) {
      throw IntegrityError("generating function numerator at z^" + std::to_string(j) +
                           " is not a polynomial");
    }
    gf.numerator.push_back(std::move(*coeff));
  }
  gf.numerator = trimmed(std::move(gf.numerator));

  for (int k = 0; k <= k_check; ++k) {
    if (gf.series_coefficient(k) != family[static_cast<std::size_t>(k)].terms) {
      throw IntegrityError("generating function series disagrees with compute(" +
                           std::to_string(n) + "," + std::to_string(n * k + r) + ")");
    }
  }
  gf.validated_through = k_check;
  return gf;
}

std::optional<std::vector<LaurentPolynomial>> rebase(const GeneratingFunction& gf,
                                                     const std::vector<Monomial>& target) {
  std::vector<Monomial> missing = target;
  for (const Monomial& alpha : gf.denominator) {
    auto it = std::find(missing.begin(), missing.end(), alpha);
    if (it == missing.end()) return std::nullopt;
    missing.erase(it);
  }
  ZPoly num = gf.numerator;
  for (const Monomial& alpha : missing) num = times_pole_factor(num, alpha);
  return trimmed(std::move(num));
}

bool equivalent(const GeneratingFunction& a, const GeneratingFunction& b) {
  ZPoly lhs = a.numerator;
  for (const Monomial& alpha : b.denominator) lhs = times_pole_factor(lhs, alpha);
  ZPoly rhs = b.numerator;
  for (const Monomial& alpha : a.denominator) rhs = times_pole_factor(rhs, alpha);
  return trimmed(std::move(lhs)) == trimmed(std::move(rhs));
}

std::size_t ScanReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const ScanEntry& e) { return !e.ok; }));
}

ScanReport scan(int n_max, int m_max, const ComputeOptions& options) {
  if (n_max < 2 || m_max < 2) throw UsageError("scan bounds must be >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int n = 2; n <= n_max; ++n) {
    for (int m = n + 1; m <= m_max; ++m) pairs.emplace_back(n, m);
  }
  ScanReport report;
  report.entries.resize(pairs.size());

  auto run_one = [&](std::size_t i) {
    const auto [n, m] = pairs[i];
    ScanEntry& e = report.entries[i];
    e.n = n;
    e.m = m;
    e.gcd = std::gcd(n, m);
    const bool coprime = e.gcd == 1;
    const auto start = std::chrono::steady_clock::now();
    try {
      auto result = compute(KnotRequest::make(n, m));
      if (auto* p = std::get_if<Superpolynomial>(&result)) {
        e.flags = p->flags;
        e.term_count = p->terms.size();
        for (const auto& [mono, c] : p->terms.terms()) {
          e.a_max = std::max(e.a_max, mono[0]);
          e.q_max = std::max(e.q_max, mono[1]);
          e.t_max = std::max(e.t_max, mono[2]);
        }
        if (!coprime) {
          e.status = "unexpected_polynomial";
        } else if (!p->flags.all()) {
          e.status = "flags_failed";
        } else {
          e.status = "polynomial";
          e.ok = true;
        }
      } else {
        e.status = coprime ? "unexpected_nonpolynomial" : "nonpolynomial";
        e.ok = !coprime;
      }
    } catch (const IntegrityError&) {
      e.status = "integrity_error";
    }
    e.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  };

  const unsigned workers = std::min<unsigned>(std::max(1U, options.threads), pairs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "n,m,gcd,status,a_max,q_max,t_max,term_count,millis\n";
  for (const auto& e : report.entries) {
    out << e.n << ',' << e.m << ',' << e.gcd << ',' << e.status << ',' << e.a_max << ','
        << e.q_max << ',' << e.t_max << ',' << e.term_count << ',';
    out.precision(3);
    out << std::fixed << e.millis << '\n';
  }
  return out.str();
}

}  // namespace torus::invariant
