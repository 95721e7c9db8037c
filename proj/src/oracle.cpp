#include "torus/oracle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "torus/algebra/factored.hpp"
#include "torus/algebra/substitution.hpp"
#include "torus/errors.hpp"
#include "torus/macdonald.hpp"

namespace torus::oracle {

using algebra::exact_divide;
using algebra::SubstitutionMap;
using algebra::VarAlphabet;
using macdonald::qtA;

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

const VarAlphabet& alphabet() { return VarAlphabet::macd(); }

LaurentPolynomial poly_constant(const Rational& c) { return LaurentPolynomial::constant(alphabet(), c); }

LaurentPolynomial one_minus(const algebra::Monomial& b) { return poly_constant(1).times_binomial(b); }

// Binomials (1 - b) searched for in a denominator have exponents up to this.
constexpr int kMaxBinomialExponent = 16;

RationalFunction from_expanded(const algebra::FactoredRational& r) {
  RationalFunction::Factors den;
  for (const auto& [b, k] : r.factors()) {
    if (k < 0) den[b] = -k;
  }
  return RationalFunction(algebra::expand(r).numerator, std::move(den));
}

// Nullopt when a denominator factor maps to zero.
std::optional<RationalFunction> substituted(const RationalFunction& f, const SubstitutionMap& sigma) {
  RationalFunction::Factors den;
  for (const auto& [b, k] : f.den_factors()) {
    const auto image = sigma.apply(b);
    if (image.sign != 1) throw UsageError("substitution must keep binomials of the form 1 - b");
    if (image.monomial.is_identity()) return std::nullopt;
    den[image.monomial] += k;
  }
  return RationalFunction(algebra::substitute(f.num(), sigma), std::move(den));
}

// Identity on q and t, with the given image of A.
SubstitutionMap a_to(const algebra::Monomial& image) {
  SubstitutionMap sigma(alphabet(), alphabet());
  sigma.set("q", 1, qtA(1, 0)).set("t", 1, qtA(0, 1)).set("A", 1, image);
  return sigma;
}

void check_size(int n) {
  if (n < 1 || n > kMaxSize) {
    throw UsageError("oracle partitions need 1 <= |Y| <= " + std::to_string(kMaxSize));
  }
}

void check_variables(int nx) {
  if (nx < 1 || nx > kMaxVariables) {
    throw UsageError("oracle variable count must be in 1.." + std::to_string(kMaxVariables));
  }
}

std::vector<int> multiplicities(const Partition& p) {
  std::vector<int> mult(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int part : p.rows()) ++mult[static_cast<std::size_t>(part)];
  return mult;
}

long count_assignments(const std::vector<int>& parts, std::size_t i, std::vector<int>& room) {
  if (i == parts.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r < parts[i]) continue;
    r -= parts[i];
    total += count_assignments(parts, i + 1, room);
    r += parts[i];
  }
  return total;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw IntegrityError("singular power-sum transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Fraction-free elimination; every intermediate division is exact.
LaurentPolynomial determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return poly_constant(1);
  LaurentPolynomial previous = poly_constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPolynomial(alphabet());
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto quotient = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous);
        if (!quotient) throw IntegrityError("fraction-free elimination step was not exact");
        a[i][j] = std::move(*quotient);
      }
    }
    previous = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Everything about the partitions of one n that the checks share.
struct Table {
  int n = 0;
  // Ascending in dominance order, which is total for n <= 5.
  std::vector<Partition> parts;
  // power[rho][lambda]: coefficient of m_lambda in p_rho.
  std::vector<std::vector<long>> power;
  // D * <m_a, m_b> with D = prod_k (1 - t^k)^{floor(n/k)}.
  PolyMatrix gram;
  // lower[y][mu]: coefficient of m_mu in P_y.
  std::vector<std::vector<RationalFunction>> lower;

  std::size_t index(const Partition& p) const {
    const auto it = std::find(parts.begin(), parts.end(), p);
    if (it == parts.end()) throw UsageError("partition " + p.to_string() + " has the wrong size");
    return static_cast<std::size_t>(it - parts.begin());
  }
};

std::shared_ptr<const Table> build_table(int n) {
  auto table = std::make_shared<Table>();
  table->n = n;
  table->parts = enumerate_partitions(n);
  std::reverse(table->parts.begin(), table->parts.end());
  const auto& parts = table->parts;
  const std::size_t count = parts.size();
  for (std::size_t i = 1; i < count; ++i) {
    if (!parts[i].dominates(parts[i - 1])) {
      throw IntegrityError("dominance order is not total for n = " + std::to_string(n));
    }
  }

  table->power.assign(count, std::vector<long>(count, 0));
  std::vector<std::vector<Rational>> power_q(count, std::vector<Rational>(count, 0));
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t l = 0; l < count; ++l) {
      std::vector<int> room = parts[l].rows();
      table->power[r][l] = count_assignments(parts[r].rows(), 0, room);
      power_q[r][l] = table->power[r][l];
    }
  }
  const auto to_power = invert(power_q);  // to_power[lambda][rho]

  std::vector<LaurentPolynomial> weight;
  for (const auto& rho : parts) {
    LaurentPolynomial w = poly_constant(z_factor(rho));
    for (int part : rho.rows()) w = w.times_binomial(qtA(part, 0));
    const auto mult = multiplicities(rho);
    for (int k = 1; k <= n; ++k) {
      const int left = n / k - (k < static_cast<int>(mult.size()) ? mult[static_cast<std::size_t>(k)] : 0);
      w = w.times_binomial(qtA(0, k), left);
    }
    weight.push_back(std::move(w));
  }

  table->gram.assign(count, std::vector<LaurentPolynomial>(count, LaurentPolynomial(alphabet())));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      LaurentPolynomial entry(alphabet());
      for (std::size_t r = 0; r < count; ++r) {
        const Rational c = to_power[a][r] * to_power[b][r];
        if (c != 0) entry = entry + weight[r].scaled(c);
      }
      table->gram[a][b] = entry;
      table->gram[b][a] = entry;
    }
  }

  // Cramer's rule on <P_y, m_nu> = 0 for nu below y.
  table->lower.assign(count, std::vector<RationalFunction>(count));
  for (std::size_t y = 0; y < count; ++y) {
    table->lower[y][y] = RationalFunction::constant(1);
    if (y == 0) continue;
    PolyMatrix system(y, std::vector<LaurentPolynomial>(y, LaurentPolynomial(alphabet())));
    for (std::size_t nu = 0; nu < y; ++nu) {
      for (std::size_t mu = 0; mu < y; ++mu) system[nu][mu] = table->gram[mu][nu];
    }
    const LaurentPolynomial det = determinant(system);
    if (det.is_zero()) throw IntegrityError("singular Gram block for " + parts[y].to_string());
    for (std::size_t mu = 0; mu < y; ++mu) {
      PolyMatrix replaced = system;
      for (std::size_t nu = 0; nu < y; ++nu) replaced[nu][mu] = -table->gram[y][nu];
      table->lower[y][mu] = RationalFunction(determinant(std::move(replaced)), det);
    }
  }
  return table;
}

std::shared_ptr<const Table> table_for(int n) {
  check_size(n);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Table>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_table(n);
  return slot;
}

// prod over parts of f(part).
template <typename F>
RationalFunction product_over(const Partition& rho, F f) {
  RationalFunction out = RationalFunction::constant(1);
  for (int part : rho.rows()) out = out * f(part);
  return out;
}

RationalFunction principal_of(const Table& table, std::size_t y, int n) {
  RationalFunction out;
  for (std::size_t mu = 0; mu <= y; ++mu) {
    if (table.lower[y][mu].is_zero()) continue;
    out = out + table.lower[y][mu] * RationalFunction(principal_monomial(table.parts[mu], n));
  }
  return out;
}

using PowerSum = std::map<Partition, Rational>;

PowerSum multiply(const PowerSum& a, const PowerSum& b) {
  PowerSum out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      std::vector<int> rows = pa.rows();
      rows.insert(rows.end(), pb.rows().begin(), pb.rows().end());
      std::sort(rows.begin(), rows.end(), std::greater<>());
      out[Partition(std::move(rows))] += ca * cb;
    }
  }
  return out;
}

PowerSum complete(int k) {
  if (k < 0) return {};
  if (k == 0) return {{Partition{}, 1}};
  PowerSum out;
  for (const auto& rho : enumerate_partitions(k)) out[rho] = 1 / z_factor(rho);
  return out;
}

}  // namespace

RationalFunction::RationalFunction() : RationalFunction(LaurentPolynomial(VarAlphabet::macd())) {}

RationalFunction::RationalFunction(LaurentPolynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPolynomial num, Factors den) : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [b, k] : den_) {
    if (b.is_identity() || k < 0) throw UsageError("denominator factors must be (1 - b)^k with b != 1, k >= 0");
  }
  cancel();
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)) {
  if (den.is_zero()) throw UsageError("rational function with zero denominator");
  const algebra::Monomial content = algebra::monomial_content(den);
  den = den.shifted(content.inverse());
  num_ = num_.shifted(content.inverse());
  // Largest exponents first, so (1 - q^2) is taken whole rather than leaving (1 + q).
  std::vector<int> top(den.alphabet().size(), 0);
  for (const auto& [m, c] : den.terms()) {
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::min(std::max(top[i], m[i]), kMaxBinomialExponent);
  }
  std::vector<algebra::Monomial> candidates;
  algebra::Monomial b(top.size());
  for (;;) {
    if (!b.is_identity()) candidates.push_back(b);
    std::size_t i = 0;
    while (i < top.size() && b[i] == top[i]) b.set(i++, 0);
    if (i == top.size()) break;
    b.set(i, b[i] + 1);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return x.total_degree() > y.total_degree();
  });
  for (const auto& candidate : candidates) {
    const LaurentPolynomial binomial = one_minus(candidate);
    while (den.size() > 1) {
      auto quotient = exact_divide(den, binomial);
      if (!quotient) break;
      den = std::move(*quotient);
      ++den_[candidate];
    }
  }
  auto rest = exact_divide(num_, den);
  if (!rest) throw IntegrityError("denominator does not reduce to a product of binomials");
  num_ = std::move(*rest);
  cancel();
}

void RationalFunction::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    const LaurentPolynomial binomial = one_minus(it->first);
    while (it->second > 0) {
      auto quotient = exact_divide(num_, binomial);
      if (!quotient) break;
      num_ = std::move(*quotient);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RationalFunction RationalFunction::constant(const Rational& c) {
  return RationalFunction(LaurentPolynomial::constant(VarAlphabet::macd(), c));
}

LaurentPolynomial RationalFunction::den() const {
  LaurentPolynomial out = LaurentPolynomial::constant(num_.alphabet(), 1);
  for (const auto& [b, k] : den_) out = out.times_binomial(b, k);
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  Factors common = den_;
  for (const auto& [b, k] : other.den_) common[b] = std::max(common[b], k);
  auto lift = [&common](const RationalFunction& f) {
    LaurentPolynomial out = f.num_;
    for (const auto& [b, k] : common) {
      const auto it = f.den_.find(b);
      out = out.times_binomial(b, k - (it == f.den_.end() ? 0 : it->second));
    }
    return out;
  };
  LaurentPolynomial num = lift(*this) + lift(other);
  return RationalFunction(std::move(num), std::move(common));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator-(const RationalFunction& other) const { return *this + (-other); }

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
  if (is_zero() || other.is_zero()) return RationalFunction();
  Factors den = den_;
  for (const auto& [b, k] : other.den_) den[b] += k;
  return RationalFunction(num_ * other.num_, std::move(den));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

std::string to_string(const RationalFunction& f) {
  if (f.den_factors().empty()) return algebra::to_string(f.num());
  std::string den;
  for (const auto& [b, k] : f.den_factors()) {
    if (!den.empty()) den += " * ";
    den += "(1 - " + algebra::to_string(LaurentPolynomial::monomial(f.num().alphabet(), b)) + ")";
    if (k != 1) den += "^" + std::to_string(k);
  }
  return "(" + algebra::to_string(f.num()) + ") / " + den;
}

RationalFunction SymmetricPoly::coefficient(const Partition& mu) const {
  const auto it = terms.find(mu);
  return it == terms.end() ? RationalFunction() : it->second;
}

long power_sum_coefficient(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) return 0;
  std::vector<int> room = lambda.rows();
  return count_assignments(rho.rows(), 0, room);
}

Rational z_factor(const Partition& rho) {
  mpz_class z = 1;
  const auto mult = multiplicities(rho);
  for (std::size_t k = 1; k < mult.size(); ++k) {
    for (int i = 1; i <= mult[k]; ++i) z *= static_cast<unsigned long>(k * static_cast<std::size_t>(i));
  }
  return Rational(z);
}

SymmetricPoly macdonald_P(const Partition& y, int nx) {
  check_variables(nx);
  if (y.length() > nx) throw UsageError("P" + y.to_string() + " needs at least " + std::to_string(y.length()) + " variables");
  const auto table = table_for(y.size());
  const std::size_t idx = table->index(y);
  SymmetricPoly out;
  out.nx = nx;
  for (std::size_t mu = 0; mu <= idx; ++mu) {
    if (table->parts[mu].length() > nx || table->lower[idx][mu].is_zero()) continue;
    out.terms.emplace(table->parts[mu], table->lower[idx][mu]);
  }
  return out;
}

LaurentPolynomial principal_monomial(const Partition& mu, int n) {
  if (mu.length() > n) return LaurentPolynomial(alphabet());
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::copy(mu.rows().begin(), mu.rows().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<LaurentPolynomial::Term> terms;
  do {
    int power = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) power += static_cast<int>(i) * exps[i];
    terms.emplace_back(qtA(0, power), 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return LaurentPolynomial::from_terms(alphabet(), std::move(terms));
}

bool verify_dimension(const Partition& y, int n_concrete) {
  check_variables(n_concrete);
  const auto table = table_for(y.size());
  const RationalFunction brute = principal_of(*table, table->index(y), n_concrete);
  const auto closed = substituted(from_expanded(macdonald::dimension(y)), a_to(qtA(0, n_concrete)));
  return closed && brute == *closed;
}

PowerSumExpansion verify_power_sum_expansion(int n) {
  const auto table = table_for(n);
  const std::size_t count = table->parts.size();
  std::vector<RationalFunction> c(count);
  // p_n = m_[n], the top of the chain; solve downwards.
  for (std::size_t mu = count; mu-- > 0;) {
    if (mu + 1 == count) {
      c[mu] = RationalFunction::constant(1);
      continue;
    }
    RationalFunction sum;
    for (std::size_t y = mu + 1; y < count; ++y) sum = sum + c[y] * table->lower[y][mu];
    c[mu] = -sum;
  }
  PowerSumExpansion out;
  out.matches_closed_form = true;
  for (std::size_t y = 0; y < count; ++y) {
    const auto& part = table->parts[y];
    if (!(c[y] == from_expanded(macdonald::expansion_coefficient(part)))) out.matches_closed_form = false;
    out.coefficients.emplace(part, c[y]);
  }
  return out;
}

bool verify_cauchy(int d, int nx, int ly) {
  check_size(d);
  check_variables(nx);
  check_variables(ly);
  const SubstitutionMap a_to_one = a_to(qtA(0, 0));
  const LaurentPolynomial one_minus_a = one_minus(qtA(0, 0, 1));
  for (int n = 1; n <= d; ++n) {
    const auto table = table_for(n);
    const std::size_t count = table->parts.size();
    std::vector<RationalFunction> norm;
    std::vector<RationalFunction> limit;
    std::vector<RationalFunction> principal;
    for (std::size_t y = 0; y < count; ++y) {
      const auto& part = table->parts[y];
      norm.push_back(from_expanded(macdonald::cauchy_norm(part)));
      const RationalFunction dim = from_expanded(macdonald::dimension(part));
      auto reduced = exact_divide(dim.num(), one_minus_a);
      if (!reduced) return false;
      const auto at_one = substituted(RationalFunction(*reduced, dim.den_factors()), a_to_one);
      if (!at_one) return false;
      limit.push_back(*at_one);
      principal.push_back(principal_of(*table, y, ly));
      const RationalFunction c_y = RationalFunction(one_minus(qtA(n, 0))) * norm[y] * limit[y];
      if (!(c_y == from_expanded(macdonald::expansion_coefficient(part)))) return false;
    }
    std::vector<RationalFunction> kernel;  // prod (1 - t^k) / (1 - q^k) per rho
    std::vector<RationalFunction> kernel_l;  // prod (1 - t^{Lk}) / (1 - q^k) per rho
    for (const auto& rho : table->parts) {
      const RationalFunction inv_z = RationalFunction::constant(1 / z_factor(rho));
      kernel.push_back(inv_z * product_over(rho, [](int k) {
                         return RationalFunction(one_minus(qtA(0, k)), one_minus(qtA(k, 0)));
                       }));
      kernel_l.push_back(inv_z * product_over(rho, [ly](int k) {
                           return RationalFunction(one_minus(qtA(0, ly * k)), one_minus(qtA(k, 0)));
                         }));
    }
    for (std::size_t l = 0; l < count; ++l) {
      if (table->parts[l].length() > nx) continue;
      for (std::size_t m = 0; m < count; ++m) {
        if (table->parts[m].length() > ly) continue;
        RationalFunction lhs;
        RationalFunction rhs;
        for (std::size_t y = 0; y < count; ++y) {
          lhs = lhs + norm[y] * table->lower[y][l] * table->lower[y][m];
        }
        for (std::size_t r = 0; r < count; ++r) {
          const long c = table->power[r][l] * table->power[r][m];
          if (c != 0) rhs = rhs + RationalFunction::constant(c) * kernel[r];
        }
        if (!(lhs == rhs)) return false;
      }
      RationalFunction lhs_limit;
      RationalFunction lhs_principal;
      RationalFunction rhs_principal;
      for (std::size_t y = 0; y < count; ++y) {
        lhs_limit = lhs_limit + norm[y] * table->lower[y][l] * limit[y];
        lhs_principal = lhs_principal + norm[y] * table->lower[y][l] * principal[y];
      }
      for (std::size_t r = 0; r < count; ++r) {
        if (table->power[r][l] != 0) {
          rhs_principal = rhs_principal + RationalFunction::constant(table->power[r][l]) * kernel_l[r];
        }
      }
      const RationalFunction rhs_limit = l + 1 == count
                                             ? RationalFunction(poly_constant(1), one_minus(qtA(n, 0)))
                                             : RationalFunction();
      if (!(lhs_limit == rhs_limit) || !(lhs_principal == rhs_principal)) return false;
    }
  }
  return true;
}

bool verify_schur_degeneration(const Partition& y) {
  const auto table = table_for(y.size());
  const std::size_t idx = table->index(y);
  const int len = y.length();
  std::vector<int> perm(static_cast<std::size_t>(len));
  std::iota(perm.begin(), perm.end(), 0);
  PowerSum schur;
  do {
    int inversions = 0;
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    PowerSum term{{Partition{}, inversions % 2 == 0 ? 1 : -1}};
    for (int i = 0; i < len && !term.empty(); ++i) {
      term = multiply(term, complete(y.row(i + 1) - (i + 1) + (perm[static_cast<std::size_t>(i)] + 1)));
    }
    for (const auto& [rho, c] : term) schur[rho] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));

  SubstitutionMap q_to_t(alphabet(), alphabet());
  q_to_t.set("q", 1, qtA(0, 1)).set("t", 1, qtA(0, 1)).set("A", 1, qtA(0, 0, 1));
  for (std::size_t mu = 0; mu < table->parts.size(); ++mu) {
    Rational expected = 0;
    for (const auto& [rho, c] : schur) expected += c * table->power[table->index(rho)][mu];
    const auto at_q_equals_t = substituted(table->lower[idx][mu], q_to_t);
    if (!at_q_equals_t || !(*at_q_equals_t == RationalFunction::constant(expected))) return false;
  }
  return true;
}

bool verify_orthogonality(int n) {
  const auto table = table_for(n);
  const std::size_t count = table->parts.size();
  for (std::size_t a = 0; a < count; ++a) {
    // v[beta] = sum_alpha u[a][alpha] gram[alpha][beta]
    std::vector<RationalFunction> v(count);
    for (std::size_t beta = 0; beta < count; ++beta) {
      for (std::size_t alpha = 0; alpha <= a; ++alpha) {
        v[beta] = v[beta] + table->lower[a][alpha] * RationalFunction(table->gram[alpha][beta]);
      }
    }
    for (std::size_t b = 0; b < a; ++b) {
      RationalFunction pairing;
      for (std::size_t beta = 0; beta <= b; ++beta) pairing = pairing + v[beta] * table->lower[b][beta];
      if (!pairing.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Check> run_suites(int max_size) {
  check_size(max_size);
  std::vector<Check> checks;
  for (int n = 1; n <= max_size; ++n) {
    checks.push_back({"power-sum expansion n=" + std::to_string(n), verify_power_sum_expansion(n).matches_closed_form});
    checks.push_back({"orthogonality n=" + std::to_string(n), verify_orthogonality(n)});
  }
  for (int n = 1; n <= max_size; ++n) {
    for (const auto& y : enumerate_partitions(n)) {
      for (int big_n : {3, 4, 5}) {
        checks.push_back({"dimension " + y.to_string() + " N=" + std::to_string(big_n), verify_dimension(y, big_n)});
      }
    }
  }
  for (int n = 1; n <= std::min(max_size, 3); ++n) {
    for (const auto& y : enumerate_partitions(n)) {
      checks.push_back({"schur degeneration " + y.to_string(), verify_schur_degeneration(y)});
    }
  }
  for (int d = 1; d <= std::min(max_size, 3); ++d) {
    const auto vars = std::to_string(d);
    checks.push_back({"cauchy order " + vars + " Nx=Ly=" + vars, verify_cauchy(d, d, d)});
  }
  return checks;
}

}  // namespace torus::oracle
