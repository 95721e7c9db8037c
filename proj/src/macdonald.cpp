#include "torus/macdonald.hpp"

#include "torus/errors.hpp"

namespace torus::macdonald {

using algebra::VarAlphabet;

namespace {

int half_exact(int value, const char* what) {
  if (value % 2 != 0) {
    throw IntegrityError(std::string("odd exponent sum in ") + what);
  }
  return value / 2;
}

// sum (Yt_i^2 - Y_i) / 2, the t-power shared by the dimension and C_Y.
int dimension_t_power(const Partition& y) {
  const Partition columns = y.transpose();
  int sum = 0;
  for (int c : columns.rows()) sum += c * c;
  return half_exact(sum - y.size(), "dimension prefactor");
}

}  // namespace

Monomial qtA(int q_exp, int t_exp, int a_exp) { return Monomial{q_exp, t_exp, a_exp}; }

Monomial cell_weight(Cell c) { return qtA(-c.col, c.row); }

Monomial framing_closed_form(const Partition& y) {
  int t_sum = 0;
  int q_sum = 0;
  const Partition columns = y.transpose();
  for (int c : columns.rows()) t_sum += c * c;
  for (int r : y.rows()) {
    t_sum += r;
    q_sum += r + r * r;
  }
  return qtA(-half_exact(q_sum, "framing q-exponent"), half_exact(t_sum, "framing t-exponent"));
}

Monomial framing(const Partition& y) {
  Monomial product = qtA(0, 0);
  for (const Cell& c : y.cells()) product = product * cell_weight(c);
  if (product != framing_closed_form(y)) {
    throw IntegrityError("framing cell product disagrees with closed form for " + y.to_string());
  }
  return product;
}

std::vector<LaurentPolynomial> gamma_all(const Partition& y) {
  const auto& alphabet = VarAlphabet::macd();
  std::vector<LaurentPolynomial> e(static_cast<std::size_t>(y.size()) + 1,
                                   LaurentPolynomial(alphabet));
  e[0] = LaurentPolynomial::constant(alphabet, 1);
  std::size_t seen = 0;
  for (const Cell& c : y.cells()) {
    const auto x = LaurentPolynomial::monomial(alphabet, cell_weight(c));
    ++seen;
    for (std::size_t r = seen; r >= 1; --r) e[r] = e[r] + x * e[r - 1];
  }
  return e;
}

LaurentPolynomial gamma(const Partition& y, int r) {
  if (r < 0) throw UsageError("gamma needs r >= 0");
  if (r > y.size()) return LaurentPolynomial(VarAlphabet::macd());
  return gamma_all(y)[static_cast<std::size_t>(r)];
}

FactoredRational dimension(const Partition& y) {
  const auto& alphabet = VarAlphabet::macd();
  FactoredRational out = FactoredRational::monomial(alphabet, qtA(0, dimension_t_power(y)));
  for (const Cell& c : y.cells()) {
    const auto s = cell_stats(y, c);
    out = out * FactoredRational::binomial(alphabet, qtA(c.col - 1, 1 - c.row, 1));
    out = out * FactoredRational::binomial(alphabet, qtA(s.arm, s.leg + 1), -1);
  }
  return out;
}

FactoredRational cauchy_norm(const Partition& y) {
  const auto& alphabet = VarAlphabet::macd();
  FactoredRational out(alphabet);
  for (const Cell& c : y.cells()) {
    const auto s = cell_stats(y, c);
    out = out * FactoredRational::binomial(alphabet, qtA(s.arm, s.leg + 1));
    out = out * FactoredRational::binomial(alphabet, qtA(s.arm + 1, s.leg), -1);
  }
  return out;
}

FactoredRational expansion_coefficient(const Partition& y) {
  if (y.empty()) throw UsageError("expansion coefficient of the empty partition");
  const auto& alphabet = VarAlphabet::macd();
  FactoredRational out = FactoredRational::binomial(alphabet, qtA(y.size(), 0)) *
                         FactoredRational::monomial(alphabet, qtA(0, dimension_t_power(y)));
  for (const Cell& c : y.cells()) {
    const auto s = cell_stats(y, c);
    if (c.row != 1 || c.col != 1) {
      out = out * FactoredRational::binomial(alphabet, qtA(c.col - 1, 1 - c.row));
    }
    out = out * FactoredRational::binomial(alphabet, qtA(s.arm + 1, s.leg), -1);
  }
  return out;
}

}  // namespace torus::macdonald
