#include "torus/algebra/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

#include "torus/errors.hpp"

namespace torus::algebra {

namespace {

using Term = LaurentPolynomial::Term;

bool term_less(const Term& a, const Term& b) { return a.first < b.first; }

// Merges two ascending term lists, summing coefficients of equal monomials.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign_b > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational c = a[i].second;
      if (sign_b > 0) {
        c += b[j].second;
      } else {
        c -= b[j].second;
      }
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

// Floor division for possibly negative numerators; d > 0.
int floor_div(int n, int d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }

}  // namespace

LaurentPolynomial::LaurentPolynomial(VarAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

LaurentPolynomial::LaurentPolynomial(VarAlphabet alphabet, std::vector<Term> sorted_terms)
    : alphabet_(std::move(alphabet)), terms_(std::move(sorted_terms)) {}

LaurentPolynomial LaurentPolynomial::from_terms(VarAlphabet alphabet, std::vector<Term> terms) {
  for (const auto& [m, c] : terms) {
    if (m.size() != alphabet.size()) throw UsageError("monomial size does not match alphabet");
  }
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().second) == 0) merged.pop_back();
  return LaurentPolynomial(std::move(alphabet), std::move(merged));
}

LaurentPolynomial LaurentPolynomial::constant(VarAlphabet alphabet, const Rational& c) {
  Monomial one(alphabet.size());
  return monomial(std::move(alphabet), one, c);
}

LaurentPolynomial LaurentPolynomial::monomial(VarAlphabet alphabet, const Monomial& m,
                                              const Rational& c) {
  if (m.size() != alphabet.size()) throw UsageError("monomial size does not match alphabet");
  std::vector<Term> terms;
  if (sgn(c) != 0) terms.emplace_back(m, c);
  return LaurentPolynomial(std::move(alphabet), std::move(terms));
}

LaurentPolynomial LaurentPolynomial::variable(VarAlphabet alphabet, std::string_view name) {
  auto idx = alphabet.index_of(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  Monomial m(alphabet.size());
  m.set(*idx, 1);
  return monomial(std::move(alphabet), m);
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_identity());
}

Rational LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

Rational LaurentPolynomial::constant_term() const {
  return coefficient(Monomial(alphabet_.size()));
}

void LaurentPolynomial::require_same_alphabet(const LaurentPolynomial& other) const {
  if (!(alphabet_ == other.alphabet_)) throw UsageError("polynomial alphabets differ");
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scaled(-1); }

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
  require_same_alphabet(other);
  return LaurentPolynomial(alphabet_, merge_terms(terms_, other.terms_, +1));
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
  require_same_alphabet(other);
  return LaurentPolynomial(alphabet_, merge_terms(terms_, other.terms_, -1));
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
  require_same_alphabet(other);
  if (is_zero() || other.is_zero()) return LaurentPolynomial(alphabet_);
  const auto& small = size() <= other.size() ? *this : other;
  const auto& large = size() <= other.size() ? other : *this;
  if (small.size() == 1) {
    return large.shifted(small.terms_[0].first).scaled(small.terms_[0].second);
  }
  if (small.size() <= 3) {
    // Shifting preserves order, so a few merges beat hashing.
    LaurentPolynomial acc(alphabet_);
    for (const auto& [m, c] : small.terms_) {
      acc = acc + large.shifted(m).scaled(c);
    }
    return acc;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(small.size() * large.size());
  Rational prod;
  for (const auto& [ma, ca] : small.terms_) {
    for (const auto& [mb, cb] : large.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[ma * mb] += prod;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(), term_less);
  return LaurentPolynomial(alphabet_, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return LaurentPolynomial(alphabet_);
  if (c == 1) return *this;
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.second *= c;
  return LaurentPolynomial(alphabet_, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::shifted(const Monomial& m) const {
  if (m.size() != alphabet_.size()) throw UsageError("monomial size does not match alphabet");
  if (m.is_identity()) return *this;
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.first = t.first * m;
  return LaurentPolynomial(alphabet_, std::move(terms));
}

LaurentPolynomial LaurentPolynomial::times_binomial(const Monomial& b, int e) const {
  if (e < 0) throw UsageError("times_binomial needs a nonnegative exponent");
  LaurentPolynomial out = *this;
  for (int i = 0; i < e; ++i) out = out - out.shifted(b);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(alphabet_, 1);
  LaurentPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

Monomial monomial_content(const LaurentPolynomial& f) {
  if (f.is_zero()) throw UsageError("monomial content of the zero polynomial");
  Monomial content = f.terms().front().first;
  for (const auto& [m, c] : f.terms()) content = Monomial::min(content, m);
  return content;
}

namespace detail {

std::optional<LaurentPolynomial> divide_lex(const LaurentPolynomial& f,
                                            const LaurentPolynomial& g) {
  const auto& alphabet = f.alphabet();
  if (f.is_zero()) return LaurentPolynomial(alphabet);
  const Monomial f_shift = monomial_content(f);
  const Monomial g_shift = monomial_content(g);
  const LaurentPolynomial divisor = g.shifted(g_shift.inverse());
  const auto& [g_lead, g_lead_coeff] = divisor.terms().back();

  std::map<Monomial, Rational> remainder;
  for (const auto& [m, c] : f.terms()) remainder.emplace(m / f_shift, c);

  std::vector<Term> quotient;
  Rational prod;
  while (!remainder.empty()) {
    auto lead = std::prev(remainder.end());
    if (!lead->first.dominates(g_lead)) return std::nullopt;
    const Monomial qm = lead->first / g_lead;
    const Rational qc = lead->second / g_lead_coeff;
    for (const auto& [gm, gc] : divisor.terms()) {
      mpq_mul(prod.get_mpq_t(), gc.get_mpq_t(), qc.get_mpq_t());
      auto [it, inserted] = remainder.try_emplace(gm * qm, 0);
      it->second -= prod;
      if (sgn(it->second) == 0) remainder.erase(it);
    }
    quotient.emplace_back(qm, qc);
  }
  // Undo the normalizing shifts: f = f_shift * F, g = g_shift * G, F = G * Q.
  const Monomial back = f_shift / g_shift;
  for (auto& t : quotient) t.first = t.first * back;
  return LaurentPolynomial::from_terms(alphabet, std::move(quotient));
}

std::optional<LaurentPolynomial> divide_two_term(const LaurentPolynomial& f,
                                                 const LaurentPolynomial& g) {
  if (g.size() != 2) throw UsageError("divide_two_term needs a two-term divisor");
  const auto& alphabet = f.alphabet();
  if (f.is_zero()) return LaurentPolynomial(alphabet);
  // g = m0 * (c0 + c1 * b) with b = m1 / m0 lexicographically positive.
  const auto& [m0, c0] = g.terms()[0];
  const auto& [m1, c1] = g.terms()[1];
  const Monomial b = m1 / m0;
  std::size_t pivot = 0;
  while (b[pivot] == 0) ++pivot;
  const int step = b[pivot];

  // Each term of f / m0 sits at position j on the coset rep * b^Z.
  struct Entry {
    Monomial rep;
    int j;
    const Rational* coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    const Monomial shifted = m / m0;
    const int j = floor_div(shifted[pivot], step);
    entries.push_back({shifted / b.pow(j), j, &c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.rep != y.rep ? x.rep < y.rep : x.j < y.j;
  });

  // f_j = c0 h_j + c1 h_{j-1}; h must vanish past the last f term.
  std::vector<Term> quotient;
  Rational h;
  Rational prod;
  for (std::size_t start = 0; start < entries.size();) {
    std::size_t end = start;
    while (end < entries.size() && entries[end].rep == entries[start].rep) ++end;
    h = 0;
    std::size_t next = start;
    for (int j = entries[start].j; j <= entries[end - 1].j; ++j) {
      mpq_mul(prod.get_mpq_t(), c1.get_mpq_t(), h.get_mpq_t());
      if (next < end && entries[next].j == j) {
        h = (*entries[next].coeff - prod) / c0;
        ++next;
      } else {
        h = -prod / c0;
      }
      if (j == entries[end - 1].j) {
        if (sgn(h) != 0) return std::nullopt;
      } else if (sgn(h) != 0) {
        quotient.emplace_back(entries[start].rep * b.pow(j), h);
      }
    }
    start = end;
  }
  return LaurentPolynomial::from_terms(alphabet, std::move(quotient));
}

}  // namespace detail

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g) {
  if (!(f.alphabet() == g.alphabet())) throw UsageError("polynomial alphabets differ");
  if (g.is_zero()) throw UsageError("division by the zero polynomial");
  if (g.size() == 1) {
    const auto& [m, c] = g.terms()[0];
    return f.shifted(m.inverse()).scaled(Rational(1) / c);
  }
  if (g.size() == 2) return detail::divide_two_term(f, g);
  return detail::divide_lex(f, g);
}

std::string to_text(const LaurentPolynomial& f) {
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      out += std::to_string(m[i]);
      out += ' ';
    }
    out += c.get_str();
    out += '\n';
  }
  return out;
}

LaurentPolynomial parse_text(const VarAlphabet& alphabet, std::string_view text) {
  std::vector<Term> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Monomial m(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      int e = 0;
      if (!(fields >> e)) {
        throw UsageError("line " + std::to_string(line_no) + ": expected exponent");
      }
      m.set(i, e);
    }
    std::string coeff;
    std::string extra;
    if (!(fields >> coeff) || (fields >> extra)) {
      throw UsageError("line " + std::to_string(line_no) + ": expected one coefficient");
    }
    Rational c;
    if (c.set_str(coeff, 10) != 0) {
      throw UsageError("line " + std::to_string(line_no) + ": bad coefficient '" + coeff + "'");
    }
    c.canonicalize();
    terms.emplace_back(m, std::move(c));
  }
  return LaurentPolynomial::from_terms(alphabet, std::move(terms));
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_identity()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(m, f.alphabet());
    }
  }
  return out;
}

}  // namespace torus::algebra
