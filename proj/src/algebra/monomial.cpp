#include "torus/algebra/monomial.hpp"

#include <algorithm>
#include <set>

#include "torus/errors.hpp"

namespace torus::algebra {

VarAlphabet::VarAlphabet(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw UsageError("alphabet has more than " + std::to_string(kMaxVars) + " variables");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw UsageError("alphabet variable names must be distinct");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

const VarAlphabet& VarAlphabet::macd() {
  static const VarAlphabet alphabet({"q", "t", "A"});
  return alphabet;
}

const VarAlphabet& VarAlphabet::knot() {
  static const VarAlphabet alphabet({"a", "q", "t"});
  return alphabet;
}

const VarAlphabet& VarAlphabet::qt() {
  static const VarAlphabet alphabet({"q", "t"});
  return alphabet;
}

std::optional<std::size_t> VarAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

Monomial::Monomial(std::size_t size) : size_(static_cast<std::uint8_t>(size)) {
  if (size > kMaxVars) throw UsageError("monomial size exceeds kMaxVars");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  std::copy(exponents.begin(), exponents.end(), exps_.begin());
}

bool Monomial::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

Monomial Monomial::pow(int e) const {
  Monomial out(*this);
  for (auto& x : out.exps_) x *= e;
  return out;
}

Monomial Monomial::inverse() const { return pow(-1); }

bool Monomial::dominates(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < kMaxVars; ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string to_string(const Monomial& m, const VarAlphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet.name(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace torus::algebra
