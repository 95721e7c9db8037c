#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torus::algebra {

/// Upper bound on the number of variables a polynomial may carry.
inline constexpr std::size_t kMaxVars = 4;

/// An ordered list of distinct variable names. Copies share storage, so
/// alphabets are cheap to pass around and compare.
class VarAlphabet {
 public:
  explicit VarAlphabet(std::vector<std::string> names);

  /// (q, t, A) with A standing for t^N.
  static const VarAlphabet& macd();
  /// (a, q, t): the variables the knot invariants are written in.
  static const VarAlphabet& knot();
  /// (q, t): coefficient field of the symmetric-function oracle.
  static const VarAlphabet& qt();

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarAlphabet& a, const VarAlphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Laurent monomial: a signed exponent vector over some alphabet.
/// Comparison is lexicographic on the exponents, in alphabet order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t size);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value) { exps_[i] = value; }
  std::span<const std::int32_t> exponents() const { return {exps_.data(), size_}; }

  bool is_identity() const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial pow(int e) const;
  Monomial inverse() const;

  /// True when every exponent is >= the corresponding exponent of `other`.
  bool dominates(const Monomial& other) const;

  /// Componentwise minimum.
  static Monomial min(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::int32_t, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Renders `m` as e.g. "q^2*t^-1" ("1" for the identity).
std::string to_string(const Monomial& m, const VarAlphabet& alphabet);

}  // namespace torus::algebra
