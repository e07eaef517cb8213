#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fte {

/// Upper bound on the number of ring variables, including the auxiliary
/// variables that elimination introduces (preimages double the count).
inline constexpr std::size_t kMaxVariables = 24;

/// An exponent vector of fixed arity, optionally tagged with a free-module
/// component. Ring monomials live in component 0.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  static Monomial from_exponents(std::span<const std::uint32_t> exponents,
                                 std::uint32_t component = 0);
  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, std::uint32_t value);
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t component() const noexcept { return component_; }
  void set_component(std::uint32_t c) noexcept { component_ = c; }
  std::span<const std::uint32_t> exponents() const noexcept { return {exp_.data(), arity_}; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Same component and componentwise <=.
  bool divides(const Monomial& other) const noexcept;
  /// Exponents add; components add (a ring monomial times a module term
  /// keeps the term's component).
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divides(other). Result is in component 0 when both
  /// components agree.
  Monomial quotient_by(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;
  /// Every exponent multiplied by factor; throws std::overflow_error past 2^32.
  Monomial scaled(std::uint64_t factor) const;
  /// Bit i set when variable i (mod 64) occurs; a necessary condition for
  /// divisibility is mask(a) & ~mask(b) == 0.
  std::uint64_t support_mask() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.arity_ != b.arity_ || a.component_ != b.component_ || a.degree_ != b.degree_) return false;
    for (std::size_t i = 0; i < a.arity_; ++i) {
      if (a.exp_[i] != b.exp_[i]) return false;
    }
    return true;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint32_t, kMaxVariables> exp_{};
  std::uint32_t arity_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t component_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial orders: lex, grevlex and two-block elimination orders. The
/// first `block` variables form the eliminated block. Optional per-variable
/// weights replace the plain degree inside the graded comparisons.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, elimination };
  /// How components of free-module terms are ranked. Lower component index
  /// ranks higher in both cases.
  enum class ModuleRank { position_over_term, term_over_position };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  /// Any monomial involving one of the first k variables is larger than
  /// every monomial in the remaining variables.
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::elimination, k); }

  MonomialOrder with_weights(std::vector<std::uint32_t> weights) const;
  MonomialOrder with_module_rank(ModuleRank rank) const;

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  ModuleRank module_rank() const noexcept { return module_; }
  bool is_degree_compatible() const noexcept;

  /// Throws std::invalid_argument on arity mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// No arity check; used on hot paths where arity is known to agree.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const noexcept;
  std::strong_ordering graded_revlex(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const noexcept;
  std::uint64_t weighted_degree(const Monomial& m, std::size_t lo, std::size_t hi) const noexcept;

  Kind kind_;
  std::size_t block_;
  std::vector<std::uint32_t> weights_;
  ModuleRank module_ = ModuleRank::position_over_term;
};

}  // namespace fte
