#pragma once

#include <cstdint>

namespace fte {

/// The prime field F_p with 2 <= p < 2^31. Elements are canonical residues
/// in [0, p); arithmetic goes through 64-bit products.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t value) const noexcept {
    auto r = value % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // a, b < 2^31 so no wraparound
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const noexcept;
  /// Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace fte
