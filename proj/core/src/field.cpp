#include "fte/field.hpp"

#include <stdexcept>
#include <string>

namespace fte {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not below 2^31");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t n) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

}  // namespace fte
