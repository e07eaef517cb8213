#include "fte/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace fte {

namespace {

std::uint32_t checked_exponent(std::uint64_t value) {
  if (value > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("monomial exponent exceeds 2^32 - 1");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint32_t>(arity)) {
  if (arity > kMaxVariables) {
    throw std::invalid_argument("too many variables: " + std::to_string(arity) + " > " +
                                std::to_string(kMaxVariables));
  }
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (auto e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents, std::uint32_t component) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  m.component_ = component;
  return m;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t value) {
  degree_ = checked_exponent(std::uint64_t{degree_} - exp_[i] + value);
  exp_[i] = value;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (component_ != other.component_ || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exp_[i] = checked_exponent(std::uint64_t{exp_[i]} + other.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = checked_exponent(deg);
  r.component_ = component_ + other.component_;
  return r;
}

Monomial Monomial::quotient_by(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
  r.degree_ = degree_ - divisor.degree_;
  r.component_ = component_ - divisor.component_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = deg;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  std::uint32_t deg = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    r.exp_[i] = std::min(exp_[i], other.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::scaled(std::uint64_t factor) const {
  Monomial r(*this);
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exp_[i] != 0 && factor > std::numeric_limits<std::uint32_t>::max() / exp_[i]) {
      throw std::overflow_error("monomial exponent exceeds 2^32 - 1");
    }
    r.exp_[i] = static_cast<std::uint32_t>(exp_[i] * factor);
    deg += r.exp_[i];
  }
  r.degree_ = checked_exponent(deg);
  return r;
}

std::uint64_t Monomial::support_mask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exp_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = component_ * 0x9e3779b97f4a7c15ull + arity_;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= exp_[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialOrder MonomialOrder::with_weights(std::vector<std::uint32_t> weights) const {
  for (auto w : weights) {
    if (w == 0) throw std::invalid_argument("monomial order weights must be positive");
  }
  MonomialOrder o(*this);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::with_module_rank(ModuleRank rank) const {
  MonomialOrder o(*this);
  o.module_ = rank;
  return o;
}

bool MonomialOrder::is_degree_compatible() const noexcept {
  return kind_ == Kind::grevlex && weights_.empty();
}

std::uint64_t MonomialOrder::weighted_degree(const Monomial& m, std::size_t lo,
                                             std::size_t hi) const noexcept {
  std::uint64_t d = 0;
  if (weights_.empty()) {
    for (std::size_t i = lo; i < hi; ++i) d += m[i];
  } else {
    for (std::size_t i = lo; i < hi; ++i) {
      d += std::uint64_t{m[i]} * (i < weights_.size() ? weights_[i] : 1u);
    }
  }
  return d;
}

std::strong_ordering MonomialOrder::graded_revlex(const Monomial& a, const Monomial& b,
                                                  std::size_t lo, std::size_t hi) const noexcept {
  auto da = weighted_degree(a, lo, hi);
  auto db = weighted_degree(b, lo, hi);
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    // Smaller exponent in the last differing variable wins.
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_monomials(const Monomial& a,
                                                      const Monomial& b) const noexcept {
  const std::size_t n = a.arity();
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::grevlex:
      if (weights_.empty() && a.degree() != b.degree()) return a.degree() <=> b.degree();
      return graded_revlex(a, b, 0, n);
    case Kind::elimination: {
      const std::size_t k = std::min(block_, n);
      auto first = graded_revlex(a, b, 0, k);
      if (first != 0) return first;
      return graded_revlex(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a,
                                                      const Monomial& b) const noexcept {
  if (module_ == ModuleRank::position_over_term) {
    if (a.component() != b.component()) return b.component() <=> a.component();
    return compare_monomials(a, b);
  }
  auto c = compare_monomials(a, b);
  if (c != 0) return c;
  return b.component() <=> a.component();
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) {
    throw std::invalid_argument("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
  }
  return compare_unchecked(a, b);
}

}  // namespace fte
