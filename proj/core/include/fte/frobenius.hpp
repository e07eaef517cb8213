#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fte/ideal.hpp"

namespace fte {

inline constexpr int kDefaultMaxE = 12;

/// Raised when an uncertified chain does not settle within max_e steps.
class ChainBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// I^[p^e]: generated by the p^e-th powers of the generators.
Ideal frobenius_power(const Ideal& ideal, unsigned e);

/// {f ∈ P : f^(p^e) ∈ C}, as the preimage of C under x_i -> x_i^(p^e).
Ideal frobenius_preimage(const Ideal& c, unsigned e);

/// z^(p^e) ∈ I^[p^e] + J.
bool frobenius_kills(const Polynomial& z, const Ideal& ideal, const QuotientRing& ring, unsigned e);

/// The ascending chain J_e = {f : f^(p^e) ∈ I^[p^e] + J}, computed lazily.
class FrobeniusChain {
 public:
  FrobeniusChain(Ideal ideal, QuotientRing ring);

  const Ideal& ideal() const noexcept { return ideal_; }
  const QuotientRing& ring() const noexcept { return ring_; }
  /// J_e; computes and caches J_0..J_e on first use. Throws std::logic_error
  /// if the chain is observed to descend.
  const Ideal& at(unsigned e);
  std::size_t computed() const noexcept { return values_.size(); }

 private:
  Ideal ideal_;
  QuotientRing ring_;
  std::vector<Ideal> values_;
};

struct FrobeniusClosureResult {
  /// Representatives in P; contains I + J.
  Ideal closure;
  /// First e at which the chain reached the returned value.
  int reached_e = 0;
  /// True when the stopping exponent came from the bound theorem.
  bool certified = false;
  std::optional<int> certificate_e_star;
};

/// With e_star: returns J_{e_star}, certified. Without: iterates until
/// J_e = J_{e+1} and flags the result as uncertified. Throws
/// ChainBudgetExceeded when e would exceed max_e.
FrobeniusClosureResult frobenius_closure(FrobeniusChain& chain, std::optional<int> e_star,
                                         int max_e = kDefaultMaxE);
FrobeniusClosureResult frobenius_closure(const Ideal& ideal, const QuotientRing& ring,
                                         std::optional<int> e_star, int max_e = kDefaultMaxE);

struct FteResult {
  int fte = 0;
  /// Closure generator whose p^(fte-1) power escapes I^[p^(fte-1)] + J.
  std::optional<Polynomial> witness;
  /// Inherited from the closure.
  bool certified = false;
};

/// Least e with z^(p^e) ∈ I^[p^e] + J for every generator z of the closure.
FteResult fte(const Ideal& ideal, const QuotientRing& ring, const FrobeniusClosureResult& closure);

/// Fedder: P/J is F-pure iff (J^[p] : J) is not inside m^[p].
bool fedder_is_f_pure(const QuotientRing& ring);

}  // namespace fte
