#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fte/groebner.hpp"
#include "fte/polynomial.hpp"

namespace fte {

/// Krull dimension; nullopt stands for minus infinity (the zero ring).
using Dimension = std::optional<int>;

/// Raised when a vector-space length is requested for an infinite quotient.
class NotFiniteLength : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ideal of a polynomial ring, given by generators. The reduced Gröbner
/// basis is computed at most once and shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal m of all variables.
  static Ideal maximal(RingPtr ring) { return maximal_power(std::move(ring), 1); }
  /// m^k, generated by all monomials of degree k.
  static Ideal maximal_power(RingPtr ring, std::uint32_t k);
  /// Parses each string as a generator.
  static Ideal parse(RingPtr ring, std::span<const std::string> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Polynomial> gens() const noexcept { return gens_; }
  const GroebnerBasis& groebner() const;
  /// Reduced Gröbner basis elements, a canonical generating set.
  std::vector<Polynomial> basis() const;

  bool contains(const Polynomial& f) const;
  /// other ⊆ this.
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return groebner().size() == 0; }
  bool is_homogeneous() const;
  Polynomial reduce(const Polynomial& f) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  /// Adds generators.
  Ideal with(std::span<const Polynomial> more) const;
  /// Same generators in a ring with the same variables under another order.
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// f ∈ I.
bool membership(const Polynomial& f, const Ideal& ideal);
/// Same reduced Gröbner basis.
bool equal(const Ideal& a, const Ideal& b);
/// a ⊆ b.
bool is_subset(const Ideal& a, const Ideal& b);

/// {f : f g ∈ I}. Throws std::invalid_argument for g = 0.
Ideal colon(const Ideal& ideal, const Polynomial& g);
/// {f : f G ⊆ I}; the zero ideal G gives the unit ideal.
Ideal colon(const Ideal& ideal, const Ideal& by);
/// Via t·I + (1 − t)·J and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b);

struct Saturation {
  Ideal ideal;
  /// Least n >= 1 with I : J^n = I : J^(n-1).
  int stabilization_index;
};
/// I : J^∞ by iterated colons; the stabilization is re-checked one step on.
Saturation saturate(const Ideal& ideal, const Ideal& by);

/// I ∩ F_p[keep], returned in I's ring.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep);
Ideal eliminate(const Ideal& ideal, std::span<const std::string> keep);

/// Preimage of C under source_ring -> C.ring(), source variable i -> targets[i].
Ideal preimage(const RingPtr& source_ring, std::span<const Polynomial> targets, const Ideal& c);

/// Largest set of variables independent modulo the leading-term ideal.
Dimension krull_dim(const Ideal& ideal);

/// dim_{F_p} P/I; throws NotFiniteLength when dim P/I > 0.
std::uint64_t vs_length(const Ideal& ideal);

/// dim_{F_p} larger/smaller for smaller ⊆ larger, or nullopt when infinite.
/// Throws std::invalid_argument if the inclusion fails.
std::optional<std::uint64_t> quotient_length(const Ideal& larger, const Ideal& smaller);

/// Monomials in LT(larger) \ LT(smaller) under the ring's order; they index
/// a basis of larger/smaller. nullopt when the difference is infinite.
std::optional<std::vector<Monomial>> leading_term_difference(const Ideal& larger,
                                                             const Ideal& smaller);

/// Exact quotient h / g; throws std::invalid_argument if g does not divide h.
Polynomial exact_divide(const Polynomial& h, const Polynomial& g);

/// Monomial ideal with a minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t arity, std::vector<Monomial> gens);
  static MonomialIdeal leading_terms(const GroebnerBasis& basis);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Monomial> gens() const noexcept { return gens_; }
  bool contains(const Monomial& m) const noexcept;
  MonomialIdeal colon(const Monomial& m) const;
  bool is_unit() const noexcept;
  /// Contains a pure power of every variable.
  bool is_zero_dimensional() const noexcept;
  /// Number of monomials outside the ideal, or nullopt when infinite.
  std::optional<std::uint64_t> count_standard() const;
  /// Size of the largest variable set containing no generator's support.
  Dimension dimension() const;

 private:
  std::size_t arity_;
  std::vector<Monomial> gens_;
};

/// S = P/J. Elements are handled through representatives in P; reduce()
/// gives the canonical normal form modulo a reduced basis of J.
class QuotientRing {
 public:
  explicit QuotientRing(Ideal defining);
  explicit QuotientRing(RingPtr polynomial_ring) : QuotientRing(Ideal::zero(std::move(polynomial_ring))) {}

  const RingPtr& ambient() const noexcept { return defining_.ring(); }
  const Ideal& defining() const noexcept { return defining_; }
  std::uint32_t characteristic() const noexcept { return ambient()->characteristic(); }
  std::size_t num_variables() const noexcept { return ambient()->num_variables(); }
  bool is_homogeneous() const { return defining_.is_homogeneous(); }

  Polynomial reduce(const Polynomial& f) const { return defining_.reduce(f); }
  /// The ideal (gens) + J of P.
  Ideal extend(std::span<const Polynomial> gens) const;
  Ideal extend(const Ideal& ideal) const;
  Dimension dim() const { return krull_dim(defining_); }

 private:
  Ideal defining_;
};

}  // namespace fte
