#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fte/polynomial.hpp"

namespace fte {

/// Element of the free module P^rank. Rank 0 is the zero module.
class FreeVector {
 public:
  FreeVector(RingPtr ring, std::size_t rank);
  explicit FreeVector(std::vector<Polynomial> components);
  /// Unit vector e_index.
  static FreeVector basis(RingPtr ring, std::size_t rank, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  Polynomial& operator[](std::size_t i) { return components_.at(i); }
  std::span<const Polynomial> components() const noexcept { return components_; }
  bool is_zero() const noexcept;
  /// Max total degree over the components; nullopt for the zero vector.
  Degree degree() const noexcept;

  FreeVector& operator+=(const FreeVector& other);
  FreeVector& operator-=(const FreeVector& other);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  FreeVector times(const Polynomial& f) const;

  std::string to_string() const;
  friend bool operator==(const FreeVector&, const FreeVector&) = default;

 private:
  RingPtr ring_;
  std::vector<Polynomial> components_;
};

/// Gröbner basis of an ideal (rank 0) or of a submodule of P^rank.
/// Module bases are stored as component-tagged polynomials in tagged_ring().
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, RingPtr tagged_ring, std::size_t rank, std::vector<Polynomial> elements,
                bool reduced);

  /// The ambient polynomial ring.
  const RingPtr& ring() const noexcept { return ring_; }
  /// Ring whose order (including the module rank rule) sorts the elements.
  const RingPtr& tagged_ring() const noexcept { return tagged_; }
  std::size_t rank() const noexcept { return rank_; }
  bool is_module() const noexcept { return rank_ > 0; }
  bool is_reduced() const noexcept { return reduced_; }
  std::span<const Polynomial> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept;
  /// Elements of a module basis as vectors.
  std::vector<FreeVector> vectors() const;

  /// Full reduction of a tagged polynomial (internal representation).
  Polynomial reduce_tagged(Polynomial f) const;
  /// Leading monomials in basis order.
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  RingPtr tagged_;
  std::size_t rank_;
  std::vector<Polynomial> elements_;
  std::vector<std::uint64_t> masks_;
  bool reduced_;
};

/// Reduced Gröbner basis of the ideal generated by gens, in ring's order.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens);
/// Same, after moving the generators into the given order.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);
/// Reduced Gröbner basis of the submodule of P^rank spanned by gens.
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const FreeVector> gens,
                         MonomialOrder::ModuleRank rank_rule =
                             MonomialOrder::ModuleRank::term_over_position);

/// Remainder with no term divisible by a basis leading term.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
FreeVector normal_form(const FreeVector& v, const GroebnerBasis& basis);

/// S-polynomial of two tagged polynomials (zero when the leading terms sit
/// in different components).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Conversions between vectors and the tagged representation used inside
/// module Gröbner bases.
Polynomial to_tagged(const FreeVector& v, const RingPtr& tagged_ring);
FreeVector from_tagged(const Polynomial& f, const RingPtr& ring, std::size_t rank);

/// Generators of the kernel of P^s -> P^r, e_i -> columns[i]. Computed by
/// eliminating the target components from the graph module
/// {(columns[i], e_i)} under a position-over-term order, then pruned to a
/// generating set in which no vector lies in the span of the others.
std::vector<FreeVector> syzygies(const RingPtr& ring, std::size_t rank,
                                 std::span<const FreeVector> columns);

/// Drops zero vectors and vectors lying in the span of earlier kept ones,
/// processing by increasing degree. Minimal for homogeneous input.
std::vector<FreeVector> prune_generators(const RingPtr& ring, std::size_t rank,
                                         std::span<const FreeVector> gens);
std::vector<Polynomial> prune_generators(const RingPtr& ring, std::span<const Polynomial> gens);

}  // namespace fte
