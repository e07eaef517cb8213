#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fte/field.hpp"
#include "fte/monomial.hpp"

namespace fte {

/// Raised when operands live in different ambient rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// F_p[vars] with a fixed monomial order. The ideal generated by all
/// variables plays the role of the maximal ideal m.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolyRing> make(std::uint32_t p, std::vector<std::string> variables,
                                              MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same field and variables under another order.
  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
/// Throws RingMismatch unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view operation);

struct Term {
  Monomial monomial;
  std::uint32_t coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Total degree; nullopt stands for the degree of the zero polynomial.
using Degree = std::optional<std::uint32_t>;

/// Sparse polynomial over F_p. Terms are kept sorted in strictly
/// descending order for the ring's monomial order, with nonzero
/// coefficients, so equality is term-list equality.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Precondition: nonzero.
  const Term& leading_term() const noexcept { return terms_.front(); }
  const Monomial& leading_monomial() const noexcept { return terms_.front().monomial; }
  std::uint32_t leading_coeff() const noexcept { return terms_.front().coeff; }

  Degree degree() const noexcept;
  /// Least total degree of a term (the m-adic order); nullopt for zero.
  Degree low_degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times_term(const Monomial& m, std::uint32_t c) const;
  /// this += c * m * g, merging in place. No ring check.
  void add_multiple(const Polynomial& g, const Monomial& m, std::uint32_t c);
  /// Removes the leading term. Precondition: nonzero.
  void drop_leading_term() { terms_.erase(terms_.begin()); }
  Polynomial pow(std::uint64_t n) const;
  /// f^(p^e): exponents scaled by p^e, coefficients fixed (a^p = a in F_p).
  Polynomial frobenius(unsigned e) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  /// Re-expresses the polynomial in a ring with the same field and the same
  /// variable names (possibly a different order).
  Polynomial in_ring(const RingPtr& target) const;
  /// Substitutes variable i with variable var_map[i] of target.
  Polynomial mapped(const RingPtr& target, std::span<const std::size_t> var_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) noexcept {
    return f.terms_ == g.terms_;
  }

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void merge(const Polynomial& g, const Monomial* m, std::uint32_t c);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parse error with the 0-based character offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: poly := term (('+'|'-') term)*, term := coeff | coeff '*' mono | mono,
/// mono := var ('^' uint)? ('*' var ('^' uint)?)*, coeff := uint. A leading
/// sign on the first term is accepted. Whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

}  // namespace fte
