#include "fte/frobenius.hpp"

#include <algorithm>
#include <string>

namespace fte {

namespace {

std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > 0xffffffffull) throw std::overflow_error("p^e exceeds 2^32");
  }
  return q;
}

/// Total order on polynomials: term lists compared lexicographically with
/// the ring's monomial order (then coefficient), a proper prefix first.
bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto& order = a.ring()->order();
  auto ta = a.terms();
  auto tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    auto c = order.compare_unchecked(ta[i].monomial, tb[i].monomial);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace

Ideal frobenius_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.frobenius(e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_preimage(const Ideal& c, unsigned e) {
  if (e == 0) return c;
  const auto& ring = c.ring();
  const auto q = frobenius_q(ring->characteristic(), e);
  std::vector<Polynomial> targets;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    targets.push_back(Polynomial::monomial(
        ring, Monomial::variable(ring->num_variables(), i, static_cast<std::uint32_t>(q))));
  }
  return preimage(ring, targets, c);
}

bool frobenius_kills(const Polynomial& z, const Ideal& ideal, const QuotientRing& ring, unsigned e) {
  return ring.extend(frobenius_power(ideal, e)).contains(z.frobenius(e));
}

FrobeniusChain::FrobeniusChain(Ideal ideal, QuotientRing ring)
    : ideal_(std::move(ideal)), ring_(std::move(ring)) {
  require_same_ring(ideal_.ring(), ring_.ambient(), "FrobeniusChain");
}

const Ideal& FrobeniusChain::at(unsigned e) {
  while (values_.size() <= e) {
    const auto k = static_cast<unsigned>(values_.size());
    auto next = frobenius_preimage(ring_.extend(frobenius_power(ideal_, k)), k);
    if (!values_.empty() && !next.contains(values_.back())) {
      throw std::logic_error("Frobenius closure chain is not ascending at e = " + std::to_string(k));
    }
    values_.push_back(std::move(next));
  }
  return values_[e];
}

FrobeniusClosureResult frobenius_closure(FrobeniusChain& chain, std::optional<int> e_star, int max_e) {
  if (e_star) {
    if (*e_star < 0) throw std::invalid_argument("frobenius_closure: negative e*");
    if (*e_star > max_e) {
      throw ChainBudgetExceeded("certified exponent " + std::to_string(*e_star) +
                                " exceeds max_e = " + std::to_string(max_e));
    }
    const Ideal& top = chain.at(static_cast<unsigned>(*e_star));
    int reached = *e_star;
    while (reached > 0 && equal(chain.at(static_cast<unsigned>(reached - 1)), top)) --reached;
    return {top, reached, true, e_star};
  }
  for (int e = 0; e < max_e; ++e) {
    if (equal(chain.at(static_cast<unsigned>(e)), chain.at(static_cast<unsigned>(e + 1)))) {
      return {chain.at(static_cast<unsigned>(e)), e, false, std::nullopt};
    }
  }
  throw ChainBudgetExceeded("chain not stabilized within budget (max_e = " + std::to_string(max_e) +
                            ")");
}

FrobeniusClosureResult frobenius_closure(const Ideal& ideal, const QuotientRing& ring,
                                         std::optional<int> e_star, int max_e) {
  FrobeniusChain chain(ideal, ring);
  return frobenius_closure(chain, e_star, max_e);
}

FteResult fte(const Ideal& ideal, const QuotientRing& ring, const FrobeniusClosureResult& closure) {
  auto gens = closure.closure.basis();
  std::sort(gens.begin(), gens.end(), poly_less);
  // Every closure generator is killed at reached_e by construction of the chain.
  std::vector<Polynomial> failing_before;
  for (int e = 0; e <= closure.reached_e; ++e) {
    auto target = ring.extend(frobenius_power(ideal, static_cast<unsigned>(e)));
    std::vector<Polynomial> failing;
    for (const auto& z : gens) {
      if (!target.contains(z.frobenius(static_cast<unsigned>(e)))) failing.push_back(z);
    }
    if (failing.empty()) {
      FteResult r{e, std::nullopt, closure.certified};
      if (e > 0) r.witness = failing_before.front();
      return r;
    }
    failing_before = std::move(failing);
  }
  throw std::logic_error("fte: closure generators not killed at reached_e");
}

bool fedder_is_f_pure(const QuotientRing& ring) {
  const auto& j = ring.defining();
  const auto p = ring.characteristic();
  auto c = colon(frobenius_power(j, 1), j);
  for (const auto& g : c.gens()) {
    // g ∈ m^[p] iff every term has some exponent >= p.
    bool inside = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
        if (t.monomial[i] >= p) return true;
      }
      return false;
    });
    if (!inside) return true;
  }
  return false;
}

}  // namespace fte
