#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "fte/ideal.hpp"
#include "fte/polynomial.hpp"

namespace fte::testing {

inline RingPtr ring(std::uint32_t p, std::vector<std::string> vars,
                    MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(p, std::move(vars), order);
}

inline Polynomial poly(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const auto* t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

inline Ideal ideal(const RingPtr& r, std::initializer_list<const char*> texts) { return Ideal(r, polys(r, texts)); }

inline QuotientRing quotient(const RingPtr& r, std::initializer_list<const char*> relations) {
  return QuotientRing(ideal(r, relations));
}

inline std::vector<std::string> strings(std::span<const Polynomial> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, std::size_t terms, std::uint32_t max_degree) {
  std::vector<Term> out;
  const auto n = r->num_variables();
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(n);
    std::uint32_t budget = static_cast<std::uint32_t>(rng() % (max_degree + 1));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      auto e = static_cast<std::uint32_t>(rng() % (budget + 1));
      if (i + 1 == n) e = budget;
      m.set(i, e);
      budget -= e;
    }
    out.push_back({m, static_cast<std::uint32_t>(rng() % r->characteristic())});
  }
  return Polynomial::from_terms(r, std::move(out));
}

/// The two coordinate planes in 4-space meeting at the origin.
inline QuotientRing two_planes(std::uint32_t p) {
  auto r = ring(p, {"x1", "x2", "x3", "x4"});
  return quotient(r, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"});
}

inline QuotientRing fermat_cubic() {
  auto r = ring(2, {"x", "y", "z"});
  return quotient(r, {"x^3+y^3+z^3"});
}

}  // namespace fte::testing
