#include "fte/sequences.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <unordered_map>

namespace fte {

namespace {

constexpr std::uint32_t kOrderSearchCap = 64;

Ideal prefix_ideal(std::span<const Polynomial> seq, std::size_t count, const QuotientRing& ring) {
  return ring.extend(seq.first(count));
}

Ideal colon_or_unit(const Ideal& a, const Polynomial& x) {
  if (x.is_zero()) return Ideal::unit(a.ring());
  return colon(a, x);
}

void require_low_hsl_hypotheses(std::span<const Polynomial> seq, const QuotientRing& ring,
                                const LowCohomologyData& data) {
  if (static_cast<int>(seq.size()) != data.fin_dim) {
    throw PreconditionError("sequence length " + std::to_string(seq.size()) +
                            " differs from the finiteness dimension " + std::to_string(data.fin_dim));
  }
  if (data.n0 < 1) throw PreconditionError("n0 must be positive");
  if (!in_maximal_power(seq, static_cast<std::uint32_t>(2 * data.n0), ring)) {
    throw PreconditionError("sequence is not contained in m^" + std::to_string(2 * data.n0));
  }
  if (!is_filter_regular(seq, ring).is_filter_regular) {
    throw PreconditionError("sequence is not filter regular");
  }
}

/// Row reduction over F_p; returns the rank and leaves rows in echelon form.
std::size_t row_reduce(std::vector<std::vector<std::uint32_t>>& rows, std::size_t pivot_cols,
                       const PrimeField& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pivot_cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    auto inv = field.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      auto factor = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<std::uint32_t> m_adic_order(const Polynomial& f, const QuotientRing& ring) {
  require_same_ring(f.ring(), ring.ambient(), "m_adic_order");
  if (ring.defining().contains(f)) return std::nullopt;
  std::uint32_t k = *f.low_degree();
  if (f.is_homogeneous() && ring.is_homogeneous()) return k;
  while (k < kOrderSearchCap &&
         ring.extend(Ideal::maximal_power(ring.ambient(), k + 1)).contains(f)) {
    ++k;
  }
  return k;
}

bool in_maximal_power(std::span<const Polynomial> seq, std::uint32_t k, const QuotientRing& ring) {
  return std::all_of(seq.begin(), seq.end(), [&](const Polynomial& x) {
    auto order = m_adic_order(x, ring);
    return !order || *order >= k;
  });
}

SequenceReport is_filter_regular(std::span<const Polynomial> seq, const QuotientRing& ring,
                                 int weak_cap) {
  SequenceReport report;
  report.elements.assign(seq.begin(), seq.end());
  const auto m = Ideal::maximal(ring.ambient());
  report.is_filter_regular = true;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    require_same_ring(seq[i].ring(), ring.ambient(), "is_filter_regular");
    auto a = prefix_ideal(seq, i, ring);
    auto c = colon_or_unit(a, seq[i]);
    if (equal(c, a)) continue;
    if (!saturate(a, m).ideal.contains(c)) {
      report.is_filter_regular = false;
      report.first_failure = i + 1;
      break;
    }
  }
  report.is_sop = is_system_of_parameters(seq, ring);
  for (const auto& x : seq) {
    auto order = m_adic_order(x, ring);
    if (order && (!report.in_m_power || *order < *report.in_m_power)) report.in_m_power = order;
  }
  for (int n = 1; n <= weak_cap; ++n) {
    if (is_weak_sequence(seq, n, ring)) {
      report.weak_n = n;
      break;
    }
  }
  return report;
}

bool is_weak_sequence(std::span<const Polynomial> seq, int n, const QuotientRing& ring) {
  if (n < 1) throw std::invalid_argument("is_weak_sequence: n must be positive");
  const auto mn = Ideal::maximal_power(ring.ambient(), static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto a = prefix_ideal(seq, i, ring);
    auto c = colon_or_unit(a, seq[i]);
    if (equal(c, a)) continue;
    if (!colon(a, mn).contains(c)) return false;
  }
  return true;
}

bool is_system_of_parameters(std::span<const Polynomial> seq, const QuotientRing& ring) {
  auto d = ring.dim();
  if (!d || static_cast<int>(seq.size()) != *d) return false;
  auto q = krull_dim(ring.extend(seq));
  return q && *q == 0;
}

LimitClosureResult limit_closure_chain(std::span<const Polynomial> seq, const QuotientRing& ring,
                                       int max_n) {
  if (max_n < 3) throw std::invalid_argument("limit_closure_chain: budget must be at least 3");
  auto base = ring.extend(seq);
  if (seq.empty()) return {ring.defining(), LimitMethod::chain, 0, true, quotient_length(base, base)};
  std::vector<Ideal> values;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Polynomial> powers;
    for (const auto& x : seq) powers.push_back(x.pow(static_cast<std::uint64_t>(n) + 1));
    Ideal l = ring.extend(powers);
    for (const auto& x : seq) {
      for (int r = 0; r < n; ++r) l = colon_or_unit(l, x);
    }
    if (!values.empty() && !l.contains(values.back())) {
      throw std::logic_error("limit closure chain is not ascending");
    }
    values.push_back(std::move(l));
    const auto k = values.size();
    if (k >= 3 && equal(values[k - 3], values[k - 2]) && equal(values[k - 2], values[k - 1])) {
      LimitClosureResult r{values[k - 3], LimitMethod::chain, static_cast<int>(k - 2), true,
                           std::nullopt};
      r.quotient_length = quotient_length(r.ideal, base);
      return r;
    }
  }
  LimitClosureResult r{values.back(), LimitMethod::chain, max_n, false, std::nullopt};
  r.quotient_length = quotient_length(r.ideal, base);
  return r;
}

Standardness certify_standard(std::span<const Polynomial> seq, const QuotientRing& ring, int n0) {
  if (n0 < 1) throw std::invalid_argument("certify_standard: n0 must be positive");
  if (!in_maximal_power(seq, static_cast<std::uint32_t>(2 * n0), ring)) return Standardness::none;
  if (!is_filter_regular(seq, ring).is_filter_regular) return Standardness::none;
  return Standardness::contained_in_m_2n0;
}

LimitClosureResult limit_closure_standard(std::span<const Polynomial> seq, const QuotientRing& ring,
                                          Standardness cert) {
  if (cert == Standardness::none) {
    throw NotStandard("limit_closure_standard: no standardness certificate for the sequence");
  }
  auto base = ring.extend(seq);
  Ideal sum = base;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k != i) others.push_back(seq[k]);
    }
    sum = sum + colon_or_unit(ring.extend(others), seq[i]);
  }
  LimitClosureResult r{sum, LimitMethod::standard_formula, std::nullopt, true, std::nullopt, cert};
  r.quotient_length = quotient_length(sum, base);
  return r;
}

int hsl_low(std::span<const Polynomial> seq, const QuotientRing& ring,
            const FrobeniusClosureResult& closure, const LowCohomologyData& data, int max_e) {
  require_low_hsl_hypotheses(seq, ring, data);
  auto lim = limit_closure_standard(seq, ring, Standardness::contained_in_m_2n0);
  auto z = intersect(lim.ideal, closure.closure);
  auto gens = z.basis();
  auto base = Ideal(ring.ambient(), std::vector<Polynomial>(seq.begin(), seq.end()));
  for (int e = 0; e <= max_e; ++e) {
    auto target = ring.extend(frobenius_power(base, static_cast<unsigned>(e)));
    bool all = std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) {
      return target.contains(g.frobenius(static_cast<unsigned>(e)));
    });
    if (all) return e;
  }
  throw ChainBudgetExceeded("hsl_low: no exponent up to max_e kills lim ∩ closure");
}

FrobeniusNilpotence frobenius_nilpotence(std::span<const Polynomial> seq, const QuotientRing& ring,
                                         const LowCohomologyData& data, int max_e) {
  require_low_hsl_hypotheses(seq, ring, data);
  const auto& field = ring.ambient()->field();
  auto lim = limit_closure_standard(seq, ring, Standardness::contained_in_m_2n0).ideal;
  auto base = ring.extend(seq);
  auto words = leading_term_difference(lim, base);
  if (!words) throw std::logic_error("frobenius_nilpotence: lim/(seq) has infinite length");

  // Representatives b_w ∈ lim with leading monomial w, normal modulo (seq) + J.
  std::vector<Polynomial> reps;
  const auto& gb = lim.groebner();
  for (const auto& w : *words) {
    for (const auto& g : gb.elements()) {
      if (!g.leading_monomial().divides(w)) continue;
      auto f = g.times_term(w.quotient_by(g.leading_monomial()), field.inv(g.leading_coeff()));
      reps.push_back(base.reduce(f));
      break;
    }
  }
  const std::size_t dim = reps.size();
  FrobeniusNilpotence out{0, dim, 0, base};
  if (dim == 0) return out;

  auto seq_ideal = Ideal(ring.ambient(), std::vector<Polynomial>(seq.begin(), seq.end()));
  auto kernel_at = [&](unsigned e) {
    auto target = ring.extend(frobenius_power(seq_ideal, e));
    std::vector<Polynomial> images;
    std::vector<Monomial> cols;
    std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
    for (const auto& b : reps) {
      images.push_back(target.reduce(b.frobenius(e)));
      for (const auto& t : images.back().terms()) {
        if (col_of.emplace(t.monomial, cols.size()).second) cols.push_back(t.monomial);
      }
    }
    // Rows [image | identity]; rows whose image part vanishes after
    // reduction span the kernel.
    std::vector<std::vector<std::uint32_t>> rows(dim, std::vector<std::uint32_t>(cols.size() + dim, 0));
    for (std::size_t r = 0; r < dim; ++r) {
      for (const auto& t : images[r].terms()) rows[r][col_of[t.monomial]] = t.coeff;
      rows[r][cols.size() + r] = 1;
    }
    auto rank = row_reduce(rows, cols.size(), field);
    std::vector<Polynomial> kernel;
    for (std::size_t r = rank; r < dim; ++r) {
      Polynomial k(ring.ambient());
      for (std::size_t c = 0; c < dim; ++c) {
        if (rows[r][cols.size() + c] != 0) k += reps[c].scaled(rows[r][cols.size() + c]);
      }
      kernel.push_back(std::move(k));
    }
    return kernel;
  };

  auto previous = kernel_at(0);
  for (int e = 0; e < max_e; ++e) {
    auto next = kernel_at(static_cast<unsigned>(e + 1));
    if (next.size() == previous.size()) {
      out.hsl_low = e;
      out.nilpotent_length = previous.size();
      out.nilpotent_ideal = base.with(previous);
      return out;
    }
    previous = std::move(next);
  }
  throw ChainBudgetExceeded("frobenius_nilpotence: kernels still growing at max_e");
}

std::vector<Polynomial> random_filter_regular_sequence(const QuotientRing& ring, std::size_t t,
                                                       std::uint32_t degree, std::uint64_t seed,
                                                       int max_attempts) {
  if (degree < 1) throw std::invalid_argument("random_filter_regular_sequence: degree must be >= 1");
  if (t == 0) return {};
  const auto& r = ring.ambient();
  const auto p = r->characteristic();
  std::vector<Monomial> monomials;
  const auto forms = Ideal::maximal_power(r, degree);
  for (const auto& g : forms.gens()) monomials.push_back(g.leading_monomial());
  std::mt19937_64 rng(seed);
  auto random_form = [&] {
    for (;;) {
      std::vector<Term> terms;
      for (const auto& m : monomials) {
        // Plain modulo keeps the stream platform independent.
        auto c = static_cast<std::uint32_t>(rng() % p);
        if (c != 0) terms.push_back({m, c});
      }
      if (!terms.empty()) return Polynomial::from_terms(r, std::move(terms));
    }
  };
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial> seq;
    for (std::size_t i = 0; i < t; ++i) seq.push_back(random_form());
    if (is_filter_regular(seq, ring).is_filter_regular) return seq;
  }
  throw std::runtime_error("random_filter_regular_sequence: no filter regular sequence after " +
                           std::to_string(max_attempts) + " attempts");
}

}  // namespace fte
