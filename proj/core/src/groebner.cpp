#include "fte/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fte {

// ---------------------------------------------------------------- FreeVector

FreeVector::FreeVector(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), components_(rank, Polynomial(ring_)) {}

FreeVector::FreeVector(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("FreeVector: use the (ring, 0) constructor");
  ring_ = components_.front().ring();
  for (const auto& c : components_) require_same_ring(ring_, c.ring(), "FreeVector");
}

FreeVector FreeVector::basis(RingPtr ring, std::size_t rank, std::size_t index) {
  FreeVector v(ring, rank);
  v.components_.at(index) = Polynomial::constant(ring, 1);
  return v;
}

bool FreeVector::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& f) { return f.is_zero(); });
}

Degree FreeVector::degree() const noexcept {
  Degree d;
  for (const auto& c : components_) {
    auto cd = c.degree();
    if (cd && (!d || *cd > *d)) d = cd;
  }
  return d;
}

FreeVector& FreeVector::operator+=(const FreeVector& other) {
  if (rank() != other.rank()) throw std::invalid_argument("FreeVector: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& other) {
  if (rank() != other.rank()) throw std::invalid_argument("FreeVector: rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

FreeVector FreeVector::times(const Polynomial& f) const {
  FreeVector r(*this);
  for (auto& c : r.components_) c = c * f;
  return r;
}

std::string FreeVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + "]";
}

Polynomial to_tagged(const FreeVector& v, const RingPtr& tagged_ring) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    for (const auto& t : v[i].terms()) {
      Term tagged = t;
      tagged.monomial.set_component(static_cast<std::uint32_t>(i));
      terms.push_back(std::move(tagged));
    }
  }
  return Polynomial::from_terms(tagged_ring, std::move(terms));
}

FreeVector from_tagged(const Polynomial& f, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : f.terms()) {
    auto c = t.monomial.component();
    if (c >= rank) throw std::out_of_range("from_tagged: component beyond rank");
    Term plain = t;
    plain.monomial.set_component(0);
    parts[c].push_back(std::move(plain));
  }
  FreeVector v(ring, rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = Polynomial::from_terms(ring, std::move(parts[i]));
  return v;
}

// ---------------------------------------------------------------- reduction

namespace {

struct Reducer {
  const Polynomial* poly;
  std::uint64_t mask;
};

/// Full reduction of f by the reducers. Pending terms live in a max-heap
/// under the ring order; equal monomials are combined when they surface.
Polynomial reduce_full(const Polynomial& f, std::span<const Reducer> reducers) {
  const auto& ring = f.ring();
  const auto& field = ring->field();
  const auto& order = ring->order();
  auto below = [&](const Term& a, const Term& b) { return order.compare_unchecked(a.monomial, b.monomial) < 0; };
  std::vector<Term> heap(f.terms().begin(), f.terms().end());
  std::make_heap(heap.begin(), heap.end(), below);
  std::vector<Term> done;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), below);
    Term lead = std::move(heap.back());
    heap.pop_back();
    while (!heap.empty() && heap.front().monomial == lead.monomial) {
      lead.coeff = field.add(lead.coeff, heap.front().coeff);
      std::pop_heap(heap.begin(), heap.end(), below);
      heap.pop_back();
    }
    if (lead.coeff == 0) continue;
    const auto lead_mask = lead.monomial.support_mask();
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~lead_mask) == 0 && r.poly->leading_monomial().divides(lead.monomial)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      done.push_back(std::move(lead));
      continue;
    }
    const auto factor = lead.monomial.quotient_by(hit->poly->leading_monomial());
    const auto c = field.mul(field.neg(lead.coeff), field.inv(hit->poly->leading_coeff()));
    auto tail = hit->poly->terms().subspan(1);
    for (const auto& t : tail) {
      heap.push_back({t.monomial * factor, field.mul(t.coeff, c)});
      std::push_heap(heap.begin(), heap.end(), below);
    }
  }
  return Polynomial::from_terms(ring, std::move(done));
}

std::uint64_t selection_degree(const MonomialOrder& order, const Monomial& m) {
  const auto& w = order.weights();
  if (w.empty()) return m.degree();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) d += std::uint64_t{m[i]} * (i < w.size() ? w[i] : 1u);
  return d;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
  std::size_t serial;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, bool module) : ring_(std::move(ring)), module_(module) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      auto h = reduce(g);
      if (h.is_zero()) continue;
      add(h.monic(), sugar_of(g));
    }
    while (!pairs_.empty()) {
      auto best = select();
      Pair pair = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      auto h = reduce(s_polynomial(polys_[pair.i], polys_[pair.j]));
      if (!h.is_zero()) add(h.monic(), pair.degree);
    }
    return finish();
  }

 private:
  Polynomial reduce(const Polynomial& f) const {
    std::vector<Reducer> reducers;
    reducers.reserve(basis_.size());
    for (auto idx : basis_) reducers.push_back({&polys_[idx], masks_[idx]});
    return reduce_full(f, reducers);
  }

  /// Smallest sugar first, ties by lcm; pure lex uses the lcm alone.
  std::size_t select() const {
    const auto& order = ring_->order();
    const bool graded = order.kind() != MonomialOrder::Kind::lex;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (graded && a.degree != b.degree) {
        if (a.degree < b.degree) best = k;
        continue;
      }
      auto c = order.compare_unchecked(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && a.serial < b.serial)) best = k;
    }
    return best;
  }

  std::uint64_t sugar_of(const Polynomial& f) const {
    std::uint64_t d = 0;
    for (const auto& t : f.terms()) d = std::max(d, selection_degree(ring_->order(), t.monomial));
    return d;
  }

  /// Sugar of the S-polynomial of basis element g and the new element with the given lcm.
  std::uint64_t pair_sugar(std::size_t g, std::size_t h, const Monomial& lcm) const {
    const auto& order = ring_->order();
    const auto l = selection_degree(order, lcm);
    return std::max(sugar_[g] + l - selection_degree(order, polys_[g].leading_monomial()),
                    sugar_[h] + l - selection_degree(order, polys_[h].leading_monomial()));
  }

  bool product_criterion(std::size_t a, std::size_t b) const {
    return !module_ && polys_[a].leading_monomial().coprime(polys_[b].leading_monomial());
  }

  /// Gebauer–Möller installation of a new basis element.
  void add(Polynomial h, std::uint64_t sugar) {
    const std::size_t hi = polys_.size();
    sugar_.push_back(std::max(sugar, sugar_of(h)));
    masks_.push_back(h.leading_monomial().support_mask());
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (auto g : basis_) {
      const Monomial& lg = polys_[g].leading_monomial();
      if (lg.component() != lh.component()) continue;
      auto l = lh.lcm(lg);
      candidates.push_back({g, hi, l, pair_sugar(g, hi, l), 0});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const auto& p = candidates[k];
      bool keep = product_criterion(p.i, p.j);
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < candidates.size() && keep; ++r) {
          if (candidates[r].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t r = 0; r < kept.size() && keep; ++r) {
          if (kept[r].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lh.lcm(polys_[p.i].leading_monomial()) != p.lcm &&
                  lh.lcm(polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (product_criterion(p.i, p.j)) continue;
      p.serial = serial_++;
      next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> basis;
    for (auto g : basis_) {
      if (!lh.divides(polys_[g].leading_monomial())) basis.push_back(g);
    }
    basis.push_back(hi);
    basis_ = std::move(basis);
  }

  std::vector<Polynomial> finish() {
    const auto& order = ring_->order();
    std::vector<Polynomial> minimal;
    for (auto idx : basis_) minimal.push_back(polys_[idx]);
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare_unchecked(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t r = 0; r < minimal.size(); ++r) {
        if (r != k) others.push_back({&minimal[r], minimal[r].leading_monomial().support_mask()});
      }
      reduced.push_back(reduce_full(minimal[k], others).monic());
    }
    return reduced;
  }

  RingPtr ring_;
  bool module_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> sugar_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
};

RingPtr tagged_ring_for(const RingPtr& ring, MonomialOrder::ModuleRank rule) {
  if (ring->order().module_rank() == rule) return ring;
  return ring->with_order(ring->order().with_module_rank(rule));
}

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, RingPtr tagged_ring, std::size_t rank,
                             std::vector<Polynomial> elements, bool reduced)
    : ring_(std::move(ring)),
      tagged_(std::move(tagged_ring)),
      rank_(rank),
      elements_(std::move(elements)),
      reduced_(reduced) {
  for (const auto& e : elements_) masks_.push_back(e.leading_monomial().support_mask());
}

bool GroebnerBasis::is_unit() const noexcept {
  return !is_module() && elements_.size() == 1 && elements_.front().is_constant();
}

std::vector<FreeVector> GroebnerBasis::vectors() const {
  std::vector<FreeVector> out;
  for (const auto& e : elements_) out.push_back(from_tagged(e, ring_, rank_));
  return out;
}

Polynomial GroebnerBasis::reduce_tagged(Polynomial f) const {
  std::vector<Reducer> reducers;
  reducers.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) reducers.push_back({&elements_[k], masks_[k]});
  return reduce_full(std::move(f), reducers);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const auto& field = f.ring()->field();
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const auto& lf = f.leading_monomial();
  const auto& lg = g.leading_monomial();
  if (lf.component() != lg.component()) return Polynomial(f.ring());
  auto l = lf.lcm(lg);
  auto s = f.times_term(l.quotient_by(lf), field.inv(f.leading_coeff()));
  s.add_multiple(g, l.quotient_by(lg), field.neg(field.inv(g.leading_coeff())));
  return s;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring(), "buchberger");
  auto elements = Buchberger(ring, false).run(gens);
  return GroebnerBasis(ring, ring, 0, std::move(elements), true);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list has no ring");
  auto ring = gens.front().ring()->with_order(order);
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(g.in_ring(ring));
  return buchberger(ring, moved);
}

GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const FreeVector> gens,
                         MonomialOrder::ModuleRank rank_rule) {
  auto tagged = tagged_ring_for(ring, rank_rule);
  std::vector<Polynomial> tagged_gens;
  for (const auto& v : gens) {
    require_same_ring(ring, v.ring(), "buchberger");
    if (v.rank() != rank) throw std::invalid_argument("buchberger: generator rank mismatch");
    tagged_gens.push_back(to_tagged(v, tagged));
  }
  auto elements = Buchberger(tagged, true).run(tagged_gens);
  return GroebnerBasis(ring, tagged, rank, std::move(elements), true);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.is_module()) throw std::invalid_argument("normal_form: polynomial against module basis");
  require_same_ring(f.ring(), basis.ring(), "normal_form");
  return basis.reduce_tagged(f.in_ring(basis.tagged_ring())).in_ring(f.ring());
}

FreeVector normal_form(const FreeVector& v, const GroebnerBasis& basis) {
  if (!basis.is_module() || v.rank() != basis.rank()) {
    throw std::invalid_argument("normal_form: vector rank does not match the module basis");
  }
  require_same_ring(v.ring(), basis.ring(), "normal_form");
  auto r = basis.reduce_tagged(to_tagged(v, basis.tagged_ring()));
  return from_tagged(r, v.ring(), v.rank());
}

std::vector<FreeVector> prune_generators(const RingPtr& ring, std::size_t rank,
                                         std::span<const FreeVector> gens) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_zero()) idx.push_back(k);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return *gens[a].degree() < *gens[b].degree(); });
  std::vector<FreeVector> kept;
  for (auto k : idx) {
    if (!kept.empty()) {
      auto gb = buchberger(ring, rank, kept);
      if (normal_form(gens[k], gb).is_zero()) continue;
    }
    kept.push_back(gens[k]);
  }
  return kept;
}

std::vector<Polynomial> prune_generators(const RingPtr& ring, std::span<const Polynomial> gens) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_zero()) idx.push_back(k);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return *gens[a].degree() < *gens[b].degree(); });
  std::vector<Polynomial> kept;
  for (auto k : idx) {
    if (!kept.empty()) {
      auto gb = buchberger(ring, kept);
      if (normal_form(gens[k], gb).is_zero()) continue;
    }
    kept.push_back(gens[k]);
  }
  return kept;
}

std::vector<FreeVector> syzygies(const RingPtr& ring, std::size_t rank,
                                 std::span<const FreeVector> columns) {
  const std::size_t s = columns.size();
  if (s == 0) return {};
  // Graph vectors (c_i, e_i) in P^(rank + s); the first `rank` components
  // rank highest, so basis elements led outside them carry no image part.
  std::vector<FreeVector> graph;
  for (std::size_t i = 0; i < s; ++i) {
    if (columns[i].rank() != rank) throw std::invalid_argument("syzygies: column rank mismatch");
    require_same_ring(ring, columns[i].ring(), "syzygies");
    FreeVector v(ring, rank + s);
    for (std::size_t r = 0; r < rank; ++r) v[r] = columns[i][r];
    v[rank + i] = Polynomial::constant(ring, 1);
    graph.push_back(std::move(v));
  }
  auto gb = buchberger(ring, rank + s, graph, MonomialOrder::ModuleRank::position_over_term);
  std::vector<FreeVector> kernel;
  for (const auto& e : gb.elements()) {
    if (e.leading_monomial().component() < rank) continue;
    auto full = from_tagged(e, ring, rank + s);
    FreeVector syz(ring, s);
    for (std::size_t i = 0; i < s; ++i) syz[i] = full[rank + i];
    kernel.push_back(std::move(syz));
  }
  return prune_generators(ring, s, kernel);
}

}  // namespace fte
