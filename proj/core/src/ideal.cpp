#include "fte/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace fte {

namespace {

constexpr int kSaturationLimit = 1000;

/// Fresh variable names that cannot clash with parsed identifiers.
std::string aux_name(char tag, std::size_t i) { return std::string("@") + tag + std::to_string(i); }

}  // namespace

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring(), "Ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal_power(RingPtr ring, std::uint32_t k) {
  const auto n = ring->num_variables();
  std::vector<Polynomial> gens;
  Monomial m(n);
  // Enumerate exponent vectors of total degree k.
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      m.set(i, left);
      gens.push_back(Polynomial::monomial(ring, m));
      m.set(i, 0);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      m.set(i, a);
      rec(i + 1, left - a);
    }
    m.set(i, 0);
  };
  if (n == 0) {
    if (k == 0) gens.push_back(Polynomial::constant(ring, 1));
  } else {
    rec(0, k);
  }
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::parse(RingPtr ring, std::span<const std::string> gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(std::move(ring), std::move(polys));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis.emplace(buchberger(ring_, gens_)); });
  return *cache_->basis;
}

std::vector<Polynomial> Ideal::basis() const {
  auto e = groebner().elements();
  return {e.begin(), e.end()};
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "membership");
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "containment");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_homogeneous() const {
  // Reduced bases of homogeneous ideals under graded orders are homogeneous;
  // testing the generators is enough for the ideals built here.
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "reduce");
  return normal_form(f, groebner());
}

Ideal Ideal::operator+(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal sum");
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) gens.push_back(a * b);
  }
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(std::span<const Polynomial> more) const {
  auto gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- basic ops

bool membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal equality");
  auto ea = a.groebner().elements();
  auto eb = b.groebner().elements();
  return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool is_subset(const Ideal& a, const Ideal& b) { return b.contains(a); }

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  require_same_ring(h.ring(), g.ring(), "exact_divide");
  if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  const auto& field = h.ring()->field();
  const auto inv = field.inv(g.leading_coeff());
  Polynomial rest = h;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const auto& lead = rest.leading_term();
    if (!g.leading_monomial().divides(lead.monomial)) {
      throw std::invalid_argument("exact_divide: divisor does not divide");
    }
    auto m = lead.monomial.quotient_by(g.leading_monomial());
    auto c = field.mul(lead.coeff, inv);
    quotient.push_back({m, c});
    rest.add_multiple(g, m, field.neg(c));
  }
  return Polynomial::from_terms(h.ring(), std::move(quotient));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  if (a.gens().empty() || b.gens().empty()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const auto& ring = a.ring();
  const auto n = ring->num_variables();
  std::vector<std::string> vars{aux_name('t', 0)};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  auto big = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::elimination(1));
  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), std::size_t{1});
  auto t = Polynomial::variable(big, 0);
  auto one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.mapped(big, embed));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.mapped(big, embed));
  auto gb = buchberger(big, gens);
  std::vector<std::size_t> back(n + 1);
  std::iota(back.begin() + 1, back.end(), std::size_t{0});
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    if (e.leading_monomial()[0] != 0) continue;  // block order: t-free iff lead is t-free
    std::vector<Term> terms;
    for (const auto& term : e.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, term.monomial[i + 1]);
      terms.push_back({m, term.coeff});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring(), "colon");
  if (g.is_zero()) throw std::invalid_argument("colon: zero divisor argument g = 0");
  if (g.is_constant()) return ideal;
  if (ideal.is_unit()) return ideal;
  auto meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : meet.gens()) gens.push_back(exact_divide(h, g));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring(), "colon");
  std::optional<Ideal> acc;
  for (const auto& g : by.gens()) {
    auto c = colon(ideal, g);
    acc = acc ? intersect(*acc, c) : c;
    if (equal(*acc, ideal)) break;  // already as small as it can get
  }
  return acc ? *acc : Ideal::unit(ideal.ring());
}

Saturation saturate(const Ideal& ideal, const Ideal& by) {
  Ideal prev = ideal;
  for (int n = 1; n <= kSaturationLimit; ++n) {
    Ideal cur = colon(prev, by);
    if (equal(cur, prev)) {
      Ideal check = colon(cur, by);
      if (!equal(check, cur)) throw std::logic_error("saturate: colon chain failed to stay constant");
      return {cur, n};
    }
    prev = cur;
  }
  throw std::runtime_error("saturate: no stabilization within the iteration limit");
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> keep) {
  const auto& ring = ideal.ring();
  const auto n = ring->num_variables();
  std::vector<bool> kept(n, false);
  for (auto k : keep) {
    if (k >= n) throw std::out_of_range("eliminate: variable index out of range");
    kept[k] = true;
  }
  // New position of each variable: eliminated block first.
  std::vector<std::size_t> pos(n);
  std::vector<std::string> vars;
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!kept[i]) {
      pos[i] = vars.size();
      vars.push_back(ring->variables()[i]);
      ++block;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      pos[i] = vars.size();
      vars.push_back(ring->variables()[i]);
    }
  }
  if (block == 0) return ideal;
  auto big = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::elimination(block));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.mapped(big, pos));
  auto gb = buchberger(big, gens);
  std::vector<std::size_t> back(n);
  for (std::size_t i = 0; i < n; ++i) back[pos[i]] = i;
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    const auto& lead = e.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < block; ++i) free = free && lead[i] == 0;
    if (free) out.push_back(e.mapped(ring, back));
  }
  return Ideal(ring, std::move(out));
}

Ideal eliminate(const Ideal& ideal, std::span<const std::string> keep) {
  std::vector<std::size_t> idx;
  for (const auto& name : keep) {
    auto i = ideal.ring()->index_of(name);
    if (!i) throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    idx.push_back(*i);
  }
  return eliminate(ideal, idx);
}

Ideal preimage(const RingPtr& source_ring, std::span<const Polynomial> targets, const Ideal& c) {
  const auto& ring = c.ring();
  if (targets.size() != source_ring->num_variables()) {
    throw std::invalid_argument("preimage: need one target per source variable");
  }
  if (source_ring->field() != ring->field()) throw RingMismatch("preimage: field mismatch");
  for (const auto& t : targets) require_same_ring(ring, t.ring(), "preimage");
  const auto n = ring->num_variables();
  const auto m = targets.size();
  std::vector<std::string> vars;
  std::vector<std::uint32_t> weights;
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(aux_name('x', i));
    weights.push_back(1);
  }
  for (std::size_t i = 0; i < m; ++i) {
    vars.push_back(aux_name('y', i));
    auto d = targets[i].degree();
    weights.push_back(d && *d > 0 ? *d : 1);
  }
  auto order = MonomialOrder::elimination(n).with_weights(weights);
  auto big = std::make_shared<const PolyRing>(ring->field(), vars, order);
  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), std::size_t{0});
  std::vector<Polynomial> gens;
  for (const auto& g : c.gens()) gens.push_back(g.mapped(big, embed));
  for (std::size_t i = 0; i < m; ++i) {
    gens.push_back(Polynomial::variable(big, n + i) - targets[i].mapped(big, embed));
  }
  auto gb = buchberger(big, gens);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements()) {
    const auto& lead = e.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < n; ++i) free = free && lead[i] == 0;
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& term : e.terms()) {
      Monomial mono(m);
      for (std::size_t i = 0; i < m; ++i) mono.set(i, term.monomial[n + i]);
      terms.push_back({mono, term.coeff});
    }
    out.push_back(Polynomial::from_terms(source_ring, std::move(terms)));
  }
  return Ideal(source_ring, std::move(out));
}

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> gens) : arity_(arity) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (auto& g : gens) {
    if (g.arity() != arity) throw std::invalid_argument("MonomialIdeal: arity mismatch");
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::leading_terms(const GroebnerBasis& basis) {
  return MonomialIdeal(basis.ring()->num_variables(), basis.leading_monomials());
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    Monomial q(arity_);
    for (std::size_t i = 0; i < arity_; ++i) q.set(i, g[i] > m[i] ? g[i] - m[i] : 0);
    out.push_back(q);
  }
  return MonomialIdeal(arity_, std::move(out));
}

bool MonomialIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::is_zero_dimensional() const noexcept {
  if (is_unit()) return true;
  for (std::size_t i = 0; i < arity_; ++i) {
    bool pure = std::any_of(gens_.begin(), gens_.end(),
                            [&](const Monomial& g) { return g[i] != 0 && g[i] == g.degree(); });
    if (!pure) return false;
  }
  return true;
}

std::optional<std::uint64_t> MonomialIdeal::count_standard() const {
  if (!is_zero_dimensional()) return std::nullopt;
  if (is_unit()) return 0;
  std::uint64_t count = 0;
  Monomial m(arity_);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arity_) {
      ++count;
      return;
    }
    for (std::uint32_t a = 0;; ++a) {
      m.set(i, a);
      if (contains(m)) break;
      rec(i + 1);
    }
    m.set(i, 0);
  };
  rec(0);
  return count;
}

Dimension MonomialIdeal::dimension() const {
  if (is_unit()) return std::nullopt;
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens_) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (g[i]) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> rec = [&](std::size_t i, std::uint64_t set,
                                                                  int size) {
    if (size + static_cast<int>(arity_ - i) <= best) return;
    if (i == arity_) {
      best = size;
      return;
    }
    auto with = set | (std::uint64_t{1} << i);
    bool ok = std::none_of(supports.begin(), supports.end(),
                           [&](std::uint64_t s) { return (s & ~with) == 0; });
    if (ok) rec(i + 1, with, size + 1);
    rec(i + 1, set, size);
  };
  rec(0, 0, 0);
  return best;
}

// ---------------------------------------------------------------- dimension, length

Dimension krull_dim(const Ideal& ideal) {
  return MonomialIdeal::leading_terms(ideal.groebner()).dimension();
}

std::uint64_t vs_length(const Ideal& ideal) {
  auto count = MonomialIdeal::leading_terms(ideal.groebner()).count_standard();
  if (!count) throw NotFiniteLength("vs_length: quotient is not of finite length");
  return *count;
}

std::optional<std::vector<Monomial>> leading_term_difference(const Ideal& larger,
                                                             const Ideal& smaller) {
  require_same_ring(larger.ring(), smaller.ring(), "leading_term_difference");
  auto big = MonomialIdeal::leading_terms(larger.groebner());
  auto small = MonomialIdeal::leading_terms(smaller.groebner());
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> out;
  for (const auto& u : big.gens()) {
    auto q = small.colon(u);
    if (!q.is_zero_dimensional()) return std::nullopt;
    if (q.is_unit()) continue;
    Monomial v(q.arity());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == v.arity()) {
        auto w = u * v;
        if (seen.insert(w).second) out.push_back(w);
        return;
      }
      for (std::uint32_t a = 0;; ++a) {
        v.set(i, a);
        if (q.contains(v)) break;
        rec(i + 1);
      }
      v.set(i, 0);
    };
    rec(0);
  }
  const auto& order = larger.ring()->order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return order.compare_unchecked(a, b) > 0;
  });
  return out;
}

std::optional<std::uint64_t> quotient_length(const Ideal& larger, const Ideal& smaller) {
  require_same_ring(larger.ring(), smaller.ring(), "quotient_length");
  if (!larger.contains(smaller)) {
    throw std::invalid_argument("quotient_length: ideals are not nested");
  }
  auto diff = leading_term_difference(larger, smaller);
  if (!diff) return std::nullopt;
  return diff->size();
}

// ---------------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(Ideal defining) : defining_(std::move(defining)) {}

Ideal QuotientRing::extend(std::span<const Polynomial> gens) const { return defining_.with(gens); }

Ideal QuotientRing::extend(const Ideal& ideal) const { return defining_ + ideal; }

}  // namespace fte
