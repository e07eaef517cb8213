#include "fte/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fte {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(std::move(order)) {
  if (vars_.size() > kMaxVariables) {
    throw std::invalid_argument("too many variables: " + std::to_string(vars_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(variables), std::move(order));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return std::make_shared<const PolyRing>(field_, vars_, std::move(order));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view operation) {
  if (!same_ring(a, b)) {
    throw RingMismatch(std::string(operation) + ": operands belong to different rings");
  }
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  auto c = ring->field().reduce(value);
  Polynomial f(ring);
  if (c != 0) f.terms_.push_back({Monomial(ring->num_variables()), c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw std::out_of_range("variable index out of range");
  auto n = ring->num_variables();
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
  if (m.arity() != ring->num_variables()) throw std::invalid_argument("monomial arity mismatch");
  Polynomial f(ring);
  coeff %= ring->characteristic();
  if (coeff != 0) f.terms_.push_back({m, coeff});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (const auto& t : terms) {
    if (t.monomial.arity() != ring->num_variables()) {
      throw std::invalid_argument("monomial arity mismatch");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    auto c = t.coeff % field.characteristic();
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, c);
    } else {
      out.push_back({t.monomial, c});
    }
    if (out.back().coeff == 0) out.pop_back();
  }
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Degree Polynomial::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Degree Polynomial::low_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

void Polynomial::merge(const Polynomial& g, const Monomial* m, std::uint32_t c) {
  if (c == 0 || g.terms_.empty()) return;
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    Term scaled{m ? j->monomial * *m : j->monomial, field.mul(j->coeff, c)};
    if (i == terms_.end()) {
      out.push_back(std::move(scaled));
      ++j;
      continue;
    }
    auto cmp = order.compare_unchecked(i->monomial, scaled.monomial);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back(std::move(scaled));
      ++j;
    } else {
      auto s = field.add(i->coeff, scaled.coeff);
      if (s != 0) out.push_back({i->monomial, s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_, "add");
  merge(g, nullptr, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_, "subtract");
  merge(g, nullptr, ring_->field().neg(1));
  return *this;
}

void Polynomial::add_multiple(const Polynomial& g, const Monomial& m, std::uint32_t c) {
  merge(g, &m, c);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_, "multiply");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  const auto& field = f.ring_->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      auto& slot = acc[a.monomial * b.monomial];
      slot = field.add(slot, field.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (c != 0) terms.push_back({mono, c});
  }
  return Polynomial::from_terms(f.ring_, std::move(terms));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  // Multiplication by a monomial preserves the order, so no re-sort.
  for (auto& t : r.terms_) {
    t.monomial = t.monomial * m;
    t.coeff = ring_->field().mul(t.coeff, c);
  }
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base(*this);
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring_->characteristic();
    if (q > (std::uint64_t{1} << 32)) throw std::overflow_error("Frobenius exponent too large");
  }
  Polynomial r(*this);
  // Scaling every exponent by q is order preserving for all supported orders.
  for (auto& t : r.terms_) t.monomial = t.monomial.scaled(q);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r(*this);
    r.ring_ = target;
    return r;
  }
  if (target->field() != ring_->field() || target->variables() != ring_->variables()) {
    throw RingMismatch("in_ring: target ring has a different field or variable list");
  }
  return from_terms(target, terms_);
}

Polynomial Polynomial::mapped(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (target->field() != ring_->field()) throw RingMismatch("mapped: field mismatch");
  if (var_map.size() != ring_->num_variables()) {
    throw std::invalid_argument("mapped: variable map has the wrong length");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->num_variables());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] != 0) m.set(var_map[i], m[var_map[i]] + t.monomial[i]);
    }
    m.set_component(t.monomial.component());
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.monomial.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + '*';
      out += monomial_to_string(t.monomial, *ring_);
    }
  }
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::uint64_t parse_uint() {
    skip_ws();
    auto start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (std::uint64_t{1} << 40)) throw ParseError("integer literal too large", start);
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an unsigned integer", start);
    return value;
  }

  bool ident_start(char c) const { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool ident_char(char c) const { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void parse_factor(Monomial& m) {
    skip_ws();
    auto start = pos_;
    if (at_end() || !ident_start(peek())) throw ParseError("expected a variable", start);
    while (!at_end() && ident_char(peek())) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      auto ppos = pos_;
      power = parse_uint();
      if (power > 0xffffffffu) throw ParseError("exponent too large", ppos);
    }
    m.set(*idx, static_cast<std::uint32_t>(m[*idx] + power));
  }

  Term parse_term(bool negative) {
    skip_ws();
    const auto& field = ring_->field();
    Monomial m(ring_->num_variables());
    std::uint32_t coeff = 1;
    if (at_end()) throw ParseError("expected a term", pos_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = static_cast<std::uint32_t>(parse_uint() % field.characteristic());
      skip_ws();
      if (at_end() || peek() != '*') return {m, negative ? field.neg(coeff) : coeff};
      ++pos_;
    }
    parse_factor(m);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      parse_factor(m);
    }
    return {m, negative ? field.neg(coeff) : coeff};
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace fte
