#include "fte/duality.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace fte {

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t k) {
  std::vector<Monomial> out;
  Monomial m(arity);
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == arity) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m.set(i, e);
      fill(i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (arity == 0) {
    if (k == 0) out.push_back(m);
    return out;
  }
  fill(0, k);
  return out;
}

/// Rows of a map given by columns: row r of an (rows x cols) matrix as a vector of rank cols.
std::vector<FreeVector> transpose(const RingPtr& ring, std::size_t rows,
                                  const std::vector<FreeVector>& columns) {
  std::vector<FreeVector> out(rows, FreeVector(ring, columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) out[r][c] = columns[c][r];
  }
  return out;
}

FreeVector apply(const RingPtr& ring, std::size_t rank, const std::vector<FreeVector>& columns,
                 const FreeVector& v) {
  FreeVector out(ring, rank);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (!v[i].is_zero()) out += columns[i].times(v[i]);
  }
  return out;
}

}  // namespace

ModulePresentation ModulePresentation::cyclic(const Ideal& ideal) {
  ModulePresentation m{ideal.ring(), 1, {}};
  for (const auto& g : ideal.gens()) m.relations.push_back(FreeVector({g}));
  return m;
}

bool ModulePresentation::is_zero() const {
  if (rank == 0) return true;
  return module_length(*this) == std::optional<std::uint64_t>(0);
}

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> out{1};
  for (const auto& m : maps) out.push_back(m.size());
  return out;
}

FreeResolution free_resolution(const QuotientRing& ring, std::optional<std::size_t> max_len) {
  const auto& defining = ring.defining();
  if (!defining.is_homogeneous()) throw NotHomogeneous("free_resolution: defining ideal is not homogeneous");
  const auto& p = ring.ambient();
  const std::size_t limit = max_len.value_or(ring.num_variables());
  FreeResolution res{p, {}};
  auto gens = prune_generators(p, defining.basis());
  if (gens.empty()) return res;
  std::vector<FreeVector> current;
  for (auto& g : gens) current.push_back(FreeVector({g}));
  std::size_t rank = 1;
  while (!current.empty()) {
    if (res.maps.size() == limit) {
      throw std::logic_error("free_resolution: longer than " + std::to_string(limit));
    }
    res.maps.push_back(current);
    auto next = syzygies(p, rank, current);
    for (const auto& s : next) {
      if (!apply(p, rank, current, s).is_zero()) throw std::logic_error("free_resolution: d∘d ≠ 0");
    }
    rank = current.size();
    current = std::move(next);
  }
  return res;
}

ModulePresentation ext_module(const FreeResolution& resolution, int j) {
  const auto& p = resolution.ring;
  const auto ranks = resolution.ranks();
  const int n = static_cast<int>(p->num_variables());
  if (j < 0 || j > n || static_cast<std::size_t>(j) >= ranks.size()) return ModulePresentation::zero(p);
  const std::size_t bj = ranks[static_cast<std::size_t>(j)];
  // Image of d_j^T : P^{b_{j-1}} -> P^{b_j}; its columns are the rows of d_j.
  std::vector<FreeVector> image;
  if (j > 0) {
    image = transpose(p, ranks[static_cast<std::size_t>(j) - 1],
                      resolution.maps[static_cast<std::size_t>(j) - 1]);
  }
  if (static_cast<std::size_t>(j) == resolution.length()) {
    return {p, bj, prune_generators(p, bj, image)};
  }
  // Kernel of d_{j+1}^T : P^{b_j} -> P^{b_{j+1}}.
  const auto& next = resolution.maps[static_cast<std::size_t>(j)];
  auto kernel = syzygies(p, next.size(), transpose(p, bj, next));
  if (kernel.empty()) return ModulePresentation::zero(p);
  // Relations among the kernel generators modulo the image.
  std::vector<FreeVector> combined = kernel;
  combined.insert(combined.end(), image.begin(), image.end());
  const std::size_t m = kernel.size();
  std::vector<FreeVector> relations;
  for (const auto& s : syzygies(p, bj, combined)) {
    FreeVector r(p, m);
    for (std::size_t i = 0; i < m; ++i) r[i] = s[i];
    relations.push_back(std::move(r));
  }
  return {p, m, prune_generators(p, m, relations)};
}

ModulePresentation ext_module(const QuotientRing& ring, int j) {
  return ext_module(free_resolution(ring), j);
}

Ideal module_annihilator(const ModulePresentation& module) {
  const auto& p = module.ring;
  if (module.rank == 0) return Ideal::unit(p);
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < module.rank; ++i) {
    auto columns = module.relations;
    columns.push_back(FreeVector::basis(p, module.rank, i));
    std::vector<Polynomial> gens;
    for (const auto& s : syzygies(p, module.rank, columns)) gens.push_back(s[columns.size() - 1]);
    Ideal colon_i(p, std::move(gens));
    acc = acc ? intersect(*acc, colon_i) : colon_i;
    if (acc->is_zero()) break;
  }
  return Ideal(p, acc->basis());
}

std::optional<std::uint64_t> module_length(const ModulePresentation& module) {
  if (module.rank == 0) return 0;
  const auto& p = module.ring;
  auto gb = buchberger(p, module.rank, module.relations, MonomialOrder::ModuleRank::term_over_position);
  std::vector<std::vector<Monomial>> per_component(module.rank);
  for (const auto& lm : gb.leading_monomials()) {
    Monomial plain = lm;
    plain.set_component(0);
    per_component.at(lm.component()).push_back(plain);
  }
  std::uint64_t total = 0;
  for (auto& gens : per_component) {
    auto count = MonomialIdeal(p->num_variables(), std::move(gens)).count_standard();
    if (!count) return std::nullopt;
    total += *count;
  }
  return total;
}

ModulePresentation truncate_by_power(const ModulePresentation& module, std::uint32_t k) {
  auto out = module;
  const auto& p = module.ring;
  for (const auto& m : monomials_of_degree(p->num_variables(), k)) {
    for (std::size_t i = 0; i < module.rank; ++i) {
      out.relations.push_back(FreeVector::basis(p, module.rank, i).times(Polynomial::monomial(p, m)));
    }
  }
  return out;
}

CohomologyProfile cohomology_profile(const QuotientRing& ring) {
  if (!ring.is_homogeneous()) throw NotHomogeneous("cohomology_profile: defining ideal is not homogeneous");
  auto d = ring.dim();
  if (!d || *d <= 0) {
    throw std::invalid_argument("cohomology_profile: dimension must be positive (finiteness dimension is infinite)");
  }
  const auto& p = ring.ambient();
  const int n = static_cast<int>(ring.num_variables());
  auto res = free_resolution(ring);
  CohomologyProfile prof;
  prof.dim = *d;
  std::vector<ModulePresentation> dual;  // dual[i] = Ext^{n-i}
  prof.fin_dim = *d;
  for (int i = 0; i <= *d; ++i) {
    dual.push_back(ext_module(res, n - i));
    auto len = module_length(dual.back());
    if (!len) {
      prof.fin_dim = i;
      break;
    }
    prof.low_lengths.push_back(*len);
  }
  if (prof.fin_dim == *d && static_cast<int>(dual.size()) == *d) dual.push_back(ext_module(res, n - *d));
  std::vector<Ideal> annihilators;
  for (int i = 0; i < prof.fin_dim; ++i) annihilators.push_back(module_annihilator(dual[static_cast<std::size_t>(i)]));
  for (std::uint32_t k = 1;; ++k) {
    auto degree_k = monomials_of_degree(p->num_variables(), k);
    bool kills = std::all_of(annihilators.begin(), annihilators.end(), [&](const Ideal& a) {
      return std::all_of(degree_k.begin(), degree_k.end(),
                         [&](const Monomial& m) { return a.contains(Polynomial::monomial(p, m)); });
    });
    if (kills) {
      prof.n0 = static_cast<int>(k);
      break;
    }
  }
  for (int i = 0; i <= prof.fin_dim; ++i) {
    std::vector<std::uint64_t> row;
    for (int k = 1; k <= prof.n0; ++k) {
      auto len = module_length(truncate_by_power(dual[static_cast<std::size_t>(i)], static_cast<std::uint32_t>(k)));
      if (!len) throw std::logic_error("cohomology_profile: infinite socle length");
      row.push_back(*len);
    }
    prof.socle_lengths.push_back(std::move(row));
  }
  return prof;
}

int frobenius_exponent_bound(std::uint32_t p, int n0) {
  if (p < 2 || n0 < 1) throw std::invalid_argument("frobenius_exponent_bound: need p >= 2 and n0 >= 1");
  const std::uint64_t target = 2 * static_cast<std::uint64_t>(n0);
  int e = 0;
  for (std::uint64_t q = 1; q < target; q *= p) ++e;
  return e;
}

}  // namespace fte
