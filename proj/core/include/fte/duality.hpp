#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fte/groebner.hpp"
#include "fte/ideal.hpp"

namespace fte {

/// Raised when a graded construction receives a non-homogeneous ideal.
class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// coker(P^s -> P^rank) with the relations as columns.
struct ModulePresentation {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<FreeVector> relations;

  static ModulePresentation zero(RingPtr ring) { return {std::move(ring), 0, {}}; }
  /// Cyclic module P/I.
  static ModulePresentation cyclic(const Ideal& ideal);
  bool is_zero() const;
};

/// Minimal free resolution of P/J:
/// 0 <- P <-d_1- P^{b_1} <-d_2- ... <-d_m- P^{b_m} <- 0.
struct FreeResolution {
  RingPtr ring;
  /// maps[i] = d_{i+1}, as columns of rank ranks[i]. maps[0] generates J.
  std::vector<std::vector<FreeVector>> maps;

  /// b_0, b_1, ..., b_m.
  std::vector<std::size_t> ranks() const;
  std::size_t length() const noexcept { return maps.size(); }
};

/// Iterated pruned syzygies starting from minimal generators of J. Throws
/// NotHomogeneous for non-homogeneous J, std::logic_error if d∘d ≠ 0 or the
/// length exceeds max_len (default: number of variables).
FreeResolution free_resolution(const QuotientRing& ring, std::optional<std::size_t> max_len = {});

/// Ext^j_P(S, P) = ker(d_{j+1}^T) / im(d_j^T). Zero module for j outside [0, n].
ModulePresentation ext_module(const FreeResolution& resolution, int j);
ModulePresentation ext_module(const QuotientRing& ring, int j);

/// ∩_i (im relations : e_i).
Ideal module_annihilator(const ModulePresentation& module);

/// dim_{F_p} of the module, nullopt when infinite.
std::optional<std::uint64_t> module_length(const ModulePresentation& module);

/// M / m^k M.
ModulePresentation truncate_by_power(const ModulePresentation& module, std::uint32_t k);

struct CohomologyProfile {
  int dim = 0;
  /// Least i with H^i_m(S) not finitely generated.
  int fin_dim = 0;
  /// Least k >= 1 with m^k killing H^i_m(S) for every i < fin_dim.
  int n0 = 1;
  /// ℓ(H^0), ..., ℓ(H^{t-1}).
  std::vector<std::uint64_t> low_lengths;
  /// socle_lengths[i][k-1] = ℓ(0 :_{H^i} m^k) for i <= t, 1 <= k <= n0.
  std::vector<std::vector<std::uint64_t>> socle_lengths;
};

/// Lengths and annihilators of H^i_m(S) read off Ext^{n-i}_P(S, P) by graded
/// local duality. Throws NotHomogeneous, or std::invalid_argument when dim S <= 0.
CohomologyProfile cohomology_profile(const QuotientRing& ring);

/// Least e with p^e >= 2 n0.
int frobenius_exponent_bound(std::uint32_t p, int n0);

}  // namespace fte
