#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fte/frobenius.hpp"
#include "fte/ideal.hpp"

namespace fte {

/// Raised when an operation's hypotheses on the sequence do not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the closed limit-closure formula without a standardness certificate.
class NotStandard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SequenceReport {
  std::vector<Polynomial> elements;
  bool is_filter_regular = false;
  /// 1-based position of the first element failing the colon inclusion.
  std::optional<std::size_t> first_failure;
  bool is_sop = false;
  /// Largest k with every element in m^k + J; nullopt when every element
  /// vanishes in S.
  std::optional<std::uint32_t> in_m_power;
  /// Least n making the sequence m^n-weak, when searched and found.
  std::optional<int> weak_n;
};

/// Checks ((x_1..x_{i-1}) + J) : x_i ⊆ sat((x_1..x_{i-1}) + J, m) for every i.
/// weak_cap > 0 also searches weak_n in 1..weak_cap.
SequenceReport is_filter_regular(std::span<const Polynomial> seq, const QuotientRing& ring,
                                 int weak_cap = 0);

/// ((x_1..x_{i-1}) + J) : x_i ⊆ ((x_1..x_{i-1}) + J) : m^n for every i.
bool is_weak_sequence(std::span<const Polynomial> seq, int n, const QuotientRing& ring);

/// length = dim S and dim S/(seq) = 0.
bool is_system_of_parameters(std::span<const Polynomial> seq, const QuotientRing& ring);

/// Largest k with f ∈ m^k + J; nullopt when f ∈ J.
std::optional<std::uint32_t> m_adic_order(const Polynomial& f, const QuotientRing& ring);
bool in_maximal_power(std::span<const Polynomial> seq, std::uint32_t k, const QuotientRing& ring);

enum class LimitMethod { chain, standard_formula };
enum class Standardness { none, contained_in_m_2n0, user_asserted };

struct LimitClosureResult {
  Ideal ideal;
  LimitMethod method = LimitMethod::chain;
  /// Index where the colon chain settled (chain method).
  std::optional<int> chain_n;
  /// False when the chain budget ran out before two repeated values.
  bool stabilized = true;
  /// dim_{F_p} lim / ((seq) + J), nullopt when infinite.
  std::optional<std::uint64_t> quotient_length;
  Standardness standardness = Standardness::none;
};

inline constexpr int kDefaultLimitChainBudget = 10;

/// L_n = ((x_1^(n+1), .., x_s^(n+1)) + J) : (x_1 ... x_s)^n until
/// L_n = L_{n+1} = L_{n+2}.
LimitClosureResult limit_closure_chain(std::span<const Polynomial> seq, const QuotientRing& ring,
                                       int max_n = kDefaultLimitChainBudget);

/// Filter regular and contained in m^(2 n0) gives a standardness certificate.
Standardness certify_standard(std::span<const Polynomial> seq, const QuotientRing& ring, int n0);

/// (seq) + J + sum_i ((x_1..^x_i..x_s) + J) : x_i. Throws NotStandard when
/// cert is Standardness::none.
LimitClosureResult limit_closure_standard(std::span<const Polynomial> seq, const QuotientRing& ring,
                                          Standardness cert);

/// Data about the ring the low-HSL computations need.
struct LowCohomologyData {
  int fin_dim;  // t
  int n0;
};

/// Z = lim ∩ closure; least e with z^(p^e) ∈ (seq)^[p^e] + J for all
/// generators z of Z. Throws PreconditionError unless seq is filter regular
/// of length t inside m^(2 n0).
int hsl_low(std::span<const Polynomial> seq, const QuotientRing& ring,
            const FrobeniusClosureResult& closure, const LowCohomologyData& data,
            int max_e = kDefaultMaxE);

struct FrobeniusNilpotence {
  /// First e with ker(z -> z^(p^e)) = ker(z -> z^(p^(e+1))) on lim/(seq).
  int hsl_low = 0;
  /// dim lim/(seq).
  std::uint64_t limit_length = 0;
  /// dim of the Frobenius-nilpotent part of lim/(seq).
  std::uint64_t nilpotent_length = 0;
  /// lim ∩ (seq)^F, i.e. (seq) + J + the nilpotent classes.
  Ideal nilpotent_ideal;
};

/// Same invariant by linear algebra: z -> z^(p^e) is F_p-linear on
/// lim/(seq), and its kernels grow until they repeat. Same preconditions
/// as hsl_low.
FrobeniusNilpotence frobenius_nilpotence(std::span<const Polynomial> seq, const QuotientRing& ring,
                                         const LowCohomologyData& data, int max_e = kDefaultMaxE);

/// Seeded rejection sampling of homogeneous forms of the given degree until
/// the tuple is filter regular. Throws std::runtime_error after max_attempts.
std::vector<Polynomial> random_filter_regular_sequence(const QuotientRing& ring, std::size_t t,
                                                       std::uint32_t degree, std::uint64_t seed,
                                                       int max_attempts = 1000);

}  // namespace fte
