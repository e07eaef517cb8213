#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fte/duality.hpp"
#include "fte/frobenius.hpp"
#include "fte/manifest.hpp"
#include "fte/sequences.hpp"

namespace fte {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kReportSchema = "fte-report/1";

/// Raised when the top HSL contribution is unknown and the ring is not F-pure.
class MissingHslTop : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct BoundCertificate {
  std::string ring_id;
  std::vector<std::string> sequence;
  int fte = 0;
  std::optional<std::string> witness;
  int n0 = 1;
  int e0 = 0;
  int hsl_low = 0;
  int hsl_top = 0;
  int hsl_used = 0;
  int bound = 0;
  bool holds = false;
  bool certified_stops = false;
  /// The closure certified at the bound equals the heuristic chain value.
  bool heuristic_agrees = false;
  int heuristic_e = 0;
  std::string closure;
  double seconds = 0;
};

struct BoundOptions {
  int max_e = kDefaultMaxE;
  /// Precomputed Fedder answer; computed on demand when absent.
  std::optional<bool> f_pure;
  std::string ring_id;
};

/// Checks Fte(seq) <= e0 + max(hsl_low, hsl_top). F-pure rings use hsl_top = 0;
/// otherwise hsl_top must be given (MissingHslTop). Throws PreconditionError
/// unless seq is filter regular of length t.
BoundCertificate verify_bound(const QuotientRing& ring, std::span<const Polynomial> seq,
                              const CohomologyProfile& profile, std::optional<int> hsl_top,
                              const BoundOptions& options = {});

/// hsl_low by linear algebra on lim/(seq); sequences outside m^(2 n0) are
/// replaced by their p^e0-th powers first.
int low_hsl_for_sequence(std::span<const Polynomial> seq, const QuotientRing& ring,
                         const CohomologyProfile& profile, int max_e = kDefaultMaxE);

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus status);

struct IdentityCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  /// JSON-encoded sides as computed by the two independent routes.
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Identity and inclusion checks for one sequence. Checks needing the
/// sequence inside m^(2 n0) are skipped otherwise; the closure enables the
/// cross-check of the two low-HSL routes.
std::vector<IdentityCheck> verify_identities(const QuotientRing& ring, std::span<const Polynomial> seq,
                                             const CohomologyProfile& profile,
                                             const FrobeniusClosureResult* closure = nullptr,
                                             int max_e = kDefaultMaxE);

struct RunOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  int max_e = kDefaultMaxE;
  std::size_t jobs = 1;
  /// Replaces every manifest's sampling seed.
  std::optional<std::uint64_t> seed;
};

struct TaskReport {
  std::size_t index = 0;
  std::string source;  // "explicit" or "sampled"
  std::optional<std::uint64_t> seed;
  std::vector<std::string> sequence;
  std::optional<BoundCertificate> certificate;
  std::vector<IdentityCheck> identities;
  std::optional<std::string> error;
  bool input_error = false;
  double seconds = 0;
};

struct RingReport {
  std::string id;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::optional<CohomologyProfile> profile;
  bool f_pure = false;
  std::optional<int> hsl_top;
  std::string hsl_top_source;
  std::string provenance;
  int e0 = 0;
  std::optional<std::string> error;
  std::vector<TaskReport> tasks;
  double seconds = 0;
};

struct Report {
  std::vector<RingReport> rings;
  std::size_t certificates = 0;
  std::size_t holding = 0;
  std::size_t check_failures = 0;
  std::size_t input_errors = 0;
  /// Certificates without certified stops, kept out of the holds count.
  std::vector<std::string> uncertified;
  double seconds = 0;

  bool all_pass() const noexcept { return holding == certificates && check_failures == 0; }
  /// 0 all pass, 1 a bound or identity check failed, 2 input error.
  int exit_code() const noexcept;
};

Report run_all(std::span<const Manifest> manifests, const RunOptions& options = {});

/// Stable field order; with_timings = false drops every timing field.
std::string report_to_json(const Report& report, bool with_timings = true);

}  // namespace fte
