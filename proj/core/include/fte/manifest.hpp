#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fte/ideal.hpp"

namespace fte {

/// Manifest syntax or validation error; line is 1-based, 0 when not tied to a line.
class ManifestError : public std::invalid_argument {
 public:
  ManifestError(const std::string& message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct SamplingSpec {
  std::size_t count = 0;
  std::uint32_t degree = 2;
  std::uint64_t seed = 0;
};

/// A ring with its sequences and declared data.
///
///   [ring]      p = 2, vars = ["x", "y"], relations = ["x^2 - y^3"]
///   [[sequence]] elements = ["x", "y"]        (repeatable)
///   [sampling]  count, degree, seed
///   [known]     hsl_top, provenance
struct Manifest {
  std::string id;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::vector<std::string>> sequences;
  SamplingSpec sampling;
  std::optional<int> hsl_top;
  std::string provenance;

  /// P = F_p[vars] with the given order.
  RingPtr polynomial_ring(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// P / (relations).
  QuotientRing quotient_ring(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// Explicit sequences parsed in the given ring.
  std::vector<std::vector<Polynomial>> parsed_sequences(const RingPtr& ring) const;
};

/// Parses and validates manifest text; id names the ring in reports.
Manifest parse_manifest(std::string_view text, std::string id);
/// Reads a file; the id is the file stem.
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace fte
