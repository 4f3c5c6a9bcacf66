#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "jcomp/error.hpp"

namespace jcomp {

enum class DiagonalPolicy { include, exclude };
enum class Symmetrization { sum, citing_only, cited_only };
enum class ZeroTcPolicy { reject, exclude_as_basic };

inline std::string_view to_string(DiagonalPolicy p) {
  return p == DiagonalPolicy::include ? "include" : "exclude";
}

inline std::string_view to_string(Symmetrization s) {
  switch (s) {
    case Symmetrization::sum: return "sum";
    case Symmetrization::citing_only: return "citing_only";
    case Symmetrization::cited_only: return "cited_only";
  }
  return "sum";
}

inline std::string_view to_string(ZeroTcPolicy p) {
  return p == ZeroTcPolicy::reject ? "reject" : "exclude_as_basic";
}

inline std::optional<DiagonalPolicy> parse_diagonal_policy(std::string_view s) {
  if (s == "include") return DiagonalPolicy::include;
  if (s == "exclude") return DiagonalPolicy::exclude;
  return std::nullopt;
}

inline std::optional<Symmetrization> parse_symmetrization(std::string_view s) {
  if (s == "sum") return Symmetrization::sum;
  if (s == "citing_only") return Symmetrization::citing_only;
  if (s == "cited_only") return Symmetrization::cited_only;
  return std::nullopt;
}

inline std::optional<ZeroTcPolicy> parse_zero_tc_policy(std::string_view s) {
  if (s == "reject") return ZeroTcPolicy::reject;
  if (s == "exclude_as_basic") return ZeroTcPolicy::exclude_as_basic;
  return std::nullopt;
}

// Every choice the competition formulas leave open. Recorded verbatim in
// each analysis so results are reproducible.
struct AnalysisConfig {
  double similarity_clamp_epsilon = 1e-9;
  DiagonalPolicy diagonal_policy = DiagonalPolicy::include;
  Symmetrization symmetrization = Symmetrization::sum;
  ZeroTcPolicy zero_tc_policy = ZeroTcPolicy::reject;

  // Throws DomainError unless 0 < epsilon < 1e-3.
  void validate() const {
    if (!(similarity_clamp_epsilon > 0.0 && similarity_clamp_epsilon < 1e-3)) {
      std::ostringstream os;
      os << "similarity_clamp_epsilon must lie in (0, 1e-3), got " << similarity_clamp_epsilon;
      throw DomainError(os.str());
    }
  }

  // One-line "key=value" rendering used in output headers.
  std::string describe() const {
    std::ostringstream os;
    os << "diagonal=" << to_string(diagonal_policy) << " symmetrize=" << to_string(symmetrization)
       << " epsilon=" << similarity_clamp_epsilon << " zero_tc=" << to_string(zero_tc_policy);
    return os.str();
  }

  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

}  // namespace jcomp
