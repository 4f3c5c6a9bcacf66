#pragma once

// Competition metrics for a subject of journals.
//
// A subject is treated as a closed stand of "plants": each journal's
// diameter is its total citation count (TC), the distance between two
// journals derives from the cosine similarity of their citation profiles,
// and the pressure journal j exerts on journal i follows the Hegyi
// competition index
//
//     CR_ij = TC_j / (TC_i * L_ij),   L_ij = 1 / S_ij - 1.
//
// CI_i sums the pressure on i over all rivals; CIS is the mean CI of the
// subject. Everything here is a pure function of its arguments.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jcomp/citation_matrix.hpp"
#include "jcomp/config.hpp"
#include "jcomp/error.hpp"
#include "jcomp/matrix.hpp"

namespace jcomp {

// Symmetric matrix of cosine similarities in [0, 1]. The diagonal is
// stored but never read by the competition formulas.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;

  // Throws DimensionError on shape mismatch and DomainError when values are
  // outside [0, 1] or not exactly symmetric.
  SimilarityMatrix(std::vector<std::string> order, Matrix<double> values,
                   std::vector<std::size_t> zero_norm_rows = {})
      : order_(std::move(order)), values_(std::move(values)), zero_norm_rows_(std::move(zero_norm_rows)) {
    if (!values_.is_square() || values_.rows() != order_.size())
      throw DimensionError("similarity matrix must be square and match its order");
    const std::size_t n = values_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double s = values_(i, j);
        if (!(s >= 0.0 && s <= 1.0)) {
          std::ostringstream os;
          os << "similarity (" << i << ", " << j << ") = " << s << " outside [0, 1]";
          throw DomainError(os.str());
        }
        if (s != values_(j, i)) throw DomainError("similarity matrix is not symmetric");
      }
    }
    for (auto r : zero_norm_rows_)
      if (r >= n) throw DimensionError("zero-norm row index out of range");
  }

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<std::string>& order() const noexcept { return order_; }
  const Matrix<double>& values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }

  // Journals whose citation vector had zero norm (similar to nothing).
  const std::vector<std::size_t>& zero_norm_rows() const noexcept { return zero_norm_rows_; }

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

 private:
  std::vector<std::string> order_;
  Matrix<double> values_;
  std::vector<std::size_t> zero_norm_rows_;
};

enum class WarningKind { clamped_similarity, zero_vector, excluded_basic };

inline std::string_view to_string(WarningKind k) {
  switch (k) {
    case WarningKind::clamped_similarity: return "clamped_similarity";
    case WarningKind::zero_vector: return "zero_vector";
    case WarningKind::excluded_basic: return "excluded_basic";
  }
  return "unknown";
}

struct Warning {
  WarningKind kind;
  std::size_t i;
  std::size_t j;  // equals i for single-journal warnings
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

// CR_ij = pressure ON row journal i FROM column journal j. Zero diagonal.
struct CompetitionMatrix {
  std::vector<std::string> order;
  Matrix<double> values;
  std::vector<Warning> warnings;
  std::vector<std::size_t> excluded_basic;  // ascending

  std::size_t size() const noexcept { return order.size(); }

  bool is_excluded(std::size_t i) const {
    return std::binary_search(excluded_basic.begin(), excluded_basic.end(), i);
  }

  friend bool operator==(const CompetitionMatrix&, const CompetitionMatrix&) = default;
};

namespace detail {

// Cosine over x and y with up to two positions removed from both vectors.
template <typename T>
double cosine_skipping(std::span<const T> x, std::span<const T> y, std::size_t skip_a, std::size_t skip_b) {
  if (x.size() != y.size())
    throw DimensionError("cosine_similarity: lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " differ");
  // long double keeps integer sums of squares exact well past 2^53, so
  // identical profiles give exactly 1.
  long double dot = 0, nx = 0, ny = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k == skip_a || k == skip_b) continue;
    const auto a = static_cast<long double>(x[k]);
    const auto b = static_cast<long double>(y[k]);
    dot += a * b;
    nx += a * a;
    ny += b * b;
  }
  if (nx == 0 || ny == 0) return 0.0;
  const double s = static_cast<double>(dot / std::sqrt(nx * ny));
  return std::clamp(s, 0.0, 1.0);
}

inline constexpr std::size_t no_skip = std::numeric_limits<std::size_t>::max();

inline void require_unit_interval(double s, const char* what) {
  if (!(s >= 0.0 && s <= 1.0)) {
    std::ostringstream os;
    os << what << ": similarity " << s << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

}  // namespace detail

// Cosine of two nonnegative citation vectors. Zero when either has zero norm.
template <typename T>
double cosine_similarity(std::span<const T> x, std::span<const T> y) {
  if (x.empty()) throw DimensionError("cosine_similarity: empty vectors");
  return detail::cosine_skipping(x, y, detail::no_skip, detail::no_skip);
}

template <typename T>
double cosine_similarity(const std::vector<T>& x, const std::vector<T>& y) {
  return cosine_similarity(std::span<const T>(x), std::span<const T>(y));
}

// Pairwise cosine of the rows of C. Under DiagonalPolicy::exclude, cells i
// and j are dropped from both rows before the (i, j) cosine is taken.
inline SimilarityMatrix similarity_matrix(const CitationMatrix& c, const AnalysisConfig& cfg = {}) {
  cfg.validate();
  if (!c.counts.is_square()) throw DimensionError("similarity_matrix: citation matrix is not square");
  if (c.counts.rows() != c.order.size()) throw DimensionError("similarity_matrix: order/size mismatch");
  const std::size_t n = c.size();
  if (n == 0) throw DimensionError("similarity_matrix: empty matrix");

  const bool exclude = cfg.diagonal_policy == DiagonalPolicy::exclude;
  Matrix<double> s = Matrix<double>::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto a = exclude ? i : detail::no_skip;
      const auto b = exclude ? j : detail::no_skip;
      const double v = detail::cosine_skipping(c.counts.row(i), c.counts.row(j), a, b);
      s(i, j) = v;
      s(j, i) = v;
    }
  }

  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = c.counts.row(i);
    bool zero = true;
    for (std::size_t k = 0; k < n && zero; ++k)
      if (!(exclude && k == i) && row[k] != 0) zero = false;
    if (zero) zero_rows.push_back(i);
  }
  return SimilarityMatrix(c.order, std::move(s), std::move(zero_rows));
}

// True when s is large enough to be clamped to 1 - epsilon.
inline bool is_clamped(double s, const AnalysisConfig& cfg = {}) {
  return s > 1.0 - cfg.similarity_clamp_epsilon;
}

// Ecological distance L = 1/s - 1, with s clamped to 1 - epsilon. Infinite
// for s = 0.
inline double distance(double s, const AnalysisConfig& cfg = {}) {
  detail::require_unit_interval(s, "distance");
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  const double clamped = std::min(s, 1.0 - cfg.similarity_clamp_epsilon);
  // (1 - s) / s avoids the cancellation in 1/s - 1 near s = 1.
  return (1.0 - clamped) / clamped;
}

// Pressure on a basic journal from one rival. Zero when the rival has no
// citations or the two are orthogonal.
inline double competitive_pressure(Count tc_basic, Count tc_rival, double s, const AnalysisConfig& cfg = {}) {
  if (tc_basic == 0) throw DomainError("competitive_pressure: basic journal has zero total citations");
  detail::require_unit_interval(s, "competitive_pressure");
  if (s == 0.0 || tc_rival == 0) return 0.0;
  const double ratio = static_cast<double>(tc_rival) / static_cast<double>(tc_basic);
  return ratio / distance(s, cfg);
}

inline CompetitionMatrix competition_matrix(std::span<const Count> tc, const SimilarityMatrix& s,
                                            const AnalysisConfig& cfg = {}) {
  cfg.validate();
  const std::size_t n = s.size();
  if (tc.size() != n)
    throw DimensionError("competition_matrix: " + std::to_string(tc.size()) + " TC values for " +
                         std::to_string(n) + " journals");

  CompetitionMatrix out{s.order(), Matrix<double>::square(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (tc[i] != 0) continue;
    if (cfg.zero_tc_policy == ZeroTcPolicy::reject)
      throw ValidationError("journal '" + s.order()[i] + "' has zero total citations");
    out.excluded_basic.push_back(i);
    out.warnings.push_back({WarningKind::excluded_basic, i, i,
                            "journal '" + s.order()[i] + "' has zero total citations; excluded as basic journal"});
  }

  for (auto r : s.zero_norm_rows())
    out.warnings.push_back({WarningKind::zero_vector, r, r,
                            "journal '" + s.order()[r] + "' has an all-zero citation vector; similarity 0 to all rivals"});

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_clamped(s(i, j), cfg)) continue;
      std::ostringstream os;
      os << "similarity of '" << s.order()[i] << "' and '" << s.order()[j] << "' is " << s(i, j)
         << "; clamped to 1 - " << cfg.similarity_clamp_epsilon;
      out.warnings.push_back({WarningKind::clamped_similarity, i, j, os.str()});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (tc[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.values(i, j) = competitive_pressure(tc[i], tc[j], s(i, j), cfg);
  }
  return out;
}

inline CompetitionMatrix competition_matrix(const std::vector<Count>& tc, const SimilarityMatrix& s,
                                            const AnalysisConfig& cfg = {}) {
  return competition_matrix(std::span<const Count>(tc), s, cfg);
}

// CI_i: total pressure on journal i from all of its rivals.
inline std::vector<double> journal_ci_vector(const CompetitionMatrix& cr) {
  const std::size_t n = cr.size();
  if (!cr.values.is_square() || cr.values.rows() != n)
    throw DimensionError("journal_ci_vector: malformed competition matrix");
  std::vector<double> ci(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) ci[i] += cr.values(i, j);
  return ci;
}

// CIS: mean competitive intensity of a subject.
inline double subject_cis(std::span<const double> ci) {
  if (ci.empty()) throw DomainError("subject_cis: no CI values");
  const double mean = std::accumulate(ci.begin(), ci.end(), 0.0) / static_cast<double>(ci.size());
  const auto [lo, hi] = std::minmax_element(ci.begin(), ci.end());
  return std::clamp(mean, *lo, *hi);
}

inline double subject_cis(const std::vector<double>& ci) { return subject_cis(std::span<const double>(ci)); }

}  // namespace jcomp
