#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "jcomp/error.hpp"
#include "jcomp/matrix.hpp"
#include "jcomp/text.hpp"

namespace jcomp {

using Count = std::uint64_t;

// Inter-citation counts for one subject. counts(i, j) = citations from
// journal i's articles to journal j.
struct CitationMatrix {
  std::vector<std::string> order;
  Matrix<Count> counts;

  std::size_t size() const noexcept { return order.size(); }

  // Throws DimensionError for shape problems, ValidationError for titles.
  void validate() const {
    if (!counts.is_square()) throw DimensionError("citation matrix is not square");
    if (counts.rows() != order.size())
      throw DimensionError("citation matrix order has " + std::to_string(order.size()) +
                           " titles for " + std::to_string(counts.rows()) + " rows");
    std::unordered_set<std::string> seen;
    for (const auto& title : order) {
      if (text::trim(title).empty()) throw ValidationError("empty journal title");
      if (!seen.insert(text::fold(title)).second)
        throw ValidationError("duplicate journal title '" + title + "'");
    }
  }

  friend bool operator==(const CitationMatrix&, const CitationMatrix&) = default;
};

}  // namespace jcomp
