#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cliques/lincomb.hpp"

namespace cliques {

/// Sparse vector: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline SparseRow make_row(std::map<std::size_t, Rational> entries) {
  SparseRow row;
  for (auto& [c, v] : entries)
    if (v != 0) row.emplace_back(c, std::move(v));
  return row;
}

/// Incremental row echelon form over the rationals. Pivot rows are monic and
/// keyed by their leading column; insertion order fixes the result.
class Echelon {
 public:
  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const Rational lead = row.front().second;
    for (auto& [c, v] : row) v /= lead;
    const std::size_t col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
  }

  [[nodiscard]] bool contains(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  [[nodiscard]] std::size_t rank() const noexcept { return pivots_.size(); }
  [[nodiscard]] const std::map<std::size_t, SparseRow>& rows() const noexcept { return pivots_; }

 private:
  void reduce(SparseRow& row) const {
    std::size_t start = 0;
    while (start < row.size()) {
      auto it = pivots_.find(row[start].first);
      if (it == pivots_.end()) {
        ++start;
        continue;
      }
      const Rational factor = row[start].second;
      row = axpy(row, -factor, it->second);
    }
  }

  static SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second + s * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace cliques
