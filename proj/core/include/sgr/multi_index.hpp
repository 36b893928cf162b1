#pragma once

#include <compare>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

// Frequency vector in Z^d.  Plain alias: frequencies carry no invariant
// beyond their dimension, and std::vector's lexicographic ordering is the
// canonical ordering used everywhere (containers, serialization).
using FreqVec = std::vector<int>;

// Dyadic level vector k in N_0^d.  Wraps the entry vector so the
// nonnegativity invariant is established once, at construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
      require(v >= 0, errc::invalid_params, "multi-index entries must be >= 0");
  }
  static MultiIndex zeros(int d) { return MultiIndex(std::vector<int>(d, 0)); }

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int j) const { return e_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return e_; }

  // |k|_1 and |k|_inf.
  int l1() const {
    int s = 0;
    for (int v : e_) s += v;
    return s;
  }
  int linf() const {
    int m = 0;
    for (int v : e_)
      if (v > m) m = v;
    return m;
  }

  // Componentwise partial order (k <= other in every coordinate).
  bool dominated_by(const MultiIndex& other) const {
    if (dim() != other.dim()) return false;
    for (int j = 0; j < dim(); ++j)
      if (e_[static_cast<std::size_t>(j)] > other[j]) return false;
    return true;
  }

  bool operator==(const MultiIndex&) const = default;
  // Lexicographic; the canonical member ordering of index sets.
  auto operator<=>(const MultiIndex& other) const { return e_ <=> other.e_; }

 private:
  std::vector<int> e_;
};

}  // namespace sgr
