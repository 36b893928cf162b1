#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgr/multi_index.hpp"

namespace sgr {

// Smoothness parameters (alpha, beta, gamma) plus the epsilon used by the
// modified energy sets.  Which inequalities must hold depends on the
// consumer; each operation checks what it needs.
struct SmoothnessParams {
  int d = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double eps = 0.0;
};

enum class SetFamily { Energy, EnergyEps, Smolyak, Custom };

const char* set_family_name(SetFamily f);

// Finite downward-closed family of dyadic levels.  Members are kept
// lexicographically sorted and unique; provenance records which constructor
// produced the set and with which parameters.
class IndexSet {
 public:
  IndexSet(int d, SetFamily provenance, SmoothnessParams params,
           std::optional<double> xi, std::optional<int> m,
           std::vector<MultiIndex> members);

  int dim() const { return d_; }
  SetFamily provenance() const { return provenance_; }
  const SmoothnessParams& params() const { return params_; }
  std::optional<double> xi() const { return xi_; }
  std::optional<int> level() const { return m_; }
  const std::vector<MultiIndex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const MultiIndex& k) const;  // binary search

  // Largest single entry over all members (0 for the empty set).
  int max_level() const;

 private:
  int d_;
  SetFamily provenance_;
  SmoothnessParams params_;
  std::optional<double> xi_;
  std::optional<int> m_;
  std::vector<MultiIndex> members_;
};

// Energy-norm set { k : alpha|k|_1 - (gamma-beta)|k|_inf <= xi }.
// Requires alpha > gamma-beta > 0 (finite, nontrivial) and xi > 0.
IndexSet energy_set(const SmoothnessParams& p, double xi);

// Epsilon-modified energy set
// { k : (alpha-eps)|k|_1 - (gamma-beta-eps)|k|_inf <= xi }.
// Requires 0 < eps < gamma-beta < alpha and xi > 0.
IndexSet energy_set_eps(const SmoothnessParams& p, double xi);

// Smolyak simplex { k : |k|_1 <= m }; cardinality binom(m+d, d).
IndexSet smolyak_set(int d, int m);

// Downward closure: every componentwise predecessor of a member is a member.
bool is_solid(const IndexSet& s);

// Union of the Littlewood-Paley frequency blocks of all members.
using FrequencySet = std::set<FreqVec>;
FrequencySet hyperbolic_cross(const IndexSet& s);

// Sum of tensor block sizes 2^{|k|_1}; Overflow if it would exceed 2^62.
std::int64_t dyadic_count_sum(const IndexSet& s);

// psi(k) = a|k|_1 + b|k|_inf.  Requires min(a, a+b) > 0, which makes psi
// strictly increasing along every coordinate direction.
double weight_psi(const MultiIndex& k, double a, double b);

}  // namespace sgr
