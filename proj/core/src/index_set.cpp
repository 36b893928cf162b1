#include "sgr/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sgr {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_params: return "InvalidParams";
    case errc::infinite_set: return "InfiniteSet";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::overflow: return "Overflow";
    case errc::not_solid: return "NotSolid";
    case errc::too_large: return "TooLarge";
    case errc::validity_window: return "ValidityWindow";
    case errc::degenerate: return "Degenerate";
  }
  return "Unknown";
}

void raise(errc code, const std::string& what) {
  throw error(code, std::string(errc_name(code)) + ": " + what);
}

const char* set_family_name(SetFamily f) {
  switch (f) {
    case SetFamily::Energy: return "energy";
    case SetFamily::EnergyEps: return "energy_eps";
    case SetFamily::Smolyak: return "smolyak";
    case SetFamily::Custom: return "custom";
  }
  return "unknown";
}

IndexSet::IndexSet(int d, SetFamily provenance, SmoothnessParams params,
                   std::optional<double> xi, std::optional<int> m,
                   std::vector<MultiIndex> members)
    : d_(d),
      provenance_(provenance),
      params_(std::move(params)),
      xi_(xi),
      m_(m),
      members_(std::move(members)) {
  require(d_ >= 1, errc::invalid_params, "index set dimension must be >= 1");
  for (const auto& k : members_)
    require(k.dim() == d_, errc::dimension_mismatch,
            "index set member has wrong dimension");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool IndexSet::contains(const MultiIndex& k) const {
  return std::binary_search(members_.begin(), members_.end(), k);
}

int IndexSet::max_level() const {
  int m = 0;
  for (const auto& k : members_) m = std::max(m, k.linf());
  return m;
}

namespace {

// Enumerate all k in N_0^d with |k|_1 <= budget, lexicographically, keeping
// those that satisfy pred.
template <typename Pred>
void enumerate_simplex(int d, int budget, const Pred& pred,
                       std::vector<MultiIndex>& out) {
  std::vector<int> k(static_cast<std::size_t>(d), 0);
  const auto rec = [&](auto&& self, int axis, int left) -> void {
    if (axis == d - 1) {
      for (int v = 0; v <= left; ++v) {
        k[static_cast<std::size_t>(axis)] = v;
        if (pred(k)) out.emplace_back(k);
      }
      k[static_cast<std::size_t>(axis)] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[static_cast<std::size_t>(axis)] = v;
      self(self, axis + 1, left - v);
    }
    k[static_cast<std::size_t>(axis)] = 0;
  };
  rec(rec, 0, budget);
}

int l1_of(const std::vector<int>& k) {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

int linf_of(const std::vector<int>& k) {
  int m = 0;
  for (int v : k)
    if (v > m) m = v;
  return m;
}

// Shared predicate-based construction for the two energy families with
// effective coefficients a|k|_1 - b|k|_inf <= xi, a > b >= 0.
std::vector<MultiIndex> energy_members(int d, double a, double b, double xi) {
  // |k|_inf <= |k|_1 gives a|k|_1 - b|k|_inf >= (a-b)|k|_1, so every member
  // satisfies |k|_1 <= xi/(a-b); the extra d*b/(a-b) slack keeps the budget
  // safely on the superset side of any rounding.
  const double bound = xi / (a - b) + static_cast<double>(d) * b / (a - b);
  const int budget = static_cast<int>(std::floor(bound + 1e-9));
  std::vector<MultiIndex> out;
  enumerate_simplex(d, std::max(budget, 0),
                    [&](const std::vector<int>& k) {
                      // xi arrives on a coarse lattice (halves in practice),
                      // so the comparison is an exact <= on doubles.
                      return a * l1_of(k) - b * linf_of(k) <= xi;
                    },
                    out);
  return out;
}

}  // namespace

IndexSet energy_set(const SmoothnessParams& p, double xi) {
  const double gb = p.gamma - p.beta;
  require(xi > 0.0, errc::invalid_params, "energy set needs xi > 0");
  require(gb > 0.0, errc::invalid_params,
          "energy set needs gamma - beta > 0");
  require(p.alpha > gb, errc::infinite_set,
          "energy set needs alpha > gamma - beta");
  return IndexSet(p.d, SetFamily::Energy, p, xi, std::nullopt,
                  energy_members(p.d, p.alpha, gb, xi));
}

IndexSet energy_set_eps(const SmoothnessParams& p, double xi) {
  const double gb = p.gamma - p.beta;
  require(xi > 0.0, errc::invalid_params, "energy set needs xi > 0");
  require(p.eps > 0.0 && p.eps < gb, errc::invalid_params,
          "energy set needs 0 < eps < gamma - beta");
  require(p.alpha > gb, errc::infinite_set,
          "energy set needs alpha > gamma - beta");
  return IndexSet(p.d, SetFamily::EnergyEps, p, xi, std::nullopt,
                  energy_members(p.d, p.alpha - p.eps, gb - p.eps, xi));
}

IndexSet smolyak_set(int d, int m) {
  require(d >= 1, errc::invalid_params, "smolyak set dimension must be >= 1");
  require(m >= 0, errc::invalid_params, "smolyak set level must be >= 0");
  std::vector<MultiIndex> out;
  enumerate_simplex(d, m, [](const std::vector<int>&) { return true; }, out);
  SmoothnessParams p;
  p.d = d;
  return IndexSet(d, SetFamily::Smolyak, p, std::nullopt, m, std::move(out));
}

bool is_solid(const IndexSet& s) {
  std::set<std::vector<int>> members;
  for (const auto& k : s.members()) members.insert(k.entries());
  for (const auto& k : s.members()) {
    std::vector<int> pred = k.entries();
    for (std::size_t j = 0; j < pred.size(); ++j) {
      if (pred[j] == 0) continue;
      pred[j] -= 1;
      if (!members.count(pred)) return false;
      pred[j] += 1;
    }
  }
  return true;
}

namespace {

// Univariate Littlewood-Paley block: P_0 = {0},
// P_j = { l : 2^{j-1} <= |l| < 2^j } for j >= 1.
std::vector<int> block_freqs_1d(int level) {
  if (level == 0) return {0};
  std::vector<int> out;
  const int lo = 1 << (level - 1), hi = (1 << level) - 1;
  out.reserve(2 * static_cast<std::size_t>(hi - lo + 1));
  for (int v = -hi; v <= -lo; ++v) out.push_back(v);
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

FrequencySet hyperbolic_cross(const IndexSet& s) {
  FrequencySet cross;
  const int d = s.dim();
  std::vector<std::vector<int>> axis(static_cast<std::size_t>(d));
  FreqVec freq(static_cast<std::size_t>(d), 0);
  for (const auto& k : s.members()) {
    for (int j = 0; j < d; ++j)
      axis[static_cast<std::size_t>(j)] = block_freqs_1d(k[j]);
    const auto rec = [&](auto&& self, int j) -> void {
      if (j == d) {
        cross.insert(freq);
        return;
      }
      for (int v : axis[static_cast<std::size_t>(j)]) {
        freq[static_cast<std::size_t>(j)] = v;
        self(self, j + 1);
      }
    };
    rec(rec, 0);
  }
  return cross;
}

std::int64_t dyadic_count_sum(const IndexSet& s) {
  std::int64_t sum = 0;
  for (const auto& k : s.members()) {
    const int l1 = k.l1();
    require(l1 < 62, errc::overflow, "2^{|k|_1} exceeds 64-bit range");
    const std::int64_t term = std::int64_t{1} << l1;
    require(sum <= std::numeric_limits<std::int64_t>::max() - term,
            errc::overflow, "dyadic count sum exceeds 64-bit range");
    sum += term;
  }
  return sum;
}

double weight_psi(const MultiIndex& k, double a, double b) {
  require(std::min(a, a + b) > 0.0, errc::invalid_params,
          "weight psi needs min(a, a+b) > 0");
  return a * k.l1() + b * k.linf();
}

}  // namespace sgr
