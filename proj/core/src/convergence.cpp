#include "sgr/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace sgr {

const char* dof_mode_name(DofMode m) {
  return m == DofMode::Distinct ? "distinct" : "multiset";
}

namespace {

IndexSet build_set(const StudyConfig& cfg, double xi_or_m) {
  switch (cfg.family) {
    case SetFamily::Energy:
      return energy_set(cfg.params, xi_or_m);
    case SetFamily::EnergyEps:
      return energy_set_eps(cfg.params, xi_or_m);
    case SetFamily::Smolyak: {
      const double r = std::round(xi_or_m);
      require(std::abs(xi_or_m - r) == 0.0 && r >= 1.0, errc::invalid_params,
              "smolyak study levels must be integers >= 1");
      return smolyak_set(cfg.params.d, static_cast<int>(r));
    }
    case SetFamily::Custom:
      break;
  }
  raise(errc::invalid_params, "study needs a constructible set family");
}

}  // namespace

double error_bound_form(const StudyConfig& cfg, double xi_or_m) {
  if (cfg.family != SetFamily::Smolyak) return std::exp2(-xi_or_m);
  const double m = xi_or_m;
  const double a = cfg.params.alpha;
  const double d1 = 0.5 * (cfg.params.d - 1);
  switch (cfg.target.kind) {
    case NormKind::Kind::HMix:
    case NormKind::Kind::HGammaMix:
      // Mixed-target rate 2^{-(alpha - gamma) m}.
      return std::exp2(-(a - cfg.target.a) * m);
    case NormKind::Kind::L2:
    case NormKind::Kind::HGamma:
      // Isotropic-target rate 2^{-alpha m} m^{(d-1)/2}.
      return std::exp2(-a * m) * std::pow(m, d1);
    case NormKind::Kind::LInfEstimate:
      return std::exp2(-(a - 0.5) * m) * std::pow(m, d1);
    case NormKind::Kind::LqEstimate:
      return std::exp2(-(a - (0.5 - 1.0 / cfg.target.q)) * m);
    case NormKind::Kind::HAB:
      break;
  }
  raise(errc::invalid_params,
        "no bound form for this Smolyak target norm");
}

StudyResult run_study(const StudyConfig& cfg, int threads) {
  const auto& p = cfg.params;
  require(std::min(p.alpha, p.alpha + p.beta) > 0.5, errc::invalid_params,
          "sampling study needs min(alpha, alpha+beta) > 1/2");
  require(!cfg.xi_values.empty(), errc::invalid_params,
          "study needs at least one level");
  for (std::size_t i = 0; i + 1 < cfg.xi_values.size(); ++i)
    require(cfg.xi_values[i] < cfg.xi_values[i + 1], errc::invalid_params,
            "study levels must be strictly increasing");

  const SpectralFunction f = materialize(cfg.function, p.d);
  require(f.support_size() > 0, errc::invalid_params,
          "study test function is identically zero");
  const int band = f.band();
  const double source_norm = norm_hab_dyadic(f, p.alpha, p.beta);

  // Build all sets up front; the guard below must reject the whole study
  // before any work runs.
  std::vector<IndexSet> sets;
  sets.reserve(cfg.xi_values.size());
  for (double x : cfg.xi_values) {
    sets.push_back(build_set(cfg, x));
    if (!cfg.allow_reproduction) {
      const int max_level = sets.back().max_level();
      require(max_level <= 29 && (1 << (max_level + 1)) <= band,
              errc::validity_window,
              "study levels exhaust the test function band; errors would be "
              "reproduction zeros, not approximation errors");
    }
  }

  StudyResult out;
  out.config = cfg;
  out.records.assign(cfg.xi_values.size(), StudyRecord{});

  const auto run_point = [&](std::size_t i) {
    const double x = cfg.xi_values[i];
    const IndexSet& s = sets[i];
    const SpectralFunction qf = apply_Q(f, s);
    const double err = norm(f - qf, cfg.target);
    const GridReport grid = sampling_grid(s);
    StudyRecord rec;
    rec.xi = x;
    rec.dof_distinct = grid.distinct_count;
    rec.dof_multiset = grid.multiset_count;
    rec.error = err;
    rec.source_norm = source_norm;
    rec.ratio_to_bound = err / (error_bound_form(cfg, x) * source_norm);
    out.records[i] = rec;
  };

  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads,
                                      static_cast<int>(sets.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = static_cast<std::size_t>(t); i < sets.size();
             i += static_cast<std::size_t>(threads))
          run_point(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace sgr
