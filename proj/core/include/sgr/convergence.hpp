#pragma once

#include <cstdint>
#include <vector>

#include "sgr/index_set.hpp"
#include "sgr/sampling_operator.hpp"
#include "sgr/testbed.hpp"

namespace sgr {

enum class DofMode { Distinct, Multiset };

const char* dof_mode_name(DofMode m);

// One convergence sweep: fix smoothness parameters, a set family, a target
// norm, and a test function; ramp xi (or the Smolyak level m) and record
// error against degrees of freedom.
struct StudyConfig {
  SmoothnessParams params;
  SetFamily family = SetFamily::Energy;
  std::vector<double> xi_values;  // Smolyak: integer levels m >= 1
  NormKind target = NormKind::l2();
  TestFamily function = CubePoly{1, 0};
  DofMode dof_mode = DofMode::Distinct;
  std::uint64_t seed = 1;
  // Reproduction demos intentionally drive the error to exact zero; they
  // bypass the band-exhaustion guard below.
  bool allow_reproduction = false;
};

struct StudyRecord {
  double xi = 0.0;  // xi for energy families, the level m for Smolyak
  std::int64_t dof_distinct = 0;
  std::int64_t dof_multiset = 0;
  double error = 0.0;
  double source_norm = 0.0;
  double ratio_to_bound = 0.0;

  std::int64_t dof(DofMode mode) const {
    return mode == DofMode::Distinct ? dof_distinct : dof_multiset;
  }
};

struct StudyResult {
  StudyConfig config;
  std::vector<StudyRecord> records;
};

// Theoretical error normalization the ratio column divides by (times the
// source norm): 2^{-xi} for the energy families; for Smolyak level m the
// target norm picks the rate, including its m-power factor.
double error_bound_form(const StudyConfig& cfg, double xi_or_m);

// Run the sweep.  Every point is pure given (config, seed); with threads > 1
// points run concurrently and are stored by position, so the records are
// identical for every thread count.  A study whose levels would exhaust the
// test function's band is rejected (ValidityWindow) unless the config is
// explicitly marked as a reproduction demo.
StudyResult run_study(const StudyConfig& cfg, int threads = 1);

}  // namespace sgr
