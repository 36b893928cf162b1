#pragma once

#include <string>

#include "sgr/baselines.hpp"
#include "sgr/convergence.hpp"
#include "sgr/verify.hpp"

namespace sgr {

// Stable text formats.  Nothing here embeds timestamps or machine state, so
// identical inputs always serialize to identical bytes.

std::string format_double(double v);  // %.17g

const char* norm_kind_name(const NormKind& k);

// {"d", "provenance", "params", "members"}; members lexicographic.
std::string index_set_json(const IndexSet& s);

// {"d", "coeffs": [{"freq", "re", "im"}...]}; coeffs lexicographic by freq.
std::string spectral_json(const SpectralFunction& f);

// Per-piece grid table: k levels, per-axis sample counts, block size.
std::string grid_csv(const IndexSet& s);
// Distinct sample points, one row per point, exact fractions of 2 pi.
std::string grid_points_csv(const IndexSet& s);

std::string count_json(const IndexSet& s);
std::string count_csv(const IndexSet& s);

// Pinned header:
// xi,dof_distinct,dof_multiset,error,source_norm,ratio_to_bound
std::string study_csv(const StudyResult& r);
std::string study_json(const StudyResult& r);

std::string baseline_csv(const SingularSpectrum& sp, std::int64_t rows);
std::string baseline_json(const SmoothnessParams& p, TargetKind target,
                          int cutoff, const SingularSpectrum& sp,
                          std::int64_t rows);

std::string verify_json(const VerifyReport& r);

// Study configuration file.  Recognized keys: d, alpha, beta, gamma, eps,
// family, xi_values, target, q, function, dof_mode, seed,
// allow_reproduction.
StudyConfig study_config_from_json(const std::string& text);

// Resolve a target-norm name against the study parameters.
NormKind parse_target(const std::string& name, const SmoothnessParams& p,
                      double q);

}  // namespace sgr
