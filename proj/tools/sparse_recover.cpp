// sparse-recover: sparse-grid sampling recovery toolbox.
//
// Subcommands: grid, count, apply, study, baseline, verify.
// Exit codes: 0 success, 1 invalid arguments or config, 2 numerical failure
// (overflow or validity-window violation).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sgr/json_io.hpp"
#include "sgr/sampling_operator.hpp"

namespace {

struct SetFlags {
  std::string family = "energy";
  int d = 2;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double eps = 0.0;
  double xi = 0.0;
  int m = 0;
};

void add_set_flags(CLI::App* cmd, SetFlags& f) {
  cmd->add_option("--family", f.family, "Index-set family: energy, energy_eps, smolyak")
      ->check(CLI::IsMember({"energy", "energy_eps", "smolyak"}));
  cmd->add_option("--d", f.d, "Dimension");
  cmd->add_option("--alpha", f.alpha, "Mixed-smoothness exponent alpha");
  cmd->add_option("--beta", f.beta, "Isotropic shift exponent beta");
  cmd->add_option("--gamma", f.gamma, "Target smoothness gamma");
  cmd->add_option("--eps", f.eps, "Energy-set modification epsilon");
  cmd->add_option("--xi", f.xi, "Energy-set threshold xi");
  cmd->add_option("--m", f.m, "Smolyak level m");
}

sgr::IndexSet build_set(const SetFlags& f) {
  sgr::SmoothnessParams p{f.d, f.alpha, f.beta, f.gamma, f.eps};
  if (f.family == "energy") return sgr::energy_set(p, f.xi);
  if (f.family == "energy_eps") return sgr::energy_set_eps(p, f.xi);
  return sgr::smolyak_set(f.d, f.m);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) sgr::raise(sgr::errc::invalid_params, "cannot open " + out_path);
  os << text;
}

// --threads 0 means one worker per hardware thread.
int resolve_threads(int n) {
  if (n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) sgr::raise(sgr::errc::invalid_params, "cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse-grid sampling recovery toolbox"};
  app.require_subcommand(1);

  // grid
  SetFlags grid_flags;
  std::string grid_format = "json", grid_out;
  bool grid_points = false;
  CLI::App* grid = app.add_subcommand("grid", "Construct an index set and its sampling grid");
  add_set_flags(grid, grid_flags);
  grid->add_option("--format", grid_format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  grid->add_flag("--points", grid_points, "Emit distinct sample points (csv only)");
  grid->add_option("--out", grid_out, "Output path (default stdout)");

  // count
  SetFlags count_flags;
  std::string count_format = "json", count_out;
  CLI::App* count = app.add_subcommand("count", "Cardinality and sample counts of an index set");
  add_set_flags(count, count_flags);
  count->add_option("--format", count_format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--out", count_out, "Output path (default stdout)");

  // apply
  SetFlags apply_flags;
  std::string apply_function, apply_out;
  bool apply_residual = false;
  int apply_threads = 1;
  CLI::App* apply = app.add_subcommand("apply", "Apply the interpolation operator to a test function");
  add_set_flags(apply, apply_flags);
  apply->add_option("--function", apply_function, "Test function, e.g. cubepoly:L=8,seed=1")
      ->required();
  apply->add_flag("--residual", apply_residual, "Emit f - Qf instead of Qf");
  apply->add_option("--threads", apply_threads, "Worker threads");
  apply->add_option("--out", apply_out, "Output path (default stdout)");

  // study
  std::string study_config, study_format = "csv", study_out;
  std::string study_family, study_target, study_function, study_dof;
  std::optional<int> study_d;
  std::optional<double> study_alpha, study_beta, study_gamma, study_eps;
  std::optional<std::uint64_t> study_seed;
  int study_threads = 1;
  CLI::App* study = app.add_subcommand("study", "Run a convergence study from a config file");
  study->add_option("--config", study_config, "Study config JSON path")->required();
  study->add_option("--d", study_d, "Override dimension");
  study->add_option("--alpha", study_alpha, "Override alpha");
  study->add_option("--beta", study_beta, "Override beta");
  study->add_option("--gamma", study_gamma, "Override gamma");
  study->add_option("--eps", study_eps, "Override eps");
  study->add_option("--family", study_family, "Override set family")
      ->check(CLI::IsMember({"energy", "energy_eps", "smolyak"}));
  study->add_option("--target", study_target, "Override target norm")
      ->check(CLI::IsMember({"l2", "hgamma", "hgammamix", "hmix", "hab", "linf", "lq"}));
  study->add_option("--function", study_function, "Override test function");
  study->add_option("--dof-mode", study_dof, "Override dof accounting")
      ->check(CLI::IsMember({"distinct", "multiset"}));
  study->add_option("--seed", study_seed, "Override seed");
  study->add_option("--threads", study_threads, "Worker threads");
  study->add_option("--format", study_format, "Output format: csv or json")
      ->check(CLI::IsMember({"json", "csv"}));
  study->add_option("--out", study_out, "Output path (default stdout)");

  // baseline
  std::string base_target = "isotropic", base_format = "csv", base_out;
  SetFlags base_flags;
  int base_kc = 64;
  std::int64_t base_rows = 2000;
  CLI::App* baseline = app.add_subcommand("baseline", "Approximation-number baseline of the embedding");
  baseline->add_option("--d", base_flags.d, "Dimension");
  baseline->add_option("--alpha", base_flags.alpha, "Source exponent alpha");
  baseline->add_option("--beta", base_flags.beta, "Source shift beta");
  baseline->add_option("--gamma", base_flags.gamma, "Target exponent gamma");
  baseline->add_option("--target", base_target, "Target norm kind")
      ->check(CLI::IsMember({"isotropic", "mixed"}));
  baseline->add_option("--kc", base_kc, "Frequency cutoff of the truncation cube");
  baseline->add_option("--rows", base_rows, "Number of a_n rows to emit");
  baseline->add_option("--format", base_format, "Output format: csv or json")
      ->check(CLI::IsMember({"json", "csv"}));
  baseline->add_option("--out", base_out, "Output path (default stdout)");

  // verify
  std::uint64_t verify_seed = 1;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite and report");
  verify->add_option("--seed", verify_seed, "Suite seed");
  verify->add_option("--out", verify_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (grid->parsed()) {
    const sgr::IndexSet s = build_set(grid_flags);
    if (grid_points) {
      sgr::require(grid_format == "csv", sgr::errc::invalid_params,
                   "--points needs --format csv");
      emit(sgr::grid_points_csv(s), grid_out);
    } else if (grid_format == "json") {
      emit(sgr::index_set_json(s), grid_out);
    } else {
      emit(sgr::grid_csv(s), grid_out);
    }
    return 0;
  }

  if (count->parsed()) {
    const sgr::IndexSet s = build_set(count_flags);
    emit(count_format == "json" ? sgr::count_json(s) : sgr::count_csv(s),
         count_out);
    return 0;
  }

  if (apply->parsed()) {
    const sgr::IndexSet s = build_set(apply_flags);
    const sgr::SpectralFunction f =
        sgr::materialize(sgr::parse_family(apply_function), s.dim());
    sgr::SpectralFunction qf = sgr::apply_Q(f, s, resolve_threads(apply_threads));
    if (apply_residual) qf = f - qf;
    emit(sgr::spectral_json(qf), apply_out);
    return 0;
  }

  if (study->parsed()) {
    sgr::StudyConfig cfg = sgr::study_config_from_json(slurp(study_config));
    if (study_d) cfg.params.d = *study_d;
    if (study_alpha) cfg.params.alpha = *study_alpha;
    if (study_beta) cfg.params.beta = *study_beta;
    if (study_gamma) cfg.params.gamma = *study_gamma;
    if (study_eps) cfg.params.eps = *study_eps;
    if (!study_family.empty()) {
      cfg.family = study_family == "energy"      ? sgr::SetFamily::Energy
                   : study_family == "energy_eps" ? sgr::SetFamily::EnergyEps
                                                  : sgr::SetFamily::Smolyak;
    }
    if (!study_function.empty()) cfg.function = sgr::parse_family(study_function);
    if (!study_dof.empty())
      cfg.dof_mode = study_dof == "distinct" ? sgr::DofMode::Distinct
                                             : sgr::DofMode::Multiset;
    if (study_seed) cfg.seed = *study_seed;
    if (!study_target.empty())
      cfg.target = sgr::parse_target(study_target, cfg.params, cfg.target.q);
    const sgr::StudyResult res = sgr::run_study(cfg, resolve_threads(study_threads));
    emit(study_format == "json" ? sgr::study_json(res) : sgr::study_csv(res),
         study_out);
    return 0;
  }

  if (baseline->parsed()) {
    sgr::SmoothnessParams p{base_flags.d, base_flags.alpha, base_flags.beta,
                            base_flags.gamma, 0.0};
    const sgr::TargetKind kind = base_target == "isotropic"
                                     ? sgr::TargetKind::Isotropic
                                     : sgr::TargetKind::Mixed;
    const sgr::SingularSpectrum sp = sgr::approx_numbers(p, kind, base_kc);
    emit(base_format == "json"
             ? sgr::baseline_json(p, kind, base_kc, sp, base_rows)
             : sgr::baseline_csv(sp, base_rows),
         base_out);
    return 0;
  }

  if (verify->parsed()) {
    const sgr::VerifyReport rep = sgr::verify_suite(verify_seed);
    emit(sgr::verify_json(rep), verify_out);
    return rep.all_pass ? 0 : 1;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sgr::error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == sgr::errc::overflow ||
            e.code() == sgr::errc::validity_window)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
