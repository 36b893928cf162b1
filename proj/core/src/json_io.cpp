#include "sgr/json_io.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace sgr {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* norm_kind_name(const NormKind& k) {
  switch (k.kind) {
    case NormKind::Kind::L2: return "l2";
    case NormKind::Kind::HMix: return "hmix";
    case NormKind::Kind::HGammaMix: return "hgammamix";
    case NormKind::Kind::HGamma: return "hgamma";
    case NormKind::Kind::HAB: return "hab";
    case NormKind::Kind::LInfEstimate: return "linf";
    case NormKind::Kind::LqEstimate: return "lq";
  }
  return "unknown";
}

namespace {

ordered_json params_json(const IndexSet& s) {
  ordered_json p = ordered_json::object();
  switch (s.provenance()) {
    case SetFamily::Energy:
    case SetFamily::EnergyEps:
      p["alpha"] = s.params().alpha;
      p["beta"] = s.params().beta;
      p["gamma"] = s.params().gamma;
      if (s.provenance() == SetFamily::EnergyEps) p["eps"] = s.params().eps;
      if (s.xi()) p["xi"] = *s.xi();
      break;
    case SetFamily::Smolyak:
      if (s.level()) p["m"] = *s.level();
      break;
    case SetFamily::Custom:
      break;
  }
  return p;
}

std::string join_levels(const MultiIndex& k) {
  std::string out;
  for (int j = 0; j < k.dim(); ++j) {
    if (j) out += '|';
    out += std::to_string(k[j]);
  }
  return out;
}

}  // namespace

std::string index_set_json(const IndexSet& s) {
  ordered_json j;
  j["d"] = s.dim();
  j["provenance"] = set_family_name(s.provenance());
  j["params"] = params_json(s);
  ordered_json members = ordered_json::array();
  for (const auto& k : s.members()) members.push_back(k.entries());
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

std::string spectral_json(const SpectralFunction& f) {
  ordered_json j;
  j["d"] = f.dim();
  ordered_json coeffs = ordered_json::array();
  for (const auto& [freq, c] : f.coeffs()) {
    ordered_json e;
    e["freq"] = freq;
    e["re"] = c.real();
    e["im"] = c.imag();
    coeffs.push_back(std::move(e));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

std::string grid_csv(const IndexSet& s) {
  std::string out = "k,nodes_per_axis,block_count\n";
  for (const auto& k : s.members()) {
    out += join_levels(k);
    out += ',';
    for (int j = 0; j < k.dim(); ++j) {
      if (j) out += '|';
      const int lev = k[j];
      out += std::to_string(lev == 0 ? 3 : 3 * (std::int64_t{1} << lev) + 2);
    }
    out += ',';
    out += std::to_string(std::int64_t{1} << k.l1());
    out += '\n';
  }
  return out;
}

std::string grid_points_csv(const IndexSet& s) {
  std::string out;
  for (int j = 0; j < s.dim(); ++j) {
    if (j) out += ',';
    out += 'x' + std::to_string(j + 1);
  }
  out += '\n';
  for (const auto& pt : sampling_grid_points(s)) {
    for (std::size_t j = 0; j < pt.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(pt[j].first) + '/' + std::to_string(pt[j].second);
    }
    out += '\n';
  }
  return out;
}

std::string count_json(const IndexSet& s) {
  const GridReport g = sampling_grid(s);
  ordered_json j;
  j["d"] = s.dim();
  j["provenance"] = set_family_name(s.provenance());
  j["params"] = params_json(s);
  j["cardinality"] = s.size();
  j["dyadic_count_sum"] = dyadic_count_sum(s);
  j["multiset_count"] = g.multiset_count;
  j["distinct_count"] = g.distinct_count;
  return j.dump(2) + "\n";
}

std::string count_csv(const IndexSet& s) {
  const GridReport g = sampling_grid(s);
  std::string out = "cardinality,dyadic_count_sum,multiset_count,distinct_count\n";
  out += std::to_string(s.size()) + ',' +
         std::to_string(dyadic_count_sum(s)) + ',' +
         std::to_string(g.multiset_count) + ',' +
         std::to_string(g.distinct_count) + '\n';
  return out;
}

std::string study_csv(const StudyResult& r) {
  std::string out =
      "xi,dof_distinct,dof_multiset,error,source_norm,ratio_to_bound\n";
  for (const auto& rec : r.records) {
    out += format_double(rec.xi) + ',' + std::to_string(rec.dof_distinct) +
           ',' + std::to_string(rec.dof_multiset) + ',' +
           format_double(rec.error) + ',' + format_double(rec.source_norm) +
           ',' + format_double(rec.ratio_to_bound) + '\n';
  }
  return out;
}

namespace {

ordered_json config_json(const StudyConfig& cfg) {
  ordered_json j;
  j["d"] = cfg.params.d;
  j["alpha"] = cfg.params.alpha;
  j["beta"] = cfg.params.beta;
  j["gamma"] = cfg.params.gamma;
  j["eps"] = cfg.params.eps;
  j["family"] = set_family_name(cfg.family);
  j["xi_values"] = cfg.xi_values;
  j["target"] = norm_kind_name(cfg.target);
  if (cfg.target.kind == NormKind::Kind::LqEstimate) j["q"] = cfg.target.q;
  j["function"] = family_to_string(cfg.function);
  j["dof_mode"] = dof_mode_name(cfg.dof_mode);
  j["seed"] = cfg.seed;
  j["allow_reproduction"] = cfg.allow_reproduction;
  return j;
}

}  // namespace

std::string study_json(const StudyResult& r) {
  ordered_json j;
  j["version"] = version_string();
  j["config"] = config_json(r.config);
  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json e;
    e["xi"] = rec.xi;
    e["dof_distinct"] = rec.dof_distinct;
    e["dof_multiset"] = rec.dof_multiset;
    e["error"] = rec.error;
    e["source_norm"] = rec.source_norm;
    e["ratio_to_bound"] = rec.ratio_to_bound;
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string baseline_csv(const SingularSpectrum& sp, std::int64_t rows) {
  std::string out = "n,a_n,sigma_boundary_max,valid\n";
  const std::int64_t count =
      std::min<std::int64_t>(rows, static_cast<std::int64_t>(sp.sigma.size()));
  for (std::int64_t n = 0; n < count; ++n) {
    out += std::to_string(n) + ',' +
           format_double(sp.a(static_cast<std::size_t>(n))) + ',' +
           format_double(sp.boundary_max) + ',' +
           (n <= sp.n_max ? "1" : "0") + '\n';
  }
  return out;
}

std::string baseline_json(const SmoothnessParams& p, TargetKind target,
                          int cutoff, const SingularSpectrum& sp,
                          std::int64_t rows) {
  ordered_json j;
  j["d"] = p.d;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["gamma"] = p.gamma;
  j["target"] = target_kind_name(target);
  j["cutoff"] = cutoff;
  j["sigma_boundary_max"] = sp.boundary_max;
  j["n_max"] = sp.n_max;
  const std::int64_t count =
      std::min<std::int64_t>(rows, static_cast<std::int64_t>(sp.sigma.size()));
  ordered_json a = ordered_json::array();
  for (std::int64_t n = 0; n < count; ++n)
    a.push_back(sp.a(static_cast<std::size_t>(n)));
  j["a"] = std::move(a);
  return j.dump(2) + "\n";
}

std::string verify_json(const VerifyReport& r) {
  ordered_json j;
  j["seed"] = r.seed;
  j["version"] = r.version;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j.dump(2) + "\n";
}

NormKind parse_target(const std::string& name, const SmoothnessParams& p,
                      double q) {
  if (name == "l2") return NormKind::l2();
  if (name == "hgamma") return NormKind::hgamma(p.gamma);
  if (name == "hgammamix" || name == "hmix")
    return NormKind::hgamma_mix(p.gamma);
  if (name == "hab") return NormKind::hab(p.alpha, p.beta);
  if (name == "linf") return NormKind::linf_estimate();
  if (name == "lq") return NormKind::lq_estimate(q);
  raise(errc::invalid_params, "unknown target norm: " + name);
}

StudyConfig study_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(errc::invalid_params, std::string("config parse failure: ") + e.what());
  }
  StudyConfig cfg;
  try {
    cfg.params.d = j.at("d").get<int>();
    cfg.params.alpha = j.at("alpha").get<double>();
    cfg.params.beta = j.value("beta", 0.0);
    cfg.params.gamma = j.value("gamma", 0.0);
    cfg.params.eps = j.value("eps", 0.0);
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "energy") cfg.family = SetFamily::Energy;
    else if (fam == "energy_eps") cfg.family = SetFamily::EnergyEps;
    else if (fam == "smolyak") cfg.family = SetFamily::Smolyak;
    else raise(errc::invalid_params, "unknown set family: " + fam);
    cfg.xi_values = j.at("xi_values").get<std::vector<double>>();
    cfg.target = parse_target(j.value("target", std::string("l2")), cfg.params,
                              j.value("q", 0.0));
    cfg.function = parse_family(j.at("function").get<std::string>());
    const std::string mode = j.value("dof_mode", std::string("distinct"));
    if (mode == "distinct") cfg.dof_mode = DofMode::Distinct;
    else if (mode == "multiset") cfg.dof_mode = DofMode::Multiset;
    else raise(errc::invalid_params, "unknown dof mode: " + mode);
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.allow_reproduction = j.value("allow_reproduction", false);
  } catch (const nlohmann::json::exception& e) {
    raise(errc::invalid_params, std::string("config field failure: ") + e.what());
  }
  return cfg;
}

}  // namespace sgr
