#include "sgr/testbed.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "sgr/index_set.hpp"
#include "sgr/rng.hpp"

namespace sgr {

namespace {

constexpr double kMaxSupport = 1e7;

void check_support_budget(double count) {
  require(count <= kMaxSupport, errc::too_large,
          "test function support exceeds 10^7 coefficients");
}

SpectralFunction build_cube_poly(const CubePoly& p, int d) {
  require(p.L >= 0, errc::invalid_params, "cube degree must be >= 0");
  const double side = 2.0 * p.L + 1.0;
  check_support_budget(std::pow(side, d));
  SpectralFunction f(d);
  Rng rng(p.seed);
  FreqVec freq(static_cast<std::size_t>(d), -p.L);
  // Odometer in lexicographic order so the coefficient stream is a pure
  // function of (L, seed, d).
  for (;;) {
    f.add(freq, rng.unit_disc());
    int axis = d - 1;
    while (axis >= 0) {
      auto& v = freq[static_cast<std::size_t>(axis)];
      if (++v <= p.L) break;
      v = -p.L;
      --axis;
    }
    if (axis < 0) break;
  }
  return f;
}

SpectralFunction build_block_extremal(const BlockExtremal& p, int d) {
  require(p.K >= 0, errc::invalid_params, "block budget must be >= 0");
  require(std::min(p.a, p.a + p.b) > 0.0, errc::invalid_params,
          "block extremal needs min(a, a+b) > 0");
  require(p.delta > 0.0, errc::invalid_params,
          "block extremal needs delta > 0");
  SpectralFunction f(d);
  const IndexSet budget = smolyak_set(d, p.K);
  for (const auto& k : budget.members()) {
    FreqVec corner(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      corner[static_cast<std::size_t>(j)] =
          k[j] == 0 ? 0 : -((1 << k[j]) - 1);
    const double mag =
        std::exp2(-(p.a * k.l1() + p.b * k.linf())) *
        std::pow(1.0 + k.l1(), -(0.5 + p.delta));
    f.add(corner, mag);
  }
  return f;
}

SpectralFunction build_product_decay(const ProductDecay& p, int d) {
  require(p.L >= 0, errc::invalid_params, "cube degree must be >= 0");
  require(p.p > 0.0, errc::invalid_params, "decay exponent must be > 0");
  const double side = 2.0 * p.L + 1.0;
  check_support_budget(std::pow(side, d));
  SpectralFunction f(d);
  FreqVec freq(static_cast<std::size_t>(d), -p.L);
  for (;;) {
    double c = 1.0;
    for (int v : freq) c *= std::pow(1.0 + std::abs(v), -p.p);
    f.add(freq, c);
    int axis = d - 1;
    while (axis >= 0) {
      auto& v = freq[static_cast<std::size_t>(axis)];
      if (++v <= p.L) break;
      v = -p.L;
      --axis;
    }
    if (axis < 0) break;
  }
  return f;
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    require(eq != std::string::npos, errc::invalid_params,
            "family parameter must be key=value: " + item);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double want_num(const std::map<std::string, std::string>& kv,
                const std::string& key) {
  auto it = kv.find(key);
  require(it != kv.end(), errc::invalid_params,
          "family is missing parameter " + key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    raise(errc::invalid_params,
          "malformed number for family parameter " + key);
  }
  require(used == it->second.size(), errc::invalid_params,
          "malformed number for family parameter " + key);
  return v;
}

double opt_num(const std::map<std::string, std::string>& kv,
               const std::string& key, double fallback) {
  return kv.count(key) ? want_num(kv, key) : fallback;
}

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

SpectralFunction materialize(const TestFamily& fam, int d) {
  require(d >= 1, errc::invalid_params, "dimension must be >= 1");
  return std::visit(
      [d](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CubePoly>) return build_cube_poly(p, d);
        else if constexpr (std::is_same_v<T, BlockExtremal>)
          return build_block_extremal(p, d);
        else
          return build_product_decay(p, d);
      },
      fam);
}

TestFamily parse_family(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const auto kv =
      colon == std::string::npos ? std::map<std::string, std::string>{}
                                 : parse_kv(text.substr(colon + 1));
  if (name == "cubepoly") {
    CubePoly p;
    p.L = static_cast<int>(want_num(kv, "L"));
    p.seed = static_cast<std::uint64_t>(opt_num(kv, "seed", 0));
    return p;
  }
  if (name == "blockextremal") {
    BlockExtremal p;
    p.a = want_num(kv, "alpha");
    p.b = opt_num(kv, "beta", 0.0);
    p.K = static_cast<int>(want_num(kv, "K"));
    p.delta = opt_num(kv, "delta", 0.5);
    p.seed = static_cast<std::uint64_t>(opt_num(kv, "seed", 0));
    return p;
  }
  if (name == "productdecay") {
    ProductDecay p;
    p.p = want_num(kv, "p");
    p.L = static_cast<int>(want_num(kv, "L"));
    return p;
  }
  raise(errc::invalid_params, "unknown test family: " + name);
}

std::string family_to_string(const TestFamily& fam) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CubePoly>) {
          return "cubepoly:L=" + std::to_string(p.L) +
                 ",seed=" + std::to_string(p.seed);
        } else if constexpr (std::is_same_v<T, BlockExtremal>) {
          return "blockextremal:alpha=" + fmt_num(p.a) + ",beta=" +
                 fmt_num(p.b) + ",K=" + std::to_string(p.K) + ",delta=" +
                 fmt_num(p.delta) + ",seed=" + std::to_string(p.seed);
        } else {
          return "productdecay:p=" + fmt_num(p.p) +
                 ",L=" + std::to_string(p.L);
        }
      },
      fam);
}

double hab_membership_margin(const SpectralFunction& f, double a, double b) {
  return norm_hab_dyadic(f, a, b);
}

}  // namespace sgr
