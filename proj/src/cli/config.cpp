#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string_view>

#include "hurwitz/cli.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  require_object(j, where);
  for (const auto& item : j.items()) {
    bool known = false;
    for (auto k : allowed) known = known || item.key() == k;
    if (!known) fail(where, "unknown key '" + item.key() + "'");
  }
}

double number(const json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) fail(where, std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where, std::string("'") + key + "' must be finite");
  return x;
}

int integer(const json& j, const char* key, int fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) fail(where, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

int nonneg_integer(const json& j, const char* key, int fallback, const std::string& where) {
  const int v = integer(j, key, fallback, where);
  if (v < 0) fail(where, std::string("'") + key + "' must be >= 0");
  return v;
}

std::string text(const json& j, const char* key, const std::string& fallback,
                 const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) fail(where, std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

/// A number or a non-empty array of numbers.
std::vector<double> number_list(const json& j, const char* key, double fallback,
                                const std::string& where) {
  if (!j.contains(key)) return {fallback};
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array() || v.empty()) {
    fail(where, std::string("'") + key + "' must be a number or a non-empty array");
  }
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) fail(where, std::string("'") + key + "' entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Vec8 vec8(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 8) {
    fail(where, "expected an array of 8 numbers, got " +
                    (v.is_array() ? std::to_string(v.size()) + " entries" : v.type_name()));
  }
  Vec8 out{};
  for (std::size_t i = 0; i < 8; ++i) {
    if (!v[i].is_number()) fail(where, "component " + std::to_string(i) + " is not a number");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::pair<double, double> number_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail(where, "expected [lo, hi]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Grid parse_grid(const json& j, const char* key, Grid g, const std::string& where) {
  if (!j.contains(key)) return g;
  const std::string w = where + "." + key;
  const json& gj = j.at(key);
  check_keys(gj, {"n", "mapping", "scale"}, w);
  g.n = integer(gj, "n", g.n, w);
  const std::string mapping =
      text(gj, "mapping", g.mapping == GridMapping::Uniform ? "uniform" : "exponential", w);
  if (mapping == "uniform") {
    g.mapping = GridMapping::Uniform;
  } else if (mapping == "exponential") {
    g.mapping = GridMapping::Exponential;
  } else {
    fail(w, "mapping must be 'uniform' or 'exponential'");
  }
  g.scale = number(gj, "scale", g.scale, w);
  try {
    g.validate();
  } catch (const std::exception& e) {
    fail(w, e.what());
  }
  return g;
}

Potential8D parse_potential(const json& j, const std::string& where) {
  check_keys(j, {"family", "omega", "c", "a", "b"}, where);
  if (!j.contains("family")) fail(where, "missing 'family'");
  Potential8D p;
  p.family = family_from_string(text(j, "family", "", where));
  p.omega = number(j, "omega", 1.0, where);
  p.c = number(j, "c", 0.0, where);
  p.a = number(j, "a", 0.0, where);
  p.b = number(j, "b", 0.0, where);
  try {
    p.validate();
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  return p;
}

OscillatorModel parse_model(const json& j, const std::string& where) {
  check_keys(j, {"factor1", "factor2", "Z1", "Z2", "E1", "E2"}, where);
  if (!j.contains("factor1") || !j.contains("factor2")) {
    fail(where, "needs 'factor1' and 'factor2'");
  }
  OscillatorModel m = OscillatorModel::from_potentials(
      parse_potential(j.at("factor1"), where + ".factor1"),
      parse_potential(j.at("factor2"), where + ".factor2"), number(j, "Z1", 0.5, where),
      number(j, "Z2", 0.5, where));
  m.E1 = number(j, "E1", m.E1, where);
  m.E2 = number(j, "E2", m.E2, where);
  return m;
}

MiczParams parse_micz(const json& j, double Z, const std::string& where) {
  check_keys(j, {"J", "L", "c1", "c2", "Qsq"}, where);
  MiczParams m;
  m.Z = Z;
  m.J = nonneg_integer(j, "J", 0, where);
  m.L = nonneg_integer(j, "L", 0, where);
  m.c1 = number(j, "c1", 0.0, where);
  m.c2 = number(j, "c2", 0.0, where);
  m.Qsq = number(j, "Qsq", 0.0, where);
  try {
    m.validate();
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  return m;
}

Grid radial_default() {
  Grid g;
  g.mapping = GridMapping::Exponential;
  g.scale = 10.0;
  return g;
}

}  // namespace

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "': " + e.what());
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

TransformConfig parse_transform(const json& j) {
  const std::string where = "transform";
  check_keys(j, {"pairs", "count", "seed"}, where);
  TransformConfig cfg;
  if (j.contains("pairs")) {
    if (!j.at("pairs").is_array()) fail(where, "'pairs' must be an array");
    std::size_t i = 0;
    for (const auto& p : j.at("pairs")) {
      const std::string w = where + ".pairs[" + std::to_string(i++) + "]";
      check_keys(p, {"u", "v"}, w);
      if (!p.contains("u") || !p.contains("v")) fail(w, "needs 'u' and 'v'");
      cfg.pairs.emplace_back(vec8(p.at("u"), w + ".u"), vec8(p.at("v"), w + ".v"));
    }
  }
  cfg.count = static_cast<std::size_t>(nonneg_integer(j, "count", 0, where));
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) fail(where, "'seed' must be a non-negative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (cfg.pairs.empty() && cfg.count == 0) fail(where, "needs 'pairs' or a positive 'count'");
  return cfg;
}

SpectrumConfig parse_spectrum(const json& j) {
  const std::string where = "spectrum";
  require_object(j, where);
  SpectrumConfig cfg;
  const std::string system = text(j, "system", "oscillator", where);
  if (system == "oscillator") {
    check_keys(j, {"system", "omega", "c", "N_max", "L_max", "grid"}, where);
    const int N_max = nonneg_integer(j, "N_max", 0, where);
    const int L_max = nonneg_integer(j, "L_max", 0, where);
    for (double omega : number_list(j, "omega", 1.0, where)) {
      if (!(omega > 0.0)) fail(where, "omega must be positive");
      for (double c : number_list(j, "c", 0.0, where)) {
        if (!(c >= 0.0)) fail(where, "c must be nonnegative");
        for (int L = 0; L <= L_max; ++L) cfg.blocks.push_back({omega, c, L, N_max});
      }
    }
    cfg.grid = parse_grid(j, "grid", Grid{}, where);
    return cfg;
  }
  if (system != "micz") fail(where, "system must be 'oscillator' or 'micz'");
  cfg.system = SpectrumSystem::Micz;
  check_keys(j, {"system", "model", "sectors", "levels", "chart", "bracket", "grid", "theta_grid"},
             where);
  if (!j.contains("model")) fail(where, "micz system needs 'model'");
  cfg.model = parse_model(j.at("model"), where + ".model");
  if (j.contains("sectors")) {
    const json& s = j.at("sectors");
    if (!s.is_array() || s.empty()) fail(where, "'sectors' must be a non-empty array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      cfg.sectors.push_back(
          parse_micz(s[i], cfg.model.Z(), where + ".sectors[" + std::to_string(i) + "]"));
    }
  } else {
    cfg.sectors.push_back(parse_micz(json::object(), cfg.model.Z(), where));
  }
  cfg.levels = integer(j, "levels", 1, where);
  if (cfg.levels < 1) fail(where, "'levels' must be >= 1");
  const std::string chart = text(j, "chart", "spherical", where);
  if (chart == "spherical") {
    cfg.chart = Chart::Spherical;
  } else if (chart == "parabolic") {
    cfg.chart = Chart::Parabolic;
  } else {
    fail(where, "chart must be 'spherical' or 'parabolic'");
  }
  if (j.contains("bracket")) cfg.bracket = number_pair(j.at("bracket"), where + ".bracket");
  cfg.grid = parse_grid(j, "grid", radial_default(), where);
  cfg.theta_grid = parse_grid(j, "theta_grid", Grid{}, where);
  return cfg;
}

QesConfig parse_qes(const json& j) {
  const std::string where = "qes";
  check_keys(j, {"family", "a_p", "b_p", "c_p", "N", "Dim", "l_p", "d_p", "grid", "hi"}, where);
  QesConfig cfg;
  const std::string family = text(j, "family", "super2", where);
  cfg.family = family_from_string(family);
  if (cfg.family == Family::Sho) fail(where, "family must be 'sub2' or 'super2'");
  QesPrimedParams& p = cfg.params;
  p.a_p = number(j, "a_p", p.a_p, where);
  p.b_p = number(j, "b_p", p.b_p, where);
  p.c_p = number(j, "c_p", p.c_p, where);
  p.N = integer(j, "N", p.N, where);
  p.Dim = integer(j, "Dim", p.Dim, where);
  p.l_p = number(j, "l_p", p.l_p, where);
  if (j.contains("d_p")) p.d_p = number(j, "d_p", 0.0, where);
  try {
    p.validate();
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  cfg.grid = parse_grid(j, "grid", Grid{}, where);
  cfg.hi = number(j, "hi", 0.0, where);
  if (cfg.hi < 0.0) fail(where, "'hi' must be positive (or 0 for automatic)");
  return cfg;
}

DualityConfig parse_duality(const json& j) {
  const std::string where = "duality";
  check_keys(j, {"omega", "J", "L", "micz_rows", "anisotropy", "grid", "theta_grid"}, where);
  DualityConfig cfg;
  cfg.omega = number(j, "omega", cfg.omega, where);
  if (!(cfg.omega > 0.0)) fail(where, "omega must be positive");
  cfg.J = nonneg_integer(j, "J", 0, where);
  cfg.L = nonneg_integer(j, "L", 0, where);
  if (j.contains("micz_rows")) {
    const json& rows = j.at("micz_rows");
    if (!rows.is_array()) fail(where, "'micz_rows' must be an array of [c1, c2]");
    for (const auto& r : rows) {
      const auto c = number_pair(r, where + ".micz_rows");
      if (c.first < 0.0 || c.second < 0.0) fail(where, "micz_rows entries must be >= 0");
      cfg.micz_rows.push_back(c);
    }
  } else {
    cfg.micz_rows = {{0.0, 0.0}, {1.0, 2.0}};
  }
  if (j.contains("anisotropy")) {
    const json& a = j.at("anisotropy");
    check_keys(a, {"omega1", "omega2"}, where + ".anisotropy");
    const double w1 = number(a, "omega1", cfg.omega, where + ".anisotropy");
    const double w2 = number(a, "omega2", cfg.omega, where + ".anisotropy");
    if (!(w1 > 0.0) || !(w2 > 0.0)) fail(where, "anisotropy frequencies must be positive");
    cfg.anisotropy = std::make_pair(w1, w2);
  }
  cfg.radial_grid = parse_grid(j, "grid", radial_default(), where);
  cfg.theta_grid = parse_grid(j, "theta_grid", Grid{}, where);
  return cfg;
}

}  // namespace hurwitz::cli
