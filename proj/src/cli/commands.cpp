#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hurwitz/cli.hpp"
#include "hurwitz/coords.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz::cli {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string csv_num(double x) { return std::isfinite(x) ? fmt(x) : std::string(); }

std::filesystem::path prepare(const RunOptions& opts, const std::string& file) {
  std::filesystem::create_directories(opts.out_dir);
  return opts.out_dir / file;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << doc.dump(2) << '\n';
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  return f;
}

json header(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

double rel_dev(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// --- transform ---------------------------------------------------------------

template <std::size_t K>
json array_json(const std::array<double, K>& a) {
  json out = json::array();
  for (double x : a) out.push_back(x);
  return out;
}

}  // namespace

int cmd_transform(const TransformConfig& cfg, const RunOptions& opts, std::ostream& out) {
  std::vector<std::pair<Vec8, Vec8>> pairs = cfg.pairs;
  const auto random = random_pairs(cfg.count, opts.seed.value_or(cfg.seed));
  pairs.insert(pairs.end(), random.begin(), random.end());

  const auto rows = transform_rows(pairs);
  const double tol = opts.tol.value_or(1e-10);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);

  bool reference_ok = true;
  if (opts.verify) {
    const auto serial = transform_rows_serial(pairs);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      reference_ok = reference_ok && rows[i].x == serial[i].x;
    }
  }

  if (opts.format == "json") {
    json doc = header("transform");
    doc["tolerance"] = tol;
    doc["max_residual"] = worst;
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"u", array_json(r.u)},
                     {"v", array_json(r.v)},
                     {"x", array_json(r.x)},
                     {"r", r.r},
                     {"residual", r.residual}});
    }
    doc["rows"] = std::move(arr);
    write_json(prepare(opts, "transform.json"), doc);
  } else {
    auto f = open_csv(prepare(opts, "transform.csv"));
    for (int i = 1; i <= 8; ++i) f << 'u' << i << ',';
    for (int i = 1; i <= 8; ++i) f << 'v' << i << ',';
    for (int i = 1; i <= 9; ++i) f << 'x' << i << ',';
    f << "r,residual\n";
    for (const auto& r : rows) {
      for (double c : r.u) f << fmt(c) << ',';
      for (double c : r.v) f << fmt(c) << ',';
      for (double c : r.x) f << fmt(c) << ',';
      f << fmt(r.r) << ',' << fmt(r.residual) << '\n';
    }
  }

  out << "transform: " << rows.size() << " rows, max residual " << fmt(worst) << " (tol "
      << tol << ")\n";
  if (!reference_ok) out << "transform: parallel output differs from serial reference\n";
  return worst <= tol && reference_ok ? kExitOk : kExitDeviation;
}

// --- spectrum ---------------------------------------------------------------

namespace {

int spectrum_oscillator(const SpectrumConfig& cfg, const RunOptions& opts, std::ostream& out) {
  const double tol = opts.tol.value_or(1e-6);
  std::vector<OscRow> rows;
  if (opts.verify) {
    rows = oscillator_sweep(cfg.blocks, cfg.grid);
  } else {
    for (const auto& b : cfg.blocks) {
      for (int N = 0; N <= b.N_max; ++N) {
        OscRow r;
        r.omega = b.omega;
        r.c = b.c;
        r.L = b.L;
        r.N = N;
        r.analytic = singular_oscillator_energy({N, b.L, 0, 0.0, 0.0}, b.omega, b.c);
        r.numeric = r.rel_deviation = r.error_estimate = kNaN;
        r.nodes = -1;
        rows.push_back(r);
      }
    }
  }

  double worst = 0.0;
  bool nodes_ok = true;
  for (const auto& r : rows) {
    if (!opts.verify) break;
    worst = std::max(worst, r.rel_deviation);
    nodes_ok = nodes_ok && r.nodes == r.N;
  }

  if (opts.format == "json") {
    json doc = header("spectrum");
    doc["system"] = "oscillator";
    doc["tolerance"] = tol;
    doc["max_rel_deviation"] = opts.verify ? json(worst) : json(nullptr);
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"omega", r.omega},
                     {"c", r.c},
                     {"L", r.L},
                     {"N", r.N},
                     {"analytic", r.analytic},
                     {"numeric", num(r.numeric)},
                     {"rel_deviation", num(r.rel_deviation)},
                     {"error_estimate", num(r.error_estimate)},
                     {"nodes", r.nodes < 0 ? json(nullptr) : json(r.nodes)}});
    }
    doc["rows"] = std::move(arr);
    write_json(prepare(opts, "spectrum.json"), doc);
  } else {
    auto f = open_csv(prepare(opts, "spectrum.csv"));
    f << "omega,c,L,N,analytic,numeric,rel_deviation,error_estimate,nodes\n";
    for (const auto& r : rows) {
      f << fmt(r.omega) << ',' << fmt(r.c) << ',' << r.L << ',' << r.N << ','
        << fmt(r.analytic) << ',' << csv_num(r.numeric) << ',' << csv_num(r.rel_deviation)
        << ',' << csv_num(r.error_estimate) << ',' << (r.nodes < 0 ? "" : std::to_string(r.nodes))
        << '\n';
    }
  }
  out << "spectrum: " << rows.size() << " oscillator rows";
  if (opts.verify) out << ", max relative deviation " << fmt(worst) << " (tol " << tol << ")";
  out << '\n';
  if (!nodes_ok) out << "spectrum: node counts differ from N\n";
  return worst <= tol && nodes_ok ? kExitOk : kExitDeviation;
}

/// Bracket below the lowest and above the highest wanted level, taken from
/// the isotropic Coulomb formula and widened by the anisotropy.
std::pair<double, double> default_bracket(const OscillatorModel& model, const MiczParams& m,
                                          int levels) {
  if (!(m.Z > 0.0)) {
    throw ConfigError("parabolic chart without bound states (Z <= 0) needs an explicit bracket");
  }
  const double lowest = micz_coulomb_energy(0, m);
  const double highest = micz_coulomb_energy(levels - 1, m);
  const double split = std::abs(model.E1 - model.E2);
  return {3.0 * lowest - split, 0.5 * highest};
}

struct MiczOut {
  MiczParams micz;
  int level = 0;
  int n_theta = -1, n_r = -1, nodes_u = -1, nodes_v = -1;
  double Lambda = kNaN, P = kNaN;
  double analytic = kNaN, numeric = kNaN, rel_deviation = kNaN;
};

int spectrum_micz(const SpectrumConfig& cfg, const RunOptions& opts, std::ostream& out) {
  const double tol = opts.tol.value_or(1e-5);
  const bool separable = is_spherically_separable(cfg.model);
  if (cfg.chart == Chart::Spherical && !separable) {
    throw SeparabilityError(std::string("spherical chart requires ") + kSeparabilityCondition);
  }

  std::vector<MiczOut> rows;
  if (cfg.chart == Chart::Spherical) {
    std::vector<MiczSector> sectors;
    for (const auto& m : cfg.sectors) sectors.push_back({m, cfg.levels});
    for (const auto& r : micz_sweep(cfg.model, sectors, cfg.grid, cfg.theta_grid)) {
      MiczOut o;
      o.micz = r.micz;
      o.level = r.level;
      o.n_theta = r.n_theta;
      o.n_r = r.n_r;
      o.Lambda = r.Lambda;
      o.analytic = r.analytic;
      o.numeric = r.numeric;
      o.rel_deviation = r.rel_deviation;
      rows.push_back(o);
    }
  } else {
    for (const auto& m : cfg.sectors) {
      ParabolicOptions po;
      po.max_nodes = cfg.levels - 1;
      const auto bracket = cfg.bracket.value_or(default_bracket(cfg.model, m, cfg.levels));
      auto states = parabolic_levels(cfg.model, m, cfg.grid, bracket, po);
      if (static_cast<int>(states.size()) < cfg.levels) {
        std::ostringstream msg;
        msg << "parabolic chart: found " << states.size() << " of " << cfg.levels
            << " levels in bracket [" << fmt(bracket.first) << ", " << fmt(bracket.second) << "]";
        throw BracketError(msg.str());
      }
      for (int i = 0; i < cfg.levels; ++i) {
        const auto& s = states[i];
        MiczOut o;
        o.micz = m;
        o.level = i;
        o.nodes_u = s.nodes_u;
        o.nodes_v = s.nodes_v;
        o.P = s.P;
        o.numeric = s.E;
        if (separable) {
          o.analytic = micz_coulomb_energy(s.nodes_u + s.nodes_v, m);
          o.rel_deviation = rel_dev(o.numeric, o.analytic);
        }
        rows.push_back(o);
      }
    }
  }

  double worst = 0.0;
  for (const auto& r : rows) {
    if (std::isfinite(r.rel_deviation)) worst = std::max(worst, r.rel_deviation);
  }
  const char* chart = cfg.chart == Chart::Spherical ? "spherical" : "parabolic";

  if (opts.format == "json") {
    json doc = header("spectrum");
    doc["system"] = "micz";
    doc["chart"] = chart;
    doc["model"] = cfg.model.model_number();
    doc["tolerance"] = tol;
    doc["max_rel_deviation"] = worst;
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"Z", r.micz.Z},
                     {"J", r.micz.J},
                     {"L", r.micz.L},
                     {"c1", r.micz.c1},
                     {"c2", r.micz.c2},
                     {"level", r.level},
                     {"n_theta", r.n_theta < 0 ? json(nullptr) : json(r.n_theta)},
                     {"n_r", r.n_r < 0 ? json(nullptr) : json(r.n_r)},
                     {"Lambda", num(r.Lambda)},
                     {"nodes_u", r.nodes_u < 0 ? json(nullptr) : json(r.nodes_u)},
                     {"nodes_v", r.nodes_v < 0 ? json(nullptr) : json(r.nodes_v)},
                     {"P", num(r.P)},
                     {"analytic", num(r.analytic)},
                     {"numeric", r.numeric},
                     {"rel_deviation", num(r.rel_deviation)}});
    }
    doc["rows"] = std::move(arr);
    write_json(prepare(opts, "spectrum.json"), doc);
  } else {
    auto f = open_csv(prepare(opts, "spectrum.csv"));
    auto count = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
    f << "chart,Z,J,L,c1,c2,level,n_theta,n_r,Lambda,nodes_u,nodes_v,P,analytic,numeric,"
         "rel_deviation\n";
    for (const auto& r : rows) {
      f << chart << ',' << fmt(r.micz.Z) << ',' << r.micz.J << ',' << r.micz.L << ','
        << fmt(r.micz.c1) << ',' << fmt(r.micz.c2) << ',' << r.level << ',' << count(r.n_theta)
        << ',' << count(r.n_r) << ',' << csv_num(r.Lambda) << ',' << count(r.nodes_u) << ','
        << count(r.nodes_v) << ',' << csv_num(r.P) << ',' << csv_num(r.analytic) << ','
        << fmt(r.numeric) << ',' << csv_num(r.rel_deviation) << '\n';
    }
  }
  out << "spectrum: " << rows.size() << " micz rows (" << chart << " chart)";
  if (!rows.empty()) out << ", ground " << fmt(rows.front().numeric);
  out << ", max relative deviation " << fmt(worst) << " (tol " << tol << ")\n";
  return worst <= tol ? kExitOk : kExitDeviation;
}

}  // namespace

int cmd_spectrum(const SpectrumConfig& cfg, const RunOptions& opts, std::ostream& out) {
  return cfg.system == SpectrumSystem::Oscillator ? spectrum_oscillator(cfg, opts, out)
                                                  : spectrum_micz(cfg, opts, out);
}

// --- qes -------------------------------------------------------------------

int cmd_qes(const QesConfig& cfg, const RunOptions& opts, std::ostream& out) {
  const QesSolution sol = qes_solve(cfg.params, cfg.family);
  const double tol = opts.tol.value_or(1e-5);
  const double residual_tol = 1e-8;

  std::vector<double> fd(sol.energies.size(), kNaN), dev(sol.energies.size(), kNaN);
  double hi = cfg.hi;
  if (opts.verify) {
    const double e_top = *std::max_element(sol.energies.begin(), sol.energies.end());
    if (hi == 0.0) {
      const RadialProblem probe = build_qes_problem(sol.potential, cfg.params.Dim, 1.0);
      hi = wkb_extent(probe, e_top + 0.5 * std::abs(e_top) + 1.0, 25.0);
    }
    const int k = *std::max_element(sol.nodes.begin(), sol.nodes.end()) + 1;
    const Spectrum s =
        fd_eigensolve(build_qes_problem(sol.potential, cfg.params.Dim, hi), cfg.grid, k);
    hi = s.hi_used;
    // a QES state with n nodes is the n-th radial level
    for (std::size_t i = 0; i < sol.energies.size(); ++i) {
      fd[i] = s.eigenvalues[sol.nodes[i]];
      dev[i] = rel_dev(fd[i], sol.energies[i]);
    }
  }

  double worst = 0.0, worst_res = 0.0;
  for (std::size_t i = 0; i < sol.energies.size(); ++i) {
    if (opts.verify) worst = std::max(worst, dev[i]);
    worst_res = std::max(worst_res, sol.residuals[i]);
  }

  const Potential8D& p = sol.potential;
  if (opts.format == "json") {
    json doc = header("qes");
    doc["family"] = to_string(sol.family);
    doc["primed"] = {{"a_p", cfg.params.a_p}, {"b_p", cfg.params.b_p}, {"c_p", cfg.params.c_p},
                     {"N", cfg.params.N},     {"Dim", cfg.params.Dim}, {"l_p", cfg.params.l_p}};
    if (cfg.params.d_p) doc["primed"]["d_p"] = *cfg.params.d_p;
    doc["potential"] = {{"omega", p.omega}, {"c", p.c}, {"a", p.a}, {"b", p.b}};
    doc["d"] = sol.d ? json(*sol.d) : json(nullptr);
    doc["power_offset"] = sol.power_offset;
    doc["rejected"] = sol.rejected;
    doc["tolerance"] = tol;
    doc["fd_hi"] = opts.verify ? json(hi) : json(nullptr);
    json arr = json::array();
    for (std::size_t i = 0; i < sol.energies.size(); ++i) {
      arr.push_back({{"energy", sol.energies[i]},
                     {"poly_coeffs", sol.poly_coeffs[i]},
                     {"residual", sol.residuals[i]},
                     {"nodes", sol.nodes[i]},
                     {"fd_energy", num(fd[i])},
                     {"rel_deviation", num(dev[i])}});
    }
    doc["states"] = std::move(arr);
    write_json(prepare(opts, "qes.json"), doc);
  } else {
    auto f = open_csv(prepare(opts, "qes.csv"));
    f << "family,a_p,b_p,c_p,N,Dim,omega,c,a,b,index,energy,residual,nodes,fd_energy,"
         "rel_deviation,poly_coeffs\n";
    for (std::size_t i = 0; i < sol.energies.size(); ++i) {
      f << to_string(sol.family) << ',' << fmt(cfg.params.a_p) << ',' << fmt(cfg.params.b_p)
        << ',' << fmt(cfg.params.c_p) << ',' << cfg.params.N << ',' << cfg.params.Dim << ','
        << fmt(p.omega) << ',' << fmt(p.c) << ',' << fmt(p.a) << ',' << fmt(p.b) << ',' << i
        << ',' << fmt(sol.energies[i]) << ',' << fmt(sol.residuals[i]) << ',' << sol.nodes[i]
        << ',' << csv_num(fd[i]) << ',' << csv_num(dev[i]) << ',';
      for (std::size_t c = 0; c < sol.poly_coeffs[i].size(); ++c) {
        f << (c ? ";" : "") << fmt(sol.poly_coeffs[i][c]);
      }
      f << '\n';
    }
  }
  out << "qes: " << to_string(sol.family) << ", " << sol.energies.size() << " energies";
  for (double e : sol.energies) out << ' ' << fmt(e);
  out << "; max residual " << fmt(worst_res);
  if (opts.verify) out << ", max FD deviation " << fmt(worst) << " (tol " << tol << ")";
  out << '\n';
  return worst <= tol && worst_res <= residual_tol ? kExitOk : kExitDeviation;
}

// --- duality ---------------------------------------------------------------

namespace {

OscillatorModel isotropic_model(double omega, double Zc) {
  return OscillatorModel::from_potentials(Potential8D::sho(omega), Potential8D::sho(omega),
                                          0.5 * Zc, 0.5 * Zc);
}

double parabolic_ground(const OscillatorModel& model, const MiczParams& m, const Grid& grid,
                        std::pair<double, double> bracket, double* P = nullptr) {
  ParabolicOptions po;
  po.max_nodes = 0;
  const ParabolicState s = parabolic_joint_solve(model, m, grid, bracket, po);
  if (P) *P = s.P;
  return s.E;
}

}  // namespace

int cmd_duality(const DualityConfig& cfg, const RunOptions& opts, std::ostream& out) {
  const double tol = opts.tol.value_or(1e-5);
  const double w = cfg.omega;
  json doc = header("duality");
  doc["omega"] = w;
  doc["J"] = cfg.J;
  doc["L"] = cfg.L;
  doc["tolerance"] = tol;
  doc["verified"] = opts.verify;

  double worst = 0.0;
  double base_Zc = kNaN, base_E = kNaN;
  json rows = json::array();
  for (const auto& [c1, c2] : cfg.micz_rows) {
    // 16-D ground sector: factor angular momenta J and L, singular strengths 4 c_a
    const double z16 = singular_oscillator_energy({0, cfg.J, 0, 0.0, 0.0}, w, 4.0 * c1) +
                       singular_oscillator_energy({0, cfg.L, 0, 0.0, 0.0}, w, 4.0 * c2);
    const DualPair dual = dual_map(w, z16);
    const double Zc = coulomb_charge_for(z16);
    MiczParams m;
    m.Z = Zc;
    m.J = cfg.J;
    m.L = cfg.L;
    m.c1 = c1;
    m.c2 = c2;
    json row = {{"c1", c1},
                {"c2", c2},
                {"Z16", z16},
                {"Z_coulomb", Zc},
                {"E_dual", dual.E},
                {"E_coulomb_formula", micz_coulomb_energy(0, m)}};
    if (opts.verify) {
      const OscillatorModel model = isotropic_model(w, Zc);
      const double e_sph =
          spherical_levels(model, m, cfg.radial_grid, cfg.theta_grid, 1).front().E;
      const double e_par = parabolic_ground(model, m, cfg.radial_grid,
                                            {2.0 * dual.E, 0.5 * dual.E});
      const double agreement =
          std::max({rel_dev(e_sph, dual.E), rel_dev(e_par, dual.E), rel_dev(e_sph, e_par)});
      worst = std::max(worst, agreement);
      row["E_spherical_fd"] = e_sph;
      row["E_parabolic_fd"] = e_par;
      row["max_rel_disagreement"] = agreement;
    }
    if (rows.empty()) {
      base_Zc = Zc;
      base_E = dual.E;
    }
    // fixed-charge comparison: the extra centrifugal terms can only raise E
    MiczParams fixed = m;
    fixed.Z = base_Zc;
    const double e_fixed = micz_coulomb_energy(0, fixed);
    row["E_at_base_charge"] = e_fixed;
    row["micz_shift"] = e_fixed - base_E;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);

  if (cfg.anisotropy) {
    const auto [w1, w2] = *cfg.anisotropy;
    OscillatorModel model = OscillatorModel::from_potentials(
        Potential8D::sho(w1), Potential8D::sho(w2), 0.5 * base_Zc, 0.5 * base_Zc);
    const double dipole = 0.5 * (model.E1 - model.E2);
    double identity = 0.0;
    for (int i = 0; i < 10; ++i) {
      for (int k = 0; k < 10; ++k) {
        const double r = 0.5 + 2.0 * i;
        const double theta = std::numbers::pi * (k + 0.5) / 10.0;
        const double lhs = spherical_W(model, r, theta) + model.Z();
        const double rhs = -0.5 * (model.E1 + model.E2) - dipole * std::cos(theta);
        identity = std::max(identity, std::abs(lhs - rhs));
      }
    }
    json an = {{"omega1", w1},
               {"omega2", w2},
               {"E1", model.E1},
               {"E2", model.E2},
               {"cos_theta_coefficient", dipole},
               {"identity_max_abs_error", identity}};
    if (opts.verify) {
      MiczParams m;
      m.Z = base_Zc;
      m.J = cfg.J;
      m.L = cfg.L;
      const double e0 = micz_coulomb_energy(0, m);
      double P = 0.0;
      const double E = parabolic_ground(model, m, cfg.radial_grid,
                                        {3.0 * e0 - 2.0 * std::abs(dipole), 0.3 * e0}, &P);
      an["E_parabolic_fd"] = E;
      an["P_parabolic_fd"] = P;
    }
    doc["anisotropy"] = std::move(an);
  }
  doc["max_rel_disagreement"] = opts.verify ? json(worst) : json(nullptr);
  write_json(prepare(opts, "duality_report.json"), doc);

  out << "duality: omega " << fmt(w) << ", E_dual " << fmt(base_E);
  if (opts.verify) out << ", max three-way disagreement " << fmt(worst) << " (tol " << tol << ")";
  out << '\n';
  return worst <= tol ? kExitOk : kExitDeviation;
}

// --- front end ---------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz-map duality toolkit: 16-D oscillators and 9-D MICZ-Kepler systems"};
  RunOptions opts;
  std::string config;
  app.add_option("command", opts.command, "transform | spectrum | qes | duality")
      ->required()
      ->check(CLI::IsMember({"transform", "spectrum", "qes", "duality"}));
  app.add_option("config", config, "JSON run configuration")->required();
  app.add_option("--seed", opts.seed, "seed for random samples (overrides the config)");
  app.add_option("--tol", opts.tol, "acceptance tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", opts.out_dir, "output directory");
  app.add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--verify,!--no-verify", opts.verify,
               "finite-difference cross-check where an analytic path exists (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  opts.config_path = config;

  try {
    const json j = load_config(opts.config_path);
    if (opts.command == "transform") return cmd_transform(parse_transform(j), opts, out);
    if (opts.command == "spectrum") return cmd_spectrum(parse_spectrum(j), opts, out);
    if (opts.command == "qes") return cmd_qes(parse_qes(j), opts, out);
    return cmd_duality(parse_duality(j), opts, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SeparabilityError& e) {
    err << "not separable: " << e.what() << '\n';
    return kExitSeparability;
  } catch (const QesPreconditionError& e) {
    err << "QES precondition violated: " << e.what() << '\n';
    return kExitQes;
  } catch (const InconsistentParametersError& e) {
    err << "QES closure failed: " << e.what() << '\n';
    return kExitQes;
  } catch (const BracketError& e) {
    err << "bracket error: " << e.what() << '\n';
    return kExitBracket;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDeviation;
  }
}

}  // namespace hurwitz::cli
