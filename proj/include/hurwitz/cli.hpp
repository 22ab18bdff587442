#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hurwitz/analytic.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/sweep.hpp"

namespace hurwitz::cli {

inline constexpr int kSchemaVersion = 1;

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitDeviation = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSeparability = 3;
inline constexpr int kExitQes = 4;
inline constexpr int kExitBracket = 5;

struct RunOptions {
  std::string command;
  std::filesystem::path config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::filesystem::path out_dir = ".";
  std::string format = "csv";
  bool verify = true;
};

// --- typed configs ----------------------------------------------------------

struct TransformConfig {
  std::vector<std::pair<Vec8, Vec8>> pairs;  // explicit rows, emitted first
  std::size_t count = 0;                     // random rows
  std::uint64_t seed = 0;
};

enum class SpectrumSystem { Oscillator, Micz };
enum class Chart { Spherical, Parabolic };

struct SpectrumConfig {
  SpectrumSystem system = SpectrumSystem::Oscillator;
  // oscillator
  std::vector<OscBlock> blocks;
  // micz
  OscillatorModel model;
  std::vector<MiczParams> sectors;
  int levels = 1;
  Chart chart = Chart::Spherical;
  std::optional<std::pair<double, double>> bracket;
  Grid grid;
  Grid theta_grid;
};

struct QesConfig {
  Family family = Family::Super2;
  QesPrimedParams params;
  Grid grid;
  double hi = 0.0;  // 0 picks the extent from the gauge factor
};

struct DualityConfig {
  double omega = 0.25;
  int J = 0;
  int L = 0;
  std::vector<std::pair<double, double>> micz_rows;  // (c1, c2)
  std::optional<std::pair<double, double>> anisotropy;  // (omega1, omega2)
  Grid radial_grid;
  Grid theta_grid;
};

/// Reads a JSON document; throws ConfigError on I/O or syntax errors.
nlohmann::json load_config(const std::filesystem::path& path);

// Each parser rejects unknown keys and malformed values with ConfigError.
TransformConfig parse_transform(const nlohmann::json& j);
SpectrumConfig parse_spectrum(const nlohmann::json& j);
QesConfig parse_qes(const nlohmann::json& j);
DualityConfig parse_duality(const nlohmann::json& j);

/// "%.17g"
std::string fmt(double x);

// Commands write their files into opts.out_dir and a summary to `out`;
// the return value is the exit code.  Library errors propagate.
int cmd_transform(const TransformConfig& cfg, const RunOptions& opts, std::ostream& out);
int cmd_spectrum(const SpectrumConfig& cfg, const RunOptions& opts, std::ostream& out);
int cmd_qes(const QesConfig& cfg, const RunOptions& opts, std::ostream& out);
int cmd_duality(const DualityConfig& cfg, const RunOptions& opts, std::ostream& out);

/// Full front end: argument parsing, dispatch and the error -> exit code map.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
