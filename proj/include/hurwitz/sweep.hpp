#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Data-parallel drivers.  Each kernel has an OpenMP version and a serial
// reference with identical output ordering; tests compare them bit for bit.

struct TransformRow {
  Vec8 u{};
  Vec8 v{};
  Vec9 x{};
  double r = 0.0;         // u.u + v.v
  double residual = 0.0;  // relative composition residual
};

/// Seeded standard-normal (u, v) pairs; deterministic for a given seed.
std::vector<std::pair<Vec8, Vec8>> random_pairs(std::size_t count, std::uint64_t seed);

std::vector<TransformRow> transform_rows(std::span<const std::pair<Vec8, Vec8>> pairs);
std::vector<TransformRow> transform_rows_serial(std::span<const std::pair<Vec8, Vec8>> pairs);

/// One (omega, c, L) block of the 8-D singular oscillator, radial states
/// N = 0..N_max.
struct OscBlock {
  double omega = 1.0;
  double c = 0.0;
  int L = 0;
  int N_max = 0;
};

struct OscRow {
  double omega = 0.0;
  double c = 0.0;
  int L = 0;
  int N = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_deviation = 0.0;
  double error_estimate = 0.0;
  int nodes = 0;
};

/// Domain guess for a harmonic-dominated block (turning point plus decay).
double osc_block_extent(const OscBlock& b);

std::vector<OscRow> oscillator_sweep(std::span<const OscBlock> blocks, const Grid& grid,
                                     const SolveOptions& options = {});
std::vector<OscRow> oscillator_sweep_serial(std::span<const OscBlock> blocks, const Grid& grid,
                                            const SolveOptions& options = {});

/// Spherical-chart MICZ sector: lowest `levels` energies for (J, L, c1, c2).
struct MiczSector {
  MiczParams micz;
  int levels = 1;
};

struct MiczRow {
  MiczParams micz;
  int level = 0;
  int n_theta = 0;
  int n_r = 0;
  double Lambda = 0.0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_deviation = 0.0;
};

std::vector<MiczRow> micz_sweep(const OscillatorModel& model, std::span<const MiczSector> sectors,
                                const Grid& radial_grid, const Grid& theta_grid,
                                const SolveOptions& options = {});
std::vector<MiczRow> micz_sweep_serial(const OscillatorModel& model,
                                       std::span<const MiczSector> sectors,
                                       const Grid& radial_grid, const Grid& theta_grid,
                                       const SolveOptions& options = {});

}  // namespace hurwitz
