#include "hurwitz/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <random>

#include "hurwitz/analytic.hpp"

namespace hurwitz {

std::vector<std::pair<Vec8, Vec8>> random_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::pair<Vec8, Vec8>> out(count);
  for (auto& [u, v] : out) {
    for (double& c : u) c = normal(rng);
    for (double& c : v) c = normal(rng);
  }
  return out;
}

namespace {

TransformRow transform_one(const Vec8& u, const Vec8& v) {
  TransformRow row;
  row.u = u;
  row.v = v;
  row.x = hurwitz_forward(u, v);
  row.r = norm_sq(u) + norm_sq(v);
  row.residual = composition_residual(u, v, row.x);
  return row;
}

std::vector<OscRow> solve_block(const OscBlock& b, const Grid& grid,
                                const SolveOptions& options) {
  const RadialProblem pr =
      build_osc8_problem(Potential8D::sho(b.omega, b.c), b.L, osc_block_extent(b));
  const Spectrum s = fd_eigensolve(pr, grid, b.N_max + 1, options);
  std::vector<OscRow> rows;
  for (int N = 0; N <= b.N_max; ++N) {
    OscRow row;
    row.omega = b.omega;
    row.c = b.c;
    row.L = b.L;
    row.N = N;
    row.analytic = singular_oscillator_energy({N, b.L, 0, 0.0, 0.0}, b.omega, b.c);
    row.numeric = s.eigenvalues[N];
    row.rel_deviation = std::abs(row.numeric - row.analytic) / std::abs(row.analytic);
    row.error_estimate = s.error_estimates[N];
    row.nodes = s.node_counts[N];
    rows.push_back(row);
  }
  return rows;
}

std::vector<MiczRow> solve_sector(const OscillatorModel& model, const MiczSector& sec,
                                  const Grid& radial_grid, const Grid& theta_grid,
                                  const SolveOptions& options) {
  const auto states =
      spherical_levels(model, sec.micz, radial_grid, theta_grid, sec.levels, options);
  std::vector<MiczRow> rows;
  for (int i = 0; i < sec.levels; ++i) {
    MiczRow row;
    row.micz = sec.micz;
    row.level = i;
    row.n_theta = states[i].n_theta;
    row.n_r = states[i].n_r;
    row.Lambda = states[i].Lambda;
    row.numeric = states[i].E;
    row.analytic = micz_coulomb_energy(states[i].n_theta + states[i].n_r, sec.micz);
    row.rel_deviation = std::abs(row.numeric - row.analytic) / std::abs(row.analytic);
    rows.push_back(row);
  }
  return rows;
}

// Runs job(i) for every block in parallel, keeping per-block output slots so
// the concatenated result has the input order.
template <typename Row, typename Job>
std::vector<Row> parallel_blocks(std::size_t count, Job job) {
  std::vector<std::vector<Row>> slots(count);
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    try {
      slots[i] = job(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Row> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace

std::vector<TransformRow> transform_rows(std::span<const std::pair<Vec8, Vec8>> pairs) {
  std::vector<TransformRow> rows(pairs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i) {
    rows[i] = transform_one(pairs[i].first, pairs[i].second);
  }
  return rows;
}

std::vector<TransformRow> transform_rows_serial(std::span<const std::pair<Vec8, Vec8>> pairs) {
  std::vector<TransformRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [u, v] : pairs) rows.push_back(transform_one(u, v));
  return rows;
}

double osc_block_extent(const OscBlock& b) {
  const double top = 4.0 * b.N_max + 2.0 * b.L + 2.0 * std::sqrt(2.0 * b.c) + 8.0;
  return std::sqrt((top + 80.0) / b.omega);
}

std::vector<OscRow> oscillator_sweep(std::span<const OscBlock> blocks, const Grid& grid,
                                     const SolveOptions& options) {
  return parallel_blocks<OscRow>(
      blocks.size(), [&](std::size_t i) { return solve_block(blocks[i], grid, options); });
}

std::vector<OscRow> oscillator_sweep_serial(std::span<const OscBlock> blocks, const Grid& grid,
                                            const SolveOptions& options) {
  std::vector<OscRow> out;
  for (const auto& b : blocks) {
    auto rows = solve_block(b, grid, options);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::vector<MiczRow> micz_sweep(const OscillatorModel& model, std::span<const MiczSector> sectors,
                                const Grid& radial_grid, const Grid& theta_grid,
                                const SolveOptions& options) {
  return parallel_blocks<MiczRow>(sectors.size(), [&](std::size_t i) {
    return solve_sector(model, sectors[i], radial_grid, theta_grid, options);
  });
}

std::vector<MiczRow> micz_sweep_serial(const OscillatorModel& model,
                                       std::span<const MiczSector> sectors,
                                       const Grid& radial_grid, const Grid& theta_grid,
                                       const SolveOptions& options) {
  std::vector<MiczRow> out;
  for (const auto& s : sectors) {
    auto rows = solve_sector(model, s, radial_grid, theta_grid, options);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace hurwitz
