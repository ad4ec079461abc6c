#include "idemfract/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "idemfract/error.hpp"

namespace idemfract {

void IterationConfig::validate(const UniformGrid& grid) const {
  if (max_iterations < 1) throw Error(ErrorCode::ConfigInvalid, "iteration.N must be >= 1");
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::ConfigInvalid, "iteration.tolerance must be >= 0");
  for (std::size_t i : initial_support) {
    if (i >= grid.size()) {
      throw Error(ErrorCode::ConfigInvalid, "iteration.initial_support index " + std::to_string(i) + " off grid");
    }
  }
}

DiscreteSystem::DiscreteSystem(const PartialSystem& system, const UniformGrid& grid)
    : shape_(grid.shape()), weights_(system.weights), raw_weights_(system.raw_weights) {
  if (system.dimension != grid.dimension()) {
    throw Error(ErrorCode::ShapeMismatch, "system and grid dimension differ");
  }
  tables_.reserve(system.maps.size());
  for (const AffineMap& m : system.maps) tables_.push_back(discretize_map(m, grid, system.clamp_to_domain));
}

namespace {

void push_range(std::span<const ExtendedReal> in, const DiscreteSystem& system,
                const std::vector<ExtendedReal>& weights, std::size_t begin, std::size_t end,
                std::span<ExtendedReal> out) {
  const auto& tables = system.tables();
  for (std::size_t y = begin; y < end; ++y) {
    const ExtendedReal v = in[y];
    if (is_bottom(v)) continue;
    for (std::size_t j = 0; j < tables.size(); ++j) {
      const std::uint32_t x = tables[j][y];
      out[x] = oplus(out[x], odot(weights[j], v));
    }
  }
}

DiscreteDensity push_forward(const DiscreteDensity& density, const DiscreteSystem& system,
                             const std::vector<ExtendedReal>& weights, unsigned threads) {
  if (!(density.shape() == system.shape())) {
    throw Error(ErrorCode::ShapeMismatch, "density shape does not match the discretized system");
  }
  const std::size_t size = density.size();
  DiscreteDensity out(density.shape());
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, size / 4096));
  if (workers == 1) {
    push_range(density.values(), system, weights, 0, size, out.values());
    return out;
  }
  // Each worker fills a private buffer; max-merging is order independent.
  std::vector<std::vector<ExtendedReal>> partial(workers, std::vector<ExtendedReal>(size, kBottom));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (size + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(size, w * chunk);
      const std::size_t end = std::min(size, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        push_range(density.values(), system, weights, begin, end, partial[w]);
      });
    }
  }
  auto values = out.values();
  for (const auto& buf : partial) {
    for (std::size_t i = 0; i < size; ++i) values[i] = oplus(values[i], buf[i]);
  }
  return out;
}

}  // namespace

DiscreteDensity markov_step(const DiscreteDensity& density, const DiscreteSystem& system, unsigned threads) {
  return push_forward(density, system, system.weights(), threads);
}

DiscreteDensity markov_step(const DiscreteDensity& density, const PartialSystem& system, const UniformGrid& grid) {
  if (!(density.shape() == grid.shape())) throw Error(ErrorCode::ShapeMismatch, "density is not on this grid");
  return markov_step(density, DiscreteSystem(system, grid));
}

DiscreteDensity markov_step_unnormalized(const DiscreteDensity& density, const DiscreteSystem& system) {
  return push_forward(density, system, system.raw_weights(), 1);
}

DiscreteDensity initial_density(const UniformGrid& grid, const std::vector<std::size_t>& support) {
  if (support.empty()) return DiscreteDensity(grid.shape(), 0.0);
  DiscreteDensity d(grid.shape());
  for (std::size_t i : support) {
    if (i >= d.size()) throw Error(ErrorCode::OutOfDomain, "support index " + std::to_string(i) + " off grid");
    d[i] = 0.0;
  }
  return d;
}

double sup_change(const DiscreteDensity& a, const DiscreteDensity& b) {
  if (!(a.shape() == b.shape())) throw Error(ErrorCode::ShapeMismatch, "densities on different grids");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool ba = is_bottom(a[i]), bb = is_bottom(b[i]);
    if (ba && bb) continue;
    if (ba != bb) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

std::pair<DiscreteDensity, IterationReport> iterate_from(DiscreteDensity start, const DiscreteSystem& system,
                                                         const IterationConfig& config) {
  if (config.max_iterations < 1) throw Error(ErrorCode::ConfigInvalid, "iteration.N must be >= 1");
  IterationReport report;
  DiscreteDensity current = std::move(start);
  for (std::size_t step = 0; step < config.max_iterations; ++step) {
    DiscreteDensity next = markov_step(current, system, config.threads);
    const double change = sup_change(current, next);
    report.sup_change_trace.push_back(change);
    report.support_size_trace.push_back(next.support_size());
    ++report.iterations_run;
    current = std::move(next);
    if (change <= config.tolerance) {
      report.converged = true;
      break;
    }
  }
  return {renormalize(current), std::move(report)};
}

std::pair<DiscreteDensity, IterationReport> iterate(const PartialSystem& system, const UniformGrid& grid,
                                                    const IterationConfig& config) {
  config.validate(grid);
  const DiscreteSystem tabulated(system, grid);
  return iterate_from(initial_density(grid, config.initial_support), tabulated, config);
}

DiscreteDensity word_oracle(const PartialSystem& system, const UniformGrid& grid, std::size_t depth,
                            const std::vector<std::size_t>& initial_support, std::size_t budget) {
  if (system.dimension != grid.dimension()) throw Error(ErrorCode::ShapeMismatch, "system and grid dimension differ");
  const DiscreteDensity start = initial_density(grid, initial_support);
  const std::size_t starts = start.support_size();
  const std::size_t n = system.maps.size();

  std::size_t words = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    if (words > budget / n) throw Error(ErrorCode::OracleBudgetExceeded, "n^K exceeds the oracle budget");
    words *= n;
  }
  if (starts != 0 && words > budget / starts) {
    throw Error(ErrorCode::OracleBudgetExceeded, "n^K * |support| exceeds the oracle budget");
  }

  DiscreteDensity out(grid.shape());
  std::vector<std::size_t> letters(depth);
  for (std::size_t y = 0; y < start.size(); ++y) {
    if (is_bottom(start[y])) continue;
    for (std::size_t word = 0; word < words; ++word) {
      // letters[0] is j_1 (outermost), letters[depth-1] is j_K (applied first).
      std::size_t code = word;
      for (std::size_t i = depth; i-- > 0;) {
        letters[i] = code % n;
        code /= n;
      }
      std::size_t x = y;
      ExtendedReal w = start[y];
      for (std::size_t i = depth; i-- > 0;) {
        const std::size_t j = letters[i];
        x = grid.project(system.maps[j](grid.value(x)), system.clamp_to_domain);
        w = system.weights[j] + w;
      }
      out[x] = std::max(out[x], w);
    }
  }
  return out;
}

}  // namespace idemfract
