#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "idemfract/grid.hpp"
#include "idemfract/ifs.hpp"
#include "idemfract/maxplus.hpp"

namespace idemfract {

struct IterationConfig {
  std::size_t max_iterations = 30;
  /// Stop once the sup-norm change of one step is at most this.
  double tolerance = 0.0;
  /// Grid indices that start at 0; empty means every grid point.
  std::vector<std::size_t> initial_support;
  unsigned threads = 1;

  void validate(const UniformGrid& grid) const;
};

struct IterationReport {
  std::size_t iterations_run = 0;
  std::vector<double> sup_change_trace;
  std::vector<std::size_t> support_size_trace;
  bool converged = false;
};

/// A partial system tabulated on a grid: one map table per phi_j.
class DiscreteSystem {
 public:
  DiscreteSystem(const PartialSystem& system, const UniformGrid& grid);

  std::size_t order() const noexcept { return tables_.size(); }
  const GridShape& shape() const noexcept { return shape_; }
  const std::vector<MapTable>& tables() const noexcept { return tables_; }
  const std::vector<ExtendedReal>& weights() const noexcept { return weights_; }
  const std::vector<ExtendedReal>& raw_weights() const noexcept { return raw_weights_; }

 private:
  GridShape shape_;
  std::vector<MapTable> tables_;
  std::vector<ExtendedReal> weights_;
  std::vector<ExtendedReal> raw_weights_;
};

/// One application of the discrete idempotent Markov operator:
/// out(x) = max over (j, y) with phi_hat_j(y) = x of q~_j + in(y).
/// Values are pushed forward from the support of `density`.
DiscreteDensity markov_step(const DiscreteDensity& density, const DiscreteSystem& system, unsigned threads = 1);
DiscreteDensity markov_step(const DiscreteDensity& density, const PartialSystem& system, const UniformGrid& grid);

/// Same push-forward with the raw weights q_j instead of q~_j, i.e. the
/// operator alpha_n (.) M_{q~,n}.
DiscreteDensity markov_step_unnormalized(const DiscreteDensity& density, const DiscreteSystem& system);

/// 0 on `support` (every index when empty), bottom elsewhere.
DiscreteDensity initial_density(const UniformGrid& grid, const std::vector<std::size_t>& support);

/// Sup-norm distance in lambda scale; bottom vs bottom is 0 and finite vs
/// bottom is +inf.
double sup_change(const DiscreteDensity& a, const DiscreteDensity& b);

std::pair<DiscreteDensity, IterationReport> iterate(const PartialSystem& system, const UniformGrid& grid,
                                                    const IterationConfig& config);

/// Iterates from an arbitrary starting density. The returned density is
/// renormalized, which is a no-op when the start is already normalized.
std::pair<DiscreteDensity, IterationReport> iterate_from(DiscreteDensity start, const DiscreteSystem& system,
                                                         const IterationConfig& config);

inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

/// Enumerates every word (j_1, ..., j_K) and start point y, evaluating
/// phi_hat_{j_1}(...phi_hat_{j_K}(y)) with weight sum of q~_{j_i}, and keeps
/// the maximum weight per landing point. Independent of markov_step.
DiscreteDensity word_oracle(const PartialSystem& system, const UniformGrid& grid, std::size_t depth,
                            const std::vector<std::size_t>& initial_support,
                            std::size_t budget = kDefaultOracleBudget);

}  // namespace idemfract
