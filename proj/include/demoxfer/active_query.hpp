#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>

#include "demoxfer/env.hpp"
#include "demoxfer/errors.hpp"
#include "demoxfer/nn.hpp"
#include "demoxfer/replay.hpp"

namespace demoxfer {

struct UncertaintyOptions {
  // Multiply the bootstrap term by gamma. Off by default: the TD residual is
  // taken undiscounted.
  bool discounted = false;
  double gamma = 0.99;
};

using QFunction = std::function<double(const Eigen::VectorXd& state, const Eigen::VectorXd& action)>;

/// Mean absolute TD residual |r_t + Q(s_{t+1}, a_{t+1}) - Q(s_t, a_t)| along a
/// trajectory, using the trajectory's own next actions. After the last step the
/// bootstrap term is 0 when the episode terminated, otherwise it is evaluated at
/// the final next state with `bootstrap_action`.
double rollout_uncertainty(const QFunction& q, const Trajectory& trajectory, const UncertaintyOptions& options = {});

template <typename T>
double rollout_uncertainty(const NetworkParams<T>& critic, const Trajectory& trajectory,
                           const UncertaintyOptions& options = {});

struct HistoryEntry {
  EnvState initial_state;
  double uncertainty = 0.0;
};

enum class QueryKind { NoQuery, Query };

struct QueryDecision {
  QueryKind kind = QueryKind::NoQuery;
  std::optional<EnvState> query_initial_state;
  // Adaptive threshold; absent while the history is still warming up.
  std::optional<double> threshold;
};

/// Most recent entry among those with maximal uncertainty.
const HistoryEntry& tie_break_argmax(const std::deque<HistoryEntry>& history);

/// Shifting history of roll-out initial states and uncertainties with the
/// adaptive-threshold query rule and a hard demonstration budget.
class QueryState {
 public:
  QueryState(int history_length, double query_ratio, int budget);

  /// Records a finished roll-out and decides whether to query. Once the
  /// history holds history_length + 1 entries, the threshold is the
  /// threshold_index-th (0-based) largest uncertainty; a query is issued when
  /// the new uncertainty is strictly above it and budget remains. The earliest
  /// entry is then evicted. A Query decision consumes one unit of budget.
  QueryDecision observe_rollout(const EnvState& initial_state, double uncertainty);

  const std::deque<HistoryEntry>& history() const { return history_; }
  int demo_count() const { return demo_count_; }
  int budget() const { return budget_; }
  int history_length() const { return history_length_; }
  double query_ratio() const { return query_ratio_; }
  std::size_t threshold_index() const { return threshold_index_; }

 private:
  int history_length_;
  double query_ratio_;
  int budget_;
  std::size_t threshold_index_;
  int demo_count_ = 0;
  std::deque<HistoryEntry> history_;
};

}  // namespace demoxfer
