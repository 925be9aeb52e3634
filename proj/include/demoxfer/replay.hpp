#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "demoxfer/nn.hpp"
#include "demoxfer/random.hpp"

namespace demoxfer {

enum class SourceTag { Rollout, Demo };

struct Transition {
  Eigen::VectorXd state;
  Eigen::VectorXd action;
  double reward = 0.0;
  Eigen::VectorXd next_state;
  bool terminal = false;
  SourceTag source_tag = SourceTag::Rollout;
};

/// An ordered episode. `bootstrap_action` is the action at the final next
/// state, needed only when the episode was cut without a terminal flag.
struct Trajectory {
  std::vector<Transition> steps;
  std::optional<Eigen::VectorXd> bootstrap_action;
};

/// Bounded FIFO of transitions; the oldest entry is evicted first.
class ReplayBuffer {
 public:
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  ReplayBuffer(int state_dim, int action_dim, std::size_t capacity = kUnbounded);

  /// Throws ConfigError on a dimension mismatch.
  void push(Transition t);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t capacity() const { return capacity_; }
  const Transition& operator[](std::size_t i) const { return entries_[i]; }
  int state_dim() const { return state_dim_; }
  int action_dim() const { return action_dim_; }

 private:
  int state_dim_;
  int action_dim_;
  std::size_t capacity_;
  std::deque<Transition> entries_;
};

/// floor(B/2) uniform draws (with replacement) from `demo` and the rest from
/// `rollout`, shuffled. Everything comes from `rollout` when `demo` is empty,
/// and everything from `demo` when `rollout` is empty. Throws SamplingError
/// when both are empty.
std::vector<Transition> sample_balanced(const ReplayBuffer& demo, const ReplayBuffer& rollout,
                                        std::size_t batch_size, Rng& rng);

/// Uniform draws with replacement from a single buffer.
std::vector<Transition> sample_uniform(const ReplayBuffer& buffer, std::size_t batch_size, Rng& rng);

/// Column-stacked batch for the learners.
template <typename T>
struct Batch {
  Matrix<T> states;
  Matrix<T> actions;
  Vector<T> rewards;
  Matrix<T> next_states;
  Vector<T> terminals;  // 1 for terminal transitions

  Eigen::Index size() const { return states.cols(); }
};

template <typename T>
Batch<T> make_batch(const std::vector<Transition>& transitions);

}  // namespace demoxfer
