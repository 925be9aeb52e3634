#pragma once

#include <cstdint>
#include <vector>

#include "demoxfer/adam.hpp"
#include "demoxfer/nn.hpp"
#include "demoxfer/policy_head.hpp"
#include "demoxfer/replay.hpp"

namespace demoxfer {

struct LearnerConfig {
  std::vector<int> hidden_sizes{64, 64};
  Activation activation = Activation::Relu;
  double learning_rate = 3e-4;
  double gamma = 0.99;
  double tau = 0.005;
  double awac_lambda = 1.0;
  double alpha = 0.05;          // SAC entropy coefficient
  int advantage_samples = 4;    // policy samples for the value baseline
  double weight_max = 20.0;     // cap on exp(A / lambda)

  void validate() const;
};

// exp(A / lambda) is floored at exp(kMinLogWeight) so weights stay positive.
inline constexpr double kMinLogWeight = -50.0;

/// Actor, twin critics and their targets, with one Adam state per network.
template <typename T>
struct ActorCritic {
  NetworkParams<T> actor;  // state -> [mean; raw log_std]
  NetworkParams<T> critic1;  // [state; action] -> Q
  NetworkParams<T> critic2;
  NetworkParams<T> target_critic1;
  NetworkParams<T> target_critic2;
  AdamState<T> actor_opt;
  AdamState<T> critic1_opt;
  AdamState<T> critic2_opt;
  Vector<T> action_low;
  Vector<T> action_high;
  T gamma = T(0.99);
  T tau = T(0.005);
  T awac_lambda = T(1);
  T alpha = T(0.05);
  int advantage_samples = 4;
  T weight_max = T(20);
  // Updates skipped because a loss or gradient was not finite.
  std::int64_t warnings = 0;

  int state_dim() const { return actor.input_size(); }
  int action_dim() const { return static_cast<int>(action_low.size()); }
};

template <typename T>
ActorCritic<T> make_actor_critic(int state_dim, int action_dim, const LearnerConfig& config, Rng& rng);

/// Fresh random critics, targets copied from them, optimizer moments reset.
template <typename T>
void reinitialize_critics(ActorCritic<T>& model, const LearnerConfig& config, Rng& rng);

/// Replaces the actor (and resets its optimizer), e.g. with a source-task policy.
template <typename T>
void load_actor(ActorCritic<T>& model, const NetworkParams<T>& actor);

template <typename T>
GaussianPolicyHead<T> policy_head(const ActorCritic<T>& model, const Vector<T>& state);

/// Stochastic sample, or the squashed mean when `greedy`.
template <typename T>
Vector<T> select_action(const ActorCritic<T>& model, const Vector<T>& state, Rng& rng, bool greedy);

/// Q values (1 x B) of a critic at column-stacked states and actions.
template <typename T>
RowArray<T> q_values(const NetworkParams<T>& critic, const Matrix<T>& states, const Matrix<T>& actions);

struct LossReport {
  double critic_loss = 0.0;
  double policy_loss = 0.0;
  double mean_advantage = 0.0;
  double mean_weight = 0.0;
};

template <typename T>
struct LossGrad {
  T loss = 0;
  NetworkParams<T> grad;
};

enum class TargetMode { Awac, Sac };

/// y = r + gamma * (1 - terminal) * (min target-Q(s', a') [- alpha log pi(a'|s') in SAC mode])
/// for given next actions and their log-probabilities.
template <typename T>
Vector<T> bootstrap_targets(const ActorCritic<T>& model, const Batch<T>& batch, const Matrix<T>& next_actions,
                            const Vector<T>& next_log_probs, TargetMode mode);

/// Regression targets with a' drawn once from the current actor at s'.
template <typename T>
Vector<T> critic_targets(const ActorCritic<T>& model, const Batch<T>& batch, TargetMode mode, Rng& rng);

/// Single-transition form of critic_targets.
template <typename T>
T critic_target(const ActorCritic<T>& model, const Transition& transition, TargetMode mode, Rng& rng);

/// Mean squared error between the critic and fixed targets, with its gradient.
template <typename T>
LossGrad<T> critic_loss(const NetworkParams<T>& critic, const Matrix<T>& states, const Matrix<T>& actions,
                        const Vector<T>& targets);

/// One Adam step on both critics toward critic_targets, then a soft target update.
template <typename T>
LossReport critic_update(ActorCritic<T>& model, const Batch<T>& batch, TargetMode mode, Rng& rng);

/// Q1(s, a) - mean_i Q1(s, a_i) with a_i ~ pi(.|s), one column per sample.
template <typename T>
RowArray<T> advantages(const ActorCritic<T>& model, const Matrix<T>& states, const Matrix<T>& actions, Rng& rng);

template <typename T>
T advantage(const ActorCritic<T>& model, const Vector<T>& state, const Vector<T>& action, Rng& rng);

/// clamp(exp(A / lambda), exp(kMinLogWeight), weight_max)
template <typename T>
RowArray<T> advantage_weights(const RowArray<T>& adv, T lambda, T weight_max);

/// -mean_i w_i log pi(a_i | s_i) and its gradient with respect to the actor.
template <typename T>
LossGrad<T> weighted_log_likelihood_loss(const NetworkParams<T>& actor, const Vector<T>& action_low,
                                         const Vector<T>& action_high, const Matrix<T>& states,
                                         const Matrix<T>& actions, const RowArray<T>& weights);

/// mean_i [alpha log pi(a~_i|s_i) - min_k Q_k(s_i, a~_i)] with a~ reparameterized
/// from `noise` (action_dim x B); gradient with respect to the actor only.
template <typename T>
LossGrad<T> sac_actor_loss(const NetworkParams<T>& actor, const Vector<T>& action_low, const Vector<T>& action_high,
                           const NetworkParams<T>& critic1, const NetworkParams<T>& critic2,
                           const Matrix<T>& states, const Matrix<T>& noise, T alpha);

/// Advantage-weighted actor step. With `unit_weights` every weight is 1 and the
/// step is identical to bc_update.
template <typename T>
LossReport awac_policy_update(ActorCritic<T>& model, const Batch<T>& batch, Rng& rng, bool unit_weights = false);

/// critic_update (AWAC targets) followed by awac_policy_update.
template <typename T>
LossReport awac_update(ActorCritic<T>& model, const Batch<T>& batch, Rng& rng);

/// Entropy-regularized critic step and reparameterized actor step.
template <typename T>
LossReport sac_update(ActorCritic<T>& model, const Batch<T>& batch, Rng& rng);

/// Maximum-likelihood actor step on demonstration data.
template <typename T>
LossReport bc_update(ActorCritic<T>& model, const Batch<T>& demo_batch);

}  // namespace demoxfer
