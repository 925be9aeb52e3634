#pragma once

#include "demoxfer/nn.hpp"

namespace demoxfer {

inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;
// Squashed actions on the exact bound are pulled inside by this fraction of
// the half-range before the inverse squash.
inline constexpr double kBoundEpsilon = 1e-6;

/// Squashed Gaussian over a box of actions.
///
/// A pre-squash sample u ~ N(mean, exp(log_std)) maps to
/// a = center + half * tanh(u / half), which has unit slope at the center so the
/// density tends to the plain Gaussian as the box grows.
template <typename T>
struct GaussianPolicyHead {
  Vector<T> mean;
  Vector<T> log_std;       // clamped to [kLogStdMin, kLogStdMax]
  Vector<T> log_std_live;  // 1 where the raw value was inside the clamp, else 0
  Vector<T> action_low;
  Vector<T> action_high;

  Eigen::Index dim() const { return mean.size(); }
  Vector<T> center() const { return (action_high + action_low) / T(2); }
  Vector<T> half_range() const { return (action_high - action_low) / T(2); }
};

/// Splits an actor output [mean; raw_log_std] into a head.
template <typename T>
GaussianPolicyHead<T> make_head(const Eigen::Ref<const Vector<T>>& actor_output, const Vector<T>& low,
                                const Vector<T>& high);

template <typename T>
Vector<T> squash(const GaussianPolicyHead<T>& head, const Vector<T>& pre);

template <typename T>
Vector<T> unsquash(const GaussianPolicyHead<T>& head, const Vector<T>& action);

template <typename T>
Vector<T> mean_action(const GaussianPolicyHead<T>& head);

/// Log density of `action`, including the squash Jacobian. When the gradient
/// pointers are given they receive d/d(mean) and d/d(log_std).
template <typename T>
T gaussian_log_prob(const GaussianPolicyHead<T>& head, const Vector<T>& action, Vector<T>* grad_mean = nullptr,
                    Vector<T>* grad_log_std = nullptr);

/// Reparameterized draw a = squash(mean + std * noise) with derivatives taken
/// at fixed noise.
template <typename T>
struct ReparamSample {
  Vector<T> action;
  T log_prob = 0;
  Vector<T> dlogp_dmean;
  Vector<T> dlogp_dlogstd;
  Vector<T> daction_dmean;    // squash Jacobian (diagonal)
  Vector<T> daction_dlogstd;  // Jacobian * std * noise
};

template <typename T>
ReparamSample<T> reparam_sample(const GaussianPolicyHead<T>& head, const Vector<T>& noise);

template <typename T>
Vector<T> sample_action(const GaussianPolicyHead<T>& head, Rng& rng);

/// Maps head-space gradients back to the actor's raw output, zeroing clamped
/// log-std entries.
template <typename T>
Vector<T> head_to_output_grad(const GaussianPolicyHead<T>& head, const Vector<T>& grad_mean,
                              const Vector<T>& grad_log_std);

}  // namespace demoxfer
