#pragma once

#include <cstdint>

#include "demoxfer/nn.hpp"

namespace demoxfer {

template <typename T>
struct AdamState {
  std::int64_t step_count = 0;
  NetworkParams<T> first_moment;
  NetworkParams<T> second_moment;
  T learning_rate = T(3e-4);
  T beta1 = T(0.9);
  T beta2 = T(0.999);
  T epsilon = T(1e-8);
  // Updates rejected because the gradient was not finite.
  std::int64_t skipped_steps = 0;
};

template <typename T>
AdamState<T> make_adam(const NetworkParams<T>& params, T learning_rate);

/// One bias-corrected Adam step. Returns false and leaves params untouched
/// when the gradient is not finite.
template <typename T>
bool adam_step(AdamState<T>& state, NetworkParams<T>& params, const NetworkParams<T>& grads);

}  // namespace demoxfer
