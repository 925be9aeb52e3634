#pragma once

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

#include "demoxfer/random.hpp"

namespace demoxfer {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using RowArray = Eigen::Array<T, 1, Eigen::Dynamic>;

enum class Activation { Tanh, Relu };

std::string to_string(Activation a);
Activation parse_activation(std::string_view name);

inline constexpr double kLayerNormEpsilon = 1e-6;

/// Parameters of a feed-forward network.
///
/// Every hidden layer computes affine -> layer norm -> gain/offset -> activation;
/// the output layer is affine only. Batches are stored column-major, one sample
/// per column. The same type doubles as the gradient container.
template <typename T>
struct NetworkParams {
  std::vector<int> layer_sizes;
  Activation activation = Activation::Relu;
  std::vector<Matrix<T>> weights;  // weights[l]: layer_sizes[l+1] x layer_sizes[l]
  std::vector<Vector<T>> biases;
  std::vector<Vector<T>> ln_gain;  // one entry per hidden layer
  std::vector<Vector<T>> ln_offset;

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  std::size_t num_layers() const { return weights.size(); }
  std::size_t num_hidden() const { return ln_gain.size(); }
  std::size_t parameter_count() const;

  /// Throws ConfigError when tensor shapes do not chain with layer_sizes.
  void validate() const;
  bool all_finite() const;
  void set_zero();

  template <typename U>
  NetworkParams<U> cast() const;
};

/// Same architecture, all tensors zero.
template <typename T>
NetworkParams<T> zeros_like(const NetworkParams<T>& p);

/// Uniform fan-in initialization: U(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights
/// and biases; layer-norm gain 1 and offset 0.
template <typename T>
NetworkParams<T> init_network(const std::vector<int>& layer_sizes, Activation activation, Rng& rng);

/// Applies f to corresponding tensors of several same-shaped networks.
template <typename F, typename P, typename... Ps>
void for_each_tensor(F&& f, P& first, Ps&... rest) {
  for (std::size_t l = 0; l < first.weights.size(); ++l) f(first.weights[l], rest.weights[l]...);
  for (std::size_t l = 0; l < first.biases.size(); ++l) f(first.biases[l], rest.biases[l]...);
  for (std::size_t l = 0; l < first.ln_gain.size(); ++l) f(first.ln_gain[l], rest.ln_gain[l]...);
  for (std::size_t l = 0; l < first.ln_offset.size(); ++l) f(first.ln_offset[l], rest.ln_offset[l]...);
}

/// Intermediate values kept by a forward pass for backpropagation.
template <typename T>
struct ForwardCache {
  std::vector<Matrix<T>> layer_inputs;   // input of every layer
  std::vector<Matrix<T>> normalized;     // per hidden layer, layer norm output before gain/offset
  std::vector<RowArray<T>> inv_std;      // per hidden layer, one entry per sample
  Matrix<T> output;
};

template <typename T>
struct Gradients {
  NetworkParams<T> params;
  Matrix<T> input;
};

template <typename T>
Matrix<T> forward(const NetworkParams<T>& params, const Matrix<T>& input);

template <typename T>
const Matrix<T>& forward(const NetworkParams<T>& params, const Matrix<T>& input, ForwardCache<T>& cache);

template <typename T>
Vector<T> forward(const NetworkParams<T>& params, const Vector<T>& input);

/// Gradient of sum_over_batch <output, output_grad> with respect to every
/// parameter and to the input, using the cache of the matching forward pass.
template <typename T>
Gradients<T> backward(const NetworkParams<T>& params, const ForwardCache<T>& cache,
                      const Matrix<T>& output_grad);

/// Convenience: forward + backward for a single input.
template <typename T>
Gradients<T> backward(const NetworkParams<T>& params, const Vector<T>& input, const Vector<T>& output_grad);

/// target <- (1 - tau) * target + tau * source, tensor by tensor.
template <typename T>
void soft_update(NetworkParams<T>& target, const NetworkParams<T>& source, T tau);

// ---------------------------------------------------------------------------

template <typename T>
template <typename U>
NetworkParams<U> NetworkParams<T>::cast() const {
  NetworkParams<U> out;
  out.layer_sizes = layer_sizes;
  out.activation = activation;
  for (const auto& w : weights) out.weights.push_back(w.template cast<U>());
  for (const auto& b : biases) out.biases.push_back(b.template cast<U>());
  for (const auto& g : ln_gain) out.ln_gain.push_back(g.template cast<U>());
  for (const auto& o : ln_offset) out.ln_offset.push_back(o.template cast<U>());
  return out;
}

}  // namespace demoxfer
