#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "demoxfer/learners.hpp"

namespace demoxfer {

enum class Method { Ours, AwacOffline, Bc, Early };

std::string to_string(Method m);
Method parse_method(const std::string& name);

/// True for the methods that query demonstrations during training.
inline bool is_active(Method m) { return m == Method::Ours || m == Method::Early; }

struct ExperimentConfig {
  std::string scenario_name;
  Method method = Method::Ours;
  std::vector<std::uint64_t> seeds{0};
  long total_env_steps = 300000;
  long eval_every = 5000;
  int eval_episodes = 20;
  int demo_budget = 10;
  std::filesystem::path pool_path;
  std::filesystem::path source_checkpoint_path;
  std::filesystem::path output_dir = ".";

  double gamma = 0.99;
  double tau = 0.005;
  double awac_lambda = 1.0;
  double alpha = 0.05;
  double learning_rate = 3e-4;
  int advantage_samples = 4;
  double weight_max = 20.0;
  int batch_size = 128;
  // Environment steps collected before gradient updates begin.
  long update_after = 0;

  int history_length = 20;
  double query_ratio = 0.1;
  int post_demo_updates = 50;

  /// Throws ConfigError when a field is out of range or missing.
  void validate() const;
  LearnerConfig learner_config() const;
};

/// Parses flat `key = value` text. Blank lines and lines starting with '#'
/// are skipped; unknown or repeated keys, and query keys given for a method
/// that never queries, are errors. `seeds` is a comma-separated list.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string format_config(const ExperimentConfig& config);

}  // namespace demoxfer
