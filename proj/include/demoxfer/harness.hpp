#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "demoxfer/active_query.hpp"
#include "demoxfer/checkpoint.hpp"
#include "demoxfer/config.hpp"
#include "demoxfer/env.hpp"
#include "demoxfer/expert.hpp"
#include "demoxfer/learners.hpp"

namespace demoxfer {

struct EvalRecord {
  std::string scenario;
  Method method = Method::Ours;
  std::uint64_t seed = 0;
  long env_step = 0;
  double success_rate = 0.0;
  int queries_so_far = 0;
};

struct QueryEvent {
  long env_step = 0;
  long rollout_index = 0;
  double uncertainty = 0.0;
  std::optional<double> threshold;
  bool query = false;
};

// Where a query was answered from.
struct QueryRecord {
  long env_step = 0;
  long rollout_index = 0;
  EnvState query_state;
  std::size_t pool_index = 0;
  double distance = 0.0;
};

struct TransferResult {
  std::vector<EvalRecord> evals;
  std::vector<QueryEvent> events;
  std::vector<QueryRecord> queries;
  long env_steps = 0;
  long gradient_updates = 0;
  std::int64_t warnings = 0;
  std::vector<NamedNetwork> final_networks;
};

/// Fraction of `episodes` greedy episodes that reach the goal. Reset seeds
/// depend only on (seed, env_step, episode), so every method is scored on the
/// same initial states at the same checkpoint.
double evaluate_policy(const ActorCritic<float>& model, const ScenarioSpec& spec, int episodes, std::uint64_t seed,
                       long env_step);

/// One training run of `config.method` for a single seed. `source` must hold
/// an "actor" network.
TransferResult run_transfer(const ExperimentConfig& config, std::uint64_t seed, const DemoPool& pool,
                            const std::vector<NamedNetwork>& source, std::ostream* log = nullptr);

struct RunPaths {
  std::filesystem::path eval_csv;
  std::filesystem::path events_csv;
  std::filesystem::path queries_csv;
  std::filesystem::path checkpoint;
};

RunPaths run_paths(const ExperimentConfig& config, std::uint64_t seed);

/// Loads the pool and source checkpoint, runs every seed (up to `jobs` at a
/// time) and writes each run's CSVs and final checkpoint into output_dir.
void run_experiment(const ExperimentConfig& config, int jobs = 1, std::ostream* log = nullptr);

std::string format_eval_csv(const std::vector<EvalRecord>& records);
std::string format_events_csv(const std::vector<QueryEvent>& events);
std::string format_queries_csv(const std::vector<QueryRecord>& queries);
std::vector<EvalRecord> parse_eval_csv(const std::string& text);
std::vector<QueryEvent> parse_events_csv(const std::string& text);

/// Problems with an active run's event log: queries during the warm-up of
/// `history_length` roll-outs, more than `budget` queries, a threshold present
/// during warm-up or missing after it. Empty when the log is valid.
std::vector<std::string> validate_event_log(const std::vector<QueryEvent>& events, int history_length, int budget);

struct AggregateRow {
  std::string scenario;
  std::string method;
  long env_step = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  int seeds = 0;
};

/// Mean and standard error (sample standard deviation / sqrt(n), 0 for one
/// seed) of success_rate per (scenario, method, env_step), sorted by those
/// keys. Throws ConfigError when seeds of one (scenario, method) disagree on
/// their step grid.
std::vector<AggregateRow> aggregate(const std::vector<EvalRecord>& records);
std::string format_aggregate_csv(const std::vector<AggregateRow>& rows);
/// Reads every *_eval.csv in `dir`.
std::vector<EvalRecord> collect_eval_records(const std::filesystem::path& dir);

// Source pretraining learner: a shorter horizon, a faster step size and a
// small entropy bonus. With the transfer defaults the push source stalls.
inline LearnerConfig source_learner_defaults() {
  LearnerConfig c;
  c.alpha = 0.01;
  c.gamma = 0.98;
  c.learning_rate = 1e-3;
  return c;
}

struct SourceTrainingConfig {
  Family family = Family::Push;
  std::uint64_t seed = 0;
  long budget_steps = 200000;
  long eval_every = 5000;
  int eval_episodes = 20;
  double success_threshold = 0.9;
  int batch_size = 128;
  // Uniform random actions for this many initial steps.
  long random_steps = 5000;
  long update_after = 1000;
  LearnerConfig learner = source_learner_defaults();
};

struct SourceLogRow {
  long env_step = 0;
  long episodes = 0;
  double success_rate = 0.0;
  double mean_return = 0.0;
  double critic_loss = 0.0;
  double policy_loss = 0.0;
};

struct SourceTrainingResult {
  bool reached = false;
  double final_success_rate = 0.0;
  long env_steps = 0;
  std::vector<SourceLogRow> log;
  std::vector<NamedNetwork> networks;
};

/// SAC on the family's source scenario with the dense reward, evaluated on
/// sparse success, until the threshold or the step budget is reached.
SourceTrainingResult run_source_training(const SourceTrainingConfig& config, std::ostream* log = nullptr);
std::string format_source_log_csv(const std::vector<SourceLogRow>& rows);

/// Runs source training and writes source_<family>_seed<k>.ckpt and the
/// matching _log.csv into `out_dir`. Throws TrainingError (after writing the
/// log) when the threshold was not reached.
std::filesystem::path train_source(const SourceTrainingConfig& config, const std::filesystem::path& out_dir,
                                   std::ostream* log = nullptr);

/// Keeps large training temporaries on the heap instead of fresh mmap pages
/// (glibc only; no-op elsewhere). Call once at program start.
void tune_allocator();

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace demoxfer
