#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "demoxfer/env.hpp"
#include "demoxfer/replay.hpp"

namespace demoxfer {

inline constexpr int kPoolFormatVersion = 1;
inline constexpr int kDefaultPoolSize = 30;

/// Scripted controller standing in for the human demonstrator.
///
/// Push: reach the staging point behind the object (contact radius + 0.02 away
/// from the goal side), then drive through the object toward the goal.
/// Carry: reach the object until attached, then head for the goal.
/// With an obstacle, paths are planned through the corners of the obstacle
/// rectangle inflated by 0.05. For transformed embodiments the desired motion
/// is mapped through the inverse action transform.
Action oracle_action(const ScenarioSpec& spec, const EnvState& state);

struct DemoEpisode {
  EnvState initial_state;
  std::vector<Transition> transitions;
  bool success = true;
};

struct DemoPool {
  std::string scenario_name;
  std::vector<DemoEpisode> episodes;

  std::size_t size() const { return episodes.size(); }
};

/// Rolls the oracle from `initial` for at most the episode length.
DemoEpisode rollout_oracle(const ScenarioSpec& spec, const EnvState& initial);

/// Samples initial states from the scenario's reset distribution, keeps only
/// successful oracle episodes. Throws TrainingError when the oracle succeeds
/// on fewer than half of the attempts or runs out of 10 * pool_size attempts.
DemoPool generate_pool(const ScenarioSpec& spec, int pool_size, std::uint64_t seed);

struct Retrieval {
  std::size_t index = 0;
  double distance = 0.0;
};

/// Episode whose initial observation is closest (Euclidean) to `query`;
/// ties go to the lowest index. Throws SamplingError on an empty pool.
Retrieval retrieve_nearest(const DemoPool& pool, const Observation& query);

// Text format: a header line
//   demopool version=1 scenario=<name> pool_size=<n> obs_dim=6 act_dim=2
// then one line per episode:
//   <index> <success> <steps> <10 initial-state fields> <steps x 16 transition fields>
// with every number printed with 9 significant digits.
void save_pool(const std::filesystem::path& path, const DemoPool& pool);
DemoPool load_pool(const std::filesystem::path& path);
std::string format_pool(const DemoPool& pool);

}  // namespace demoxfer
