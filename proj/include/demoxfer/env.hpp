#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace demoxfer {

using Vec2 = Eigen::Vector2d;

inline constexpr int kObsDim = 6;
inline constexpr int kActDim = 2;
inline constexpr double kWorkspaceLimit = 1.0;
inline constexpr double kAgentStep = 0.05;
inline constexpr double kSuccessReward = 1000.0;
inline constexpr double kObstacleReward = -1000.0;
inline constexpr double kStepReward = -1.0;

enum class Family { Push, Carry };
enum class Variant { Source, NewFriction, NewObjectSize, Obstacle, NewEmbodiment };
enum class RewardMode { Sparse, Dense };

std::string to_string(Family f);
std::string to_string(Variant v);
Family parse_family(const std::string& name);

struct Rect {
  Vec2 lo;
  Vec2 hi;

  bool contains(const Vec2& p) const;
  /// True when the closed segment a-b touches the rectangle.
  bool intersects_segment(const Vec2& a, const Vec2& b) const;
  bool operator==(const Rect&) const = default;
};

/// Axis-aligned box for uniform sampling; lo == hi on an axis means fixed.
struct Box2 {
  Vec2 lo;
  Vec2 hi;

  bool contains(const Vec2& p, double tol = 0.0) const;
  bool operator==(const Box2&) const = default;
};

struct EnvState {
  Vec2 agent_pos = Vec2::Zero();
  Vec2 object_pos = Vec2::Zero();
  Vec2 object_vel = Vec2::Zero();
  Vec2 goal_pos = Vec2::Zero();
  bool attached = false;
  int step_index = 0;

  bool operator==(const EnvState&) const = default;
};

using Observation = Eigen::Matrix<double, kObsDim, 1>;
using Action = Eigen::Matrix<double, kActDim, 1>;

/// Observation = (agent_pos, object_pos, goal_pos).
Observation observe(const EnvState& s);

struct ScenarioSpec {
  std::string name;
  Family family = Family::Push;
  Variant variant = Variant::Source;
  double friction = 0.5;
  double contact_radius = 0.06;
  double success_radius = 0.05;
  std::optional<Rect> obstacle;
  Eigen::Matrix2d action_transform = Eigen::Matrix2d::Identity();
  double action_gain = 1.0;
  Box2 goal_box;
  Box2 object_box;
  Vec2 agent_start = Vec2::Zero();
  int max_episode_length = 100;
  RewardMode reward_mode = RewardMode::Sparse;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

struct StepResult {
  EnvState next_state;
  double reward = 0.0;
  bool terminal = false;
  bool success = false;
  bool obstacle_hit = false;
};

ScenarioSpec source_scenario(Family family);
/// The eight transfer targets plus "push_source" and "carry_source".
ScenarioSpec scenario_by_name(const std::string& name);
const std::vector<std::string>& canonical_scenarios();

bool in_workspace(const Vec2& p);

EnvState reset(const ScenarioSpec& spec, std::uint64_t seed);
/// Resets to a caller-chosen initial state; throws ConfigError if it leaves the workspace.
EnvState reset_to(const ScenarioSpec& spec, const EnvState& initial);
StepResult step(const ScenarioSpec& spec, const EnvState& state, const Action& action);
double dense_reward(const ScenarioSpec& spec, const EnvState& state);

}  // namespace demoxfer
