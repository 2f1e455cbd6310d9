#pragma once

#include <string>
#include <vector>

#include "coplan/errors.hpp"

namespace coplan {

struct VehicleState {
    double x{0.0};        // longitudinal position (m)
    double y{0.0};        // lateral position (m)
    double vx{0.0};       // longitudinal velocity (m/s)
    double vy{0.0};       // lateral velocity (m/s)
    double heading{0.0};  // yaw (rad), in [-pi, pi)
    double length{4.5};   // body length (m), > 0
    double width{1.8};    // body width (m), > 0
};

struct Obstacle {
    double x{0.0};
    double y{0.0};
    double length{1.0};
    double width{1.0};
    double heading{0.0};
};

struct AgentSpec {
    VehicleState initial;
    double desired_velocity{0.0};
    int desired_lane{0};
};

struct Scenario {
    std::string id;
    int lane_count{1};
    double lane_width{3.5};
    double road_length{0.0};
    std::vector<AgentSpec> agents;
    std::vector<Obstacle> obstacles;
    int episode_horizon{0};  // planning steps per episode
    double dt{0.5};          // simulation step (s)

    double road_width() const { return lane_count * lane_width; }
    double lane_center(int lane) const { return (lane + 0.5) * lane_width; }
    int num_agents() const { return static_cast<int>(agents.size()); }
};

enum class WorldStatus { ok, collision, invalid };

// Joint deterministic state of all vehicles and obstacles at one time step.
// Obstacles are carried along because determinized worlds may perceive them
// at sampled (not true) poses.
struct WorldState {
    std::vector<VehicleState> vehicles;
    std::vector<Obstacle> obstacles;
    int time_index{0};
    WorldStatus status{WorldStatus::ok};
};

struct AgentAction {
    double ax{0.0};  // longitudinal acceleration (m/s^2)
    double ay{0.0};  // lateral acceleration (m/s^2)
};

inline bool operator==(const AgentAction& a, const AgentAction& b) {
    return a.ax == b.ax && a.ay == b.ay;
}

// One action per agent, indexed by agent id.
using JointAction = std::vector<AgentAction>;

// Signed reward coefficients. Penalty weights are negative so each term below
// contributes <= 0; collision dominates the rest over the episode horizon.
struct RewardWeights {
    double collision{-100.0};
    double invalid{-50.0};
    double velocity{-1.0};  // per m/s of |vx - desired|
    double lane{-0.5};      // per m of |y - desired lane center|
    double effort{-0.1};    // per (m/s^2)^2 of action magnitude
};

struct WorldLimits {
    double v_max{20.0};
    double ax_max{3.0};
    double ay_max{2.0};
};

struct OrientedRect {
    double cx{0.0}, cy{0.0};
    double half_length{0.5}, half_width{0.5};
    double cos_h{1.0}, sin_h{0.0};

    static OrientedRect of(const VehicleState& v);
    static OrientedRect of(const Obstacle& o);
};

// Separating-axis test for two oriented rectangles. Touching counts as
// intersecting.
bool rects_intersect(const OrientedRect& a, const OrientedRect& b);

// Wrap an angle into [-pi, pi).
double wrap_angle(double a);

// True iff any vehicle-vehicle or vehicle-obstacle rectangle pair overlaps.
bool collision_check(const WorldState& state);

// True iff every vehicle center is inside the road (laterally and
// longitudinally) and vx stays within [0, v_max].
bool validity_check(const WorldState& state, const Scenario& scenario,
                    const WorldLimits& limits);

// Simulation context: scenario geometry plus physical limits and reward
// weights. Pure value type; everything below is const and side-effect free.
class World {
public:
    World(Scenario scenario, WorldLimits limits, RewardWeights weights)
        : scenario_(std::move(scenario)), limits_(limits), weights_(weights) {}

    const Scenario& scenario() const { return scenario_; }
    const WorldLimits& limits() const { return limits_; }
    const RewardWeights& weights() const { return weights_; }

    WorldState make_initial_state() const;

    // Constant-acceleration point-mass update per agent, then status
    // recomputation. Rejects non-ok input states and non-positive dt.
    WorldState step(const WorldState& state, const JointAction& action, double dt) const;

    // Agent-specific reward of the (state, action, next_state) transition.
    double reward(const WorldState& prev, const AgentAction& action,
                  const WorldState& next, int agent) const;

    bool is_terminal(const WorldState& state) const {
        return state.status != WorldStatus::ok ||
               state.time_index >= scenario_.episode_horizon;
    }

private:
    Scenario scenario_;
    WorldLimits limits_;
    RewardWeights weights_;
};

}  // namespace coplan
