#include "coplan/world.hpp"

#include <cmath>
#include <stdexcept>

namespace coplan {

double wrap_angle(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a < 0.0) {
        a += 2.0 * M_PI;
    }
    return a - M_PI;
}

OrientedRect OrientedRect::of(const VehicleState& v) {
    return {v.x, v.y, 0.5 * v.length, 0.5 * v.width, std::cos(v.heading), std::sin(v.heading)};
}

OrientedRect OrientedRect::of(const Obstacle& o) {
    return {o.x, o.y, 0.5 * o.length, 0.5 * o.width, std::cos(o.heading), std::sin(o.heading)};
}

namespace {

// Projection radius of a rectangle onto a unit axis.
double projection_radius(const OrientedRect& r, double ux, double uy) {
    const double along = r.half_length * std::abs(ux * r.cos_h + uy * r.sin_h);
    const double across = r.half_width * std::abs(-ux * r.sin_h + uy * r.cos_h);
    return along + across;
}

}  // namespace

bool rects_intersect(const OrientedRect& a, const OrientedRect& b) {
    const double dx = b.cx - a.cx;
    const double dy = b.cy - a.cy;
    const double axes[4][2] = {
        {a.cos_h, a.sin_h},
        {-a.sin_h, a.cos_h},
        {b.cos_h, b.sin_h},
        {-b.sin_h, b.cos_h},
    };
    for (const auto& axis : axes) {
        const double dist = std::abs(dx * axis[0] + dy * axis[1]);
        const double reach = projection_radius(a, axis[0], axis[1]) +
                             projection_radius(b, axis[0], axis[1]);
        if (dist > reach) {
            return false;  // strict gap on this axis; touching still intersects
        }
    }
    return true;
}

bool collision_check(const WorldState& state) {
    const int n = static_cast<int>(state.vehicles.size());
    std::vector<OrientedRect> rects;
    rects.reserve(state.vehicles.size());
    for (const auto& v : state.vehicles) {
        rects.push_back(OrientedRect::of(v));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rects_intersect(rects[i], rects[j])) {
                return true;
            }
        }
        for (const auto& o : state.obstacles) {
            if (rects_intersect(rects[i], OrientedRect::of(o))) {
                return true;
            }
        }
    }
    return false;
}

bool validity_check(const WorldState& state, const Scenario& scenario,
                    const WorldLimits& limits) {
    for (const auto& v : state.vehicles) {
        if (v.y < 0.0 || v.y > scenario.road_width()) {
            return false;
        }
        if (v.x < 0.0 || v.x > scenario.road_length) {
            return false;
        }
        if (v.vx < 0.0 || v.vx > limits.v_max) {
            return false;
        }
    }
    return true;
}

namespace {

WorldStatus classify(const WorldState& state, const Scenario& scenario,
                     const WorldLimits& limits) {
    // Collision takes precedence over invalid so that the status flag always
    // mirrors collision_check.
    if (collision_check(state)) {
        return WorldStatus::collision;
    }
    if (!validity_check(state, scenario, limits)) {
        return WorldStatus::invalid;
    }
    return WorldStatus::ok;
}

}  // namespace

WorldState World::make_initial_state() const {
    WorldState s;
    s.vehicles.reserve(scenario_.agents.size());
    for (const auto& a : scenario_.agents) {
        s.vehicles.push_back(a.initial);
    }
    s.obstacles = scenario_.obstacles;
    s.time_index = 0;
    s.status = classify(s, scenario_, limits_);
    return s;
}

WorldState World::step(const WorldState& state, const JointAction& action, double dt) const {
    if (state.status != WorldStatus::ok) {
        throw std::logic_error("World::step: cannot step a non-ok state");
    }
    if (dt <= 0.0) {
        throw std::invalid_argument("World::step: dt must be positive");
    }
    if (action.size() != state.vehicles.size()) {
        throw std::invalid_argument("World::step: joint action size mismatch");
    }

    WorldState next = state;
    for (std::size_t i = 0; i < next.vehicles.size(); ++i) {
        VehicleState& v = next.vehicles[i];
        const AgentAction& a = action[i];
        v.x += v.vx * dt + 0.5 * a.ax * dt * dt;
        v.y += v.vy * dt + 0.5 * a.ay * dt * dt;
        v.vx += a.ax * dt;
        v.vy += a.ay * dt;
        // atan2 is undefined at the origin; a stopped vehicle keeps its heading.
        if (v.vx != 0.0 || v.vy != 0.0) {
            v.heading = wrap_angle(std::atan2(v.vy, v.vx));
        }
    }
    next.time_index = state.time_index + 1;
    next.status = classify(next, scenario_, limits_);
    return next;
}

double World::reward(const WorldState& prev, const AgentAction& action,
                     const WorldState& next, int agent) const {
    (void)prev;  // the transition terms only need the action and successor
    const VehicleState& v = next.vehicles.at(agent);
    const AgentSpec& spec = scenario_.agents.at(agent);

    double r = 0.0;
    if (next.status == WorldStatus::collision) {
        r += weights_.collision;
    }
    if (next.status == WorldStatus::invalid) {
        r += weights_.invalid;
    }
    r += weights_.velocity * std::abs(v.vx - spec.desired_velocity);
    r += weights_.lane * std::abs(v.y - scenario_.lane_center(spec.desired_lane));
    r += weights_.effort * (action.ax * action.ax + action.ay * action.ay);
    return r;
}

}  // namespace coplan
