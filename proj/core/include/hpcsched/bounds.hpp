#pragma once

#include <cstdint>

#include "hpcsched/types.hpp"

namespace hpcsched {

/// Closed-form worst-case guarantees of the online policy. All queue bounds
/// are strict (<); d_max and s_max are attained-or-below (<=).
struct BoundSet {
    double q_max = 0.0;        // backlog stays strictly below this
    double z_max = 0.0;        // delay queue stays strictly below this
    double y_max = 0.0;        // quality queue stays strictly below this
    std::int64_t d_max = 0;    // slots any unit can spend in the queue
    std::int64_t s_max = 0;    // reduced-size transmissions per d_max-slot window
    double cf_max = 0.0;       // maximum full-size price the bounds assume
    double cr_max = 0.0;       // maximum reduced-size price
};

/// Requires validate(p) to be clean.
///   q_max = cost_weight * cf_max + 2
///   z_max = cost_weight * cf_max / (1 + delay_increment) + delay_increment
///   y_max = cost_weight * cf_max + quality_increment
///   d_max = ceil(cost_weight * cf_max + 1)
///   s_max = ceil(min((y_max + d_max) / quality_increment, d_max))
BoundSet compute_bounds(const Params& p);

/// Cap on reduced-size transmissions over a whole run of `slots` slots:
/// min(ceil(slots * s_max / d_max), slots).
std::int64_t total_quality_bound(const BoundSet& b, std::int64_t slots);

/// Quadratic congestion measure (backlog^2 + quality^2 + delay^2) / 2.
double lyapunov(const QueueState& state) noexcept;

/// Constant absorbing the quadratic terms of the one-slot congestion change:
/// 2.5 + (delay_increment + 1)^2 / 2 + max((quality_increment - 1)^2, 1) / 2.
double drift_constant(const Params& p);

/// Sample-path upper bound on lyapunov(next) - lyapunov(state) for one slot,
/// where `applied_arrival` is the arrival actually added in the backlog
/// update. Holds deterministically for every reachable transition.
double drift_upper_bound(const QueueState& state, Decision d, int applied_arrival,
                         const Params& p);

}  // namespace hpcsched
