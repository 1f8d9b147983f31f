#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hpcsched/types.hpp"

namespace hpcsched {

/// Full-future-knowledge benchmark: transmit exactly `units_required` data
/// units over the trace, at most `reduced_budget` of them reduced-size, at
/// minimum total leasing cost.
struct OfflineProblem {
    std::span<const SlotInput> trace;
    std::int64_t units_required = 0;  // total departures demanded
    std::int64_t reduced_budget = 0;  // reduced-size departures allowed
};

struct OfflineSolution {
    bool feasible = false;
    std::string message;              // diagnostic when infeasible
    double min_cost = 0.0;
    std::vector<Decision> schedule;   // one decision per slot; empty unless requested
};

/// Dynamic program over (slot, units transmitted, reduced units used).
/// Feasibility rules per slot: availability 1 admits a free reduced-size
/// unit, availability 2 admits a free unit of either size, purchases are
/// always possible; at most one departure per slot, and departures never
/// outrun cumulative arrivals. Cost-equal ties prefer free over purchased,
/// full over reduced, and transmitting now over deferring.
///
/// Schedule recovery stores one choice byte per DP state; pass
/// want_schedule = false to solve in O(units * budget) memory when only the
/// cost matters.
OfflineSolution solve_offline(const OfflineProblem& problem, bool want_schedule = true);

struct ScheduleAudit {
    bool ok = false;
    std::string violation;  // first violated constraint, with slot
    double cost = 0.0;
};

/// Independently re-checks a schedule against every problem constraint and
/// recomputes its cost.
ScheduleAudit verify_schedule(const OfflineProblem& problem, std::span<const Decision> schedule);

}  // namespace hpcsched
