#pragma once

#include <algorithm>
#include <cstdint>

#include "hpcsched/types.hpp"

namespace hpcsched {

/// Backlog after serving with `d` and then adding the next slot's arrival:
/// max(backlog - departure, 0) + next_arrival.
inline std::int64_t update_backlog(std::int64_t backlog, Decision d, int next_arrival) noexcept {
    return std::max<std::int64_t>(backlog - departure(d), 0) + next_arrival;
}

/// Quality queue update: charged quality_increment per reduced-size
/// transmission, drained by every departure, floored at zero.
inline double update_quality_queue(double quality_queue, Decision d,
                                   double quality_increment) noexcept {
    const double inc = sends_reduced(d) ? quality_increment : 0.0;
    return std::max(quality_queue - departure(d) + inc, 0.0);
}

/// Delay queue update: charged delay_increment on idle slots, drained by every
/// departure, floored at zero. The charge applies only while there is backlog
/// to serve, unless empty_queue_delay_increment asks for the unconditional
/// variant.
inline double update_delay_queue(double delay_queue, Decision d, double delay_increment,
                                 std::int64_t current_backlog,
                                 bool empty_queue_delay_increment) noexcept {
    const bool idle = d == Decision::no_transmit;
    const bool charged = idle && (current_backlog > 0 || empty_queue_delay_increment);
    const double inc = charged ? delay_increment : 0.0;
    return std::max(delay_queue - departure(d) + inc, 0.0);
}

}  // namespace hpcsched
