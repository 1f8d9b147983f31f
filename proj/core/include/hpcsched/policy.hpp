#pragma once

#include "hpcsched/types.hpp"

namespace hpcsched {

/// Per-slot objective value of each of the five decisions. The policy picks
/// the feasible minimizer. no_transmit is zero by definition.
struct DecisionValues {
    double free_full = 0.0;
    double free_reduced = 0.0;
    double purchase_full = 0.0;
    double purchase_reduced = 0.0;
    double no_transmit = 0.0;
};

double value_of(const DecisionValues& g, Decision d) noexcept;

/// With w = backlog + delay_queue * (delay_increment + 1) + quality_queue:
///   free_full        = -w
///   free_reduced     = quality_increment * quality_queue - w
///   purchase_full    = cost_weight * full_price - w
///   purchase_reduced = cost_weight * reduced_price + quality_increment * quality_queue - w
/// free_full is never positive, and purchase_reduced exceeds free_reduced by
/// exactly cost_weight * reduced_price.
DecisionValues compute_decision_values(const QueueState& state, const SlotInput& input,
                                       const Params& p) noexcept;

/// One-slot decision of the online policy. Requires validate(p) to be clean.
///
/// Empty backlog always yields no_transmit. Full free spectrum is always used
/// for a full-size unit. Otherwise the feasible candidates are compared by
/// their DecisionValues entry and ties go to the earlier candidate:
/// free before purchased, full before reduced, any transmission before
/// no_transmit.
Decision decide(const QueueState& state, const SlotInput& input, const Params& p) noexcept;

/// Independent oracle for decide: enumerates every decision feasible under
/// the slot's spectrum availability (transmissions additionally need
/// backlog > 0), evaluates each via compute_decision_values and returns the
/// minimizer under the same tie order as decide. Intentionally free of the
/// branch shortcuts decide takes.
Decision decide_bruteforce(const QueueState& state, const SlotInput& input,
                           const Params& p) noexcept;

}  // namespace hpcsched
