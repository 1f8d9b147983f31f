#include "hpcsched/policy.hpp"

namespace hpcsched {

double value_of(const DecisionValues& g, Decision d) noexcept {
    switch (d) {
        case Decision::free_full: return g.free_full;
        case Decision::free_reduced: return g.free_reduced;
        case Decision::purchase_full: return g.purchase_full;
        case Decision::purchase_reduced: return g.purchase_reduced;
        case Decision::no_transmit: return g.no_transmit;
    }
    return 0.0;
}

DecisionValues compute_decision_values(const QueueState& state, const SlotInput& input,
                                       const Params& p) noexcept {
    const double w = static_cast<double>(state.backlog) +
                     state.delay_queue * (p.delay_increment + 1.0) + state.quality_queue;
    DecisionValues g;
    g.free_full = -w;
    g.free_reduced = p.quality_increment * state.quality_queue - w;
    g.purchase_full = p.cost_weight * input.full_price - w;
    g.purchase_reduced =
        p.cost_weight * input.reduced_price + p.quality_increment * state.quality_queue - w;
    g.no_transmit = 0.0;
    return g;
}

namespace {

// First strict minimum wins; candidate order encodes the tie-breaking rule.
template <std::size_t N>
Decision argmin(const DecisionValues& g, const std::array<Decision, N>& candidates) noexcept {
    Decision best = candidates[0];
    double best_value = value_of(g, candidates[0]);
    for (std::size_t i = 1; i < N; ++i) {
        const double v = value_of(g, candidates[i]);
        if (v < best_value) {
            best = candidates[i];
            best_value = v;
        }
    }
    return best;
}

}  // namespace

Decision decide(const QueueState& state, const SlotInput& input, const Params& p) noexcept {
    if (state.backlog <= 0) return Decision::no_transmit;
    if (input.availability == 2) return Decision::free_full;
    const DecisionValues g = compute_decision_values(state, input, p);
    if (input.availability == 1) {
        constexpr std::array<Decision, 3> candidates{
            Decision::free_reduced, Decision::purchase_full, Decision::no_transmit};
        return argmin(g, candidates);
    }
    constexpr std::array<Decision, 3> candidates{
        Decision::purchase_full, Decision::purchase_reduced, Decision::no_transmit};
    return argmin(g, candidates);
}

Decision decide_bruteforce(const QueueState& state, const SlotInput& input,
                           const Params& p) noexcept {
    const DecisionValues g = compute_decision_values(state, input, p);
    std::array<Decision, 5> feasible{};
    std::size_t n = 0;
    if (state.backlog > 0) {
        if (input.availability == 2) feasible[n++] = Decision::free_full;
        if (input.availability >= 1) feasible[n++] = Decision::free_reduced;
        feasible[n++] = Decision::purchase_full;
        feasible[n++] = Decision::purchase_reduced;
    }
    feasible[n++] = Decision::no_transmit;

    Decision best = feasible[0];
    double best_value = value_of(g, feasible[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const double v = value_of(g, feasible[i]);
        if (v < best_value) {
            best = feasible[i];
            best_value = v;
        }
    }
    return best;
}

}  // namespace hpcsched
