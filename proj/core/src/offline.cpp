#include "hpcsched/offline.hpp"

#include <algorithm>
#include <limits>

namespace hpcsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Candidate transmissions in tie order: free before purchased, full before
// reduced. no_transmit is handled separately and loses every tie.
struct Move {
    Decision decision;
    double cost;
    int reduced;
};

int feasible_moves(const SlotInput& s, Move out[4]) {
    int n = 0;
    if (s.availability == 2) out[n++] = {Decision::free_full, 0.0, 0};
    if (s.availability >= 1) out[n++] = {Decision::free_reduced, 0.0, 1};
    out[n++] = {Decision::purchase_full, s.full_price, 0};
    out[n++] = {Decision::purchase_reduced, s.reduced_price, 1};
    return n;
}

}  // namespace

OfflineSolution solve_offline(const OfflineProblem& problem, bool want_schedule) {
    OfflineSolution solution;
    const std::int64_t slots = static_cast<std::int64_t>(problem.trace.size());
    const std::int64_t units = problem.units_required;
    const std::int64_t budget = problem.reduced_budget;

    if (units < 1) {
        solution.message = "units_required must be positive";
        return solution;
    }
    if (units > slots) {
        solution.message = "units_required " + std::to_string(units) + " exceeds " +
                           std::to_string(slots) + " slots";
        return solution;
    }
    if (budget < 0 || budget > units) {
        solution.message = "reduced_budget must lie in [0, units_required]";
        return solution;
    }

    // arrivals_before[t] = arrivals in slots [0, t)
    std::vector<std::int64_t> arrivals_before(static_cast<std::size_t>(slots) + 1, 0);
    for (std::int64_t t = 0; t < slots; ++t)
        arrivals_before[t + 1] = arrivals_before[t] + problem.trace[static_cast<std::size_t>(t)].arrival;
    if (units > arrivals_before[slots]) {
        solution.message = "units_required " + std::to_string(units) + " exceeds the " +
                           std::to_string(arrivals_before[slots]) + " arrivals in the trace";
        return solution;
    }

    // Backward DP, value[k * stride + s] = least cost of slots t..end given k
    // units already served and s reduced-size units already used.
    const std::int64_t stride = budget + 1;
    const std::size_t cells = static_cast<std::size_t>((units + 1) * stride);
    std::vector<double> after(cells, kInf);
    std::vector<double> current(cells, kInf);
    std::fill_n(after.begin() + static_cast<std::size_t>(units * stride),
                static_cast<std::size_t>(stride), 0.0);

    std::vector<std::vector<std::uint8_t>> choices;
    if (want_schedule) choices.resize(static_cast<std::size_t>(slots));

    for (std::int64_t t = slots - 1; t >= 0; --t) {
        const SlotInput& input = problem.trace[static_cast<std::size_t>(t)];
        Move moves[4];
        const int n_moves = feasible_moves(input, moves);

        // Only k with enough slots left and no departure ahead of its arrival
        // can still finish.
        const std::int64_t k_lo = std::max<std::int64_t>(0, units - (slots - t));
        const std::int64_t k_hi = std::min({units, t, arrivals_before[t]});

        std::vector<std::uint8_t>* choice_row = nullptr;
        if (want_schedule) {
            choices[static_cast<std::size_t>(t)].assign(cells,
                                                        static_cast<std::uint8_t>(Decision::no_transmit));
            choice_row = &choices[static_cast<std::size_t>(t)];
        }

        if (k_lo > 0)
            std::fill_n(current.begin() + static_cast<std::size_t>((k_lo - 1) * stride),
                        static_cast<std::size_t>(stride), kInf);

        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
            const bool can_transmit = k < units && arrivals_before[t + 1] >= k + 1;
            const std::int64_t s_hi = std::min(k, budget);
            double* cur = current.data() + k * stride;
            const double* keep = after.data() + k * stride;
            const double* served = after.data() + (k + 1) * stride;  // valid iff can_transmit
            for (std::int64_t s = 0; s <= s_hi; ++s) {
                double best = keep[s];
                Decision best_decision = Decision::no_transmit;
                if (can_transmit) {
                    for (int i = 0; i < n_moves; ++i) {
                        const Move& mv = moves[i];
                        if (s + mv.reduced > budget) continue;
                        const double v = mv.cost + served[s + mv.reduced];
                        if (v < best) {
                            best = v;
                            best_decision = mv.decision;
                        }
                    }
                }
                cur[s] = best;
                if (choice_row)
                    (*choice_row)[static_cast<std::size_t>(k * stride + s)] =
                        static_cast<std::uint8_t>(best_decision);
            }
        }
        std::swap(after, current);
    }

    const double cost = after[0];
    if (cost == kInf) {
        solution.message = "units_required " + std::to_string(units) +
                           " is unreachable under FIFO causality";
        return solution;
    }
    solution.feasible = true;
    solution.min_cost = cost;

    if (want_schedule) {
        solution.schedule.reserve(static_cast<std::size_t>(slots));
        std::int64_t k = 0, s = 0;
        for (std::int64_t t = 0; t < slots; ++t) {
            const Decision d = static_cast<Decision>(
                choices[static_cast<std::size_t>(t)][static_cast<std::size_t>(k * stride + s)]);
            solution.schedule.push_back(d);
            if (departure(d)) {
                ++k;
                s += sends_reduced(d) ? 1 : 0;
            }
        }
    }
    return solution;
}

ScheduleAudit verify_schedule(const OfflineProblem& problem, std::span<const Decision> schedule) {
    ScheduleAudit audit;
    if (schedule.size() != problem.trace.size()) {
        audit.violation = "schedule has " + std::to_string(schedule.size()) + " entries for " +
                          std::to_string(problem.trace.size()) + " slots";
        return audit;
    }
    std::int64_t served = 0, reduced = 0, arrived = 0;
    double cost = 0.0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const SlotInput& input = problem.trace[i];
        const Decision d = schedule[i];
        arrived += input.arrival;
        if (d == Decision::free_full && input.availability != 2) {
            audit.violation = "slot " + std::to_string(input.slot) +
                              ": free full-size transmission without full free spectrum";
            return audit;
        }
        if (d == Decision::free_reduced && input.availability < 1) {
            audit.violation = "slot " + std::to_string(input.slot) +
                              ": free reduced-size transmission without free spectrum";
            return audit;
        }
        if (departure(d)) {
            ++served;
            if (served > arrived) {
                audit.violation = "slot " + std::to_string(input.slot) +
                                  ": departure before the matching arrival";
                return audit;
            }
            reduced += sends_reduced(d) ? 1 : 0;
            if (reduced > problem.reduced_budget) {
                audit.violation = "slot " + std::to_string(input.slot) +
                                  ": reduced-size budget exceeded";
                return audit;
            }
        }
        if (d == Decision::purchase_full) cost += input.full_price;
        if (d == Decision::purchase_reduced) cost += input.reduced_price;
    }
    if (served != problem.units_required) {
        audit.violation = "schedule serves " + std::to_string(served) + " units, required " +
                          std::to_string(problem.units_required);
        return audit;
    }
    audit.ok = true;
    audit.cost = cost;
    return audit;
}

}  // namespace hpcsched
