#pragma once

// Shared test utilities: input generators, a rank-correlation helper, and an
// exhaustive offline enumerator kept independent of the library's solver.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hpcsched/offline.hpp"
#include "hpcsched/rng.hpp"
#include "hpcsched/types.hpp"

namespace testutil {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}

    double uniform() { return rng_.uniform(); }
    double range(double lo, double hi) { return lo + uniform() * (hi - lo); }
    std::int64_t index(std::int64_t n) { return static_cast<std::int64_t>(uniform() * n); }
    bool chance(double p) { return uniform() < p; }

  private:
    hpcsched::Xoshiro256PlusPlus rng_;
};

inline hpcsched::Params random_params(Rng& rng) {
    hpcsched::Params p;
    p.cost_weight = std::pow(10.0, rng.range(-2.0, 2.0));
    p.quality_increment = rng.range(0.25, 2.5);
    p.delay_increment = rng.range(0.25, 2.5);
    p.reduced_fraction = rng.range(0.05, 0.95);
    p.max_full_price = rng.range(0.5, 10.0);
    return p;
}

inline hpcsched::QueueState random_state(Rng& rng) {
    hpcsched::QueueState s;
    s.backlog = rng.index(20);
    s.quality_queue = rng.uniform() * 10.0;
    s.delay_queue = rng.uniform() * 10.0;
    return s;
}

inline hpcsched::SlotInput random_slot(Rng& rng, const hpcsched::Params& p) {
    hpcsched::SlotInput s;
    s.slot = rng.index(1000);
    s.availability = static_cast<int>(rng.index(3));
    s.full_price = rng.uniform() * p.max_full_price;
    s.reduced_price = p.reduced_fraction * s.full_price;
    s.arrival = rng.chance(0.5) ? 1 : 0;
    return s;
}

/// Spearman rank correlation with average ranks on ties.
inline double rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> order(v.size());
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> rank(v.size());
        std::size_t i = 0;
        while (i < order.size()) {
            std::size_t j = i;
            while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
            const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
            for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
            i = j + 1;
        }
        return rank;
    };
    const std::vector<double> rx = ranks(xs), ry = ranks(ys);
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t k = 0; k < rx.size(); ++k) {
        num += (rx[k] - mx) * (ry[k] - my);
        dx += (rx[k] - mx) * (rx[k] - mx);
        dy += (ry[k] - my) * (ry[k] - my);
    }
    const double den = std::sqrt(dx * dy);
    return den > 0.0 ? num / den : 0.0;
}

/// Exhaustive minimum over every feasible decision sequence. Only usable for
/// tiny traces; deliberately shares no code with solve_offline.
inline std::optional<double> brute_force_offline(const hpcsched::OfflineProblem& problem) {
    using hpcsched::Decision;
    const std::int64_t slots = static_cast<std::int64_t>(problem.trace.size());
    std::optional<double> best;

    auto recurse = [&](auto&& self, std::int64_t t, std::int64_t served, std::int64_t reduced,
                       std::int64_t arrived, double cost) -> void {
        if (best && cost >= *best) return;
        if (served + (slots - t) < problem.units_required) return;
        if (t == slots) {
            if (served == problem.units_required) best = cost;
            return;
        }
        const hpcsched::SlotInput& input = problem.trace[static_cast<std::size_t>(t)];
        const std::int64_t now_arrived = arrived + input.arrival;
        for (Decision d : {Decision::free_full, Decision::free_reduced, Decision::purchase_full,
                           Decision::purchase_reduced, Decision::no_transmit}) {
            if (d == Decision::free_full && input.availability != 2) continue;
            if (d == Decision::free_reduced && input.availability < 1) continue;
            std::int64_t next_served = served, next_reduced = reduced;
            double next_cost = cost;
            if (hpcsched::departure(d)) {
                next_served = served + 1;
                if (next_served > problem.units_required || next_served > now_arrived) continue;
                next_reduced = reduced + (hpcsched::sends_reduced(d) ? 1 : 0);
                if (next_reduced > problem.reduced_budget) continue;
                if (d == Decision::purchase_full) next_cost += input.full_price;
                if (d == Decision::purchase_reduced) next_cost += input.reduced_price;
            }
            self(self, t + 1, next_served, next_reduced, now_arrived, next_cost);
        }
    };
    recurse(recurse, 0, 0, 0, 0, 0.0);
    return best;
}

/// Random short trace for the DP-vs-exhaustive comparisons.
inline std::vector<hpcsched::SlotInput> random_tiny_trace(Rng& rng, std::int64_t slots,
                                                          double alpha) {
    std::vector<hpcsched::SlotInput> trace;
    for (std::int64_t t = 0; t < slots; ++t) {
        hpcsched::SlotInput s;
        s.slot = t;
        s.availability = static_cast<int>(rng.index(3));
        s.full_price = rng.range(0.5, 5.0);
        s.reduced_price = alpha * s.full_price;
        s.arrival = rng.chance(0.7) ? 1 : 0;
        trace.push_back(s);
    }
    return trace;
}

/// Most units any feasible schedule can move through the given trace.
inline std::int64_t max_feasible_departures(const std::vector<hpcsched::SlotInput>& trace) {
    std::int64_t backlog = 0, served = 0;
    for (const hpcsched::SlotInput& s : trace) {
        backlog += s.arrival;
        if (backlog > 0) {
            --backlog;
            ++served;
        }
    }
    return served;
}

}  // namespace testutil
