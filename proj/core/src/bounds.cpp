#include "hpcsched/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace hpcsched {

BoundSet compute_bounds(const Params& p) {
    BoundSet b;
    const double vc = p.cost_weight * p.max_full_price;
    b.q_max = vc + 2.0;
    b.z_max = vc / (1.0 + p.delay_increment) + p.delay_increment;
    b.y_max = vc + p.quality_increment;
    b.d_max = static_cast<std::int64_t>(std::ceil(vc + 1.0));
    b.s_max = static_cast<std::int64_t>(std::ceil(
        std::min((b.y_max + static_cast<double>(b.d_max)) / p.quality_increment,
                 static_cast<double>(b.d_max))));
    b.cf_max = p.max_full_price;
    b.cr_max = p.reduced_fraction * p.max_full_price;
    return b;
}

std::int64_t total_quality_bound(const BoundSet& b, std::int64_t slots) {
    // ceil(slots * s_max / d_max) in integer arithmetic; the product can
    // exceed 64 bits for extreme cost weights.
    const __int128 scaled = static_cast<__int128>(slots) * b.s_max + (b.d_max - 1);
    const __int128 ceiling = scaled / b.d_max;
    const std::int64_t capped =
        ceiling > slots ? slots : static_cast<std::int64_t>(ceiling);
    return capped;
}

double lyapunov(const QueueState& state) noexcept {
    const double q = static_cast<double>(state.backlog);
    return 0.5 * (q * q + state.quality_queue * state.quality_queue +
                  state.delay_queue * state.delay_queue);
}

double drift_constant(const Params& p) {
    const double ed1 = p.delay_increment + 1.0;
    const double eq1 = p.quality_increment - 1.0;
    return 2.5 + 0.5 * ed1 * ed1 + 0.5 * std::max(eq1 * eq1, 1.0);
}

double drift_upper_bound(const QueueState& state, Decision d, int applied_arrival,
                         const Params& p) {
    const double r = departure(d);
    const double reduced = sends_reduced(d) ? 1.0 : 0.0;
    const double full = sends_full(d) ? 1.0 : 0.0;
    return drift_constant(p) +
           static_cast<double>(state.backlog) * (applied_arrival - r) +
           state.delay_queue * (p.delay_increment - (p.delay_increment + 1.0) * r) +
           state.quality_queue * ((p.quality_increment - 1.0) * reduced - full);
}

}  // namespace hpcsched
