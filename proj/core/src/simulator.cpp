#include "hpcsched/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hpcsched/bounds.hpp"
#include "hpcsched/policy.hpp"
#include "hpcsched/queues.hpp"

namespace hpcsched {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::pair<RunRecord, SummaryMetrics> run(std::span<const SlotInput> trace, const Params& p) {
    if (auto errors = validate(p); !errors.empty())
        throw std::invalid_argument("invalid params: " + errors.front());
    for (const SlotInput& s : trace) {
        if (auto err = check_slot_input(s, p.reduced_fraction))
            throw std::invalid_argument("slot " + std::to_string(s.slot) + ": " + *err);
        if (s.full_price > p.max_full_price)
            throw std::invalid_argument("slot " + std::to_string(s.slot) +
                                        ": full_price exceeds max_full_price");
    }

    RunRecord record;
    SummaryMetrics m;
    m.slots = static_cast<std::int64_t>(trace.size());
    record.slots.reserve(trace.size());

    QueueState state;
    std::deque<std::int64_t> fifo;  // arrival slots of queued units

    for (std::size_t i = 0; i < trace.size(); ++i) {
        const SlotInput& input = trace[i];
        const Decision d = decide(state, input, p);
        const double cost = d == Decision::purchase_full      ? input.full_price
                            : d == Decision::purchase_reduced ? input.reduced_price
                                                              : 0.0;
        m.total_cost += cost;

        const int next_arrival = i + 1 < trace.size() ? trace[i + 1].arrival : 0;
        record.slots.push_back({input.slot, input.availability, input.full_price, state.backlog,
                                state.quality_queue, state.delay_queue, d, cost, next_arrival});

        if (departure(d)) {
            ++m.transmitted_count;
            const std::int64_t arrived = fifo.front();
            fifo.pop_front();
            const bool reduced = sends_reduced(d);
            m.reduced_count += reduced ? 1 : 0;
            record.units.push_back({arrived, input.slot, reduced});
            m.max_unit_delay = std::max(m.max_unit_delay, input.slot - arrived);
        }

        const std::int64_t backlog_at_decision = state.backlog;
        state.backlog = update_backlog(state.backlog, d, next_arrival);
        state.quality_queue = update_quality_queue(state.quality_queue, d, p.quality_increment);
        state.delay_queue = update_delay_queue(state.delay_queue, d, p.delay_increment,
                                               backlog_at_decision, p.empty_queue_delay_increment);
        if (next_arrival) {
            ++m.total_arrivals;
            fifo.push_back(input.slot + 1);
        }

        m.max_backlog = std::max(m.max_backlog, state.backlog);
        m.max_quality_queue = std::max(m.max_quality_queue, state.quality_queue);
        m.max_delay_queue = std::max(m.max_delay_queue, state.delay_queue);
    }

    record.final_state = state;
    m.final_backlog = state.backlog;
    return {std::move(record), m};
}

std::vector<std::string> audit_run(const RunRecord& record, const SummaryMetrics& summary,
                                   const Params& p) {
    std::vector<std::string> issues;
    const BoundSet b = compute_bounds(p);
    const std::int64_t n = static_cast<std::int64_t>(record.slots.size());

    auto check_state = [&](std::int64_t slot, std::int64_t q, double y, double z) {
        if (!(q < b.q_max))
            issues.push_back("slot " + std::to_string(slot) + ": backlog " + std::to_string(q) +
                             " not below q_max " + format_double(b.q_max));
        if (!(y < b.y_max))
            issues.push_back("slot " + std::to_string(slot) + ": quality queue " +
                             format_double(y) + " not below y_max " + format_double(b.y_max));
        if (!(z < b.z_max))
            issues.push_back("slot " + std::to_string(slot) + ": delay queue " + format_double(z) +
                             " not below z_max " + format_double(b.z_max));
    };
    for (const SlotRecord& r : record.slots)
        check_state(r.slot, r.backlog, r.quality_queue, r.delay_queue);
    check_state(n, record.final_state.backlog, record.final_state.quality_queue,
                record.final_state.delay_queue);

    for (const UnitRecord& u : record.units) {
        if (u.departure_slot - u.arrival_slot > b.d_max)
            issues.push_back("unit arriving at " + std::to_string(u.arrival_slot) + " departed at " +
                             std::to_string(u.departure_slot) + ", delay exceeds d_max " +
                             std::to_string(b.d_max));
    }

    // Reduced transmissions per window of d_max slots, via prefix sums.
    std::vector<std::int64_t> reduced_prefix(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i)
        reduced_prefix[i + 1] =
            reduced_prefix[i] + (sends_reduced(record.slots[static_cast<std::size_t>(i)].decision) ? 1 : 0);
    const std::int64_t window = std::min(b.d_max, n);
    for (std::int64_t start = 0; start + window <= n; ++start) {
        if (reduced_prefix[start + window] - reduced_prefix[start] > b.s_max) {
            issues.push_back("window starting at " + std::to_string(start) + " has " +
                             std::to_string(reduced_prefix[start + window] - reduced_prefix[start]) +
                             " reduced transmissions, above s_max " + std::to_string(b.s_max));
            break;
        }
    }
    if (summary.reduced_count > total_quality_bound(b, n))
        issues.push_back("total reduced transmissions " + std::to_string(summary.reduced_count) +
                         " exceed the whole-run cap " +
                         std::to_string(total_quality_bound(b, n)));

    // Per-slot congestion drift bound.
    for (std::int64_t i = 0; i < n; ++i) {
        const SlotRecord& r = record.slots[static_cast<std::size_t>(i)];
        const QueueState before{r.backlog, r.quality_queue, r.delay_queue};
        const QueueState after = i + 1 < n
                                     ? QueueState{record.slots[static_cast<std::size_t>(i) + 1].backlog,
                                                  record.slots[static_cast<std::size_t>(i) + 1].quality_queue,
                                                  record.slots[static_cast<std::size_t>(i) + 1].delay_queue}
                                     : record.final_state;
        const double change = lyapunov(after) - lyapunov(before);
        const double cap = drift_upper_bound(before, r.decision, r.next_arrival, p);
        if (change > cap) {
            issues.push_back("slot " + std::to_string(r.slot) + ": congestion change " +
                             format_double(change) + " exceeds drift bound " + format_double(cap));
            break;
        }
    }

    // Conservation.
    if (summary.total_arrivals != summary.transmitted_count + summary.final_backlog)
        issues.push_back("arrivals " + std::to_string(summary.total_arrivals) +
                         " != transmitted " + std::to_string(summary.transmitted_count) +
                         " + final backlog " + std::to_string(summary.final_backlog));
    double cost = 0.0;
    for (const SlotRecord& r : record.slots) cost += r.slot_cost;
    if (cost != summary.total_cost)
        issues.push_back("slot costs sum to " + format_double(cost) + ", summary says " +
                         format_double(summary.total_cost));

    return issues;
}

void write_slot_log(const RunRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "t,h,cf,Q,Y,Z,decision,slot_cost\n";
    for (const SlotRecord& r : record.slots) {
        out << r.slot << ',' << r.availability << ',' << format_double(r.full_price) << ','
            << r.backlog << ',' << format_double(r.quality_queue) << ','
            << format_double(r.delay_queue) << ',' << decision_code(r.decision) << ','
            << format_double(r.slot_cost) << "\n";
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_unit_log(const RunRecord& record, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "arrival_slot,departure_slot,reduced\n";
    for (const UnitRecord& u : record.units)
        out << u.arrival_slot << ',' << u.departure_slot << ',' << (u.reduced ? 1 : 0) << "\n";
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_summary(const SummaryMetrics& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "total_cost,final_Q,S,N,max_Q,max_Y,max_Z,max_delay,slots,arrivals\n";
    out << format_double(m.total_cost) << ',' << m.final_backlog << ',' << m.reduced_count << ','
        << m.transmitted_count << ',' << m.max_backlog << ',' << format_double(m.max_quality_queue)
        << ',' << format_double(m.max_delay_queue) << ',' << m.max_unit_delay << ',' << m.slots
        << ',' << m.total_arrivals << "\n";
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string summary_to_string(const SummaryMetrics& m) {
    std::ostringstream out;
    out << "total_cost=" << format_double(m.total_cost) << "\n"
        << "final_Q=" << m.final_backlog << "\n"
        << "S=" << m.reduced_count << "\n"
        << "N=" << m.transmitted_count << "\n"
        << "max_Q=" << m.max_backlog << "\n"
        << "max_Y=" << format_double(m.max_quality_queue) << "\n"
        << "max_Z=" << format_double(m.max_delay_queue) << "\n"
        << "max_delay=" << m.max_unit_delay << "\n"
        << "slots=" << m.slots << "\n"
        << "arrivals=" << m.total_arrivals << "\n";
    return out.str();
}

}  // namespace hpcsched
