#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hpcsched/types.hpp"

namespace hpcsched {

/// One slot of a finished run. Queue fields hold the state the policy
/// observed when it made the decision.
struct SlotRecord {
    std::int64_t slot = 0;
    int availability = 0;
    double full_price = 0.0;
    std::int64_t backlog = 0;
    double quality_queue = 0.0;
    double delay_queue = 0.0;
    Decision decision = Decision::no_transmit;
    double slot_cost = 0.0;
    int next_arrival = 0;  // arrival applied in the update after this slot
};

/// FIFO bookkeeping of one departed data unit.
struct UnitRecord {
    std::int64_t arrival_slot = 0;
    std::int64_t departure_slot = 0;
    bool reduced = false;
};

struct RunRecord {
    std::vector<SlotRecord> slots;
    std::vector<UnitRecord> units;  // departed units only, in departure order
    QueueState final_state;
};

struct SummaryMetrics {
    double total_cost = 0.0;
    std::int64_t final_backlog = 0;
    std::int64_t reduced_count = 0;      // reduced-size transmissions
    std::int64_t transmitted_count = 0;  // departed units
    std::int64_t max_backlog = 0;
    double max_quality_queue = 0.0;
    double max_delay_queue = 0.0;
    std::int64_t max_unit_delay = 0;     // over departed units
    std::int64_t slots = 0;
    std::int64_t total_arrivals = 0;     // units that entered the queue
};

/// Closed loop over the trace: observe, decide, accrue cost, update queues.
/// The queue starts empty, so the first slot's arrival never enters it; each
/// update consumes the following slot's arrival and the last update consumes
/// none. Throws std::invalid_argument on bad params or on a trace slot that
/// violates the params' price cap or reduced-price consistency.
std::pair<RunRecord, SummaryMetrics> run(std::span<const SlotInput> trace, const Params& p);

/// Checks a finished run against every worst-case guarantee: the three
/// strict queue bounds, the per-unit delay cap, the per-window and whole-run
/// reduced-transmission caps, the per-slot congestion drift bound, and
/// arrival/cost conservation. Returns one message per violation.
std::vector<std::string> audit_run(const RunRecord& record, const SummaryMetrics& summary,
                                   const Params& p);

/// Per-slot log: `t,h,cf,Q,Y,Z,decision,slot_cost`, decisions as two-letter
/// codes.
void write_slot_log(const RunRecord& record, const std::filesystem::path& path);

/// Unit log: `arrival_slot,departure_slot,reduced`.
void write_unit_log(const RunRecord& record, const std::filesystem::path& path);

/// Single-row summary CSV.
void write_summary(const SummaryMetrics& m, const std::filesystem::path& path);

/// The same key=value lines `simulate` prints.
std::string summary_to_string(const SummaryMetrics& m);

}  // namespace hpcsched
