#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hpcsched/simulator.hpp"
#include "hpcsched/trace.hpp"

namespace hpcsched {

/// Grid sweep over policy knobs. Rows come out in grid order: cost weight
/// outermost, quality increment, delay increment innermost.
struct SweepSpec {
    std::vector<double> cost_weights;
    std::vector<double> quality_increments{1.0};
    std::vector<double> delay_increments{1.0};
    TraceConfig trace;
    bool fresh_trace_per_cell = false;  // otherwise every cell shares one trace
    bool with_offline = false;          // benchmark each cell against the DP oracle
    bool empty_queue_delay_increment = false;
    int workers = 0;  // 0 picks the hardware concurrency
};

/// Log-spaced 10^-2 .. 10^4 grid used when no cost weights are given.
std::vector<double> default_cost_weight_grid();

struct SweepRow {
    double cost_weight = 0.0;
    double quality_increment = 0.0;
    double delay_increment = 0.0;
    SummaryMetrics summary;
    std::optional<double> offline_cost;  // set when the oracle ran and succeeded
    std::string offline_note;            // oracle diagnostic, empty otherwise
};

/// Runs every grid cell (in parallel up to `workers`) and, with with_offline,
/// solves the oracle with each cell's realized unit and reduced counts on the
/// cell's trace. A cell that transmitted nothing gets offline cost 0.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// `V,eps_q,eps_d,total_cost,final_Q,S,N,max_Q,max_Y,max_Z,max_delay` plus an
/// `offline_cost` column when requested; infeasible oracle cells leave the
/// field empty.
void write_sweep_csv(std::span<const SweepRow> rows, bool with_offline, std::ostream& out);

}  // namespace hpcsched
