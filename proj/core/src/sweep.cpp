#include "hpcsched/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "hpcsched/offline.hpp"
#include "hpcsched/rng.hpp"

namespace hpcsched {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<double> default_cost_weight_grid() {
    return {1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.cost_weights.empty() || spec.quality_increments.empty() ||
        spec.delay_increments.empty())
        throw std::invalid_argument("sweep grid is empty");
    if (auto errors = validate(spec.trace); !errors.empty())
        throw std::invalid_argument("invalid trace config: " + errors.front());

    const std::size_t cells = spec.cost_weights.size() * spec.quality_increments.size() *
                              spec.delay_increments.size();
    std::vector<SweepRow> rows(cells);

    std::vector<SlotInput> shared_trace;
    if (!spec.fresh_trace_per_cell) shared_trace = generate(spec.trace);

    auto run_cell = [&](std::size_t index) {
        const std::size_t inner = spec.delay_increments.size();
        const std::size_t middle = spec.quality_increments.size();
        SweepRow& row = rows[index];
        row.cost_weight = spec.cost_weights[index / (middle * inner)];
        row.quality_increment = spec.quality_increments[(index / inner) % middle];
        row.delay_increment = spec.delay_increments[index % inner];

        std::vector<SlotInput> own_trace;
        if (spec.fresh_trace_per_cell) {
            TraceConfig cell_config = spec.trace;
            cell_config.seed = derive_seed(spec.trace.seed, index);
            own_trace = generate(cell_config);
        }
        const std::vector<SlotInput>& trace = spec.fresh_trace_per_cell ? own_trace : shared_trace;

        Params p;
        p.cost_weight = row.cost_weight;
        p.quality_increment = row.quality_increment;
        p.delay_increment = row.delay_increment;
        p.reduced_fraction = spec.trace.reduced_fraction;
        p.max_full_price = spec.trace.price_max;
        p.empty_queue_delay_increment = spec.empty_queue_delay_increment;
        auto [record, summary] = run(trace, p);
        row.summary = summary;

        if (spec.with_offline) {
            if (summary.transmitted_count == 0) {
                row.offline_cost = 0.0;  // nothing to transmit costs nothing
            } else {
                OfflineProblem problem{trace, summary.transmitted_count, summary.reduced_count};
                OfflineSolution solution = solve_offline(problem, /*want_schedule=*/false);
                if (solution.feasible)
                    row.offline_cost = solution.min_cost;
                else
                    row.offline_note = solution.message;
            }
        }
    };

    unsigned workers = spec.workers > 0 ? static_cast<unsigned>(spec.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cells));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells; ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1))
                    run_cell(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, bool with_offline, std::ostream& out) {
    out << "V,eps_q,eps_d,total_cost,final_Q,S,N,max_Q,max_Y,max_Z,max_delay";
    if (with_offline) out << ",offline_cost";
    out << "\n";
    for (const SweepRow& row : rows) {
        const SummaryMetrics& m = row.summary;
        out << format_double(row.cost_weight) << ',' << format_double(row.quality_increment) << ','
            << format_double(row.delay_increment) << ',' << format_double(m.total_cost) << ','
            << m.final_backlog << ',' << m.reduced_count << ',' << m.transmitted_count << ','
            << m.max_backlog << ',' << format_double(m.max_quality_queue) << ','
            << format_double(m.max_delay_queue) << ',' << m.max_unit_delay;
        if (with_offline) {
            out << ',';
            if (row.offline_cost) out << format_double(*row.offline_cost);
        }
        out << "\n";
    }
}

}  // namespace hpcsched
