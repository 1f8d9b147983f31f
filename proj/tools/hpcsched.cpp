// Command-line front end: single simulations, parameter-grid sweeps, offline
// oracle runs, bound printing, and plot-script emission over sweep CSVs.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hpcsched/bounds.hpp"
#include "hpcsched/offline.hpp"
#include "hpcsched/simulator.hpp"
#include "hpcsched/sweep.hpp"
#include "hpcsched/trace.hpp"

namespace fs = std::filesystem;
using namespace hpcsched;

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& text, char delim) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, delim)) parts.push_back(part);
    if (!text.empty() && text.back() == delim) parts.push_back("");
    return parts;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    for (const std::string& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            values.push_back(v);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + part + "' is not a number");
        }
    }
    return values;
}

std::array<double, 3> parse_h_probs(const std::string& text) {
    const auto values = parse_double_list(text, "--h-probs");
    if (values.size() != 3)
        throw CLI::ValidationError("--h-probs", "expected three comma-separated probabilities");
    return {values[0], values[1], values[2]};
}

struct TraceFlags {
    std::int64_t slots = 10000;
    std::uint64_t seed = 0;
    double alpha = 0.5;
    double price_min = 0.5;
    double price_max = 5.0;
    std::string h_probs = "1/3,1/3,1/3";  // display default; parsed only if user-set
    double arrival_prob = 1.0;
};

void add_trace_flags(CLI::App* cmd, TraceFlags& f, std::vector<CLI::Option*>& opts) {
    opts.push_back(cmd->add_option("--slots", f.slots, "Number of time slots")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--seed", f.seed, "Trace RNG seed")->capture_default_str());
    opts.push_back(cmd->add_option("--alpha", f.alpha, "Reduced unit size fraction in (0,1)")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--price-min", f.price_min, "Lower full-size price, $cents")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--price-max", f.price_max, "Upper full-size price, $cents")
                       ->capture_default_str());
    opts.push_back(cmd->add_option("--h-probs", f.h_probs,
                                   "Probabilities of availability 0,1,2 as 'a,b,c'"));
    opts.push_back(cmd->add_option("--arrival-prob", f.arrival_prob,
                                   "Probability a data unit arrives each slot")
                       ->capture_default_str());
}

TraceConfig to_config(const TraceFlags& f, bool h_probs_set) {
    TraceConfig config;
    config.slots = f.slots;
    config.seed = f.seed;
    config.reduced_fraction = f.alpha;
    config.price_min = f.price_min;
    config.price_max = f.price_max;
    config.arrival_prob = f.arrival_prob;
    if (h_probs_set) config.availability_probs = parse_h_probs(f.h_probs);
    TraceConfig checked = config;
    if (auto errors = validate(checked); !errors.empty())
        throw std::runtime_error(errors.front());
    return config;
}

void require_params_valid(const Params& p) {
    if (auto errors = validate(p); !errors.empty()) throw std::runtime_error(errors.front());
}

double max_price(std::span<const SlotInput> trace) {
    double m = 0.0;
    for (const SlotInput& s : trace) m = std::max(m, s.full_price);
    return m;
}

// --- simulate -------------------------------------------------------------

int cmd_simulate(const TraceFlags& tf, bool h_probs_set, const Params& base,
                 const std::string& trace_in, const std::string& trace_out,
                 const std::string& out_dir) {
    Params p = base;
    std::vector<SlotInput> trace;
    if (!trace_in.empty()) {
        TraceFile file = read_trace(trace_in);
        trace = std::move(file.slots);
        if (trace.empty()) throw std::runtime_error(trace_in + ": trace has no slots");
        p.reduced_fraction = file.reduced_fraction;
        p.max_full_price = max_price(trace);  // tightest cap consistent with the file
    } else {
        TraceConfig config = to_config(tf, h_probs_set);
        trace = generate(config);
        p.reduced_fraction = config.reduced_fraction;
        p.max_full_price = config.price_max;
    }
    require_params_valid(p);
    if (!trace_out.empty()) write_trace(trace, p.reduced_fraction, trace_out);

    auto [record, summary] = run(trace, p);

    fs::create_directories(out_dir);
    write_slot_log(record, fs::path(out_dir) / "slots.csv");
    write_unit_log(record, fs::path(out_dir) / "units.csv");
    write_summary(summary, fs::path(out_dir) / "summary.csv");
    std::cout << summary_to_string(summary);
    return 0;
}

// --- sweep ----------------------------------------------------------------

int cmd_sweep(const TraceFlags& tf, bool h_probs_set, const std::string& v_list,
              const std::string& eps_q_list, const std::string& eps_d_list, bool with_offline,
              bool fresh_trace_per_cell, bool empty_queue_delay_increment, int workers,
              const std::string& out_dir) {
    SweepSpec spec;
    spec.cost_weights =
        v_list.empty() ? default_cost_weight_grid() : parse_double_list(v_list, "--v");
    spec.quality_increments = parse_double_list(eps_q_list, "--eps-q");
    spec.delay_increments = parse_double_list(eps_d_list, "--eps-d");
    spec.trace = to_config(tf, h_probs_set);
    spec.with_offline = with_offline;
    spec.fresh_trace_per_cell = fresh_trace_per_cell;
    spec.empty_queue_delay_increment = empty_queue_delay_increment;
    spec.workers = workers;

    const std::vector<SweepRow> rows = run_sweep(spec);
    for (const SweepRow& row : rows) {
        if (!row.offline_note.empty())
            std::cerr << "hpcsched: oracle infeasible at V=" << format_double(row.cost_weight)
                      << " eps_q=" << format_double(row.quality_increment)
                      << " eps_d=" << format_double(row.delay_increment) << ": "
                      << row.offline_note << "\n";
    }

    fs::create_directories(out_dir);
    const fs::path csv_path = fs::path(out_dir) / "sweep.csv";
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
    write_sweep_csv(rows, with_offline, out);
    std::cout << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
    return 0;
}

// --- offline --------------------------------------------------------------

int cmd_offline(const std::string& trace_in, std::int64_t units, std::int64_t budget,
                const std::string& schedule_out) {
    TraceFile file = read_trace(trace_in);
    OfflineProblem problem{file.slots, units, budget};
    OfflineSolution solution = solve_offline(problem, /*want_schedule=*/!schedule_out.empty());
    if (!solution.feasible) throw std::runtime_error("infeasible: " + solution.message);
    std::cout << "min_cost=" << format_double(solution.min_cost) << "\n";
    if (!schedule_out.empty()) {
        const ScheduleAudit audit = verify_schedule(problem, solution.schedule);
        if (!audit.ok)
            throw std::runtime_error("internal: solver schedule failed audit: " + audit.violation);
        std::ofstream out(schedule_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + schedule_out + " for writing");
        out << "t,decision\n";
        for (std::size_t t = 0; t < solution.schedule.size(); ++t)
            out << file.slots[t].slot << ',' << decision_code(solution.schedule[t]) << "\n";
    }
    return 0;
}

// --- bounds ---------------------------------------------------------------

int cmd_bounds(const Params& p, std::int64_t slots) {
    require_params_valid(p);
    const BoundSet b = compute_bounds(p);
    std::cout << "q_max=" << format_double(b.q_max) << "\n"
              << "z_max=" << format_double(b.z_max) << "\n"
              << "y_max=" << format_double(b.y_max) << "\n"
              << "d_max=" << b.d_max << "\n"
              << "s_max=" << b.s_max << "\n"
              << "cf_max=" << format_double(b.cf_max) << "\n"
              << "cr_max=" << format_double(b.cr_max) << "\n";
    if (slots > 0)
        std::cout << "total_reduced_bound=" << total_quality_bound(b, slots) << "\n";
    return 0;
}

// --- plot-script ----------------------------------------------------------

struct SweepCell {
    double v = 0.0, eps_q = 0.0, eps_d = 0.0;
    double total_cost = 0.0;
    double final_q = 0.0;
    double reduced = 0.0;
    bool has_offline = false;
    double offline_cost = 0.0;
};

std::vector<SweepCell> read_sweep_csv(const std::string& path, bool& any_offline) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    const auto header = split(line, ',');
    const auto column = [&](const std::string& name) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    const auto need = [&](const std::string& name) {
        const auto idx = column(name);
        if (idx < 0) throw std::runtime_error(path + ": missing column '" + name + "'");
        return static_cast<std::size_t>(idx);
    };
    const std::size_t c_v = need("V"), c_eq = need("eps_q"), c_ed = need("eps_d");
    const std::size_t c_cost = need("total_cost"), c_fq = need("final_Q"), c_s = need("S");
    const std::ptrdiff_t c_off = column("offline_cost");

    std::vector<SweepCell> cells;
    any_offline = false;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() < header.size())
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": short row");
        SweepCell cell;
        try {
            cell.v = std::stod(fields[c_v]);
            cell.eps_q = std::stod(fields[c_eq]);
            cell.eps_d = std::stod(fields[c_ed]);
            cell.total_cost = std::stod(fields[c_cost]);
            cell.final_q = std::stod(fields[c_fq]);
            cell.reduced = std::stod(fields[c_s]);
            if (c_off >= 0 && !fields[static_cast<std::size_t>(c_off)].empty()) {
                cell.offline_cost = std::stod(fields[static_cast<std::size_t>(c_off)]);
                cell.has_offline = true;
                any_offline = true;
            }
        } catch (const std::exception&) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed row");
        }
        cells.push_back(cell);
    }
    if (cells.empty()) throw std::runtime_error(path + ": no data rows");
    return cells;
}

int cmd_plot_script(const std::string& csv_path, const std::string& out_path) {
    bool any_offline = false;
    const std::vector<SweepCell> cells = read_sweep_csv(csv_path, any_offline);

    // One series per (eps_q, eps_d) combination, in first-seen order.
    std::vector<std::pair<double, double>> keys;
    for (const SweepCell& c : cells) {
        const std::pair<double, double> key{c.eps_q, c.eps_d};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << "#!/usr/bin/env python3\n"
        << "# Generated by `hpcsched plot-script` from " << csv_path << ".\n"
        << "# Requires matplotlib. Writes sweep.png next to this script.\n"
        << "import math\n"
        << "import matplotlib\n"
        << "matplotlib.use(\"Agg\")\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "series = [\n";
    for (const auto& [eq, ed] : keys) {
        out << "    {\n        \"label\": \"eps_q=" << format_double(eq)
            << ", eps_d=" << format_double(ed) << "\",\n";
        std::string vs, costs, fqs, ss, offs;
        bool series_offline = false;
        for (const SweepCell& c : cells) {
            if (c.eps_q != eq || c.eps_d != ed) continue;
            const char* sep = vs.empty() ? "" : ", ";
            vs += sep + format_double(c.v);
            costs += sep + format_double(c.total_cost);
            fqs += sep + format_double(c.final_q);
            ss += sep + format_double(c.reduced);
            offs += sep + (c.has_offline ? format_double(c.offline_cost) : std::string("None"));
            series_offline |= c.has_offline;
        }
        out << "        \"v\": [" << vs << "],\n"
            << "        \"total_cost\": [" << costs << "],\n"
            << "        \"final_q\": [" << fqs << "],\n"
            << "        \"reduced\": [" << ss << "],\n"
            << "        \"offline_cost\": " << (series_offline ? "[" + offs + "]" : "None")
            << ",\n    },\n";
    }
    out << "]\n\n"
        << "fig, axes = plt.subplots(1, 3, figsize=(15, 4.5))\n"
        << "for s in series:\n"
        << "    x = [math.log10(v) for v in s[\"v\"]]\n"
        << "    axes[0].plot(x, s[\"total_cost\"], marker=\"o\", label=s[\"label\"])\n";
    if (any_offline)
        out << "    if s[\"offline_cost\"] is not None:\n"
            << "        axes[0].plot(x, s[\"offline_cost\"], marker=\"x\", linestyle=\"--\",\n"
            << "                     label=s[\"label\"] + \" (offline bound)\")\n";
    out << "    axes[1].plot(x, s[\"final_q\"], marker=\"o\", label=s[\"label\"])\n"
        << "    axes[2].plot(x, s[\"reduced\"], marker=\"o\", label=s[\"label\"])\n"
        << "for ax, title in zip(axes, [\"total cost ($cents)\", \"final queue length\",\n"
        << "                            \"reduced-size transmissions\"]):\n"
        << "    ax.set_xlabel(\"log10(V)\")\n"
        << "    ax.set_title(title)\n"
        << "    ax.grid(True, alpha=0.3)\n"
        << "    ax.legend()\n"
        << "fig.tight_layout()\n"
        << "fig.savefig(\"sweep.png\", dpi=150)\n"
        << "print(\"wrote sweep.png\")\n";
    if (!out) throw std::runtime_error("write failed for " + out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectrum-leasing cost minimization: online policy simulator, "
                 "worst-case bounds, and offline benchmark"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run the online policy over one trace");
    TraceFlags sim_tf;
    Params sim_params;
    std::string sim_trace_in, sim_trace_out, sim_out_dir = "out";
    {
        std::vector<CLI::Option*> gen_opts;
        add_trace_flags(sim, sim_tf, gen_opts);
        sim->add_option("--v", sim_params.cost_weight, "Cost penalty weight")
            ->capture_default_str();
        sim->add_option("--eps-q", sim_params.quality_increment, "Quality-queue increment")
            ->capture_default_str();
        sim->add_option("--eps-d", sim_params.delay_increment, "Delay-queue increment")
            ->capture_default_str();
        sim->add_flag("--empty-queue-delay-increment", sim_params.empty_queue_delay_increment,
                      "Charge the delay increment on idle slots even with an empty queue");
        auto* in = sim->add_option("--trace-in", sim_trace_in, "Read the trace from a CSV file");
        sim->add_option("--trace-out", sim_trace_out, "Also write the trace as CSV");
        sim->add_option("--out-dir", sim_out_dir, "Directory for slots/units/summary CSVs")
            ->capture_default_str();
        for (CLI::Option* opt : gen_opts) in->excludes(opt);
    }

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a (V, eps_q, eps_d) grid and emit one CSV row per cell");
    TraceFlags sweep_tf;
    std::string sweep_v, sweep_eq = "1", sweep_ed = "1", sweep_out_dir = "out";
    bool sweep_offline = false, sweep_fresh = false, sweep_empty_inc = false;
    int sweep_workers = 0;
    {
        std::vector<CLI::Option*> gen_opts;
        add_trace_flags(sweep, sweep_tf, gen_opts);
        sweep->add_option("--v", sweep_v,
                          "Comma-separated V values (default log-spaced 1e-2..1e4)");
        sweep->add_option("--eps-q", sweep_eq, "Comma-separated quality increments")
            ->capture_default_str();
        sweep->add_option("--eps-d", sweep_ed, "Comma-separated delay increments")
            ->capture_default_str();
        sweep->add_flag("--offline", sweep_offline,
                        "Benchmark each cell against the offline oracle");
        sweep->add_flag("--fresh-trace-per-cell", sweep_fresh,
                        "Derive a distinct trace seed per grid cell");
        sweep->add_flag("--empty-queue-delay-increment", sweep_empty_inc,
                        "Charge the delay increment on idle slots even with an empty queue");
        sweep->add_option("--workers", sweep_workers, "Parallel cell workers (0 = hardware)")
            ->capture_default_str();
        sweep->add_option("--out-dir", sweep_out_dir, "Directory for sweep.csv")
            ->capture_default_str();
    }

    // offline
    auto* off = app.add_subcommand("offline", "Solve the offline minimum-cost benchmark on a trace");
    std::string off_trace, off_schedule;
    std::int64_t off_n = 0, off_s = 0;
    off->add_option("--trace-in,--trace", off_trace, "Trace CSV file")->required();
    off->add_option("--n", off_n, "Total units to transmit")->required();
    off->add_option("--s", off_s, "Reduced-size transmission budget")->required();
    off->add_option("--schedule-out", off_schedule, "Write the optimal schedule as CSV");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "Print the worst-case bound set as key=value lines");
    Params bnd_params;
    std::int64_t bnd_slots = 0;
    bnd->add_option("--v", bnd_params.cost_weight, "Cost penalty weight")->capture_default_str();
    bnd->add_option("--eps-q", bnd_params.quality_increment, "Quality-queue increment")
        ->capture_default_str();
    bnd->add_option("--eps-d", bnd_params.delay_increment, "Delay-queue increment")
        ->capture_default_str();
    bnd->add_option("--cf-max", bnd_params.max_full_price, "Maximum full-size price, $cents")
        ->capture_default_str();
    bnd->add_option("--alpha", bnd_params.reduced_fraction, "Reduced unit size fraction")
        ->capture_default_str();
    bnd->add_option("--slots", bnd_slots, "Also print the whole-run reduced-transmission cap");

    // plot-script
    auto* plot = app.add_subcommand("plot-script", "Emit a standalone matplotlib script for a sweep CSV");
    std::string plot_csv, plot_out = "plot_sweep.py";
    plot->add_option("csv", plot_csv, "Sweep CSV produced by `hpcsched sweep`")->required();
    plot->add_option("--out", plot_out, "Path of the generated script")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(sim_tf, sim->count("--h-probs") > 0, sim_params, sim_trace_in,
                                sim_trace_out, sim_out_dir);
        if (sweep->parsed())
            return cmd_sweep(sweep_tf, sweep->count("--h-probs") > 0, sweep_v, sweep_eq, sweep_ed,
                             sweep_offline, sweep_fresh, sweep_empty_inc, sweep_workers,
                             sweep_out_dir);
        if (off->parsed()) return cmd_offline(off_trace, off_n, off_s, off_schedule);
        if (bnd->parsed()) return cmd_bounds(bnd_params, bnd_slots);
        if (plot->parsed()) return cmd_plot_script(plot_csv, plot_out);
    } catch (const std::exception& e) {
        std::cerr << "hpcsched: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
