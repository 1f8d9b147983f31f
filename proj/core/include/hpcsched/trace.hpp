#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hpcsched/types.hpp"

namespace hpcsched {

/// Settings for seeded environment-trace generation.
struct TraceConfig {
    std::int64_t slots = 10000;
    std::uint64_t seed = 0;
    // Probabilities of availability 0, 1, 2; must sum to 1 within 1e-9.
    std::array<double, 3> availability_probs{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    double price_min = 0.5;  // support of the full-size price, $cents
    double price_max = 5.0;
    double arrival_prob = 1.0;
    double reduced_fraction = 0.5;
};

/// Empty when all TraceConfig invariants hold.
std::vector<std::string> validate(const TraceConfig& config);

/// Deterministic function of the config (seed included). Per slot the
/// generator draws, in order: one uniform for availability (categorical over
/// availability_probs), one for the full price (uniform on
/// [price_min, price_max]), one Bernoulli(arrival_prob) for the arrival.
/// The reduced price is reduced_fraction * full price, exactly.
std::vector<SlotInput> generate(const TraceConfig& config);

/// CSV trace file: a `# alpha=<reduced_fraction>` header line, a
/// `t,h,cf,cr,arrival` column line, one row per slot. Prices carry 17
/// significant digits so a write/read cycle is bit-exact.
void write_trace(std::span<const SlotInput> trace, double reduced_fraction,
                 const std::filesystem::path& path);

struct TraceFile {
    double reduced_fraction = 0.0;
    std::vector<SlotInput> slots;
};

/// Parses and validates a trace file. Throws std::runtime_error naming the
/// offending line on malformed input or any SlotInput domain violation
/// (availability outside {0,1,2}, arrival outside {0,1}, reduced price
/// inconsistent with the header's alpha).
TraceFile read_trace(const std::filesystem::path& path);

}  // namespace hpcsched
