#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hpcsched {

/// Tunable knobs of the online leasing policy.
struct Params {
    double cost_weight = 1.0;        // penalty weight on leasing cost, > 0
    double quality_increment = 1.0;  // virtual-queue increment per reduced-size transmission, > 0
    double delay_increment = 1.0;    // virtual-queue increment per idle slot with backlog, > 0
    double reduced_fraction = 0.5;   // reduced unit size as a fraction of full size, in (0,1)
    double max_full_price = 5.0;     // largest possible full-size lease price, $cents, > 0
    // Apply the delay increment even when the queue is empty. Off by default:
    // an empty queue accrues no queuing delay.
    bool empty_queue_delay_increment = false;
};

/// Empty when all Params invariants hold; one message per violation otherwise.
std::vector<std::string> validate(const Params& p);

/// Per-slot action. Exactly one of the five may happen in a slot.
enum class Decision : std::uint8_t {
    free_full,         // transmit one full-size unit on free spectrum
    free_reduced,      // transmit one reduced-size unit on free spectrum
    purchase_full,     // lease spectrum, transmit one full-size unit
    purchase_reduced,  // lease spectrum, transmit one reduced-size unit
    no_transmit,
};

constexpr int departure(Decision d) noexcept {
    return d == Decision::no_transmit ? 0 : 1;
}

constexpr bool sends_reduced(Decision d) noexcept {
    return d == Decision::free_reduced || d == Decision::purchase_reduced;
}

constexpr bool sends_full(Decision d) noexcept {
    return d == Decision::free_full || d == Decision::purchase_full;
}

constexpr bool purchases(Decision d) noexcept {
    return d == Decision::purchase_full || d == Decision::purchase_reduced;
}

/// 4-bit indicator vector (free-full, free-reduced, purchase-full,
/// purchase-reduced), highest bit first. At most one bit is set.
constexpr unsigned decision_bits(Decision d) noexcept {
    switch (d) {
        case Decision::free_full: return 0b1000;
        case Decision::free_reduced: return 0b0100;
        case Decision::purchase_full: return 0b0010;
        case Decision::purchase_reduced: return 0b0001;
        case Decision::no_transmit: return 0b0000;
    }
    return 0;
}

/// Inverse of decision_bits; nullopt if more than one bit is set or bits > 15.
std::optional<Decision> decision_from_bits(unsigned bits) noexcept;

/// Two-letter code used in CSV logs: FF, FR, PF, PR, NT.
std::string_view decision_code(Decision d) noexcept;
std::optional<Decision> decision_from_code(std::string_view code) noexcept;

/// Environment sample for one slot.
struct SlotInput {
    std::int64_t slot = 0;
    int availability = 0;        // free spectrum: 0 none, 1 one reduced unit, 2 one full unit
    double full_price = 0.0;     // lease price of one full-size unit, $cents
    double reduced_price = 0.0;  // lease price of one reduced-size unit, $cents
    int arrival = 0;             // data units arriving this slot, 0 or 1
};

/// Builds a SlotInput with reduced_price derived from the full price.
/// Throws std::invalid_argument on any domain violation.
SlotInput make_slot_input(std::int64_t slot, int availability, double full_price,
                          double reduced_fraction, int arrival);

/// Checks the SlotInput domain plus reduced_price == reduced_fraction *
/// full_price within 1e-12 relative. Returns a message for the first
/// violation, nullopt if fine.
std::optional<std::string> check_slot_input(const SlotInput& s, double reduced_fraction);

/// Actual backlog plus the two virtual queues. All start at zero.
struct QueueState {
    std::int64_t backlog = 0;   // whole data units awaiting transmission
    double quality_queue = 0.0; // grows with reduced-size transmissions
    double delay_queue = 0.0;   // grows with idle backlogged slots
};

}  // namespace hpcsched
