#include "hpcsched/types.hpp"

#include <stdexcept>

namespace hpcsched {

std::vector<std::string> validate(const Params& p) {
    std::vector<std::string> errors;
    if (!(p.cost_weight > 0.0))
        errors.push_back("cost_weight must be strictly positive, got " +
                         std::to_string(p.cost_weight));
    if (!(p.quality_increment > 0.0))
        errors.push_back("quality_increment must be strictly positive, got " +
                         std::to_string(p.quality_increment));
    if (!(p.delay_increment > 0.0))
        errors.push_back("delay_increment must be strictly positive, got " +
                         std::to_string(p.delay_increment));
    if (!(p.reduced_fraction > 0.0 && p.reduced_fraction < 1.0))
        errors.push_back("reduced_fraction must lie strictly between 0 and 1, got " +
                         std::to_string(p.reduced_fraction));
    if (!(p.max_full_price > 0.0))
        errors.push_back("max_full_price must be strictly positive, got " +
                         std::to_string(p.max_full_price));
    return errors;
}

std::optional<Decision> decision_from_bits(unsigned bits) noexcept {
    switch (bits) {
        case 0b1000: return Decision::free_full;
        case 0b0100: return Decision::free_reduced;
        case 0b0010: return Decision::purchase_full;
        case 0b0001: return Decision::purchase_reduced;
        case 0b0000: return Decision::no_transmit;
        default: return std::nullopt;
    }
}

std::string_view decision_code(Decision d) noexcept {
    switch (d) {
        case Decision::free_full: return "FF";
        case Decision::free_reduced: return "FR";
        case Decision::purchase_full: return "PF";
        case Decision::purchase_reduced: return "PR";
        case Decision::no_transmit: return "NT";
    }
    return "??";
}

std::optional<Decision> decision_from_code(std::string_view code) noexcept {
    if (code == "FF") return Decision::free_full;
    if (code == "FR") return Decision::free_reduced;
    if (code == "PF") return Decision::purchase_full;
    if (code == "PR") return Decision::purchase_reduced;
    if (code == "NT") return Decision::no_transmit;
    return std::nullopt;
}

SlotInput make_slot_input(std::int64_t slot, int availability, double full_price,
                          double reduced_fraction, int arrival) {
    SlotInput s;
    s.slot = slot;
    s.availability = availability;
    s.full_price = full_price;
    s.reduced_price = reduced_fraction * full_price;
    s.arrival = arrival;
    if (auto err = check_slot_input(s, reduced_fraction))
        throw std::invalid_argument(*err);
    return s;
}

std::optional<std::string> check_slot_input(const SlotInput& s, double reduced_fraction) {
    if (s.slot < 0)
        return "slot index must be nonnegative, got " + std::to_string(s.slot);
    if (s.availability < 0 || s.availability > 2)
        return "availability must be 0, 1 or 2, got " + std::to_string(s.availability);
    if (!(s.full_price >= 0.0))
        return "full_price must be nonnegative, got " + std::to_string(s.full_price);
    if (s.arrival != 0 && s.arrival != 1)
        return "arrival must be 0 or 1, got " + std::to_string(s.arrival);
    const double expected = reduced_fraction * s.full_price;
    const double diff = std::abs(s.reduced_price - expected);
    const double tol = 1e-12 * std::max(std::abs(s.reduced_price), std::abs(expected));
    if (diff > tol)
        return "reduced_price " + std::to_string(s.reduced_price) +
               " is not reduced_fraction * full_price = " + std::to_string(expected);
    return std::nullopt;
}

}  // namespace hpcsched
