#include "doctest.h"

#include <stdexcept>

#include "hpcsched/types.hpp"

using namespace hpcsched;

TEST_CASE("default params are the simulation defaults and validate cleanly") {
    Params p;
    p.cost_weight = 1.0;
    p.quality_increment = 1.0;
    p.delay_increment = 1.0;
    p.reduced_fraction = 0.5;
    CHECK(validate(p).empty());
}

TEST_CASE("params validation rejects each boundary") {
    Params p;
    p.reduced_fraction = 1.0;
    auto errors = validate(p);
    REQUIRE(errors.size() == 1);
    CHECK(errors.front().find("reduced_fraction") != std::string::npos);

    p = Params{};
    p.cost_weight = 0.0;
    errors = validate(p);
    REQUIRE(errors.size() == 1);
    CHECK(errors.front().find("cost_weight") != std::string::npos);

    p = Params{};
    p.quality_increment = -1.0;
    p.delay_increment = 0.0;
    CHECK(validate(p).size() == 2);

    // one message per failed invariant
    p.cost_weight = -3.0;
    p.reduced_fraction = 2.0;
    p.max_full_price = 0.0;
    CHECK(validate(p).size() == 5);
}

TEST_CASE("slot input construction enforces the domain") {
    const SlotInput ok = make_slot_input(3, 1, 4.0, 0.5, 1);
    CHECK(ok.reduced_price == 2.0);

    CHECK_THROWS_AS(make_slot_input(0, 3, 1.0, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_slot_input(0, -1, 1.0, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_slot_input(0, 0, 1.0, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_slot_input(-1, 0, 1.0, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_slot_input(0, 0, -1.0, 0.5, 0), std::invalid_argument);
}

TEST_CASE("reduced price consistency uses a 1e-12 relative tolerance") {
    SlotInput s = make_slot_input(0, 0, 4.0, 0.5, 0);
    CHECK(!check_slot_input(s, 0.5));

    s.reduced_price = 2.0 * (1.0 + 5e-14);
    CHECK(!check_slot_input(s, 0.5));

    s.reduced_price = 2.0 * (1.0 + 1e-11);
    auto err = check_slot_input(s, 0.5);
    REQUIRE(err);
    CHECK(err->find("reduced_price") != std::string::npos);

    // zero price forces a zero reduced price
    s = make_slot_input(0, 0, 0.0, 0.5, 0);
    CHECK(!check_slot_input(s, 0.5));
    s.reduced_price = 1e-15;
    CHECK(check_slot_input(s, 0.5));
}

TEST_CASE("departure indicator is 1 exactly for transmissions") {
    CHECK(departure(Decision::free_full) == 1);
    CHECK(departure(Decision::free_reduced) == 1);
    CHECK(departure(Decision::purchase_full) == 1);
    CHECK(departure(Decision::purchase_reduced) == 1);
    CHECK(departure(Decision::no_transmit) == 0);

    CHECK(sends_reduced(Decision::free_reduced));
    CHECK(sends_reduced(Decision::purchase_reduced));
    CHECK(!sends_reduced(Decision::free_full));
    CHECK(purchases(Decision::purchase_full));
    CHECK(!purchases(Decision::free_reduced));
}

TEST_CASE("indicator bits round-trip and reject multi-bit patterns") {
    for (Decision d : {Decision::free_full, Decision::free_reduced, Decision::purchase_full,
                       Decision::purchase_reduced, Decision::no_transmit}) {
        const unsigned bits = decision_bits(d);
        CHECK((bits & (bits - 1)) == 0);  // at most one bit set
        auto back = decision_from_bits(bits);
        REQUIRE(back);
        CHECK(*back == d);

        auto code = decision_from_code(decision_code(d));
        REQUIRE(code);
        CHECK(*code == d);
    }
    CHECK(!decision_from_bits(0b0011));
    CHECK(!decision_from_bits(0b1100));
    CHECK(!decision_from_bits(0b1111));
    CHECK(!decision_from_bits(16));
    CHECK(!decision_from_code("XX"));
}
