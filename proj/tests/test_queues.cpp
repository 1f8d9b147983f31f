#include "doctest.h"

#include "helpers.hpp"
#include "hpcsched/queues.hpp"

using namespace hpcsched;

TEST_CASE("backlog update follows serve-then-arrive") {
    CHECK(update_backlog(3, Decision::free_full, 1) == 3);
    CHECK(update_backlog(0, Decision::no_transmit, 0) == 0);
    // the floor absorbs a departure from an empty queue
    CHECK(update_backlog(0, Decision::free_full, 1) == 1);
}

TEST_CASE("quality queue charges reduced-size transmissions") {
    CHECK(update_quality_queue(2.0, Decision::free_reduced, 0.5) == 1.5);
    CHECK(update_quality_queue(0.3, Decision::free_full, 1.0) == 0.0);
    CHECK(update_quality_queue(5.0, Decision::no_transmit, 1.0) == 5.0);
    CHECK(update_quality_queue(1.0, Decision::purchase_reduced, 2.0) == 2.0);
}

TEST_CASE("delay queue charges idle slots only while backlogged by default") {
    CHECK(update_delay_queue(0.0, Decision::no_transmit, 2.0, 4, false) == 2.0);
    CHECK(update_delay_queue(3.0, Decision::purchase_full, 1.0, 4, false) == 2.0);
    // empty queue: no charge unless the unconditional variant is requested
    CHECK(update_delay_queue(0.5, Decision::no_transmit, 1.0, 0, false) == 0.5);
    CHECK(update_delay_queue(0.5, Decision::no_transmit, 1.0, 0, true) == 1.5);
}

TEST_CASE("all queue updates stay nonnegative") {
    testutil::Rng rng(2024);
    const Decision all[] = {Decision::free_full, Decision::free_reduced, Decision::purchase_full,
                            Decision::purchase_reduced, Decision::no_transmit};
    for (int i = 0; i < 20000; ++i) {
        const Decision d = all[rng.index(5)];
        const std::int64_t q = rng.index(4);
        const int arrival = rng.chance(0.5) ? 1 : 0;
        const double eps = rng.range(0.1, 3.0);
        CHECK(update_backlog(q, d, arrival) >= 0);
        CHECK(update_quality_queue(rng.uniform() * 2.0, d, eps) >= 0.0);
        CHECK(update_delay_queue(rng.uniform() * 2.0, d, eps, q, rng.chance(0.5)) >= 0.0);
    }
}

TEST_CASE("backlog update is exact when the floor is not engaged") {
    testutil::Rng rng(7);
    for (int i = 0; i < 20000; ++i) {
        const Decision d = rng.chance(0.5) ? Decision::purchase_full : Decision::no_transmit;
        const std::int64_t q = 1 + rng.index(50);
        const int arrival = rng.chance(0.5) ? 1 : 0;
        if (q >= departure(d)) CHECK(update_backlog(q, d, arrival) == q - departure(d) + arrival);
    }
}

TEST_CASE("any transmission drains the delay queue by exactly one") {
    testutil::Rng rng(8);
    const Decision tx[] = {Decision::free_full, Decision::free_reduced, Decision::purchase_full,
                           Decision::purchase_reduced};
    for (int i = 0; i < 20000; ++i) {
        const double z = 1.0 + rng.uniform() * 9.0;
        const Decision d = tx[rng.index(4)];
        CHECK(update_delay_queue(z, d, rng.range(0.1, 3.0), 5, false) == z - 1.0);
    }
}

TEST_CASE("with one arrival per slot the backlog never outruns time") {
    testutil::Rng rng(9);
    const Decision all[] = {Decision::free_full, Decision::free_reduced, Decision::purchase_full,
                            Decision::purchase_reduced, Decision::no_transmit};
    std::int64_t q = 0;
    for (std::int64_t t = 0; t < 10000; ++t) {
        q = update_backlog(q, all[rng.index(5)], 1);
        CHECK(q <= t + 1);
    }
}
