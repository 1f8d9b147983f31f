#include "doctest.h"

#include "helpers.hpp"
#include "hpcsched/bounds.hpp"

using namespace hpcsched;

namespace {

Params make_params(double v, double cf_max, double eps_q, double eps_d) {
    Params p;
    p.cost_weight = v;
    p.max_full_price = cf_max;
    p.quality_increment = eps_q;
    p.delay_increment = eps_d;
    return p;
}

}  // namespace

TEST_CASE("bound set matches the closed forms") {
    BoundSet b = compute_bounds(make_params(1, 5, 1, 1));
    CHECK(b.q_max == 7.0);
    CHECK(b.z_max == 3.5);
    CHECK(b.y_max == 6.0);
    CHECK(b.d_max == 6);
    CHECK(b.s_max == 6);
    CHECK(b.cf_max == 5.0);
    CHECK(b.cr_max == 2.5);

    CHECK(compute_bounds(make_params(100, 5, 1, 1)).d_max == 501);

    // very expensive quality: the quality branch of the min dominates
    b = compute_bounds(make_params(1, 5, 1000, 1));
    CHECK(b.s_max == 1);
}

TEST_CASE("window quality cap never exceeds the window length") {
    testutil::Rng rng(21);
    for (int i = 0; i < 20000; ++i) {
        const BoundSet b = compute_bounds(testutil::random_params(rng));
        CHECK(b.s_max <= b.d_max);
        CHECK(b.s_max >= 1);
        CHECK(b.q_max > 2.0);
    }
}

TEST_CASE("whole-run quality cap") {
    BoundSet b;
    b.s_max = 6;
    b.d_max = 6;
    CHECK(total_quality_bound(b, 10000) == 10000);

    b.s_max = 1;
    b.d_max = 501;
    CHECK(total_quality_bound(b, 10000) == 20);

    b.s_max = 3;
    b.d_max = 7;
    CHECK(total_quality_bound(b, 1) == 1);
}

TEST_CASE("congestion measure") {
    CHECK(lyapunov({0, 0.0, 0.0}) == 0.0);
    CHECK(lyapunov({3, 4.0, 0.0}) == 12.5);
    CHECK(lyapunov({1, 1.0, 1.0}) == 1.5);
}

TEST_CASE("drift constant") {
    CHECK(drift_constant(make_params(1, 5, 1, 1)) == 5.0);
    CHECK(drift_constant(make_params(1, 5, 3, 0.5)) == 5.625);
    // (eps_q - 1)^2 == 1 boundary: quality term is exactly one half
    CHECK(drift_constant(make_params(1, 5, 2, 1)) == 5.0);
}

TEST_CASE("drift bound covers hand-evaluated transitions") {
    const Params p = make_params(1, 5, 1, 1);
    // idle with backlog: change is Z*eps_d plus quadratics, bound has slack
    const QueueState s{4, 1.0, 2.0};
    const double cap = drift_upper_bound(s, Decision::no_transmit, 1, p);
    CHECK(cap == 5.0 + 4.0 * 1.0 + 2.0 * 1.0 + 0.0);

    // serving a reduced unit with eps_q = 1 leaves the quality term at zero
    CHECK(drift_upper_bound(s, Decision::free_reduced, 0, p) ==
          5.0 + 4.0 * (0.0 - 1.0) + 2.0 * (1.0 - 2.0) + 0.0);
}
