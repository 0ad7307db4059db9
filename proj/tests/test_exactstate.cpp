#include <doctest.h>

#include <cmath>

#include "sextic/exactstate.hpp"
#include "sextic/params.hpp"
#include "sextic/potential.hpp"
#include "sextic/rng.hpp"
#include "test_util.hpp"

using namespace sextic;

TEST_SUITE_BEGIN("exactstate");

TEST_CASE("psi values") {
    CHECK(close_rel(psi_value({0, 0, 1.0}, 1.0, 1.0), std::exp(-0.5), 1e-15));
    CHECK(psi_value({0.3, -0.2, 2.0}, 0.0, 0.0) == 1.0);
    CHECK(close_rel(psi_value({1, 1, 1.0}, 2.0, 0.0), std::exp(-2.0),
                    1e-15));
}

TEST_CASE("closed-form local energy") {
    SplitMix64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
        CHECK(local_energy({1, 1, 1.0}, 0.0, x, y) == 2.0);
    }
    CHECK(close_rel(local_energy({0, 0, 1.1}, 0.1, 1.0, 2.0), 0.5, 1e-15));
    CHECK(local_energy({0.4, -0.7, 2.0}, 0.33, 0.0, 0.0) ==
          0.4 + -0.7); // delta term vanishes at the origin
}

TEST_CASE("finite-difference oracle confirms the closed form") {
    const GaussianState states[] = {
        {1.0, 1.0, 1.0}, {1.0, 2.0, 1.5}, {0.0, 0.0, 1.1}, {-0.5, 1.2, 2.0}};
    const double deltas[] = {0.0, 0.3, 0.1, 0.7};
    SplitMix64 rng(22);
    for (int s = 0; s < 4; ++s) {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = rng.uniform(-1.25, 1.25);
            const double y = rng.uniform(-1.25, 1.25);
            const double closed = local_energy(states[s], deltas[s], x, y);
            const double fd = local_energy_fd(states[s], deltas[s], x, y);
            worst = std::max(worst, std::abs(fd - closed) /
                                        std::max(1.0, std::abs(closed)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("oracle rejects the cross-assigned coupling convention") {
    // with A and B swapped the local energy would differ by
    // (beta^2 - alpha^2)(x^2 - y^2); the stencil notices for alpha != beta
    const GaussianState s{1.0, 2.0, 1.5};
    const double delta = 0.3;
    const double x = 0.7, y = -0.4;
    const Couplings right = greek_to_couplings({s.alpha, s.beta, s.gamma,
                                                delta});
    const Couplings crossed{right.B, right.A, right.C, right.D};
    const double fd_kinetic =
        local_energy_fd(s, delta, x, y) - evaluate(right, x, y);
    const double fd_crossed = fd_kinetic + evaluate(crossed, x, y);
    const double expected_gap =
        (s.beta * s.beta - s.alpha * s.alpha) * (x * x - y * y);
    CHECK(std::abs(fd_crossed - local_energy(s, delta, x, y) -
                   expected_gap) <= 1e-9);
    CHECK(std::abs(fd_crossed - local_energy(s, delta, x, y)) > 0.5);
}

TEST_CASE("stencil residual grows as h^4") {
    const GaussianState s{1.0, 2.0, 1.5};
    const double x = 0.9, y = -0.6;
    const double closed = local_energy(s, 0.3, x, y);
    const double e1 = std::abs(local_energy_fd(s, 0.3, x, y, 4e-3) - closed);
    const double e2 = std::abs(local_energy_fd(s, 0.3, x, y, 8e-3) - closed);
    CHECK(e2 / e1 > 8.0); // 4th order: halving h gains ~16x
    CHECK(e2 / e1 < 32.0);
}

TEST_CASE("norm grows logarithmically when alpha = beta = 0") {
    const GaussianState s{0.0, 0.0, 1.1};
    const double i10 = norm_integral(s, 10.0);
    const double i100 = norm_integral(s, 100.0);
    const double i1000 = norm_integral(s, 1000.0);
    CHECK(close_rel(i10, 19.0445256993, 5e-3));
    CHECK(close_rel(i100, 34.6097102312, 5e-3));
    CHECK(close_rel(i1000, 50.1748947631, 5e-3));
    const double inc1 = i100 - i10;
    const double inc2 = i1000 - i100;
    CHECK(inc1 > 5.0);
    CHECK(inc2 > 5.0);
    CHECK(inc2 / inc1 > 0.97); // equal increments per decade: log growth
    CHECK(inc2 / inc1 < 1.03);
}

TEST_CASE("norm converges for a confining state") {
    const GaussianState s{1.0, 1.0, 1.0};
    const double i10 = norm_integral(s, 10.0);
    const double i100 = norm_integral(s, 100.0);
    CHECK(close_rel(i10, i100, 1e-6)); // saturates: normalizable
    CHECK(i10 < 3.2);                  // below the free-gaussian value pi
}

TEST_SUITE_END();
