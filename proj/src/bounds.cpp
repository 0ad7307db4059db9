#include "sextic/bounds.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sextic/errors.hpp"
#include "sextic/optimize.hpp"

namespace sextic {

std::string_view to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::Simple: return "simple";
        case BoundMethod::Epsilon: return "eps";
        case BoundMethod::ClosedTheta0: return "closed0";
        case BoundMethod::Iterative: return "iterate";
        case BoundMethod::Oracle: return "oracle";
    }
    return "?";
}

BoundInputs BoundInputs::from_greek(const GreekParams& g) {
    if (!(g.gamma > 0.0))
        throw std::domain_error("BoundInputs: gamma must be > 0");
    return {g.alpha + g.beta, g.gamma, g.delta};
}

double BoundInputs::sinh_theta() const {
    return -std::sqrt(1.0 / (2.0 * gamma)) * sum_ab / 2.0;
}

double BoundInputs::theta() const { return std::asinh(sinh_theta()); }

double BoundInputs::prefactor() const {
    return 2.0 * std::sqrt(2.0) * delta / std::sqrt(gamma);
}

namespace {

void require_confining(const BoundInputs& b, const char* who) {
    if (!(b.gamma > 0.0))
        throw std::domain_error(std::string(who) + ": gamma must be > 0");
    if (!(b.delta > 0.0))
        throw no_minorant_error(std::string(who) +
                                ": the bound requires delta > 0");
}

} // namespace

double simple_bound(const BoundInputs& b) {
    require_confining(b, "simple_bound");
    return b.sum_ab;
}

double epsilon_bound(const BoundInputs& b, double eps) {
    require_confining(b, "epsilon_bound");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error(
            "epsilon_bound: eps must satisfy 0 < eps < 1");
    if (!(eps <= b.delta / b.gamma))
        throw std::domain_error(
            "epsilon_bound: eps must satisfy eps <= delta/gamma "
            "(the radicand delta - gamma*eps would turn negative)");
    const double rad = (b.delta - b.gamma * eps) * (2.0 - eps) * eps;
    return b.sum_ab * (1.0 - eps) + 2.0 * std::sqrt(std::max(rad, 0.0));
}

double w_true(double eta, double theta, double rho2) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::domain_error("w_true: eta must lie in [0, 1]");
    if (!(rho2 >= 0.0 && rho2 < 1.0))
        throw std::domain_error("w_true: rho2 must lie in [0, 1)");
    const double rad = eta * (1.0 - eta) * (1.0 - rho2 * eta);
    assert(rad > -1e-15);
    return eta * std::sinh(theta) + std::sqrt(std::max(rad, 0.0));
}

double closed_form_theta0(double rho2) {
    if (!(rho2 >= 0.0 && rho2 <= 0.5))
        throw std::domain_error(
            "closed_form_theta0: rho2 must lie in [0, 1/2]");
    const double F = std::sqrt(1.0 - rho2 + rho2 * rho2);
    const double s = F + rho2 + 1.0;
    return std::sqrt((F + rho2) * (F + 1.0) / (s * s * s));
}

IterationTrace iterate_w_max(double theta, double rho2,
                             const IterateOptions& opt) {
    if (!(rho2 > 0.0 && rho2 < 0.5))
        throw std::domain_error("iterate_w_max: rho2 must lie in (0, 1/2)");
    if (!(opt.eta0 > 0.0 && opt.eta0 <= 1.0))
        throw std::domain_error("iterate_w_max: eta0 must lie in (0, 1]");
    if (opt.max_iter < 1)
        throw std::domain_error("iterate_w_max: max_iter must be >= 1");

    const double sh = std::sinh(theta);
    IterationTrace trace;
    double eta = opt.eta0;
    for (int n = 0; n <= opt.max_iter; ++n) {
        const double sh_n = sh / std::sqrt(1.0 - rho2 * eta);
        const double theta_n = std::asinh(sh_n);
        const double maximum = w_true(eta, theta, rho2);
        trace.rows.push_back({n, eta, theta_n, maximum});
        const double eta_next = std::exp(theta_n) / (2.0 * std::cosh(theta_n));
        if (std::abs(eta_next - eta) < opt.tol) {
            trace.converged = true;
            break;
        }
        eta = eta_next;
    }
    trace.final_bound = trace.rows.back().maximum;
    return trace;
}

double epsilon_oracle(const BoundInputs& b) {
    require_confining(b, "epsilon_oracle");
    const double hi = std::min(1.0, b.delta / b.gamma);
    const double pad = 1e-15;
    const auto best = golden_section_max(
        [&](double eps) { return epsilon_bound(b, eps); }, pad, hi - pad);
    return best.value;
}

BoundReport optimal_bound(const BoundInputs& b, BoundScheme scheme,
                          const IterateOptions& opt) {
    require_confining(b, "optimal_bound");
    const double rho2 = b.rho2();
    if (rho2 >= 0.5) {
        // delta >= gamma: outside the W parametrization; the direct
        // epsilon-family maximization needs no such restriction.
        return {BoundMethod::Oracle, epsilon_oracle(b), std::nullopt};
    }
    if (scheme == BoundScheme::FixedPoint) {
        IterationTrace trace = iterate_w_max(b.theta(), rho2, opt);
        const double value = b.sum_ab + b.prefactor() * trace.final_bound;
        return {BoundMethod::Iterative, value, std::move(trace)};
    }
    const double theta = b.theta();
    const auto best = golden_section_max(
        [&](double eta) { return w_true(eta, theta, rho2); }, 0.0, 1.0);
    return {BoundMethod::Oracle, b.sum_ab + b.prefactor() * best.value,
            std::nullopt};
}

} // namespace sextic
