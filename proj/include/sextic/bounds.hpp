#ifndef SEXTIC_BOUNDS_HPP
#define SEXTIC_BOUNDS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "sextic/params.hpp"

namespace sextic {

// Inputs of the ground-state-energy lower bounds.  Only alpha+beta, gamma
// and delta enter; rho2 = delta/(2 gamma) and theta are derived.
//
// Sign convention: sinh(theta) = -sqrt(1/(2 gamma)) (alpha+beta)/2, so
// positive sinh(theta) corresponds to alpha+beta < 0 (i.e. C < 0).
struct BoundInputs {
    double sum_ab = 0.0;
    double gamma = 1.0;
    double delta = 0.0;

    static BoundInputs from_greek(const GreekParams& g);

    double rho2() const { return delta / (2.0 * gamma); }
    double sinh_theta() const;
    double theta() const;
    // 2^{3/2} delta / sqrt(gamma): converts a W maximum into an energy shift
    double prefactor() const;
};

enum class BoundMethod { Simple, Epsilon, ClosedTheta0, Iterative, Oracle };

std::string_view to_string(BoundMethod m);

struct IterationRow {
    int n = 0;
    double eta = 0.0;
    double theta_n = 0.0; // rescaled slope parameter at this iterate
    double maximum = 0.0; // W(eta_n, theta) at the true objective
};

struct IterationTrace {
    std::vector<IterationRow> rows;
    bool converged = false;
    double final_bound = 0.0; // last reported maximum, a lower bound on max W
};

struct BoundReport {
    BoundMethod method = BoundMethod::Simple;
    double value = 0.0; // energy lower bound
    std::optional<IterationTrace> trace;
};

// E >= alpha + beta, valid for every delta > 0.
double simple_bound(const BoundInputs& b);

// One-parameter family of estimates, valid for 0 < eps < 1 and
// eps <= delta/gamma:
//   E >= (alpha+beta)(1-eps) + 2 sqrt((delta - gamma eps)(2 eps - eps^2)).
double epsilon_bound(const BoundInputs& b, double eps);

// W(eta, theta) = eta sinh(theta) + sqrt(eta (1-eta) (1 - rho2 eta)).
// Concave on [0, 1] for rho2 <= 1/2, hence unimodal.
double w_true(double eta, double theta, double rho2);

// Closed form of max_eta W(eta, 0) with F = sqrt(1 - rho2 + rho2^2):
//   sqrt((F + rho2)(F + 1) / (F + rho2 + 1)^3),
// a strictly decreasing function of rho2 on [0, 1/2], from 1/2 down to
// 3^{-3/4} = 0.43869...
double closed_form_theta0(double rho2);

struct IterateOptions {
    double eta0 = 1.0;
    double tol = 1e-8; // on |eta_{n+1} - eta_n|
    int max_iter = 50;
};

// Fixed-point scheme for max_eta W(eta, theta): at each step
//   sinh(theta_n) = sinh(theta) / sqrt(1 - rho2 eta_n),
//   eta_{n+1}     = exp(theta_n) / (2 cosh(theta_n)),
// reporting maximum_n = W(eta_n, theta).  Every reported maximum is a valid
// lower bound on max W; the limit evaluates W at the fixed point, which is
// close to but not equal to the true maximizer (the true maximizer always
// lies left of the next iterate).  Non-convergence within max_iter yields a
// trace flagged converged = false, not an exception.
IterationTrace iterate_w_max(double theta, double rho2,
                             const IterateOptions& opt = {});

enum class BoundScheme { FixedPoint, Oracle };

// Assembled energy bound
//   value = (alpha+beta) + 2^{3/2} delta gamma^{-1/2} * M,
// where M is the iteration's final bound (FixedPoint) or the true
// maximum of W via golden-section search (Oracle).  For rho2 >= 1/2 the
// W machinery does not apply and both schemes fall back to the direct
// epsilon-family maximization over eps in (0, 1).
BoundReport optimal_bound(const BoundInputs& b, BoundScheme scheme,
                          const IterateOptions& opt = {});

// Independent check of the assembled bound: maximize epsilon_bound directly
// over eps in (0, min(1, delta/gamma)) by golden-section search (bracket
// width 1e-12).  Agrees with optimal_bound(Oracle) through the substitution
// eps = 2 rho2 eta.
double epsilon_oracle(const BoundInputs& b);

} // namespace sextic

#endif
