#ifndef SEXTIC_EXACTSTATE_HPP
#define SEXTIC_EXACTSTATE_HPP

#include "sextic/params.hpp"

namespace sextic {

// Gaussian trial state psi(x,y) = exp(-(alpha/2)x^2 - (beta/2)y^2
//                                     - (gamma/2)x^2 y^2).
// Normalizable for alpha, beta > 0; at alpha = beta = 0 the norm over
// [-R,R]^2 grows logarithmically with R.
struct GaussianState {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
};

double psi_value(const GaussianState& s, double x, double y);

// Closed form of (H psi)/psi for the Hamiltonian built from
// greek_to_couplings({alpha, beta, gamma, delta}):
//     (alpha + beta) + delta (x^2 + y^2).
// Constant at delta = 0, so psi is then an exact eigenstate with eigenvalue
// alpha + beta.
double local_energy(const GaussianState& s, double delta, double x, double y);

// Independent finite-difference evaluation of (H psi)/psi: a 4th-order
// Laplacian stencil applied to psi(x_i,y_j)/psi(x,y).  The exponent
// differences are expanded analytically and fed through expm1, which keeps
// the roundoff floor near 1e-12 at h = 1e-3 (a naive stencil floors near
// 1e-9 from cancellation).
double local_energy_fd(const GaussianState& s, double delta, double x,
                       double y, double h = 1e-3);

// Integral of psi^2 over [-R, R]^2 by tensor-product trapezoid on a graded
// (log-spaced) grid, refined until the relative change is below rel_tol.
// The grading is required: at R ~ 1e3 the integrand concentrates in
// O(1/(sqrt(gamma) R))-wide strips along the axes, which a uniform grid of
// any feasible size cannot resolve.
double norm_integral(const GaussianState& s, double R, double rel_tol = 1e-3);

} // namespace sextic

#endif
