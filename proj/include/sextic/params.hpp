#ifndef SEXTIC_PARAMS_HPP
#define SEXTIC_PARAMS_HPP

#include <string_view>

namespace sextic {

// Raw couplings of V(x,y) = A x^2 + B y^2 + C x^2 y^2 + D (x^2 y^4 + x^4 y^2).
// D > 0 is required by every bound computation; the finite-difference solver
// also accepts D >= 0.
struct Couplings {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

// Reparametrized couplings with gamma = sqrt(D) > 0.  The convention used
// throughout is
//     A = alpha^2 - gamma + delta,
//     B = beta^2  - gamma + delta,
//     C = 2 gamma (alpha + beta),
//     D = gamma^2,
// which is the assignment consistent with the inverse map below and with the
// exactness of the gaussian ground state at delta = 0 (see README, "coupling
// conventions").  delta > 0 is the confinement criterion.
struct GreekParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 1.0;
    double delta = 0.0;

    double sum_ab() const { return alpha + beta; }
};

enum class Regime {
    ClassicallyConfining, // delta > 0, A >= 0 and B >= 0
    BottomlessConfining,  // delta > 0, A < 0 or B < 0
    Critical,             // |delta| <= critical tolerance
    Collapsing,           // delta < 0
};

std::string_view to_string(Regime r);

// |delta| at or below this is classified Critical.  delta = 0 is a
// measure-zero physical boundary; callers opt in by passing exact values.
inline constexpr double kCriticalDeltaTol = 1e-14;

// Harmonic-minorant data: the Hamiltonian split by M > 1 is bounded below by
//   offset - (1/M) Laplacian + k (x^2 + y^2),
// with k = (sqrt((M-1)/M) - 1) gamma + delta and
// offset = sqrt((M-1)/M) (alpha + beta).
struct MinorantOscillator {
    double k = 0.0;      // quadratic coupling of the minorant
    double offset = 0.0; // constant shift
};

Couplings greek_to_couplings(const GreekParams& g);
GreekParams couplings_to_greek(const Couplings& c);
Regime classify_regime(const GreekParams& g);

// Smallest M >= 1 with M + sqrt(M(M-1)) >= gamma/delta; in closed form
// (gamma/delta)^2 / (2 gamma/delta - 1) when gamma/delta > 1, else 1.
// Requires delta > 0 (throws no_minorant_error otherwise).
double minimal_split(const GreekParams& g);

// Minorant couplings at a given split M > 1.  k crosses zero exactly at
// minimal_split's M when gamma/delta > 1 and increases with M towards delta.
MinorantOscillator minorant_oscillator(const GreekParams& g, double M);

} // namespace sextic

#endif
