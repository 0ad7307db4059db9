#include "sextic/params.hpp"

#include <cmath>
#include <stdexcept>

#include "sextic/errors.hpp"

namespace sextic {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::ClassicallyConfining: return "ClassicallyConfining";
        case Regime::BottomlessConfining: return "BottomlessConfining";
        case Regime::Critical: return "Critical";
        case Regime::Collapsing: return "Collapsing";
    }
    return "?";
}

Couplings greek_to_couplings(const GreekParams& g) {
    if (!(g.gamma > 0.0))
        throw std::domain_error("greek_to_couplings: gamma must be > 0");
    Couplings c;
    c.A = g.alpha * g.alpha - g.gamma + g.delta;
    c.B = g.beta * g.beta - g.gamma + g.delta;
    c.C = 2.0 * g.gamma * (g.alpha + g.beta);
    c.D = g.gamma * g.gamma;
    return c;
}

GreekParams couplings_to_greek(const Couplings& c) {
    if (!(c.D > 0.0))
        throw std::domain_error("couplings_to_greek: D must be > 0");
    if (c.C == 0.0)
        throw singular_inverse_error(
            "couplings_to_greek: the inverse map divides by C and is "
            "singular at C = 0");
    GreekParams g;
    g.gamma = std::sqrt(c.D);
    const double mean = c.C / (4.0 * g.gamma);
    const double skew = g.gamma * (c.A - c.B) / c.C;
    g.alpha = mean + skew;
    g.beta = mean - skew;
    g.delta = c.A + g.gamma - g.alpha * g.alpha;
    return g;
}

Regime classify_regime(const GreekParams& g) {
    if (!(g.gamma > 0.0))
        throw std::domain_error("classify_regime: gamma must be > 0");
    if (std::abs(g.delta) <= kCriticalDeltaTol) return Regime::Critical;
    if (g.delta < 0.0) return Regime::Collapsing;
    const double A = g.alpha * g.alpha - g.gamma + g.delta;
    const double B = g.beta * g.beta - g.gamma + g.delta;
    if (A < 0.0 || B < 0.0) return Regime::BottomlessConfining;
    return Regime::ClassicallyConfining;
}

double minimal_split(const GreekParams& g) {
    if (!(g.gamma > 0.0))
        throw std::domain_error("minimal_split: gamma must be > 0");
    if (!(g.delta > 0.0))
        throw no_minorant_error(
            "minimal_split: no harmonic minorant exists for delta <= 0");
    const double s = g.gamma / g.delta;
    if (s <= 1.0) return 1.0;
    return s * s / (2.0 * s - 1.0);
}

MinorantOscillator minorant_oscillator(const GreekParams& g, double M) {
    if (!(M > 1.0))
        throw std::domain_error("minorant_oscillator: split M must be > 1");
    if (!(g.delta > 0.0))
        throw no_minorant_error(
            "minorant_oscillator: no harmonic minorant exists for delta <= 0");
    const double root = std::sqrt((M - 1.0) / M);
    MinorantOscillator m;
    m.k = (root - 1.0) * g.gamma + g.delta;
    m.offset = root * (g.alpha + g.beta);
    return m;
}

} // namespace sextic
