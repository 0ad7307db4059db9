#ifndef SEXTIC_OPTIMIZE_HPP
#define SEXTIC_OPTIMIZE_HPP

#include <cmath>

namespace sextic {

struct ScalarMaximum {
    double x;
    double value;
    int evaluations;
};

// Golden-section search for the maximum of a unimodal function on [a, b].
// Shrinks the bracket to width xtol (default 1e-12) and returns the midpoint.
template <class F>
ScalarMaximum golden_section_max(F&& f, double a, double b,
                                 double xtol = 1e-12, int max_iter = 400) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    const double x = 0.5 * (a + b);
    return {x, f(x), evals + 1};
}

} // namespace sextic

#endif
