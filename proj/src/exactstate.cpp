#include "sextic/exactstate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sextic/potential.hpp"

namespace sextic {

double psi_value(const GaussianState& s, double x, double y) {
    return std::exp(-0.5 * s.alpha * x * x - 0.5 * s.beta * y * y -
                    0.5 * s.gamma * x * x * y * y);
}

double local_energy(const GaussianState& s, double delta, double x, double y) {
    return (s.alpha + s.beta) + delta * (x * x + y * y);
}

namespace {

// phi(x+t, y) - phi(x, y) for the exponent phi of psi = exp(-phi), expanded
// so no large values are subtracted:
//   (alpha/2 + gamma y^2 / 2) ((x+t)^2 - x^2) = (alpha + gamma y^2)/2 t (2x+t)
double dphi_x(const GaussianState& s, double x, double y, double t) {
    return 0.5 * (s.alpha + s.gamma * y * y) * t * (2.0 * x + t);
}

double dphi_y(const GaussianState& s, double x, double y, double t) {
    return 0.5 * (s.beta + s.gamma * x * x) * t * (2.0 * y + t);
}

} // namespace

double local_energy_fd(const GaussianState& s, double delta, double x,
                       double y, double h) {
    if (!(h > 0.0)) throw std::domain_error("local_energy_fd: h must be > 0");
    // 4th-order second derivative: (-1, 16, -30, 16, -1) / (12 h^2), applied
    // to psi(x_i)/psi(x).  The weights sum to zero, so each ratio may be
    // replaced by expm1(-dphi_i) (the center term vanishes); this removes
    // the constant-term cancellation and leaves a ~1e-12 roundoff floor at
    // h = 1e-3, where a naive stencil floors near 1e-9.
    static constexpr int off[4] = {-2, -1, 1, 2};
    static constexpr double wgt[4] = {-1.0, 16.0, 16.0, -1.0};
    double acc = 0.0;
    for (int k = 0; k < 4; ++k)
        acc += wgt[k] * std::expm1(-dphi_x(s, x, y, off[k] * h));
    for (int k = 0; k < 4; ++k)
        acc += wgt[k] * std::expm1(-dphi_y(s, x, y, off[k] * h));
    const double lap_over_psi = acc / (12.0 * h * h);
    const Couplings c = greek_to_couplings({s.alpha, s.beta, s.gamma, delta});
    return -lap_over_psi + evaluate(c, x, y);
}

double norm_integral(const GaussianState& s, double R, double rel_tol) {
    if (!(R > 0.0)) throw std::domain_error("norm_integral: R must be > 0");
    // psi^2 is even in x and y separately: integrate over [0,R]^2 and
    // multiply by 4.  The integrand concentrates in strips of width
    // ~ 1/(sqrt(gamma) R) along the axes, so the nodes are log-spaced from
    // x_lo ~ 1/(4 sqrt(gamma) R) up to R, with a single flat cell [0, x_lo]
    // (the integrand varies by < 2% across it).
    const double x_lo =
        std::min(0.5 * R, 0.25 / (std::sqrt(std::max(s.gamma, 1e-12)) * R));
    auto nodes = [&](int per_decade) {
        std::vector<double> t;
        // linear sub-nodes across [0, x_lo]: the integrand is concave
        // there and a single trapezoid cell would bias every refinement
        const int nlin = std::max(4, per_decade / 12);
        for (int i = 0; i < nlin; ++i) t.push_back(x_lo * i / nlin);
        const double decades = std::log10(R / x_lo);
        const int m = std::max(
            1, static_cast<int>(std::ceil(decades * per_decade)));
        for (int i = 0; i <= m; ++i)
            t.push_back(x_lo * std::pow(10.0, decades * i / m));
        t.back() = R;
        return t;
    };
    auto integrate = [&](const std::vector<double>& t) {
        const std::size_t n = t.size();
        std::vector<double> w(n, 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double half = 0.5 * (t[i + 1] - t[i]);
            w[i] += half;
            w[i + 1] += half;
        }
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double row = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double p = psi_value(s, t[i], t[j]);
                row += w[i] * p * p;
            }
            total += w[j] * row;
        }
        return 4.0 * total;
    };
    int per_decade = 48;
    double prev = integrate(nodes(per_decade));
    for (int pass = 0; pass < 6; ++pass) {
        per_decade *= 2;
        const double cur = integrate(nodes(per_decade));
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace sextic
