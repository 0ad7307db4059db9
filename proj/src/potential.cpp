#include "sextic/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "sextic/textio.hpp"

namespace sextic {

double evaluate(const Couplings& c, double x, double y) {
    const double u = x * x;
    const double v = y * y;
    // grouped through u*v so that for A == B the value is bitwise
    // symmetric under x <-> y (level sets then mirror exactly)
    const double uv = u * v;
    return c.A * u + c.B * v + c.C * uv + c.D * (uv * v + uv * u);
}

std::optional<double> tube_halfwidth(const Couplings& c, double energy,
                                     double x) {
    if (!(c.D > 0.0))
        throw std::domain_error("tube_halfwidth: requires D > 0");
    if (x == 0.0)
        throw std::domain_error("tube_halfwidth: requires x != 0");
    // quadratic in u = y^2: a u^2 + b u + e = 0
    const double a = c.D * x * x;
    const double b = c.B + c.C * x * x + c.D * x * x * x * x;
    const double e = c.A * x * x - energy;
    const double disc = b * b - 4.0 * a * e;
    if (disc < 0.0) return std::nullopt;
    const double sd = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sd, b));
    double roots[2];
    int nroots = 0;
    roots[nroots++] = q / a;
    if (q != 0.0) roots[nroots++] = e / q;
    double best = -1.0;
    for (int i = 0; i < nroots; ++i)
        if (roots[i] > 0.0 && (best < 0.0 || roots[i] < best)) best = roots[i];
    if (best < 0.0) return std::nullopt;
    return std::sqrt(best);
}

void Window::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max))
        throw std::domain_error("Window: bounds must satisfy min < max");
    if (nx < 2 || ny < 2)
        throw std::domain_error("Window: need at least 2 samples per axis");
}

namespace {

std::vector<double> make_axis(double lo, double hi, int n) {
    std::vector<double> t(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    const bool symmetric =
        std::abs(lo + hi) <= 1e-15 * (std::abs(lo) + std::abs(hi));
    if (symmetric) {
        // exactly mirrored nodes, so even potentials sample symmetrically
        for (int i = 0; i < n / 2; ++i) {
            t[i] = lo + i * step;
            t[n - 1 - i] = -t[i];
        }
        if (n % 2 == 1) t[n / 2] = 0.0;
    } else {
        for (int i = 0; i < n; ++i) t[i] = lo + i * step;
        t[n - 1] = hi;
    }
    return t;
}

} // namespace

std::vector<double> Window::x_axis() const {
    validate();
    return make_axis(x_min, x_max, nx);
}

std::vector<double> Window::y_axis() const {
    validate();
    return make_axis(y_min, y_max, ny);
}

namespace {

std::vector<double> sample_grid_impl(const Couplings& c, const Window& w,
                                     bool parallel) {
    const auto xs = w.x_axis();
    const auto ys = w.y_axis();
    std::vector<double> f(static_cast<std::size_t>(w.nx) * w.ny);
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < w.ny; ++j) {
        const double y = ys[static_cast<std::size_t>(j)];
        double* row = f.data() + static_cast<std::size_t>(j) * w.nx;
        for (int i = 0; i < w.nx; ++i)
            row[i] = evaluate(c, xs[static_cast<std::size_t>(i)], y);
    }
    return f;
}

struct MarchingGrid {
    const Couplings* c;
    double energy;
    double tol_abs;
    std::vector<double> xs, ys;
    std::vector<double> f; // V - E, row-major (y outer)
    std::int64_t nh;       // number of horizontal edges

    double fat(int i, int j) const {
        return f[static_cast<std::size_t>(j) * xs.size() + i];
    }
    bool inside(double v) const { return v < 0.0; }

    std::int64_t h_edge(int i, int j) const {
        return static_cast<std::int64_t>(j) * (static_cast<int>(xs.size()) - 1)
               + i;
    }
    std::int64_t v_edge(int i, int j) const {
        return nh + static_cast<std::int64_t>(j) * static_cast<int>(xs.size())
               + i;
    }
};

// Bisect V - E along the straight segment (ax,ay)-(bx,by) whose endpoint
// values have opposite indicator signs, until |V - E| <= tol_abs.
std::array<double, 2> refine_on_edge(const MarchingGrid& g, double ax,
                                     double ay, double fa, double bx,
                                     double by, double fb) {
    const bool ia = g.inside(fa);
    double ta = 0.0, tb = 1.0;
    // linear-interpolation start
    double t = fa / (fa - fb);
    for (int it = 0; it < 80; ++it) {
        const double px = ax + (bx - ax) * t;
        const double py = ay + (by - ay) * t;
        const double fv = evaluate(*g.c, px, py) - g.energy;
        if (std::abs(fv) <= g.tol_abs) return {px, py};
        if (g.inside(fv) == ia)
            ta = t;
        else
            tb = t;
        t = 0.5 * (ta + tb);
    }
    return {ax + (bx - ax) * t, ay + (by - ay) * t};
}

ContourSet extract_section_impl(const Couplings& c, double energy,
                                const Window& w, double vertex_tol,
                                bool parallel) {
    w.validate();
    MarchingGrid g;
    g.c = &c;
    g.energy = energy;
    g.tol_abs = vertex_tol * std::max(1.0, std::abs(energy));
    g.xs = w.x_axis();
    g.ys = w.y_axis();
    g.f = sample_grid_impl(c, w, parallel);
    for (double& v : g.f) v -= energy;
    const int nx = w.nx, ny = w.ny;
    g.nh = static_cast<std::int64_t>(ny) * (nx - 1);
    const std::int64_t nv = static_cast<std::int64_t>(ny - 1) * nx;

    // vertex index per crossing edge, -1 otherwise
    std::vector<std::int32_t> vid(static_cast<std::size_t>(g.nh + nv), -1);
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i + 1 < nx; ++i)
            if (g.inside(g.fat(i, j)) != g.inside(g.fat(i + 1, j)))
                vid[static_cast<std::size_t>(g.h_edge(i, j))] = 0;
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < ny - 1; ++j)
        for (int i = 0; i < nx; ++i)
            if (g.inside(g.fat(i, j)) != g.inside(g.fat(i, j + 1)))
                vid[static_cast<std::size_t>(g.v_edge(i, j))] = 0;
    std::int32_t nvert = 0;
    for (auto& v : vid)
        if (v == 0) v = nvert++;

    // refine vertex positions (independent per vertex)
    std::vector<std::array<double, 2>> pos(static_cast<std::size_t>(nvert));
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i + 1 < nx; ++i) {
            const std::int32_t v =
                vid[static_cast<std::size_t>(g.h_edge(i, j))];
            if (v >= 0)
                pos[static_cast<std::size_t>(v)] = refine_on_edge(
                    g, g.xs[i], g.ys[j], g.fat(i, j), g.xs[i + 1], g.ys[j],
                    g.fat(i + 1, j));
        }
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < ny - 1; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::int32_t v =
                vid[static_cast<std::size_t>(g.v_edge(i, j))];
            if (v >= 0)
                pos[static_cast<std::size_t>(v)] = refine_on_edge(
                    g, g.xs[i], g.ys[j], g.fat(i, j), g.xs[i], g.ys[j + 1],
                    g.fat(i, j + 1));
        }

    // cell pass: segments as pairs of edge ids, per row band
    std::vector<std::vector<std::array<std::int64_t, 2>>> row_segs(
        static_cast<std::size_t>(ny - 1));
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < ny - 1; ++j) {
        auto& segs = row_segs[static_cast<std::size_t>(j)];
        for (int i = 0; i + 1 < nx; ++i) {
            const int code = (g.inside(g.fat(i, j)) ? 1 : 0) |
                             (g.inside(g.fat(i + 1, j)) ? 2 : 0) |
                             (g.inside(g.fat(i + 1, j + 1)) ? 4 : 0) |
                             (g.inside(g.fat(i, j + 1)) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            const std::int64_t bottom = g.h_edge(i, j);
            const std::int64_t top = g.h_edge(i, j + 1);
            const std::int64_t left = g.v_edge(i, j);
            const std::int64_t right = g.v_edge(i + 1, j);
            switch (code) {
                case 1: case 14: segs.push_back({bottom, left}); break;
                case 2: case 13: segs.push_back({bottom, right}); break;
                case 3: case 12: segs.push_back({left, right}); break;
                case 4: case 11: segs.push_back({right, top}); break;
                case 6: case 9: segs.push_back({bottom, top}); break;
                case 8: case 7: segs.push_back({left, top}); break;
                case 5: case 10: {
                    // saddle: the cell-center value picks the pairing
                    const double fc =
                        evaluate(c, 0.5 * (g.xs[i] + g.xs[i + 1]),
                                 0.5 * (g.ys[j] + g.ys[j + 1])) -
                        energy;
                    const bool pair_left_top = g.inside(fc) == (code == 5);
                    if (pair_left_top) {
                        segs.push_back({left, top});
                        segs.push_back({bottom, right});
                    } else {
                        segs.push_back({bottom, left});
                        segs.push_back({right, top});
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // stitch: each vertex has at most two incident segments
    std::vector<std::array<std::int32_t, 2>> nbr(
        static_cast<std::size_t>(nvert), {-1, -1});
    auto link = [&](std::int32_t a, std::int32_t b) {
        auto& na = nbr[static_cast<std::size_t>(a)];
        (na[0] < 0 ? na[0] : na[1]) = b;
    };
    for (const auto& segs : row_segs)
        for (const auto& s : segs) {
            const std::int32_t a = vid[static_cast<std::size_t>(s[0])];
            const std::int32_t b = vid[static_cast<std::size_t>(s[1])];
            link(a, b);
            link(b, a);
        }

    ContourSet set;
    set.energy = energy;
    set.vertex_tol = vertex_tol;
    std::vector<bool> used(static_cast<std::size_t>(nvert), false);
    auto walk = [&](std::int32_t start, bool closed) {
        Polyline line;
        line.closed = closed;
        std::int32_t prev = -1, cur = start;
        while (cur >= 0 && !used[static_cast<std::size_t>(cur)]) {
            used[static_cast<std::size_t>(cur)] = true;
            line.points.push_back(pos[static_cast<std::size_t>(cur)]);
            const auto& nb = nbr[static_cast<std::size_t>(cur)];
            std::int32_t next = -1;
            // deterministic: prefer the smaller unvisited neighbor
            const std::int32_t lo = std::min(nb[0], nb[1]);
            const std::int32_t hi = std::max(nb[0], nb[1]);
            for (std::int32_t cand : {lo, hi})
                if (cand >= 0 && cand != prev &&
                    !used[static_cast<std::size_t>(cand)]) {
                    next = cand;
                    break;
                }
            prev = cur;
            cur = next;
        }
        set.polylines.push_back(std::move(line));
    };
    for (std::int32_t v = 0; v < nvert; ++v) {
        const auto& nb = nbr[static_cast<std::size_t>(v)];
        const int deg = (nb[0] >= 0 ? 1 : 0) + (nb[1] >= 0 ? 1 : 0);
        if (deg == 1 && !used[static_cast<std::size_t>(v)]) walk(v, false);
    }
    for (std::int32_t v = 0; v < nvert; ++v)
        if (!used[static_cast<std::size_t>(v)] &&
            (nbr[static_cast<std::size_t>(v)][0] >= 0))
            walk(v, true);
    return set;
}

} // namespace

std::vector<double> sample_grid(const Couplings& c, const Window& w) {
    return sample_grid_impl(c, w, true);
}

std::vector<double> sample_grid_serial(const Couplings& c, const Window& w) {
    return sample_grid_impl(c, w, false);
}

ContourSet extract_section(const Couplings& c, double energy, const Window& w,
                           double vertex_tol) {
    return extract_section_impl(c, energy, w, vertex_tol, true);
}

ContourSet extract_section_serial(const Couplings& c, double energy,
                                  const Window& w, double vertex_tol) {
    return extract_section_impl(c, energy, w, vertex_tol, false);
}

void write_contour_csv(const ContourSet& set, std::ostream& out) {
    out << "polyline_id,point_index,x,y\n";
    for (std::size_t p = 0; p < set.polylines.size(); ++p) {
        const auto& line = set.polylines[p];
        for (std::size_t k = 0; k < line.points.size(); ++k)
            out << p << ',' << k << ',' << fmt17(line.points[k][0]) << ','
                << fmt17(line.points[k][1]) << '\n';
    }
}

} // namespace sextic
