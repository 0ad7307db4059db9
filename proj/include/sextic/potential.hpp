#ifndef SEXTIC_POTENTIAL_HPP
#define SEXTIC_POTENTIAL_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sextic/params.hpp"

namespace sextic {

// V(x,y) = A x^2 + B y^2 + C x^2 y^2 + D (x^2 y^4 + x^4 y^2).
// evaluate(c, x, 0) = A x^2 exactly (the tube bottom profile), and for
// A == B the evaluation is bitwise symmetric under x <-> y.
double evaluate(const Couplings& c, double x, double y);

// Smallest y > 0 with V(x, y) = E at fixed x != 0, from the quadratic in
// u = y^2:  D x^2 u^2 + (B + C x^2 + D x^4) u + (A x^2 - E) = 0.
// Absence of a positive real root is a value (nullopt), not an error.
std::optional<double> tube_halfwidth(const Couplings& c, double energy,
                                     double x);

struct Window {
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;
    int nx = 2, ny = 2; // sample counts per axis, >= 2

    void validate() const;
    // Sample coordinates; for a symmetric range the nodes are exactly
    // mirrored so level sets of even potentials come out exactly symmetric.
    std::vector<double> x_axis() const;
    std::vector<double> y_axis() const;
};

struct Polyline {
    std::vector<std::array<double, 2>> points;
    bool closed = false;
};

// Level set {V = energy} as ordered polylines; every vertex satisfies
// |V(x,y) - energy| <= tol * max(1, |energy|).
struct ContourSet {
    double energy = 0.0;
    double vertex_tol = 1e-9;
    std::vector<Polyline> polylines;
};

// Marching squares with linear interpolation plus per-edge bisection
// refinement; ambiguous saddle cells are resolved by the cell-center value.
// Row bands are processed in parallel; the result is identical to the
// serial reference below.
ContourSet extract_section(const Couplings& c, double energy, const Window& w,
                           double vertex_tol = 1e-9);
ContourSet extract_section_serial(const Couplings& c, double energy,
                                  const Window& w, double vertex_tol = 1e-9);

// Potential sampled over the window, row-major (y outer, x inner).
// The parallel kernel is elementwise and bitwise-identical to the serial one.
std::vector<double> sample_grid(const Couplings& c, const Window& w);
std::vector<double> sample_grid_serial(const Couplings& c, const Window& w);

// CSV with mandatory header "polyline_id,point_index,x,y"; floats at 17
// significant digits.
void write_contour_csv(const ContourSet& set, std::ostream& out);

} // namespace sextic

#endif
