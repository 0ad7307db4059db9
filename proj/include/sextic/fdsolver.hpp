#ifndef SEXTIC_FDSOLVER_HPP
#define SEXTIC_FDSOLVER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "sextic/params.hpp"

namespace sextic {

// Dirichlet box [-L, L]^2 discretized on n x n interior points with spacing
// h = 2L/(n+1).  n must be odd (the origin is then a grid point) and >= 31.
struct GridSpec {
    double half_width = 0.0;
    int points = 0;

    static GridSpec create(double half_width, int points);

    double spacing() const { return 2.0 * half_width / (points + 1); }
    std::vector<double> axis() const; // interior coordinates, ascending
};

// H = -d2/dx2 - d2/dy2 + V on the grid: 5-point Laplacian stencil
// (-1,-1,4,-1,-1)/h^2 plus diagonal V at the nodes, zero Dirichlet boundary.
// Symmetric, at most 5 nonzeros per row, dimension n^2.  The operator is
// read-only after construction and safe to share across threads.
class HamiltonianOperator {
public:
    // Throws resource_error if n^2 exceeds max_points.
    HamiltonianOperator(const Couplings& c, const GridSpec& g,
                        std::size_t max_points = kDefaultMaxPoints);

    std::int64_t dimension() const { return dim_; }
    const GridSpec& grid() const { return grid_; }
    const Couplings& couplings() const { return couplings_; }
    const std::vector<double>& potential_diagonal() const { return vdiag_; }

    // y = H x.  The OpenMP kernel is row-parallel and elementwise, hence
    // bitwise-identical to the serial reference for any thread count.
    void apply(const double* x, double* y) const;
    void apply_serial(const double* x, double* y) const;

    static constexpr std::size_t kDefaultMaxPoints = 16u * 1024u * 1024u;

private:
    GridSpec grid_;
    Couplings couplings_;
    std::int64_t dim_ = 0;
    double inv_h2_ = 0.0;
    std::vector<double> vdiag_;
};

struct EigOptions {
    double eig_tol = 1e-8;   // on ||H v - lambda v|| / ||v||
    int basis_cap = 100;     // Lanczos vectors kept per restart
    int max_restarts = 5;
    std::uint64_t seed = 0x5ec7c0de;
};

struct SpectrumResult {
    std::vector<double> eigenvalues;     // ascending
    std::vector<double> residual_norms;  // ||H v - lambda v|| / ||v||
    GridSpec grid;
    int iterations = 0; // operator/solve applications spent
    bool converged = false;
    std::vector<double> ground_state; // eigenvector of the smallest eigenvalue
};

// k smallest eigenvalues by shift-invert Lanczos with full
// reorthogonalization and locking of converged vectors (so degenerate
// multiplicities are recovered).  Residuals are verified against the
// stencil matvec, independently of the factorized solve path.
// Non-convergence yields a partial result flagged converged = false.
SpectrumResult lowest_eigenvalues(const HamiltonianOperator& H, int k,
                                  const EigOptions& opt = {});

enum class GridPolicy { FixedSpacing, FixedPoints };
enum class Verdict { Confined, Collapsing, Inconclusive };

std::string_view to_string(Verdict v);
std::string_view to_string(GridPolicy p);

struct ScanEntry {
    double box = 0.0;
    int points = 0;
    double energy = 0.0;
    bool converged = false;
};

struct ConfinementVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<ScanEntry> ground_energies;
    double spacing_used = 0.0; // quantized spacing (fixed-h policy), else 0
};

struct ScanOptions {
    GridPolicy policy = GridPolicy::FixedSpacing;
    // FixedSpacing: target spacing; 0 picks a spacing fine enough to
    // resolve the escape tube at the largest box (see tube_resolving_spacing).
    double spacing = 0.0;
    int points = 0; // FixedPoints: n for every box (0: derive from smallest)
    double scan_tol = 1e-2;
    EigOptions eig{};
    std::size_t max_points = HamiltonianOperator::kDefaultMaxPoints;
};

// The escape tube of a D > 0 potential narrows like 1/(sqrt(gamma) x); a
// grid that does not resolve the transverse oscillator length at x ~ L
// underestimates the transverse zero-point energy and reports a spurious
// collapse.  This returns min(0.1, 0.8 / (sqrt(gamma) L)), which keeps the
// confined reference cases box-stable through L = 14.
double tube_resolving_spacing(const Couplings& c, double largest_box);

// Ground-state energies across >= 3 box sizes, classified as:
//   Confined:   |E0(L_i) - E0(L_{i+1})| nonincreasing, final gap < scan_tol
//   Collapsing: E0 strictly decreasing by more than scan_tol at every step
//   Inconclusive otherwise, or on any eigensolver non-convergence.
ConfinementVerdict confinement_scan(const Couplings& c,
                                    const std::vector<double>& boxes,
                                    const ScanOptions& opt = {});

} // namespace sextic

#endif
