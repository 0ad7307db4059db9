#include "sextic/fdsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "sextic/errors.hpp"
#include "sextic/potential.hpp"
#include "sextic/rng.hpp"

namespace sextic {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Confined: return "Confined";
        case Verdict::Collapsing: return "Collapsing";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view to_string(GridPolicy p) {
    return p == GridPolicy::FixedSpacing ? "fixed-h" : "fixed-n";
}

GridSpec GridSpec::create(double half_width, int points) {
    if (!(half_width > 0.0))
        throw std::domain_error("GridSpec: box half-width must be > 0");
    if (points < 31)
        throw std::domain_error("GridSpec: need at least 31 points per axis");
    if (points % 2 == 0)
        throw std::domain_error(
            "GridSpec: points per axis must be odd so the origin is a node");
    return {half_width, points};
}

std::vector<double> GridSpec::axis() const {
    const double h = spacing();
    std::vector<double> x(static_cast<std::size_t>(points));
    const int mid = points / 2;
    for (int i = 0; i < mid; ++i) {
        x[static_cast<std::size_t>(i)] = -half_width + (i + 1) * h;
        x[static_cast<std::size_t>(points - 1 - i)] =
            -x[static_cast<std::size_t>(i)];
    }
    x[static_cast<std::size_t>(mid)] = 0.0;
    return x;
}

HamiltonianOperator::HamiltonianOperator(const Couplings& c, const GridSpec& g,
                                         std::size_t max_points)
    : grid_(GridSpec::create(g.half_width, g.points)), couplings_(c) {
    const std::int64_t n = grid_.points;
    dim_ = n * n;
    if (static_cast<std::size_t>(dim_) > max_points)
        throw resource_error("HamiltonianOperator: n^2 = " +
                             std::to_string(dim_) +
                             " exceeds the configured cap of " +
                             std::to_string(max_points) + " grid points");
    if (c.D < 0.0)
        throw std::domain_error("HamiltonianOperator: requires D >= 0");
    const double h = grid_.spacing();
    inv_h2_ = 1.0 / (h * h);
    const auto xs = grid_.axis();
    vdiag_.resize(static_cast<std::size_t>(dim_));
#pragma omp parallel for schedule(static)
    for (int j = 0; j < static_cast<int>(n); ++j) {
        double* row = vdiag_.data() + static_cast<std::size_t>(j) * n;
        const double y = xs[static_cast<std::size_t>(j)];
        for (int i = 0; i < static_cast<int>(n); ++i)
            row[i] = evaluate(c, xs[static_cast<std::size_t>(i)], y);
    }
}

namespace {

void stencil_apply(const GridSpec& grid, const std::vector<double>& vdiag,
                   double inv_h2, const double* x, double* y, bool parallel) {
    const int n = grid.points;
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        const double* xr = x + static_cast<std::size_t>(j) * n;
        double* yr = y + static_cast<std::size_t>(j) * n;
        const double* vr = vdiag.data() + static_cast<std::size_t>(j) * n;
        const double* xd = j > 0 ? xr - n : nullptr;
        const double* xu = j + 1 < n ? xr + n : nullptr;
        for (int i = 0; i < n; ++i) {
            double acc = 4.0 * xr[i];
            if (i > 0) acc -= xr[i - 1];
            if (i + 1 < n) acc -= xr[i + 1];
            if (xd) acc -= xd[i];
            if (xu) acc -= xu[i];
            yr[i] = inv_h2 * acc + vr[i] * xr[i];
        }
    }
}

// dot product over a fixed 256-way chunking: the reduction order does not
// depend on the thread count, so results are bitwise reproducible.
double det_dot(const double* a, const double* b, std::int64_t n) {
    constexpr int kChunks = 256;
    double partial[kChunks];
#pragma omp parallel for schedule(static)
    for (int c = 0; c < kChunks; ++c) {
        const std::int64_t lo = n * c / kChunks;
        const std::int64_t hi = n * (c + 1) / kChunks;
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[c] = s;
    }
    double s = 0.0;
    for (int c = 0; c < kChunks; ++c) s += partial[c];
    return s;
}

double det_norm(const double* a, std::int64_t n) {
    return std::sqrt(det_dot(a, a, n));
}

void axpy(double alpha, const double* x, double* y, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::int64_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) x[i] *= alpha;
}

using SpMat = Eigen::SparseMatrix<double>;

SpMat assemble_sparse(const HamiltonianOperator& H) {
    const int n = H.grid().points;
    const std::int64_t N = H.dimension();
    const double ih2 =
        1.0 / (H.grid().spacing() * H.grid().spacing());
    const auto& v = H.potential_diagonal();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(5 * N));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int row = j * n + i;
            trip.emplace_back(row, row,
                              4.0 * ih2 + v[static_cast<std::size_t>(row)]);
            if (i > 0) trip.emplace_back(row, row - 1, -ih2);
            if (i + 1 < n) trip.emplace_back(row, row + 1, -ih2);
            if (j > 0) trip.emplace_back(row, row - n, -ih2);
            if (j + 1 < n) trip.emplace_back(row, row + n, -ih2);
        }
    SpMat A(static_cast<int>(N), static_cast<int>(N));
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

struct LockedPair {
    double lambda;
    double residual;
    std::vector<double> vec;
};

class ShiftInvertSolver {
public:
    ShiftInvertSolver(const HamiltonianOperator& H, const EigOptions& opt)
        : H_(H), opt_(opt), N_(H.dimension()), A_(assemble_sparse(H)) {
        id_.resize(static_cast<int>(N_), static_cast<int>(N_));
        id_.setIdentity();
    }

    SpectrumResult run(int k);

private:
    bool factorize(double sigma) {
        SpMat shifted = A_ - sigma * id_;
        ldlt_.compute(shifted);
        if (ldlt_.info() != Eigen::Success) return false;
        // probe for a silent breakdown (NaN/Inf from a near-zero pivot)
        Eigen::VectorXd probe = Eigen::VectorXd::Ones(N_);
        Eigen::VectorXd out = ldlt_.solve(probe);
        return out.allFinite();
    }

    bool safe_factorize(double& sigma) {
        double s = sigma;
        for (int attempt = 0; attempt < 4; ++attempt) {
            if (factorize(s)) {
                sigma = s;
                return true;
            }
            s -= (1.0 + 1e-3 * std::abs(s)) * (1 << attempt);
        }
        return false;
    }

    void solve_into(const double* x, double* y) {
        Eigen::Map<const Eigen::VectorXd> xv(x, N_);
        Eigen::Map<Eigen::VectorXd> yv(y, N_);
        yv = ldlt_.solve(xv);
        ++ops_;
    }

    void orth_against_locked(double* w) {
        for (const auto& p : locked_) {
            const double c = det_dot(w, p.vec.data(), N_);
            axpy(-c, p.vec.data(), w, N_);
        }
    }

    // true Rayleigh quotient and residual through the stencil matvec,
    // independent of the factorized solve path
    std::pair<double, double> rayleigh_residual(const double* y) {
        std::vector<double> hy(static_cast<std::size_t>(N_));
        H_.apply(y, hy.data());
        ++ops_;
        const double nrm2 = det_dot(y, y, N_);
        const double lam = det_dot(y, hy.data(), N_) / nrm2;
        axpy(-lam, y, hy.data(), N_);
        return {lam, det_norm(hy.data(), N_) / std::sqrt(nrm2)};
    }

    const HamiltonianOperator& H_;
    EigOptions opt_;
    std::int64_t N_;
    SpMat A_, id_;
    Eigen::SimplicialLDLT<SpMat> ldlt_;
    std::vector<LockedPair> locked_;
    int ops_ = 0;
};

SpectrumResult ShiftInvertSolver::run(int k) {
    SplitMix64 rng(opt_.seed);
    const double min_v = *std::min_element(H_.potential_diagonal().begin(),
                                           H_.potential_diagonal().end());
    double sigma = min_v - 1.0;
    const int cap = std::max(2 * k + 10, opt_.basis_cap);
    std::vector<double> basis(static_cast<std::size_t>(cap + 1) * N_);
    std::vector<double> w(static_cast<std::size_t>(N_));
    std::vector<double> start(static_cast<std::size_t>(N_));
    std::vector<double> ritz_estimates; // unlocked, ascending
    for (auto& v : start) v = rng.uniform(-1.0, 1.0);

    const int max_passes = opt_.max_restarts + k;
    for (int pass = 0;
         pass < max_passes && static_cast<int>(locked_.size()) < k; ++pass) {
        if (!safe_factorize(sigma)) break;

        // fresh Krylov space orthogonal to everything locked so far;
        // this is what recovers degenerate multiplicities
        double* v0 = basis.data();
        std::copy(start.begin(), start.end(), v0);
        orth_against_locked(v0);
        double nrm = det_norm(v0, N_);
        if (!(nrm > 1e-8)) {
            for (std::int64_t i = 0; i < N_; ++i) v0[i] = rng.uniform(-1, 1);
            orth_against_locked(v0);
            nrm = det_norm(v0, N_);
        }
        scal(1.0 / nrm, v0, N_);

        std::vector<double> alpha, beta;
        alpha.reserve(static_cast<std::size_t>(cap));
        beta.reserve(static_cast<std::size_t>(cap));
        bool locked_this_pass = false;
        // the first pass only needs a rough location for the re-shift
        const int cap_pass = pass == 0 ? std::min(cap, 64) : cap;
        int m = 0;
        for (int j = 0; j < cap_pass; ++j) {
            const double* vj = basis.data() + static_cast<std::size_t>(j) * N_;
            solve_into(vj, w.data());
            alpha.push_back(det_dot(w.data(), vj, N_));
            // full reorthogonalization, two passes, locked space included
            for (int rep = 0; rep < 2; ++rep) {
                orth_against_locked(w.data());
                for (int i = 0; i <= j; ++i) {
                    const double* vi =
                        basis.data() + static_cast<std::size_t>(i) * N_;
                    const double c = det_dot(w.data(), vi, N_);
                    axpy(-c, vi, w.data(), N_);
                }
            }
            const double b = det_norm(w.data(), N_);
            m = j + 1;
            const bool breakdown = !(b > 1e-12);
            if (!breakdown) {
                beta.push_back(b);
                double* vnext =
                    basis.data() + static_cast<std::size_t>(j + 1) * N_;
                for (std::int64_t i = 0; i < N_; ++i) vnext[i] = w[i] / b;
            }

            const bool checkpoint =
                breakdown || m == cap_pass || (m >= 8 && m % 8 == 0);
            if (checkpoint) {
                Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
                for (int i = 0; i < m; ++i) {
                    T(i, i) = alpha[static_cast<std::size_t>(i)];
                    if (i + 1 < m)
                        T(i, i + 1) = T(i + 1, i) =
                            beta[static_cast<std::size_t>(i)];
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
                struct Cand {
                    double lambda;
                    double inner;
                    int idx;
                };
                std::vector<Cand> cands;
                const double blast = breakdown ? 0.0 : beta.back();
                for (int i = 0; i < m; ++i) {
                    const double mu = es.eigenvalues()(i);
                    if (std::abs(mu) < 1e-300) continue;
                    const double lam = sigma + 1.0 / mu;
                    const double inner =
                        std::abs(blast * es.eigenvectors()(m - 1, i));
                    cands.push_back({lam, inner, i});
                }
                std::sort(cands.begin(), cands.end(),
                          [](const Cand& a, const Cand& b) {
                              return a.lambda < b.lambda;
                          });
                ritz_estimates.clear();
                for (std::size_t i = 0;
                     i < cands.size() &&
                     i < static_cast<std::size_t>(k) + 2;
                     ++i)
                    ritz_estimates.push_back(cands[i].lambda);
                if (!cands.empty()) {
                    const Cand& c0 = cands.front();
                    const double mu0 = es.eigenvalues()(c0.idx);
                    if (breakdown || m == cap_pass ||
                        c0.inner <= 1e-2 * std::max(std::abs(mu0), 1e-3)) {
                        // assemble the Ritz vector and verify for real
                        std::vector<double> y(static_cast<std::size_t>(N_),
                                              0.0);
                        for (int i = 0; i < m; ++i)
                            axpy(es.eigenvectors()(i, c0.idx),
                                 basis.data() +
                                     static_cast<std::size_t>(i) * N_,
                                 y.data(), N_);
                        orth_against_locked(y.data());
                        const double ynrm = det_norm(y.data(), N_);
                        if (ynrm > 1e-8) {
                            scal(1.0 / ynrm, y.data(), N_);
                            auto [lam, res] = rayleigh_residual(y.data());
                            if (res <= opt_.eig_tol) {
                                locked_.push_back(
                                    {lam, res, std::move(y)});
                                locked_this_pass = true;
                                if (ritz_estimates.size() > 1)
                                    std::copy(ritz_estimates.begin() + 1,
                                              ritz_estimates.end(),
                                              ritz_estimates.begin());
                                if (!ritz_estimates.empty())
                                    ritz_estimates.pop_back();
                                break; // restart with a deflated space
                            }
                        }
                    }
                }
                if (breakdown) break;
            }
        }

        // aim the next factorization just below the smallest unlocked
        // estimate; a shift that lands slightly above it still converges
        // (the eigenvalue shows up at negative 1/(lambda - sigma))
        if (!ritz_estimates.empty()) {
            const double target = ritz_estimates.front();
            double margin = std::max(1e-3 * std::max(1.0, std::abs(target)),
                                     1e-6);
            if (ritz_estimates.size() > 1)
                margin = std::max(
                    margin, 0.02 * (ritz_estimates[1] - target));
            sigma = target - margin;
        }
        (void)locked_this_pass;
        for (auto& v : start) v = rng.uniform(-1.0, 1.0);
    }

    std::sort(locked_.begin(), locked_.end(),
              [](const LockedPair& a, const LockedPair& b) {
                  return a.lambda < b.lambda;
              });
    SpectrumResult result;
    result.grid = H_.grid();
    result.iterations = ops_;
    result.converged = static_cast<int>(locked_.size()) >= k;
    const int keep = std::min<int>(k, static_cast<int>(locked_.size()));
    for (int i = 0; i < keep; ++i) {
        result.eigenvalues.push_back(locked_[static_cast<std::size_t>(i)].lambda);
        result.residual_norms.push_back(
            locked_[static_cast<std::size_t>(i)].residual);
    }
    if (keep > 0) result.ground_state = std::move(locked_.front().vec);
    return result;
}

} // namespace

void HamiltonianOperator::apply(const double* x, double* y) const {
    stencil_apply(grid_, vdiag_, inv_h2_, x, y, true);
}

void HamiltonianOperator::apply_serial(const double* x, double* y) const {
    stencil_apply(grid_, vdiag_, inv_h2_, x, y, false);
}

SpectrumResult lowest_eigenvalues(const HamiltonianOperator& H, int k,
                                  const EigOptions& opt) {
    if (k < 1) throw std::domain_error("lowest_eigenvalues: k must be >= 1");
    if (k + 10 > H.dimension())
        throw std::domain_error(
            "lowest_eigenvalues: k must be far smaller than the grid size");
    ShiftInvertSolver solver(H, opt);
    return solver.run(k);
}

double tube_resolving_spacing(const Couplings& c, double largest_box) {
    if (!(largest_box > 0.0))
        throw std::domain_error("tube_resolving_spacing: box must be > 0");
    if (!(c.D > 0.0)) return 0.1;
    const double gamma = std::sqrt(c.D);
    return std::min(0.1, 0.8 / (std::sqrt(gamma) * largest_box));
}

namespace {

// Snap the spacing to 1/integer: integer box half-widths then share the
// exact same h (2 L m is even, so n = 2 L m - 1 is odd automatically), and
// the ground energies across boxes differ only by truncation, not by
// discretization wobble.
double quantize_spacing(double spacing) {
    return 1.0 / std::ceil(1.0 / spacing);
}

int odd_points_for(double box, double spacing) {
    int n = static_cast<int>(std::lround(2.0 * box / spacing)) - 1;
    if (n % 2 == 0) ++n;
    return std::max(n, 31);
}

} // namespace

ConfinementVerdict confinement_scan(const Couplings& c,
                                    const std::vector<double>& boxes,
                                    const ScanOptions& opt) {
    if (boxes.size() < 3)
        throw std::domain_error("confinement_scan: need at least 3 box sizes");
    if (!std::is_sorted(boxes.begin(), boxes.end()))
        throw std::domain_error(
            "confinement_scan: box sizes must be ascending");

    double spacing = opt.spacing;
    if (opt.policy == GridPolicy::FixedSpacing) {
        if (spacing <= 0.0) spacing = tube_resolving_spacing(c, boxes.back());
        spacing = quantize_spacing(spacing);
    }
    if (opt.policy == GridPolicy::FixedPoints && opt.points < 31)
        throw std::domain_error(
            "confinement_scan: fixed-n policy needs points >= 31");

    ConfinementVerdict verdict;
    verdict.spacing_used =
        opt.policy == GridPolicy::FixedSpacing ? spacing : 0.0;
    bool all_converged = true;
    for (double box : boxes) {
        const int n = opt.policy == GridPolicy::FixedSpacing
                          ? odd_points_for(box, spacing)
                          : opt.points;
        const HamiltonianOperator H(c, GridSpec{box, n}, opt.max_points);
        const SpectrumResult s = lowest_eigenvalues(H, 1, opt.eig);
        ScanEntry entry;
        entry.box = box;
        entry.points = n;
        entry.converged = s.converged;
        entry.energy = s.eigenvalues.empty()
                           ? std::numeric_limits<double>::quiet_NaN()
                           : s.eigenvalues.front();
        verdict.ground_energies.push_back(entry);
        all_converged = all_converged && s.converged;
    }
    if (!all_converged) {
        verdict.verdict = Verdict::Inconclusive;
        return verdict;
    }
    const auto& ge = verdict.ground_energies;
    // slack keeps eigensolver-level noise on already-flat scans from
    // flipping the monotonicity test
    const double slack = 0.01 * opt.scan_tol;
    bool gaps_decreasing = true;
    for (std::size_t i = 2; i < ge.size(); ++i) {
        const double prev = std::abs(ge[i - 1].energy - ge[i - 2].energy);
        const double cur = std::abs(ge[i].energy - ge[i - 1].energy);
        if (cur > prev + slack) gaps_decreasing = false;
    }
    const double last_gap =
        std::abs(ge.back().energy - ge[ge.size() - 2].energy);
    bool strictly_falling = true;
    for (std::size_t i = 1; i < ge.size(); ++i)
        if (!(ge[i - 1].energy - ge[i].energy > opt.scan_tol))
            strictly_falling = false;
    if (gaps_decreasing && last_gap < opt.scan_tol)
        verdict.verdict = Verdict::Confined;
    else if (strictly_falling)
        verdict.verdict = Verdict::Collapsing;
    else
        verdict.verdict = Verdict::Inconclusive;
    return verdict;
}

} // namespace sextic
