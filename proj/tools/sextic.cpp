// Command-line front end: every library operation behind one binary with
// deterministic, machine-readable output (JSON or CSV on stdout).
//
// Exit codes: 0 success, 2 domain/usage error, 3 non-convergence (partial
// payload still emitted), 4 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextic/bounds.hpp"
#include "sextic/errors.hpp"
#include "sextic/exactstate.hpp"
#include "sextic/fdsolver.hpp"
#include "sextic/optimize.hpp"
#include "sextic/params.hpp"
#include "sextic/potential.hpp"
#include "sextic/rng.hpp"
#include "sextic/textio.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 2;
constexpr int kNonConverged = 3;
constexpr int kIoError = 4;

int emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return kOk;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << output_path
                  << "' for writing\n";
        return kIoError;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << output_path << "' failed\n";
        return kIoError;
    }
    return kOk;
}

void write_couplings(sextic::JsonWriter& w, const sextic::Couplings& c) {
    w.begin_object();
    w.key("A").value(c.A);
    w.key("B").value(c.B);
    w.key("C").value(c.C);
    w.key("D").value(c.D);
    w.end_object();
}

void write_greek(sextic::JsonWriter& w, const sextic::GreekParams& g) {
    w.begin_object();
    w.key("alpha").value(g.alpha);
    w.key("beta").value(g.beta);
    w.key("gamma").value(g.gamma);
    w.key("delta").value(g.delta);
    w.end_object();
}

struct GreekFlags {
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    bool has_gamma = false;
};

// shared --alpha/--beta/--gamma/--delta | --abcd input handling
struct PotentialInput {
    std::vector<double> abcd;
    GreekFlags greek;

    void add_to(CLI::App* cmd, bool allow_abcd = true) {
        cmd->add_option("--alpha", greek.alpha, "reparametrized alpha");
        cmd->add_option("--beta", greek.beta, "reparametrized beta");
        auto* g = cmd->add_option("--gamma", greek.gamma,
                                  "reparametrized gamma = sqrt(D) > 0");
        cmd->add_option("--delta", greek.delta,
                        "confinement parameter delta");
        g->each([this](const std::string&) { greek.has_gamma = true; });
        if (allow_abcd)
            cmd->add_option("--abcd", abcd, "raw couplings A B C D")
                ->expected(4);
    }

    sextic::Couplings couplings() const {
        if (!abcd.empty() && greek.has_gamma)
            throw std::domain_error(
                "give either --abcd or greek parameters, not both");
        if (!abcd.empty())
            return {abcd[0], abcd[1], abcd[2], abcd[3]};
        if (!greek.has_gamma)
            throw std::domain_error(
                "missing potential: give --abcd A B C D or "
                "--alpha/--beta/--gamma/--delta");
        return sextic::greek_to_couplings(
            {greek.alpha, greek.beta, greek.gamma, greek.delta});
    }

    std::optional<sextic::GreekParams> greek_params() const {
        if (greek.has_gamma)
            return sextic::GreekParams{greek.alpha, greek.beta, greek.gamma,
                                       greek.delta};
        return std::nullopt;
    }
};

int run_params(const std::vector<double>& abcd,
               const std::vector<double>& greek,
               const std::string& output) {
    if (abcd.empty() == greek.empty())
        throw std::domain_error(
            "params: give exactly one of --from-abcd or --from-greek");
    sextic::Couplings c;
    sextic::GreekParams g;
    if (!greek.empty()) {
        g = {greek[0], greek[1], greek[2], greek[3]};
        c = sextic::greek_to_couplings(g);
    } else {
        c = {abcd[0], abcd[1], abcd[2], abcd[3]};
        g = sextic::couplings_to_greek(c);
    }
    const sextic::Regime regime = sextic::classify_regime(g);
    std::ostringstream os;
    sextic::JsonWriter w(os);
    w.begin_object();
    w.key("schema").value("sextic.params.v1");
    w.key("couplings");
    write_couplings(w, c);
    w.key("greek");
    write_greek(w, g);
    w.key("derived").begin_object();
    w.key("sum_ab").value(g.alpha + g.beta);
    w.key("rho2").value(g.delta / (2.0 * g.gamma));
    w.key("regime").value(sextic::to_string(regime));
    if (g.delta > 0.0) w.key("m_min").value(sextic::minimal_split(g));
    w.end_object();
    w.end_object();
    os << '\n';
    return emit(os.str(), output);
}

void write_trace(sextic::JsonWriter& w, const sextic::IterationTrace& t) {
    w.begin_object();
    w.key("converged").value(t.converged);
    w.key("final_bound").value(t.final_bound);
    w.key("rows").begin_array();
    for (const auto& r : t.rows) {
        w.begin_object();
        w.key("n").value(r.n);
        w.key("eta").value(r.eta);
        w.key("theta").value(r.theta_n);
        w.key("maximum").value(r.maximum);
        w.end_object();
    }
    w.end_array();
    w.end_object();
}

std::string format_table1(const sextic::IterationTrace& t) {
    std::ostringstream os;
    os << "iteration eta theta maximum\n";
    char buf[128];
    for (const auto& r : t.rows) {
        std::snprintf(buf, sizeof buf, "%d %.8f %.8f %.8f\n", r.n, r.eta,
                      r.theta_n, r.maximum);
        os << buf;
    }
    return os.str();
}

struct BoundArgs {
    GreekFlags greek;
    double sinh_theta = 0.0;
    bool has_sinh_theta = false;
    double rho2 = 0.0;
    bool has_rho2 = false;
    std::string method = "iterate";
    double eps = 0.0;
    bool has_eps = false;
    sextic::IterateOptions iter;
    std::string format = "json";
    std::string output;
};

int run_bound(const BoundArgs& a) {
    const bool direct = a.has_sinh_theta || a.has_rho2;
    if (direct && a.greek.has_gamma)
        throw std::domain_error(
            "bound: give either greek parameters or --sinh-theta/--rho2");
    if (direct && !(a.has_sinh_theta && a.has_rho2))
        throw std::domain_error(
            "bound: direct mode needs both --sinh-theta and --rho2");
    if (!direct && !a.greek.has_gamma)
        throw std::domain_error(
            "bound: give --alpha/--beta/--gamma/--delta or "
            "--sinh-theta/--rho2");

    std::ostringstream os;
    sextic::JsonWriter w(os);
    int rc = kOk;
    std::optional<sextic::IterationTrace> trace;

    if (direct) {
        const double theta = std::asinh(a.sinh_theta);
        double w_max = 0.0;
        if (a.method == "iterate") {
            trace = sextic::iterate_w_max(theta, a.rho2, a.iter);
            w_max = trace->final_bound;
            if (!trace->converged) rc = kNonConverged;
        } else if (a.method == "oracle") {
            w_max = sextic::golden_section_max(
                        [&](double eta) {
                            return sextic::w_true(eta, theta, a.rho2);
                        },
                        0.0, 1.0)
                        .value;
        } else if (a.method == "closed0") {
            if (a.sinh_theta != 0.0)
                throw std::domain_error(
                    "bound: closed0 applies at sinh(theta) = 0 only");
            w_max = sextic::closed_form_theta0(a.rho2);
        } else {
            throw std::domain_error(
                "bound: direct mode supports methods iterate, oracle, "
                "closed0");
        }
        if (a.format == "table1") {
            if (!trace)
                throw std::domain_error(
                    "bound: --format table1 requires --method iterate");
            return rc == kOk ? emit(format_table1(*trace), a.output)
                             : (emit(format_table1(*trace), a.output), rc);
        }
        w.begin_object();
        w.key("schema").value("sextic.bound.v1");
        w.key("mode").value("direct");
        w.key("method").value(a.method);
        w.key("inputs").begin_object();
        w.key("sinh_theta").value(a.sinh_theta);
        w.key("rho2").value(a.rho2);
        w.end_object();
        w.key("w_max").value(w_max);
        if (trace) {
            w.key("trace");
            write_trace(w, *trace);
        }
        w.end_object();
        os << '\n';
        const int erc = emit(os.str(), a.output);
        return erc == kOk ? rc : erc;
    }

    const sextic::GreekParams g{a.greek.alpha, a.greek.beta, a.greek.gamma,
                                a.greek.delta};
    const auto b = sextic::BoundInputs::from_greek(g);
    double value = 0.0;
    std::string method_used = a.method;
    if (a.method == "simple") {
        value = sextic::simple_bound(b);
    } else if (a.method == "eps") {
        if (!a.has_eps)
            throw std::domain_error("bound: --method eps requires --eps");
        value = sextic::epsilon_bound(b, a.eps);
    } else if (a.method == "closed0") {
        if (std::abs(b.sinh_theta()) > 1e-12)
            throw std::domain_error(
                "bound: closed0 requires alpha + beta = 0 (theta = 0)");
        if (!(b.delta > 0.0))
            throw sextic::no_minorant_error(
                "bound: the bound requires delta > 0");
        value =
            b.sum_ab + b.prefactor() * sextic::closed_form_theta0(b.rho2());
    } else if (a.method == "iterate" || a.method == "oracle") {
        const auto scheme = a.method == "iterate"
                                ? sextic::BoundScheme::FixedPoint
                                : sextic::BoundScheme::Oracle;
        auto report = sextic::optimal_bound(b, scheme, a.iter);
        value = report.value;
        method_used = sextic::to_string(report.method);
        trace = std::move(report.trace);
        if (trace && !trace->converged) rc = kNonConverged;
    } else {
        throw std::domain_error("bound: unknown method '" + a.method + "'");
    }

    if (a.format == "table1") {
        if (!trace)
            throw std::domain_error(
                "bound: --format table1 requires --method iterate");
        const int erc = emit(format_table1(*trace), a.output);
        return erc == kOk ? rc : erc;
    }
    w.begin_object();
    w.key("schema").value("sextic.bound.v1");
    w.key("mode").value("greek");
    w.key("method").value(method_used);
    w.key("inputs").begin_object();
    w.key("sum_ab").value(b.sum_ab);
    w.key("gamma").value(b.gamma);
    w.key("delta").value(b.delta);
    w.key("rho2").value(b.rho2());
    w.key("sinh_theta").value(b.sinh_theta());
    w.end_object();
    w.key("value").value(value);
    if (method_used == "iterate" || method_used == "oracle")
        w.key("prefactor").value(b.prefactor());
    if (trace) {
        w.key("w_max").value(trace->final_bound);
        w.key("trace");
        write_trace(w, *trace);
    }
    w.end_object();
    os << '\n';
    const int erc = emit(os.str(), a.output);
    return erc == kOk ? rc : erc;
}

int run_spectrum(const PotentialInput& input, double box, int grid_points,
                 int num_eigs, double eig_tol, std::uint64_t seed,
                 std::size_t max_points, const std::string& output) {
    const sextic::Couplings c = input.couplings();
    const sextic::GridSpec grid = sextic::GridSpec::create(box, grid_points);
    const sextic::HamiltonianOperator H(c, grid, max_points);
    sextic::EigOptions opt;
    opt.eig_tol = eig_tol;
    opt.seed = seed;
    const sextic::SpectrumResult s = sextic::lowest_eigenvalues(H, num_eigs, opt);

    std::ostringstream os;
    sextic::JsonWriter w(os);
    w.begin_object();
    w.key("schema").value("sextic.spectrum.v1");
    w.key("couplings");
    write_couplings(w, c);
    w.key("grid").begin_object();
    w.key("half_width").value(grid.half_width);
    w.key("points").value(grid.points);
    w.key("spacing").value(grid.spacing());
    w.end_object();
    w.key("eig_tol").value(eig_tol);
    w.key("seed").value(static_cast<std::int64_t>(seed));
    w.key("eigenvalues").value_array(s.eigenvalues);
    w.key("residual_norms").value_array(s.residual_norms);
    w.key("iterations").value(s.iterations);
    w.key("converged").value(s.converged);
    w.end_object();
    os << '\n';
    const int erc = emit(os.str(), output);
    if (erc != kOk) return erc;
    return s.converged ? kOk : kNonConverged;
}

int run_scan(const PotentialInput& input, std::vector<double> boxes,
             const std::string& policy, double spacing, int grid_points,
             double scan_tol, double eig_tol, std::uint64_t seed,
             std::size_t max_points, const std::string& output) {
    const sextic::Couplings c = input.couplings();
    sextic::ScanOptions opt;
    opt.policy = policy == "fixed-n" ? sextic::GridPolicy::FixedPoints
                                     : sextic::GridPolicy::FixedSpacing;
    opt.spacing = spacing;
    opt.points = grid_points;
    opt.scan_tol = scan_tol;
    opt.eig.eig_tol = eig_tol;
    opt.eig.seed = seed;
    opt.max_points = max_points;
    const sextic::ConfinementVerdict verdict =
        sextic::confinement_scan(c, boxes, opt);

    bool all_converged = true;
    for (const auto& e : verdict.ground_energies)
        all_converged = all_converged && e.converged;

    std::ostringstream os;
    sextic::JsonWriter w(os);
    w.begin_object();
    w.key("schema").value("sextic.scan.v1");
    w.key("couplings");
    write_couplings(w, c);
    w.key("policy").value(sextic::to_string(opt.policy));
    if (opt.policy == sextic::GridPolicy::FixedSpacing)
        w.key("spacing").value(verdict.spacing_used);
    else
        w.key("points").value(opt.points);
    w.key("scan_tol").value(scan_tol);
    w.key("eig_tol").value(eig_tol);
    w.key("verdict").value(sextic::to_string(verdict.verdict));
    w.key("ground_energies").begin_array();
    for (const auto& e : verdict.ground_energies) {
        w.begin_object();
        w.key("box").value(e.box);
        w.key("points").value(e.points);
        w.key("energy").value(e.energy);
        w.key("converged").value(e.converged);
        w.end_object();
    }
    w.end_array();
    w.key("converged").value(all_converged);
    w.end_object();
    os << '\n';
    const int erc = emit(os.str(), output);
    if (erc != kOk) return erc;
    return all_converged ? kOk : kNonConverged;
}

int run_contour(const PotentialInput& input, double energy, double window,
                int resolution, double vertex_tol, const std::string& output) {
    const sextic::Couplings c = input.couplings();
    sextic::Window w;
    w.x_min = -window;
    w.x_max = window;
    w.y_min = -window;
    w.y_max = window;
    w.nx = resolution;
    w.ny = resolution;
    const sextic::ContourSet set =
        sextic::extract_section(c, energy, w, vertex_tol);
    std::ostringstream os;
    sextic::write_contour_csv(set, os);
    return emit(os.str(), output);
}

int run_verify_exact(const GreekFlags& greek, int samples, std::uint64_t seed,
                     double range, double stencil_h,
                     const std::string& output) {
    if (!greek.has_gamma)
        throw std::domain_error(
            "verify-exact: give --alpha/--beta/--gamma (and optionally "
            "--delta)");
    const sextic::GaussianState s{greek.alpha, greek.beta, greek.gamma};
    if (samples < 1)
        throw std::domain_error("verify-exact: --samples must be >= 1");
    sextic::SplitMix64 rng(seed);
    double max_res = 0.0, sum_res = 0.0, max_abs = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double x = rng.uniform(-range, range);
        const double y = rng.uniform(-range, range);
        const double closed = sextic::local_energy(s, greek.delta, x, y);
        const double fd =
            sextic::local_energy_fd(s, greek.delta, x, y, stencil_h);
        const double err = std::abs(fd - closed);
        const double rel = err / std::max(1.0, std::abs(closed));
        max_res = std::max(max_res, rel);
        max_abs = std::max(max_abs, err);
        sum_res += rel;
    }
    std::ostringstream os;
    sextic::JsonWriter w(os);
    w.begin_object();
    w.key("schema").value("sextic.verify-exact.v1");
    w.key("greek");
    write_greek(w, {greek.alpha, greek.beta, greek.gamma, greek.delta});
    w.key("samples").value(samples);
    w.key("seed").value(static_cast<std::int64_t>(seed));
    w.key("range").value(range);
    w.key("stencil_h").value(stencil_h);
    w.key("max_residual").value(max_res);
    w.key("mean_residual").value(sum_res / samples);
    w.key("max_abs_error").value(max_abs);
    w.end_object();
    os << '\n';
    return emit(os.str(), output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sextic: reparametrization, spectral lower bounds, finite-difference "
        "spectra, level sets and the gaussian reference state for the "
        "potential family V = A x^2 + B y^2 + C x^2 y^2 + D (x^2 y^4 + "
        "x^4 y^2)"};
    app.require_subcommand(1);

    // params
    auto* cmd_params = app.add_subcommand(
        "params", "convert couplings and classify the regime");
    std::vector<double> from_abcd, from_greek;
    std::string params_output;
    cmd_params->add_option("--from-abcd", from_abcd, "raw couplings A B C D")
        ->expected(4);
    cmd_params
        ->add_option("--from-greek", from_greek,
                     "reparametrized alpha beta gamma delta")
        ->expected(4);
    cmd_params->add_option("--output", params_output, "write payload to file");

    // bound
    auto* cmd_bound = app.add_subcommand(
        "bound", "ground-state-energy lower bounds (delta > 0); note "
                 "sinh(theta) = -sqrt(1/(2 gamma)) (alpha+beta)/2, so "
                 "positive sinh(theta) means alpha+beta < 0");
    BoundArgs ba;
    cmd_bound->add_option("--alpha", ba.greek.alpha, "");
    cmd_bound->add_option("--beta", ba.greek.beta, "");
    auto* bg = cmd_bound->add_option("--gamma", ba.greek.gamma, "");
    cmd_bound->add_option("--delta", ba.greek.delta, "");
    bg->each([&ba](const std::string&) { ba.greek.has_gamma = true; });
    cmd_bound->add_option("--sinh-theta", ba.sinh_theta,
                          "direct mode: sinh of the slope parameter")
        ->each([&ba](const std::string&) { ba.has_sinh_theta = true; });
    cmd_bound->add_option("--rho2", ba.rho2, "direct mode: delta/(2 gamma)")
        ->each([&ba](const std::string&) { ba.has_rho2 = true; });
    cmd_bound->add_option("--method", ba.method,
                          "simple|eps|closed0|iterate|oracle");
    cmd_bound->add_option("--eps", ba.eps, "epsilon for --method eps")
        ->each([&ba](const std::string&) { ba.has_eps = true; });
    cmd_bound->add_option("--eta0", ba.iter.eta0, "iteration warm start");
    cmd_bound->add_option("--tol", ba.iter.tol, "|eta_{n+1}-eta_n| stop");
    cmd_bound->add_option("--max-iter", ba.iter.max_iter, "iteration cap");
    cmd_bound->add_option("--format", ba.format, "json|table1");
    cmd_bound->add_option("--output", ba.output, "write payload to file");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "lowest eigenvalues of the discretized Hamiltonian");
    PotentialInput spec_input;
    spec_input.add_to(cmd_spectrum);
    double spec_box = 8.0;
    int spec_grid = 161, spec_eigs = 1;
    double spec_tol = 1e-8;
    std::uint64_t spec_seed = 0x5ec7c0de;
    std::size_t spec_cap = sextic::HamiltonianOperator::kDefaultMaxPoints;
    std::string spec_output;
    cmd_spectrum->add_option("--box", spec_box, "box half-width L");
    cmd_spectrum->add_option("--grid", spec_grid,
                             "interior points per axis (odd, >= 31)");
    cmd_spectrum->add_option("--num-eigs", spec_eigs, "eigenvalue count");
    cmd_spectrum->add_option("--eig-tol", spec_tol, "residual tolerance");
    cmd_spectrum->add_option("--seed", spec_seed, "start-vector seed");
    cmd_spectrum->add_option("--max-points", spec_cap, "grid memory cap");
    cmd_spectrum->add_option("--output", spec_output, "write payload to file");

    // scan
    auto* cmd_scan = app.add_subcommand(
        "scan", "confinement/collapse detection across box sizes");
    PotentialInput scan_input;
    scan_input.add_to(cmd_scan);
    std::vector<double> scan_boxes;
    std::string scan_policy = "fixed-h";
    double scan_h = 0.0, scan_tol = 1e-2, scan_eig_tol = 1e-6;
    int scan_grid = 0;
    std::uint64_t scan_seed = 0x5ec7c0de;
    std::size_t scan_cap = sextic::HamiltonianOperator::kDefaultMaxPoints;
    std::string scan_output;
    cmd_scan->add_option("--boxes", scan_boxes, "box half-widths, ascending")
        ->required()
        ->delimiter(',');
    cmd_scan->add_option("--policy", scan_policy, "fixed-h|fixed-n");
    cmd_scan->add_option("--spacing", scan_h,
                         "target spacing for fixed-h (0: auto, resolves the "
                         "escape tube at the largest box)");
    cmd_scan->add_option("--grid", scan_grid, "points per axis for fixed-n");
    cmd_scan->add_option("--scan-tol", scan_tol, "energy drift tolerance");
    cmd_scan->add_option("--eig-tol", scan_eig_tol, "residual tolerance");
    cmd_scan->add_option("--seed", scan_seed, "start-vector seed");
    cmd_scan->add_option("--max-points", scan_cap, "grid memory cap");
    cmd_scan->add_option("--output", scan_output, "write payload to file");

    // contour
    auto* cmd_contour = app.add_subcommand(
        "contour", "equipotential section V = E as CSV polylines");
    PotentialInput contour_input;
    contour_input.add_to(cmd_contour);
    double contour_energy = 0.0, contour_window = 10.0, contour_tol = 1e-9;
    int contour_res = 401;
    std::string contour_output;
    cmd_contour->add_option("--energy", contour_energy, "section energy E")
        ->required();
    cmd_contour->add_option("--window", contour_window,
                            "half-width of the square sampling window");
    cmd_contour->add_option("--resolution", contour_res,
                            "samples per axis (>= 2)");
    cmd_contour->add_option("--tol", contour_tol,
                            "vertex residual tolerance (relative to "
                            "max(1,|E|))");
    cmd_contour->add_option("--output", contour_output, "write CSV to file");

    // verify-exact
    auto* cmd_verify = app.add_subcommand(
        "verify-exact",
        "residuals of the closed-form local energy of the gaussian state "
        "against an independent finite-difference stencil");
    GreekFlags verify_greek;
    cmd_verify->add_option("--alpha", verify_greek.alpha, "");
    cmd_verify->add_option("--beta", verify_greek.beta, "");
    auto* vg = cmd_verify->add_option("--gamma", verify_greek.gamma, "");
    cmd_verify->add_option("--delta", verify_greek.delta, "");
    vg->each([&verify_greek](const std::string&) {
        verify_greek.has_gamma = true;
    });
    int verify_samples = 1000;
    std::uint64_t verify_seed = 1;
    double verify_range = 1.25, verify_h = 1e-3;
    std::string verify_output;
    cmd_verify->add_option("--samples", verify_samples, "sample count");
    cmd_verify->add_option("--seed", verify_seed, "sampling seed");
    cmd_verify->add_option("--range", verify_range,
                           "samples drawn uniformly from [-range, range]^2");
    cmd_verify->add_option("--stencil-h", verify_h, "stencil spacing");
    cmd_verify->add_option("--output", verify_output, "write payload to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kDomainError;
    }

    try {
        if (cmd_params->parsed())
            return run_params(from_abcd, from_greek, params_output);
        if (cmd_bound->parsed()) return run_bound(ba);
        if (cmd_spectrum->parsed())
            return run_spectrum(spec_input, spec_box, spec_grid, spec_eigs,
                                spec_tol, spec_seed, spec_cap, spec_output);
        if (cmd_scan->parsed())
            return run_scan(scan_input, scan_boxes, scan_policy, scan_h,
                            scan_grid, scan_tol, scan_eig_tol, scan_seed,
                            scan_cap, scan_output);
        if (cmd_contour->parsed())
            return run_contour(contour_input, contour_energy, contour_window,
                               contour_res, contour_tol, contour_output);
        if (cmd_verify->parsed())
            return run_verify_exact(verify_greek, verify_samples, verify_seed,
                                    verify_range, verify_h, verify_output);
    } catch (const sextic::resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kDomainError;
}
