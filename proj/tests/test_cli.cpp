#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sextic/potential.hpp"
#include "test_util.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// run the built binary through the shell, capturing stdout only
RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(SEXTIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("params from greek and from couplings") {
    const RunResult r = run_cli("params --from-greek 0 0 1.1 0.1");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["schema"] == "sextic.params.v1");
    CHECK(close_rel(j["couplings"]["A"].get<double>(), -1.0, 1e-14));
    CHECK(j["derived"]["regime"] == "BottomlessConfining");
    CHECK(close_rel(j["derived"]["m_min"].get<double>(), 121.0 / 21.0,
                    1e-12));

    const RunResult inv = run_cli("params --from-abcd 0.5 3.5 6 1");
    CHECK(inv.exit_code == 0);
    const json ji = json::parse(inv.out);
    CHECK(close_rel(ji["greek"]["alpha"].get<double>(), 1.0, 1e-12));
    CHECK(close_rel(ji["greek"]["beta"].get<double>(), 2.0, 1e-12));
    CHECK(ji["derived"]["regime"] == "ClassicallyConfining");

    // applying the command to its own output round-trips
    const RunResult fwd = run_cli("params --from-greek 1 2 1 0.5");
    const json jf = json::parse(fwd.out);
    std::ostringstream back;
    back << "params --from-abcd " << jf["couplings"]["A"] << ' '
         << jf["couplings"]["B"] << ' ' << jf["couplings"]["C"] << ' '
         << jf["couplings"]["D"];
    const json jb = json::parse(run_cli(back.str()).out);
    CHECK(close_rel(jb["greek"]["delta"].get<double>(), 0.5, 1e-12));
}

TEST_CASE("exit code 2 on the singular inverse and usage errors") {
    CHECK(run_cli("params --from-abcd -1 -1 0 1.21").exit_code == 2);
    CHECK(run_cli("params").exit_code == 2);
    CHECK(run_cli("params --from-greek 1 2 1 0.5 --from-abcd 1 1 1 1")
              .exit_code == 2);
    CHECK(run_cli("bound --alpha 3 --beta 0 --gamma 1 --delta -0.1 "
                  "--method simple")
              .exit_code == 2);
    CHECK(run_cli("bound --sinh-theta 1 --rho2 0.4 --method nosuch")
              .exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("spectrum --abcd 1 1 0 0 --box 8 --grid 161 "
                  "--max-points 100")
              .exit_code == 2);
}

TEST_CASE("exit code 3 on non-convergence with partial payload") {
    const RunResult r = run_cli(
        "bound --sinh-theta 1 --rho2 0.4 --method iterate --tol 1e-16 "
        "--max-iter 3");
    CHECK(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j["trace"]["converged"] == false);
    CHECK(j["trace"]["rows"].size() == 4);
}

TEST_CASE("exit code 4 on unwritable output") {
    CHECK(run_cli("params --from-greek 0 0 1.1 0.1 --output "
                  "/nonexistent-dir/x.json")
              .exit_code == 4);
}

TEST_CASE("simple bound value") {
    const RunResult r = run_cli(
        "bound --alpha 0 --beta 0 --gamma 1.1 --delta 0.1 --method simple");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == 0.0);
}

TEST_CASE("iteration trace matches the stored golden file") {
    const RunResult a =
        run_cli("bound --sinh-theta 1 --rho2 0.4 --method iterate "
                "--format table1");
    CHECK(a.exit_code == 0);
    CHECK(a.out ==
          read_file(std::string(SEXTIC_TEST_DATA_DIR) + "/table1a.txt"));
    const RunResult b =
        run_cli("bound --sinh-theta 2 --rho2 0.4 --method iterate "
                "--format table1");
    CHECK(b.exit_code == 0);
    CHECK(b.out ==
          read_file(std::string(SEXTIC_TEST_DATA_DIR) + "/table1b.txt"));

    // spot-check the first computed row against the frozen reference precision
    std::istringstream rows(a.out);
    std::string line;
    std::getline(rows, line); // header
    std::getline(rows, line); // n = 0
    std::getline(rows, line); // n = 1
    int n;
    double eta, theta, maximum;
    REQUIRE(std::sscanf(line.c_str(), "%d %lf %lf %lf", &n, &eta, &theta,
                        &maximum) == 4);
    CHECK(n == 1);
    CHECK(rounds_to(eta, 0.895, 3));
    CHECK(rounds_to(theta, 1.0464, 4));
    CHECK(rounds_to(maximum, 1.14059, 5));
}

TEST_CASE("oracle dominates the iterative bound") {
    const json it = json::parse(
        run_cli("bound --alpha -1.4832396974191326 --beta "
                "-1.4832396974191326 --gamma 1.1 --delta 0.88 "
                "--method iterate")
            .out);
    const json oracle = json::parse(
        run_cli("bound --alpha -1.4832396974191326 --beta "
                "-1.4832396974191326 --gamma 1.1 --delta 0.88 "
                "--method oracle")
            .out);
    CHECK(oracle["value"].get<double>() >= it["value"].get<double>());
    CHECK(close_rel(it["value"].get<double>(), -0.25844879103289649, 1e-9));
}

TEST_CASE("byte-identical reruns") {
    const std::string cmds[] = {
        "verify-exact --alpha 1 --beta 2 --gamma 1.5 --delta 0.3 "
        "--samples 500 --seed 42",
        "spectrum --abcd 1 1 0 0 --box 6 --grid 61 --num-eigs 2",
        "contour --abcd -1 -1 0 1.21 --energy -2.25 --window 10 "
        "--resolution 101",
        "params --from-greek 0.3 -0.2 2.25 0.7",
    };
    for (const auto& cmd : cmds) {
        const RunResult r1 = run_cli(cmd);
        const RunResult r2 = run_cli(cmd);
        CHECK(r1.exit_code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("spectrum of the critical couplings through the CLI") {
    const RunResult r = run_cli(
        "spectrum --alpha 1 --beta 1 --gamma 1 --delta 0 --box 7 "
        "--grid 201 --num-eigs 1");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["converged"] == true);
    CHECK(close_abs(j["eigenvalues"][0].get<double>(), 2.0, 5e-3));
}

TEST_CASE("contour rows satisfy the section equation") {
    const double energy = -2.25;
    const RunResult r = run_cli(
        "contour --abcd -1 -1 0 1.21 --energy -2.25 --window 10 "
        "--resolution 101");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "polyline_id,point_index,x,y");
    const sextic::Couplings c{-1, -1, 0, 1.21};
    int rows = 0;
    while (std::getline(is, line)) {
        const auto c2 = line.find(',', line.find(',') + 1);
        const auto c3 = line.find(',', c2 + 1);
        const double x = std::strtod(line.c_str() + c2 + 1, nullptr);
        const double y = std::strtod(line.c_str() + c3 + 1, nullptr);
        CHECK(std::abs(sextic::evaluate(c, x, y) - energy) <=
              1e-6 * std::max(1.0, std::abs(energy)));
        ++rows;
    }
    CHECK(rows > 100);
}

TEST_CASE("scan exit code 3 when the eigensolver cannot converge") {
    const RunResult r = run_cli(
        "scan --abcd 1 1 0 0 --boxes 4,5,6 --policy fixed-n --grid 31 "
        "--eig-tol 1e-16");
    CHECK(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j["verdict"] == "Inconclusive");
    CHECK(j["converged"] == false);
}

TEST_CASE("scan verdicts through the CLI") {
    const RunResult r =
        run_cli("scan --abcd 1 1 0 0 --boxes 5,6,7 --eig-tol 1e-6");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["verdict"] == "Confined");
    CHECK(j["policy"] == "fixed-h");
    CHECK(j["spacing"].get<double>() == 0.1);
    REQUIRE(j["ground_energies"].size() == 3);
    for (const auto& e : j["ground_energies"])
        CHECK(e["converged"] == true);
}

TEST_SUITE_END();
