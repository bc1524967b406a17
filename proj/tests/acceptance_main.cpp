// Acceptance gate: every release-blocking check in one binary, one line per
// criterion. Exit status 0 only if all criteria pass. The CLI round-trip
// criterion needs the path to the built executable via --cli.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "taucube/cli_commands.hpp"
#include "taucube/fft.hpp"
#include "taucube/pseudo_hyperbolic.hpp"
#include "taucube/roots.hpp"
#include "taucube/run_config.hpp"
#include "taucube/solver.hpp"
#include "taucube/tau_algebra.hpp"

namespace {

namespace fs = std::filesystem;

using taucube::Complex;
using taucube::CubicRoots;
using taucube::EvolutionParams;
using taucube::GridSpec;
using taucube::Matrix3;
using taucube::StateVector;

struct Outcome {
    bool pass;
    std::string detail;
};

double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Complex sample_disk(std::mt19937_64& gen, double radius) {
    const double r = radius * std::sqrt(uniform01(gen));
    const double theta = 2.0 * std::numbers::pi * uniform01(gen);
    return std::polar(r, theta);
}

std::string detail_residual(double worst, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max residual %.3e, tol %.0e", worst, tol);
    return buf;
}

Outcome criterion_roots_of_unity() {
    const CubicRoots eps = taucube::cube_roots_of_unity();
    double worst = 0.0;
    for (const Complex& e : eps.all()) worst = std::max(worst, std::abs(e * e * e - 1.0));
    worst = std::max(worst, std::abs(eps.eps0 + eps.eps_plus + eps.eps_minus));
    worst = std::max(worst, std::abs(eps.eps_plus * eps.eps_minus - 1.0));
    return {worst <= 1e-15, detail_residual(worst, 1e-15)};
}

Outcome criterion_clifford_pairs() {
    double worst = 0.0;
    bool all_ok = true;
    for (int j = 1; j <= 3; ++j) {
        for (int l = 1; l <= 3; ++l) {
            if (j == l) continue;
            const auto report = taucube::check_cubic_clifford(taucube::tau(j), taucube::tau(l), 1e-14);
            all_ok = all_ok && report.cube_a_ok && report.cube_b_ok && report.mixed_ok;
            worst = std::max(worst, report.max_residual);
        }
    }
    return {all_ok && worst <= 1e-14, detail_residual(worst, 1e-14)};
}

Outcome criterion_commutator() {
    const double residual = taucube::max_abs(taucube::commutator(taucube::tau(1), taucube::tau(2)) +
                                             Complex(0.0, std::sqrt(3.0)) * taucube::tau(3));
    return {residual <= 1e-15, detail_residual(residual, 1e-15)};
}

Outcome criterion_cubic_linearization() {
    std::mt19937_64 gen(41);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex b = sample_disk(gen, 2.0);
        const Complex c = (i % 10 == 9) ? -b : sample_disk(gen, 2.0);
        const Matrix3 m = taucube::cubic_combination(b, c);
        worst = std::max(worst, taucube::max_abs(m * m * m - (b * b * b + c * c * c) *
                                                                 Matrix3::identity()));
    }
    return {worst <= 1e-12, detail_residual(worst, 1e-12) + " (100 samples, every 10th forced c=-b)"};
}

Outcome criterion_pseudo_hyperbolic() {
    const CubicRoots eps = taucube::cube_roots_of_unity();
    std::mt19937_64 gen(52);
    double worst_series = 0.0, worst_sum = 0.0, worst_det = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex alpha = sample_disk(gen, 5.0);
        const Complex c0 = taucube::pseudo_hyp(0, alpha);
        const Complex c1 = taucube::pseudo_hyp(1, alpha);
        const Complex c2 = taucube::pseudo_hyp(2, alpha);
        const Complex values[3] = {c0, c1, c2};
        for (int m = 0; m < 3; ++m) {
            const Complex series = taucube::pseudo_hyp_series(m, alpha, 30);
            worst_series = std::max(worst_series,
                                    std::abs(values[m] - series) / std::abs(values[m]));
        }
        const Complex expected = std::exp(alpha);
        worst_sum = std::max(worst_sum, std::abs(c0 + c1 + c2 - expected) / std::abs(expected));
        const Complex det = (c0 + c1 + c2) * (c0 + c1 * eps.eps_plus + c2 * eps.eps_minus) *
                            (c0 + c1 * eps.eps_minus + c2 * eps.eps_plus);
        worst_det = std::max(worst_det, std::abs(det - 1.0));
    }
    const bool pass = worst_series <= 1e-12 && worst_sum <= 1e-12 && worst_det <= 1e-11;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "series %.3e (tol 1e-12), completeness %.3e (tol 1e-12), det %.3e (tol 1e-11)",
                  worst_series, worst_sum, worst_det);
    return {pass, buf};
}

Outcome criterion_exp_closed_form() {
    std::mt19937_64 gen(63);
    double worst = 0.0;
    for (int j = 1; j <= 3; ++j) {
        for (int i = 0; i < 50; ++i) {
            const Complex alpha = sample_disk(gen, 5.0);
            worst = std::max(worst, taucube::max_abs(taucube::exp_tau(j, alpha) -
                                                     taucube::exp_general(taucube::tau(j), alpha)));
        }
    }

    // Entry-placement pattern of the weighted-shift exponential at delta*k = 0.3:
    // eps+ C1 at row 1 col 2, eps- C2 at row 2 col 1 (1-based), and the full layout.
    const CubicRoots eps = taucube::cube_roots_of_unity();
    const Complex alpha = 0.3;
    const Complex c0 = taucube::pseudo_hyp(0, alpha);
    const Complex c1 = taucube::pseudo_hyp(1, alpha);
    const Complex c2 = taucube::pseudo_hyp(2, alpha);
    Matrix3 expected;
    expected(0, 0) = c0;
    expected(0, 1) = eps.eps_plus * c1;
    expected(0, 2) = c2;
    expected(1, 0) = eps.eps_minus * c2;
    expected(1, 1) = c0;
    expected(1, 2) = eps.eps_minus * c1;
    expected(2, 0) = c1;
    expected(2, 1) = eps.eps_plus * c2;
    expected(2, 2) = c0;
    const double pattern = taucube::max_abs(taucube::exp_tau(2, alpha) - expected);

    const bool pass = worst <= 1e-12 && pattern <= 1e-15;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "oracle gap %.3e (tol 1e-12), entry pattern %.3e (tol 1e-15)",
                  worst, pattern);
    return {pass, buf};
}

Outcome criterion_exact_splitting() {
    const GridSpec grid{64, 2.0 * std::numbers::pi};
    const StateVector initial = taucube::make_initial(grid, taucube::Preset::gaussian, 0, 1);
    const StateVector exact = taucube::evolve_exact(initial, grid, {Complex(0.0), 1.0, 1});
    double worst = 0.0;
    for (std::size_t steps : {std::size_t(1), std::size_t(5), std::size_t(32), std::size_t(1024)}) {
        const StateVector approx = taucube::evolve(initial, grid, {Complex(0.0), 1.0, steps});
        worst = std::max(worst, taucube::error_norm(approx, exact));
    }
    return {worst <= 1e-11, detail_residual(worst, 1e-11) + " over steps {1,5,32,1024}"};
}

Outcome criterion_trotter_convergence() {
    const GridSpec grid{64, 2.0 * std::numbers::pi};
    const StateVector initial = taucube::make_initial(grid, taucube::Preset::gaussian, 0, 1);
    std::vector<std::size_t> steps;
    for (std::size_t n = 4; n <= 1024; n *= 2) steps.push_back(n);
    const auto rows = taucube::convergence_table(initial, grid, Complex(1.0), 1.0, steps);

    bool decreasing = true;
    for (std::size_t i = rows.size() - 5; i + 1 < rows.size(); ++i)
        decreasing = decreasing && rows[i + 1].max_error < rows[i].max_error;

    std::vector<double> deltas, errors;
    for (const auto& row : rows) {
        deltas.push_back(row.delta);
        errors.push_back(row.max_error);
    }
    double slope = 0.0;
    const bool fitted = taucube::fit_log_slope(deltas, errors, 1e-13, slope);
    const bool pass = decreasing && fitted && slope >= 0.85 && slope <= 1.15;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "slope %.4f (window [0.85,1.15]), last five rows %s",
                  slope, decreasing ? "strictly decreasing" : "NOT decreasing");
    return {pass, buf};
}

Outcome criterion_solver_invariants() {
    const GridSpec grid{32, 2.0 * std::numbers::pi};

    // Mode decoupling: a single-bin input never populates other bins.
    const StateVector wave = taucube::make_initial(grid, taucube::Preset::plane_wave, 2, 1);
    double leakage = 0.0;
    for (const StateVector& result :
         {taucube::evolve(wave, grid, {Complex(1.0), 0.2, 4}),
          taucube::evolve_exact(wave, grid, {Complex(1.0), 0.2, 4})}) {
        for (int c = 0; c < 3; ++c) {
            const auto spectrum = taucube::dft(result.components[static_cast<std::size_t>(c)]);
            for (std::size_t m = 0; m < grid.n_points; ++m)
                if (m != 2)
                    leakage = std::max(leakage, std::abs(spectrum[m]) /
                                                    static_cast<double>(grid.n_points));
        }
    }

    // Linearity over random data.
    std::mt19937_64 gen(74);
    StateVector u, v;
    for (auto& comp : u.components) {
        comp.resize(grid.n_points);
        for (Complex& z : comp) z = sample_disk(gen, 1.0);
    }
    for (auto& comp : v.components) {
        comp.resize(grid.n_points);
        for (Complex& z : comp) z = sample_disk(gen, 1.0);
    }
    const Complex a(0.7, -0.2), b(-0.3, 0.4);
    const EvolutionParams params{Complex(0.7, 0.3), 0.5, 6};
    StateVector combo = u;
    for (int c = 0; c < 3; ++c)
        for (std::size_t j = 0; j < grid.n_points; ++j)
            combo.components[static_cast<std::size_t>(c)][j] =
                a * u.components[static_cast<std::size_t>(c)][j] +
                b * v.components[static_cast<std::size_t>(c)][j];
    const StateVector lhs = taucube::evolve(combo, grid, params);
    const StateVector eu = taucube::evolve(u, grid, params);
    const StateVector ev = taucube::evolve(v, grid, params);
    double linearity = 0.0;
    double scale = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t j = 0; j < grid.n_points; ++j) {
            const Complex rhs = a * eu.components[static_cast<std::size_t>(c)][j] +
                                b * ev.components[static_cast<std::size_t>(c)][j];
            linearity = std::max(linearity,
                                 std::abs(lhs.components[static_cast<std::size_t>(c)][j] - rhs));
            scale = std::max(scale, std::abs(rhs));
        }
    }
    linearity /= scale;

    // Exact-path semigroup in time.
    const StateVector start = taucube::make_initial(grid, taucube::Preset::gaussian, 0, 1);
    const StateVector two_leg = taucube::evolve_exact(
        taucube::evolve_exact(start, grid, {Complex(1.0), 0.15, 1}), grid, {Complex(1.0), 0.2, 1});
    const StateVector direct = taucube::evolve_exact(start, grid, {Complex(1.0), 0.35, 1});
    const double semigroup = taucube::error_norm(two_leg, direct);

    // Unit determinant of every per-mode propagator (traceless generator).
    double det_residual = 0.0;
    for (std::size_t m = 0; m < grid.n_points; ++m) {
        const Matrix3 p =
            taucube::exp_general(taucube::mode_generator(grid.wavenumber(m), Complex(1.0)), 0.25);
        const Complex det = p(0, 0) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)) -
                            p(0, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
                            p(0, 2) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0));
        det_residual = std::max(det_residual, std::abs(det - 1.0));
    }

    const bool pass = leakage <= 1e-12 && linearity <= 1e-11 && semigroup <= 1e-10 &&
                      det_residual <= 1e-10;
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "leakage %.3e (1e-12), linearity %.3e (1e-11), semigroup %.3e (1e-10), det %.3e (1e-10)",
                  leakage, linearity, semigroup, det_residual);
    return {pass, buf};
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& out_file,
            const fs::path& err_file) {
    const std::string command =
        "\"" + cli + "\" " + args + " > " + out_file.string() + " 2> " + err_file.string();
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion_cli_contract(const std::string& cli) {
    if (cli.empty()) return {false, "needs --cli <path-to-executable>"};

    const fs::path dir = fs::path("acceptance_tmp");
    fs::create_directories(dir);
    const fs::path out_file = dir / "stdout.txt";
    const fs::path err_file = dir / "stderr.txt";

    if (run_cli(cli, "verify-algebra", out_file, err_file) != 0)
        return {false, "verify-algebra did not exit 0"};
    if (slurp(out_file).find("FAIL") != std::string::npos)
        return {false, "verify-algebra reported a failing identity"};

    const fs::path config = dir / "run.json";
    {
        std::ofstream cfg(config, std::ios::trunc);
        cfg << "{\n"
               "  \"grid\": {\"n_points\": 32, \"length\": 6.283185307179586},\n"
               "  \"k\": {\"re\": 0.5, \"im\": 0.25},\n"
               "  \"t_final\": 0.5,\n"
               "  \"steps\": 16,\n"
               "  \"initial\": {\"preset\": \"gaussian\", \"component\": 1}\n"
               "}\n";
    }
    const fs::path csv_a = dir / "run_a.csv";
    const fs::path csv_b = dir / "run_b.csv";
    if (run_cli(cli, "evolve --config " + config.string() + " --output " + csv_a.string(),
                out_file, err_file) != 0)
        return {false, "evolve exited nonzero: " + slurp(err_file)};
    if (run_cli(cli, "evolve --config " + config.string() + " --output " + csv_b.string(),
                out_file, err_file) != 0)
        return {false, "second evolve exited nonzero"};
    const std::string first = slurp(csv_a);
    if (first.empty()) return {false, "evolve produced an empty CSV"};
    if (first != slurp(csv_b)) return {false, "reruns are not byte-identical"};
    if (!fs::exists(csv_a.string() + ".meta.json")) return {false, "missing meta.json sidecar"};

    const fs::path bad_config = dir / "bad.json";
    {
        std::ofstream cfg(bad_config, std::ios::trunc);
        cfg << "{\n"
               "  \"grid\": {\"n_points\": 63, \"length\": 6.283185307179586},\n"
               "  \"k\": {\"re\": 0.0, \"im\": 0.0},\n"
               "  \"t_final\": 0.5,\n"
               "  \"steps\": 16,\n"
               "  \"initial\": {\"preset\": \"gaussian\"}\n"
               "}\n";
    }
    if (run_cli(cli, "evolve --config " + bad_config.string() + " --output " +
                         (dir / "never.csv").string(),
                out_file, err_file) != 2)
        return {false, "malformed config did not exit 2"};
    if (slurp(err_file).find("grid.n_points") == std::string::npos)
        return {false, "malformed-config message does not name grid.n_points"};

    const fs::path incomplete = dir / "incomplete.json";
    {
        std::ofstream cfg(incomplete, std::ios::trunc);
        cfg << "{\n"
               "  \"grid\": {\"n_points\": 32, \"length\": 6.283185307179586},\n"
               "  \"k\": {\"re\": 0.0, \"im\": 0.0},\n"
               "  \"steps\": 16,\n"
               "  \"initial\": {\"preset\": \"gaussian\"}\n"
               "}\n";
    }
    if (run_cli(cli, "evolve --config " + incomplete.string() + " --output " +
                         (dir / "never.csv").string(),
                out_file, err_file) != 2)
        return {false, "config missing t_final did not exit 2"};
    if (slurp(err_file).find("t_final") == std::string::npos)
        return {false, "missing-field message does not name t_final"};

    return {true, "exit codes, determinism and field naming all verified"};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"root-of-unity identities", criterion_roots_of_unity},
        {"pairwise cubic Clifford conditions", criterion_clifford_pairs},
        {"commutator closes onto the third generator", criterion_commutator},
        {"cube of b*tau1 + c*tau2 is scalar", criterion_cubic_linearization},
        {"pseudo-hyperbolic series, completeness, determinant", criterion_pseudo_hyperbolic},
        {"closed-form exponential vs oracle and entry pattern", criterion_exp_closed_form},
        {"splitting exact at k = 0", criterion_exact_splitting},
        {"first-order splitting convergence at k = 1", criterion_trotter_convergence},
        {"mode decoupling, linearity, semigroup, determinant", criterion_solver_invariants},
        {"command-line contract", [&] { return criterion_cli_contract(cli_path); }},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome outcome = criteria[i].second();
        if (!outcome.pass) ++failures;
        std::printf("[%s] criterion %zu: %s -- %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
