#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taucube/cli_commands.hpp"
#include "taucube/types.hpp"

namespace {

// "re" or "re,im".
bool parse_complex(const std::string& text, taucube::Complex& out) {
    const std::size_t comma = text.find(',');
    try {
        std::size_t used = 0;
        const std::string re_part = text.substr(0, comma);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) return false;
        double im = 0.0;
        if (comma != std::string::npos) {
            const std::string im_part = text.substr(comma + 1);
            im = std::stod(im_part, &used);
            if (used != im_part.size()) return false;
        }
        out = {re, im};
        return true;
    } catch (...) {
        return false;
    }
}

bool parse_steps(const std::string& text, std::vector<std::size_t>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        const std::string piece =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            std::size_t used = 0;
            const unsigned long value = std::stoul(piece, &used);
            if (used != piece.size() || value == 0) return false;
            out.push_back(value);
        } catch (...) {
            return false;
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cube-root evolution toolkit"};
    app.require_subcommand(1);

    double tol = 1e-12;
    CLI::App* verify = app.add_subcommand("verify-algebra", "check the generator identities");
    verify->add_option("--tol", tol, "residual tolerance (default 1e-12)");

    std::string alpha_text;
    int terms = 20;
    CLI::App* cfuncs = app.add_subcommand("cfuncs", "tabulate the pseudo-hyperbolic components");
    cfuncs->add_option("--alpha", alpha_text, "argument as RE or RE,IM")->required();
    cfuncs->add_option("--terms", terms, "series terms for the comparison column (default 20)");

    std::string evolve_config, evolve_output;
    CLI::App* evolve = app.add_subcommand("evolve", "run one evolution from a JSON config");
    evolve->add_option("--config", evolve_config, "config file path")->required();
    evolve->add_option("--output", evolve_output, "output CSV path (overrides the config)");

    std::string conv_config, conv_output, steps_text;
    CLI::App* convergence =
        app.add_subcommand("convergence", "splitting-error study over several step counts");
    convergence->add_option("--config", conv_config, "config file path")->required();
    convergence->add_option("--steps", steps_text, "comma-separated step counts")->required();
    convergence->add_option("--output", conv_output, "output CSV path (overrides the config)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (verify->parsed()) return taucube::cmd_verify_algebra(tol, std::cout);

    if (cfuncs->parsed()) {
        taucube::Complex alpha;
        if (!parse_complex(alpha_text, alpha)) {
            std::cerr << "invalid --alpha '" << alpha_text << "': expected RE or RE,IM\n";
            return 2;
        }
        if (terms < 1) {
            std::cerr << "invalid --terms: must be at least 1\n";
            return 2;
        }
        return taucube::cmd_cfuncs(alpha, terms, std::cout);
    }

    if (evolve->parsed()) return taucube::cmd_evolve(evolve_config, evolve_output, std::cerr);

    std::vector<std::size_t> steps;
    if (!parse_steps(steps_text, steps)) {
        std::cerr << "invalid --steps '" << steps_text << "': expected N1,N2,...\n";
        return 2;
    }
    return taucube::cmd_convergence(conv_config, steps, conv_output, std::cerr);
}
