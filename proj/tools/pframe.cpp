// pframe: command-line front end for frame / p-ASF perturbation checks.

#include "pframe/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace pframe;

bool parse_seed_range(const std::string& s, std::uint64_t& a, std::uint64_t& b) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            a = b = std::stoull(s);
        } else {
            a = std::stoull(s.substr(0, dots));
            b = std::stoull(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int emit(const cli::CommandResult& res, const std::string& output) {
    if (res.exit_code == cli::kUsage && !res.output.empty() && res.output.front() != '{') {
        std::cerr << "pframe: " << res.output << "\n";
        return res.exit_code;
    }
    if (output.empty() || output == "-") {
        std::cout << res.output;
        return res.exit_code;
    }
    std::ofstream os(output, std::ios::binary);
    if (!os) {
        std::cerr << "pframe: cannot write " << output << "\n";
        return cli::kUsage;
    }
    os << res.output;
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    if (const char* env = std::getenv("PFRAME_SEED")) {
        try {
            cfg.search.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "pframe: PFRAME_SEED is not an unsigned integer\n";
            return cli::kUsage;
        }
    }

    CLI::App app{"Paley-Wiener perturbation checks for frames and p-approximate Schauder frames"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string output;
    bool timings = false;
    std::string exponent_mode = "as-stated";
    const std::map<std::string, ExponentMode> modes{{"as-stated", ExponentMode::AsStatedP},
                                                    {"conjugate", ExponentMode::ConjugateQ}};
    app.add_option("--tol", cfg.tol, "bracket / witness tolerance")->capture_default_str();
    app.add_option("--samples", cfg.oracle_samples, "oracle sphere samples")->capture_default_str();
    app.add_option("--seed", cfg.search.seed, "search seed (env PFRAME_SEED)")->capture_default_str();
    app.add_option("-o,--output", output, "output file (default stdout)");
    app.add_option("--exponent-mode", exponent_mode, "corollary exponent")
        ->check(CLI::IsMember({"as-stated", "conjugate"}))
        ->capture_default_str();
    app.add_flag("--timings", timings, "include wall-clock timings in reports");
    app.fallthrough();

    std::string path;
    std::string theorem = "pw1";
    const std::vector<std::string> theorems{"pw1", "pw2", "pw3", "main", "corollary", "summable"};

    auto* analyze = app.add_subcommand("analyze", "ASF status, bounds and theta-norms of an instance");
    analyze->add_option("instance", path, "instance JSON")->required();

    auto* check = app.add_subcommand("check", "check one theorem on an instance");
    check->add_option("instance", path, "instance JSON")->required();
    check->add_option("--theorem", theorem)->check(CLI::IsMember(theorems))->capture_default_str();

    cli::VerifyOptions vopt;
    std::string seeds = "1..100";
    std::string vmode;
    auto* verify = app.add_subcommand("verify", "bracket test over a seeded ensemble");
    verify->add_option("--seeds", seeds, "seed range a..b")->capture_default_str();
    verify->add_option("--dim", vopt.dim)->capture_default_str();
    verify->add_option("--count", vopt.count)->capture_default_str();
    verify->add_option("--p", vopt.p)->capture_default_str();
    verify->add_option("--scale", vopt.scale)->capture_default_str();
    verify->add_option("--theorem", theorem)->check(CLI::IsMember(theorems))->capture_default_str();
    verify->add_option("--mode", vmode, "hilbert | general (default by theorem)")
        ->check(CLI::IsMember({"hilbert", "general"}));

    cli::GenOptions gopt;
    std::string gmode = "hilbert";
    auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
    gen->add_option("--seed", gopt.seed, "instance seed")->capture_default_str();
    gen->add_option("--dim", gopt.dim)->capture_default_str();
    gen->add_option("--count", gopt.count)->capture_default_str();
    gen->add_option("--p", gopt.p)->capture_default_str();
    gen->add_option("--scale", gopt.scale)->capture_default_str();
    gen->add_option("--mode", gmode)->check(CLI::IsMember({"hilbert", "general"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kUsage;
    }
    cfg.exponent_mode = modes.at(exponent_mode);

    auto mode_of = [](const std::string& m) {
        return m == "general" ? InstanceMode::GeneralPASF : InstanceMode::HilbertCanonical;
    };

    cli::CommandResult res;
    if (*analyze) {
        res = cli::cmd_analyze(path, cfg);
    } else if (*check) {
        res = cli::cmd_check(path, io::theorem_tag(theorem), cfg, timings);
    } else if (*verify) {
        if (!parse_seed_range(seeds, vopt.first_seed, vopt.last_seed)) {
            std::cerr << "pframe: --seeds expects a..b\n";
            return cli::kUsage;
        }
        vopt.theorem = io::theorem_tag(theorem);
        if (!vmode.empty())
            vopt.mode = mode_of(vmode);
        res = cli::cmd_verify(vopt, cfg);
    } else if (*gen) {
        gopt.mode = mode_of(gmode);
        res = cli::cmd_gen(gopt, cfg);
    }
    return emit(res, output);
}
