#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "coarse/config.hpp"
#include "coarse/errors.hpp"
#include "coarse/report.hpp"

namespace {

int run_job(const std::string& config_path, const std::string& out_path, const coarse::ConfigOverrides& over) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "error: cannot read " << config_path << "\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    coarse::JobConfig cfg = coarse::parse_config(text.str(), over);
    coarse::Report rep = coarse::run(cfg);

    std::cout << rep.human();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << rep.flat();
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Window-truncated coarse invariants of finitely-presented proper metric spaces"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    coarse::ConfigOverrides over;
    int window = 0;
    unsigned seed = 0;

    CLI::App* run_cmd = app.add_subcommand("run", "Evaluate the commands in a job config");
    run_cmd->add_option("config", config_path, "Job config file")->required();
    run_cmd->add_option("--out", out_path, "Write the flat key = value report here");
    CLI::Option* window_opt = run_cmd->add_option("--window", window, "Override params.window");
    CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "Override params.seed");

    CLI11_PARSE(app, argc, argv);

    if (*window_opt) over.window = window;
    if (*seed_opt) over.seed = seed;

    try {
        return run_job(config_path, out_path, over);
    } catch (const coarse::CoarseError& e) {
        std::cerr << "error (" << coarse::error_code_name(e.code()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
