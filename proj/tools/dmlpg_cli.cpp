#include "dmlpg/cli/runner.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Direct meshless local Petrov-Galerkin solver for linear elasticity"};
    app.require_subcommand(1, 1);

    std::string config_path, out_dir;
    int threads = 0;
    long seed = 0;
    app.add_option("--config", config_path, "Run description (key = value lines)")->required()->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides output_dir)");
    app.add_option("--threads", threads, "OpenMP worker count (0 keeps the runtime default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Reserved; runs are deterministic");
    app.fallthrough();

    app.add_subcommand("solve", "Solve the finest listed level and write nodal values and profiles");
    app.add_subcommand("study", "Convergence study over the listed levels");
    app.add_subcommand("compare", "Study with method and compare_method, joined cost/accuracy table");

    CLI11_PARSE(app, argc, argv);

    dmlpg::RunConfig config;
    try {
        config = dmlpg::load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << dmlpg::describe_error(e) << '\n';
        return 2;
    }
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (threads > 0) omp_set_num_threads(threads);

    const auto command = dmlpg::parse_command(app.get_subcommands().front()->get_name());
    return dmlpg::run_main(command, config, std::cout, std::cerr);
}
