#include <CLI11.hpp>

#include <iostream>

#include "epdiff/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Pseudospectral shallow-water / EPDiff solver on periodic boxes"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "integrate a model from a config file");
    run_cmd->add_option("config", config_path, "path to a key=value config file")->required();

    std::string suite;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run a verification suite "
                                     "(operators | greens | identities | conservation)");
    verify_cmd->add_option("suite", suite, "suite name")->required();

    epdiff::GreensTableOptions topt;
    CLI::App* table_cmd =
        app.add_subcommand("greens-table", "print r,G samples of the closed-form kernel");
    table_cmd->add_option("--alpha", topt.alpha, "length scale alpha")->required();
    table_cmd->add_option("--nu", topt.nu, "operator power nu")->required();
    table_cmd->add_option("--dim", topt.dim, "spatial dimension (1 or 2)")->required();
    table_cmd->add_option("--rmax", topt.rmax, "largest radius")->required();
    table_cmd->add_option("--samples", topt.samples, "number of samples")->required();

    CLI11_PARSE(app, argc, argv);

    if (run_cmd->parsed()) return epdiff::cmd_run(config_path, std::cout, std::cerr);
    if (verify_cmd->parsed()) return epdiff::cmd_verify(suite, std::cout, std::cerr);
    if (table_cmd->parsed()) return epdiff::cmd_greens_table(topt, std::cout, std::cerr);
    return 1;
}
