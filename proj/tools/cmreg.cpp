// cmreg: Castelnuovo-Mumford regularity of homogeneous ideals.
//
//   cmreg compute --input FILE [--t T] [--method c|gin|oracle|all] [--generic]
//                 [--seed N] [--bound B] [--json] [--betti] [--timings]
//   cmreg --version

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cmreg/cli.hpp"
#include "cmreg/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Castelnuovo-Mumford regularity, a*-invariant and partial regularities of homogeneous ideals"};
    app.require_subcommand(0, 1);

    bool show_version = false;
    app.add_flag("--version", show_version, "Print tool and schema versions");

    cmreg::ComputeRequest req;
    std::string input_path;
    std::size_t t = 0;
    auto* compute = app.add_subcommand("compute", "Compute regularity invariants of an ideal file");
    compute->add_option("--input", input_path, "Ideal file")->required();
    auto* t_opt = compute->add_option("--t", t, "Partial index t (default: dim R/I)");
    compute->add_option("--method", req.method, "c | gin | oracle | all")
        ->check(CLI::IsMember({"c", "gin", "oracle", "all"}));
    compute->add_flag("--generic", req.generic, "Retry in random coordinates on filter-regularity failure");
    compute->add_option("--seed", req.seed, "Seed for random coordinate changes");
    compute->add_option("--bound", req.bound, "Entry bound for random matrices")->check(CLI::PositiveNumber);
    compute->add_flag("--json", req.json, "Machine-readable output");
    compute->add_flag("--betti", req.betti, "Include the Betti table");
    compute->add_flag("--timings", req.timings, "Include timings (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cmreg::exit_input_error;
    }

    if (show_version) {
        std::cout << "cmreg " << cmreg::tool_version << " (schema " << cmreg::schema_version << ")\n";
        return cmreg::exit_ok;
    }
    if (!*compute) {
        std::cerr << app.help();
        return cmreg::exit_input_error;
    }

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "input error: cannot read '" << input_path << "'\n";
        return cmreg::exit_input_error;
    }
    std::ostringstream text;
    text << in.rdbuf();
    req.input_text = text.str();
    if (*t_opt) req.t = t;

    return cmreg::compute(req, std::cout, std::cerr);
}
