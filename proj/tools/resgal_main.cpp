#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "resgal/cli.hpp"
#include "resgal/error.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Restriction Galois connections on piecewise-linear function families"};
    resgal::CommandArgs a;
    std::string file;
    app.add_option("command", a.command, "closure | lattice | least | check | witness | oracle-verify | construct")
        ->required();
    app.add_option("file", file, "instance file, or - for stdin")->required();
    // Command arguments are taken verbatim: CLI11 would split "[1,2]" into a list.
    app.allow_extras();
    app.add_option("--format", a.format, "json, dot or text");
    app.add_option("--universe", a.universe, "grid or pl")->check(CLI::IsMember({"grid", "pl"}));
    app.add_option("--budget", a.budget, "brute-force function budget");
    app.add_option("--seed", a.seed, "sample downsets for check --oracle");
    app.add_option("--samples", a.samples, "number of sampled downsets");
    app.add_flag("--oracle", a.oracle, "cross-check closures against the brute-force oracle");
    CLI11_PARSE(app, argc, argv);
    a.args = app.remaining();
    for (const auto& x : a.args)
        if (x.rfind("--", 0) == 0) {
            std::cerr << "error: unknown option " << x << "\n";
            return 2;
        }

    std::stringstream buf;
    if (file == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open " << file << "\n";
            return 2;
        }
        buf << in.rdbuf();
    }
    try {
        auto inst = resgal::parse_instance(buf.str());
        auto res = resgal::run_command(inst, a);
        std::cout << res.text;
        return res.status;
    } catch (const resgal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
