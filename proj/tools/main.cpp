#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "evensets/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"even sets of (-4)-curves on rational surfaces: lattice verification, "
                 "double cover invariants, fiber bookkeeping, brute-force search"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    // let the global --json sit after the subcommand as well
    app.fallthrough();

    std::string config_path;
    auto* verify = app.add_subcommand("verify", "check the curves of a problem file as an even set");
    verify->add_option("config", config_path, "problem file")->required();

    auto* classify =
        app.add_subcommand("classify", "verify, then classify the branched double cover");
    classify->add_option("config", config_path, "problem file")->required();

    long long budget = 12;
    auto* fiber = app.add_subcommand("fiber", "validate and classify the fiber blocks of a file");
    fiber->add_option("config", config_path, "problem file")->required();
    fiber->add_option("--budget", budget, "Euler number budget, 12 or 24")->capture_default_str();

    std::string ambient_word;
    std::size_t k = 0;
    evensets::SearchOptions sopt;
    bool no_dedup = false;
    bool serial = false;
    auto* search = app.add_subcommand("search", "enumerate even sets in a coefficient box");
    search->add_option("ambient", ambient_word, "plane or quadric")
        ->required()
        ->check(CLI::IsMember({"plane", "quadric"}));
    search->add_option("k", k, "number of exceptional classes")->required();
    search->add_option("--bound", sopt.bound, "coefficient box radius")->capture_default_str();
    search->add_option("--n", sopt.n, "curves per set")->capture_default_str();
    search->add_flag("--no-dedup", no_dedup, "keep every set, not one per symmetry orbit");
    search->add_flag("--serial", serial, "disable the parallel enumeration kernel");

    std::string entry_name;
    evensets::CatalogOpts copt;
    auto* catalog = app.add_subcommand("catalog", "list built-in constructions or check one");
    catalog->add_option("name", entry_name, "entry name (omit to list)");
    catalog->add_option("--export", copt.export_path, "write the entry as a problem file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    evensets::GlobalOpts g;
    g.json = json;
    g.palette = evensets::Palette::from_env(isatty(STDOUT_FILENO) != 0);

    if (verify->parsed()) return evensets::cmd_verify(config_path, g, std::cout, std::cerr);
    if (classify->parsed()) return evensets::cmd_classify(config_path, g, std::cout, std::cerr);
    if (fiber->parsed()) {
        evensets::FiberOpts f;
        f.budget = budget;
        return evensets::cmd_fiber(config_path, f, g, std::cout, std::cerr);
    }
    if (search->parsed()) {
        sopt.dedup = !no_dedup;
        sopt.parallel = !serial;
        evensets::Ambient a =
            ambient_word == "plane" ? evensets::Ambient::Plane : evensets::Ambient::Quadric;
        return evensets::cmd_search(a, k, sopt, g, std::cout, std::cerr);
    }
    if (catalog->parsed()) return evensets::cmd_catalog(entry_name, copt, g, std::cout, std::cerr);
    return 2;
}
