#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "wsnsim/cli.h"
#include "wsnsim/errors.h"
#include "wsnsim/protocols.h"

namespace {

// flag spellings and the config keys they set; values stay as user text so
// nothing is lost in a double round-trip
constexpr std::pair<const char*, const char*> override_flags[] = {
    {"--n", "n"},
    {"--field-width", "field_width"},
    {"--field-height", "field_height"},
    {"--bs-x", "bs_x"},
    {"--bs-y", "bs_y"},
    {"--e-elec", "e_elec"},
    {"--e-da", "e_da"},
    {"--eps-fs", "eps_fs"},
    {"--eps-mp", "eps_mp"},
    {"--e0", "e0"},
    {"--k", "k"},
    {"--p-opt", "p_opt"},
    {"--alpha", "alpha"},
    {"--m", "m"},
    {"--beta", "beta"},
    {"--intermediate-fraction", "intermediate_fraction"},
    {"--p-h", "p_h"},
    {"--max-rounds", "max_rounds"},
};

std::vector<wsnsim::Protocol> expand_protocols(const std::string& name) {
    if (name == "all") {
        return {std::begin(wsnsim::all_protocols), std::end(wsnsim::all_protocols)};
    }
    if (const auto protocol = wsnsim::protocol_from_name(name)) {
        return {*protocol};
    }
    throw wsnsim::config_error("unknown protocol '" + name +
                               "' (valid: leach, sep, esep, deec, hsep, all)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"round-based simulator of WSN clustering protocols"};
    app.require_subcommand(1);

    std::string config_path;
    std::string protocol = "all";
    std::vector<std::string> seed_flags;
    std::string seeds_range;
    std::string out_dir = ".";
    std::vector<std::string> override_values(std::size(override_flags));
    std::vector<CLI::Option*> override_opts(std::size(override_flags));

    auto* run_cmd = app.add_subcommand("run", "simulate and write CSV results");
    run_cmd->add_option("--config", config_path, "config file (key = value lines)");
    run_cmd->add_option("--protocol", protocol,
                        "protocol to run: leach|sep|esep|deec|hsep|all");
    run_cmd->add_option("--seed", seed_flags, "seed for one run (repeatable)");
    run_cmd->add_option("--seeds", seeds_range, "inclusive seed range a..b");
    run_cmd->add_option("--out", out_dir, "output directory");
    for (std::size_t i = 0; i < std::size(override_flags); ++i) {
        override_opts[i] =
            run_cmd->add_option(override_flags[i].first, override_values[i],
                                std::string("override config key ") +
                                    override_flags[i].second);
    }

    std::string compare_dir = ".";
    auto* compare_cmd =
        app.add_subcommand("compare", "print the comparison table for an existing summary.csv");
    compare_cmd->add_option("--out", compare_dir, "directory holding summary.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    if (compare_cmd->parsed()) {
        return wsnsim::compare_existing(compare_dir, std::cout, std::cerr);
    }

    try {
        wsnsim::RunSpec spec;
        spec.config_path = config_path;
        spec.protocols = expand_protocols(protocol);
        for (const auto& s : seed_flags) {
            const auto seeds = wsnsim::parse_seed_range(s);
            spec.seeds.insert(spec.seeds.end(), seeds.begin(), seeds.end());
        }
        if (!seeds_range.empty()) {
            const auto seeds = wsnsim::parse_seed_range(seeds_range);
            spec.seeds.insert(spec.seeds.end(), seeds.begin(), seeds.end());
        }
        spec.out_dir = out_dir;
        for (std::size_t i = 0; i < std::size(override_flags); ++i) {
            if (override_opts[i]->count() > 0) {
                spec.overrides.emplace_back(override_flags[i].second,
                                            override_values[i]);
            }
        }
        return wsnsim::run(spec, std::cout, std::cerr);
    } catch (const wsnsim::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
}
