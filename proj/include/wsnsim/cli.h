#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsnsim/protocols.h"

namespace wsnsim {

struct RunSpec {
    std::string config_path;          // empty: built-in defaults
    std::vector<Protocol> protocols;  // at least one
    std::vector<std::uint64_t> seeds; // empty: the config file's seed
    std::string out_dir = ".";
    // (key, value) override pairs, applied on top of the config file
    std::vector<std::pair<std::string, std::string>> overrides;
};

// "a..b" inclusive range or a single integer
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

// executes every (protocol, seed) pair, writes {protocol}_{seed}.csv plus
// summary.csv into out_dir (atomically), prints the comparison table when two
// or more protocols ran. Returns a process exit code: 0 ok, 2 config,
// 3 I/O, 4 internal invariant.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

// reads an existing summary.csv from out_dir and prints the comparison table
int compare_existing(const std::string& out_dir, std::ostream& out,
                     std::ostream& err);

}  // namespace wsnsim
