#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wsnsim/cli.h"
#include "wsnsim/errors.h"
#include "wsnsim/report.h"

using namespace wsnsim;
namespace fs = std::filesystem;

namespace {

// unique per-test scratch directory, removed on scope exit
struct TempDir {
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("wsnsim_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path path;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

long line_count(const std::string& text) {
    long n = 0;
    for (char c : text) n += c == '\n' ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("seed ranges expand inclusively") {
    CHECK(parse_seed_range("3..6") == std::vector<std::uint64_t>{3, 4, 5, 6});
    CHECK(parse_seed_range("7") == std::vector<std::uint64_t>{7});
    CHECK(parse_seed_range("1..1") == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(parse_seed_range("5..2"), config_error);
    CHECK_THROWS_AS(parse_seed_range("abc"), config_error);
    CHECK_THROWS_AS(parse_seed_range("1..x"), config_error);
    CHECK_THROWS_AS(parse_seed_range("-3"), config_error);
}

TEST_CASE("a run writes one per-round file per pair plus the batch summary") {
    TempDir dir("run_basic");
    RunSpec spec;
    spec.protocols = {Protocol::leach};
    spec.seeds = {1};
    spec.out_dir = (dir.path / "out").string();
    spec.overrides = {{"max_rounds", "50"}};

    std::ostringstream out, err;
    CHECK(run(spec, out, err) == 0);
    CHECK(err.str().empty());
    CHECK(out.str().empty());  // one protocol: no comparison table

    const std::string rounds = slurp(fs::path(spec.out_dir) / "leach_1.csv");
    CHECK(line_count(rounds) == 51);  // header + 50 rounds
    CHECK(rounds.rfind("round,alive,dead,", 0) == 0);

    std::istringstream summary(slurp(fs::path(spec.out_dir) / "summary.csv"));
    const auto rows = parse_summary_csv(summary);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].protocol == Protocol::leach);
    CHECK(rows[0].seed == 1);
    CHECK_FALSE(rows[0].fnd.has_value());  // nobody dies in 50 rounds
}

TEST_CASE("two invocations with the same spec write identical bytes") {
    TempDir dir("run_twice");
    RunSpec spec;
    spec.protocols = {Protocol::leach, Protocol::hsep};
    spec.seeds = {1, 2};
    spec.overrides = {{"max_rounds", "300"}};

    std::ostringstream out1, out2, err;
    spec.out_dir = (dir.path / "a").string();
    REQUIRE(run(spec, out1, err) == 0);
    spec.out_dir = (dir.path / "b").string();
    REQUIRE(run(spec, out2, err) == 0);

    CHECK(out1.str() == out2.str());
    CHECK_FALSE(out1.str().empty());  // two protocols: the table prints

    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir.path / "a")) {
        names.push_back(entry.path().filename().string());
    }
    CHECK(names.size() == 5);  // 4 runs + summary.csv
    for (const auto& name : names) {
        CHECK(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name));
    }
}

TEST_CASE("the comparison table only prints for multi-protocol runs") {
    TempDir dir("run_table");
    RunSpec spec;
    spec.protocols = {Protocol::sep, Protocol::leach};
    spec.seeds = {3};
    spec.out_dir = (dir.path / "out").string();
    spec.overrides = {{"max_rounds", "200"}};

    std::ostringstream out, err;
    REQUIRE(run(spec, out, err) == 0);
    CHECK(out.str().find("protocol") != std::string::npos);
    CHECK(out.str().find("fnd vs best") != std::string::npos);
    CHECK(out.str().find("\nsep") != std::string::npos);
    CHECK(out.str().find("\nleach") != std::string::npos);
}

TEST_CASE("an empty seed list falls back to the config seed") {
    TempDir dir("run_seed_fallback");
    const fs::path cfg_path = dir.path / "run.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "seed = 9\nmax_rounds = 20\nn = 30\n";
    }
    RunSpec spec;
    spec.config_path = cfg_path.string();
    spec.protocols = {Protocol::deec};
    spec.out_dir = (dir.path / "out").string();

    std::ostringstream out, err;
    REQUIRE(run(spec, out, err) == 0);
    std::istringstream summary(slurp(fs::path(spec.out_dir) / "summary.csv"));
    const auto rows = parse_summary_csv(summary);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].seed == 9);

    // the per-round file reflects the overridden population
    const std::string rounds = slurp(fs::path(spec.out_dir) / "deec_9.csv");
    CHECK(rounds.find("\n0,30,0,") != std::string::npos);
}

TEST_CASE("overrides take precedence over the config file") {
    TempDir dir("run_override");
    const fs::path cfg_path = dir.path / "run.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "n = 30\nmax_rounds = 20\n";
    }
    RunSpec spec;
    spec.config_path = cfg_path.string();
    spec.protocols = {Protocol::leach};
    spec.seeds = {1};
    spec.out_dir = (dir.path / "out").string();
    spec.overrides = {{"n", "12"}};

    std::ostringstream out, err;
    REQUIRE(run(spec, out, err) == 0);
    const std::string rounds = slurp(fs::path(spec.out_dir) / "leach_1.csv");
    CHECK(rounds.find("\n0,12,0,") != std::string::npos);
}

TEST_CASE("config mistakes exit with code 2 and say why") {
    TempDir dir("run_bad_config");
    std::ostringstream out, err;

    RunSpec no_protocols;
    no_protocols.out_dir = (dir.path / "x").string();
    CHECK(run(no_protocols, out, err) == 2);
    CHECK(err.str().find("config error") != std::string::npos);

    RunSpec bad_override;
    bad_override.protocols = {Protocol::leach};
    bad_override.out_dir = (dir.path / "y").string();
    bad_override.overrides = {{"p_opt", "2"}};
    std::ostringstream err2;
    CHECK(run(bad_override, out, err2) == 2);
    CHECK(err2.str().find("p_opt") != std::string::npos);

    RunSpec unknown_key;
    unknown_key.protocols = {Protocol::leach};
    unknown_key.out_dir = (dir.path / "z").string();
    unknown_key.overrides = {{"warp", "9"}};
    std::ostringstream err3;
    CHECK(run(unknown_key, out, err3) == 2);
    CHECK(err3.str().find("warp") != std::string::npos);
}

TEST_CASE("filesystem trouble exits with code 3") {
    TempDir dir("run_bad_dir");
    // a plain file where the output directory should go
    const fs::path blocker = dir.path / "blocker";
    { std::ofstream touch(blocker); }

    RunSpec spec;
    spec.protocols = {Protocol::leach};
    spec.seeds = {1};
    spec.overrides = {{"max_rounds", "5"}};
    spec.out_dir = (blocker / "sub").string();

    std::ostringstream out, err;
    CHECK(run(spec, out, err) == 3);
    CHECK(err.str().find("i/o error") != std::string::npos);

    RunSpec missing_cfg;
    missing_cfg.protocols = {Protocol::leach};
    missing_cfg.config_path = (dir.path / "no_such.cfg").string();
    missing_cfg.out_dir = (dir.path / "out").string();
    std::ostringstream err2;
    CHECK(run(missing_cfg, out, err2) == 3);
}

TEST_CASE("comparing an existing batch reuses its summary") {
    TempDir dir("compare_existing");
    RunSpec spec;
    spec.protocols = {Protocol::leach, Protocol::sep};
    spec.seeds = {1};
    spec.out_dir = (dir.path / "out").string();
    spec.overrides = {{"max_rounds", "150"}};

    std::ostringstream run_out, err;
    REQUIRE(run(spec, run_out, err) == 0);

    std::ostringstream table;
    CHECK(compare_existing(spec.out_dir, table, err) == 0);
    CHECK(table.str() == run_out.str());

    std::ostringstream err2;
    CHECK(compare_existing((dir.path / "nowhere").string(), table, err2) == 3);
    CHECK(err2.str().find("i/o error") != std::string::npos);
}

TEST_CASE("a zero-round run still writes well-formed files") {
    TempDir dir("run_zero_rounds");
    RunSpec spec;
    spec.protocols = {Protocol::leach};
    spec.seeds = {4};
    spec.out_dir = (dir.path / "out").string();
    spec.overrides = {{"max_rounds", "0"}};

    std::ostringstream out, err;
    REQUIRE(run(spec, out, err) == 0);
    const std::string rounds = slurp(fs::path(spec.out_dir) / "leach_4.csv");
    CHECK(line_count(rounds) == 1);  // header only

    std::istringstream summary(slurp(fs::path(spec.out_dir) / "summary.csv"));
    const auto rows = parse_summary_csv(summary);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].fnd.has_value());
    CHECK(rows[0].total_packets == 0);
}
