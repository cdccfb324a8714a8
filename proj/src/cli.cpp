#include "wsnsim/cli.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "wsnsim/config.h"
#include "wsnsim/engine.h"
#include "wsnsim/errors.h"
#include "wsnsim/report.h"

namespace wsnsim {

namespace {

namespace fs = std::filesystem;

std::uint64_t parse_seed(std::string_view text) {
    std::uint64_t out = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw config_error("cannot parse seed '" + std::string(text) + "'");
    }
    return out;
}

// written fully under a scratch name, then renamed into place, so a crashed or
// failed run never leaves a truncated result behind
void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) throw io_error("failed while writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw io_error("cannot move '" + tmp.string() + "' to '" + path.string() +
                       "': " + ec.message());
    }
}

int run_checked(const RunSpec& spec, std::ostream& out) {
    SimConfig base =
        spec.config_path.empty() ? SimConfig{} : load_config_file(spec.config_path);
    for (const auto& [key, value] : spec.overrides) {
        apply_setting(base, key, value);
    }
    validate(base);

    if (spec.protocols.empty()) {
        throw config_error("at least one protocol is required");
    }
    const std::vector<std::uint64_t> seeds =
        spec.seeds.empty() ? std::vector<std::uint64_t>{base.seed} : spec.seeds;

    const fs::path dir(spec.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw io_error("cannot create output directory '" + dir.string() +
                       "': " + ec.message());
    }

    std::vector<Summary> summaries;
    for (const Protocol protocol : spec.protocols) {
        for (const std::uint64_t seed : seeds) {
            SimConfig cfg = base;
            cfg.seed = seed;
            const MetricsSeries series = simulate(cfg, protocol);

            if (series.rows.empty()) {
                // a zero-round run has no events to summarize
                summaries.push_back(Summary{protocol, seed, {}, {}, {}, 0});
            } else {
                summaries.push_back(summarize(series));
            }

            std::ostringstream csv;
            emit_csv(series, csv);
            const std::string name =
                std::string(protocol_name(protocol)) + "_" + std::to_string(seed) + ".csv";
            write_file_atomic(dir / name, csv.str());
        }
    }

    std::ostringstream summary_csv;
    emit_summary_csv(summaries, summary_csv);
    write_file_atomic(dir / "summary.csv", summary_csv.str());

    if (spec.protocols.size() >= 2) {
        out << compare(summaries);
    }
    return 0;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        return {parse_seed(text)};
    }
    const std::uint64_t lo = parse_seed(text.substr(0, dots));
    const std::uint64_t hi = parse_seed(text.substr(dots + 2));
    if (hi < lo) {
        throw config_error("seed range '" + std::string(text) +
                           "' runs backwards");
    }
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(spec, out);
    } catch (const config_error& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const invariant_error& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 4;
    }
}

int compare_existing(const std::string& out_dir, std::ostream& out,
                     std::ostream& err) {
    try {
        const fs::path path = fs::path(out_dir) / "summary.csv";
        std::ifstream in(path, std::ios::binary);
        if (!in) throw io_error("cannot read '" + path.string() + "'");
        const std::vector<Summary> summaries = parse_summary_csv(in);
        if (summaries.empty()) {
            throw io_error("'" + path.string() + "' holds no summary rows");
        }
        out << compare(summaries);
        return 0;
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace wsnsim
