#include "wsnsim/config.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "wsnsim/errors.h"

namespace wsnsim {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw config_error("key '" + std::string(key) + "': cannot parse '" +
                           std::string(value) + "' as a number");
    }
    return out;
}

}  // namespace

void apply_setting(SimConfig& config, std::string_view key,
                   std::string_view value) {
    const auto d = [&] { return parse_number<double>(key, value); };
    const auto l = [&] { return parse_number<long>(key, value); };

    if (key == "n") config.n_nodes = static_cast<int>(l());
    else if (key == "field_width") config.field_width = d();
    else if (key == "field_height") config.field_height = d();
    else if (key == "bs_x") config.bs_position.x = d();
    else if (key == "bs_y") config.bs_position.y = d();
    else if (key == "e_elec") config.energy.e_elec = d();
    else if (key == "e_da") config.energy.e_da = d();
    else if (key == "eps_fs") config.energy.eps_fs = d();
    else if (key == "eps_mp") config.energy.eps_mp = d();
    else if (key == "e0") config.energy.e0 = d();
    else if (key == "k") config.energy.packet_bits = l();
    else if (key == "p_opt") config.p_opt = d();
    else if (key == "alpha") config.alpha = d();
    else if (key == "m") config.m = d();
    else if (key == "beta") config.beta = d();
    else if (key == "intermediate_fraction") config.intermediate_fraction = d();
    else if (key == "p_h") config.p_h = d();
    else if (key == "max_rounds") config.max_rounds = l();
    else if (key == "seed") config.seed = parse_number<std::uint64_t>(key, value);
    else {
        throw config_error("unknown key '" + std::string(key) + "'");
    }
}

void validate(const SimConfig& config) {
    const auto fail = [](std::string_view key, std::string_view rule) {
        throw config_error("key '" + std::string(key) + "': " + std::string(rule));
    };
    if (config.n_nodes < 1) fail("n", "needs at least one node");
    if (!(config.field_width > 0.0)) fail("field_width", "must be positive");
    if (!(config.field_height > 0.0)) fail("field_height", "must be positive");
    if (!(config.energy.e_elec > 0.0)) fail("e_elec", "must be positive");
    if (!(config.energy.e_da > 0.0)) fail("e_da", "must be positive");
    if (!(config.energy.eps_fs > 0.0)) fail("eps_fs", "must be positive");
    if (!(config.energy.eps_mp > 0.0)) fail("eps_mp", "must be positive");
    if (!(config.energy.e0 > 0.0)) fail("e0", "must be positive");
    if (config.energy.packet_bits < 1) fail("k", "needs at least one bit");
    if (!(config.p_opt > 0.0 && config.p_opt <= 1.0)) {
        fail("p_opt", "must be within (0, 1]");
    }
    if (config.alpha < 0.0) fail("alpha", "must be non-negative");
    if (config.beta < 0.0) fail("beta", "must be non-negative");
    if (!(config.m >= 0.0 && config.m <= 1.0)) fail("m", "must be within [0, 1]");
    if (!(config.intermediate_fraction >= 0.0 &&
          config.intermediate_fraction <= 1.0 - config.m)) {
        fail("intermediate_fraction", "must be within [0, 1 - m]");
    }
    if (!(config.p_h > 0.0 && config.p_h <= 1.0)) {
        fail("p_h", "must be within (0, 1]");
    }
    if (config.max_rounds < 0) fail("max_rounds", "must be non-negative");
}

SimConfig parse_config(std::string_view text) {
    SimConfig config;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw config_error("line " + std::to_string(line_no) +
                               ": expected 'key = value'");
        }
        try {
            apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const config_error& e) {
            throw config_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    validate(config);
    return config;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace wsnsim
