#include "wsnsim/report.h"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "wsnsim/errors.h"

namespace wsnsim {

std::string format_double(double value) {
    char buf[64];
    // shortest text that parses back to the same double
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

Summary summarize(const MetricsSeries& series) {
    if (series.rows.empty()) {
        throw invariant_error("cannot summarize an empty series");
    }
    Summary s;
    s.protocol = series.protocol;
    s.seed = series.seed;
    const int half = (series.config.n_nodes + 1) / 2;  // ceil(n/2)
    for (const auto& row : series.rows) {
        if (!s.fnd && row.dead >= 1) s.fnd = row.round;
        if (!s.hnd && row.dead >= half) s.hnd = row.round;
        if (!s.lnd && row.alive == 0) s.lnd = row.round;
    }
    s.total_packets = series.rows.back().packets_cum;
    return s;
}

void emit_csv(const MetricsSeries& series, std::ostream& out) {
    out << "round,alive,dead,primary_chs,secondary_chs,packets_cum,energy_total\n";
    for (const auto& row : series.rows) {
        out << row.round << ',' << row.alive << ',' << row.dead << ','
            << row.primary_chs << ',' << row.secondary_chs << ','
            << row.packets_cum << ',' << format_double(row.energy_total) << '\n';
    }
}

namespace {

long sentinel_or(const std::optional<long>& v) {
    return v ? *v : -1;
}

std::optional<long> from_sentinel(long v) {
    if (v < 0) return std::nullopt;
    return v;
}

// lower median; deterministic and never invents values absent from the input
template <typename T>
T median_of(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

std::optional<long> median_event(const std::vector<std::optional<long>>& events) {
    std::vector<long> v;
    v.reserve(events.size());
    for (const auto& e : events) v.push_back(e ? *e : LONG_MAX);  // absent = never
    const long med = median_of(std::move(v));
    if (med == LONG_MAX) return std::nullopt;
    return med;
}

std::string cell(const std::optional<long>& v) {
    return v ? std::to_string(*v) : "-";
}

}  // namespace

void emit_summary_csv(const std::vector<Summary>& summaries, std::ostream& out) {
    std::vector<Summary> rows = summaries;
    std::sort(rows.begin(), rows.end(), [](const Summary& a, const Summary& b) {
        const std::string_view an = protocol_name(a.protocol);
        const std::string_view bn = protocol_name(b.protocol);
        if (an != bn) return an < bn;
        return a.seed < b.seed;
    });
    out << "# fnd/hnd/lnd value -1: the event did not occur within max_rounds\n";
    out << "protocol,seed,fnd,hnd,lnd,packets\n";
    for (const auto& s : rows) {
        out << protocol_name(s.protocol) << ',' << s.seed << ','
            << sentinel_or(s.fnd) << ',' << sentinel_or(s.hnd) << ','
            << sentinel_or(s.lnd) << ',' << s.total_packets << '\n';
    }
}

std::vector<Summary> parse_summary_csv(std::istream& in) {
    std::vector<Summary> summaries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("protocol,", 0) == 0) {
            continue;
        }
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> parts;
        while (std::getline(fields, field, ',')) parts.push_back(field);
        if (parts.size() != 6) {
            throw io_error("summary row needs 6 fields: " + line);
        }
        const auto protocol = protocol_from_name(parts[0]);
        if (!protocol) {
            throw io_error("summary row names unknown protocol: " + parts[0]);
        }
        try {
            Summary s;
            s.protocol = *protocol;
            s.seed = std::stoull(parts[1]);
            s.fnd = from_sentinel(std::stol(parts[2]));
            s.hnd = from_sentinel(std::stol(parts[3]));
            s.lnd = from_sentinel(std::stol(parts[4]));
            s.total_packets = std::stol(parts[5]);
            summaries.push_back(s);
        } catch (const std::exception&) {
            throw io_error("summary row has a bad number: " + line);
        }
    }
    return summaries;
}

std::string compare(const std::vector<Summary>& summaries) {
    struct Row {
        Protocol protocol;
        std::optional<long> fnd, hnd, lnd;
        long packets = 0;
    };
    std::map<Protocol, std::vector<Summary>> by_protocol;
    for (const auto& s : summaries) by_protocol[s.protocol].push_back(s);

    std::vector<Row> rows;
    for (const auto& [protocol, group] : by_protocol) {
        std::vector<std::optional<long>> fnd, hnd, lnd;
        std::vector<long> packets;
        for (const auto& s : group) {
            fnd.push_back(s.fnd);
            hnd.push_back(s.hnd);
            lnd.push_back(s.lnd);
            packets.push_back(s.total_packets);
        }
        rows.push_back({protocol, median_event(fnd), median_event(hnd),
                        median_event(lnd), median_of(std::move(packets))});
    }

    // longest stability first; a protocol whose first death never came sorts ahead
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        const long af = a.fnd ? *a.fnd : LONG_MAX;
        const long bf = b.fnd ? *b.fnd : LONG_MAX;
        if (af != bf) return af > bf;
        return std::string_view(protocol_name(a.protocol)) <
               std::string_view(protocol_name(b.protocol));
    });

    const bool has_best = !rows.empty() && rows.front().fnd.has_value();
    const long best_fnd = has_best ? *rows.front().fnd : 1;
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s%10s%10s%10s%12s   %s\n", "protocol",
                  "fnd", "hnd", "lnd", "packets", "fnd vs best");
    out << line;
    for (const auto& row : rows) {
        std::string vs = "-";
        if (has_best && row.fnd) {
            const double pct =
                (1.0 - static_cast<double>(*row.fnd) / static_cast<double>(best_fnd)) *
                100.0;
            char pct_buf[32];
            std::snprintf(pct_buf, sizeof pct_buf, "%.1f%% less", pct);
            vs = pct_buf;
        }
        std::snprintf(line, sizeof line, "%-10s%10s%10s%10s%12ld   %s\n",
                      protocol_name(row.protocol), cell(row.fnd).c_str(),
                      cell(row.hnd).c_str(), cell(row.lnd).c_str(), row.packets,
                      vs.c_str());
        out << line;
    }
    return out.str();
}

}  // namespace wsnsim
