#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wsnsim/engine.h"
#include "wsnsim/protocols.h"

namespace wsnsim {

// derived per-run scalars; absent means the event never happened in the run
struct Summary {
    Protocol protocol = Protocol::leach;
    std::uint64_t seed = 0;
    std::optional<long> fnd;  // first node dead
    std::optional<long> hnd;  // half nodes dead (ceil(n/2))
    std::optional<long> lnd;  // last node dead
    long total_packets = 0;
};

// shortest-float-style text for a double: round-trip exact, locale-free
std::string format_double(double value);

Summary summarize(const MetricsSeries& series);

// per-round CSV: header + one row per round, LF endings
void emit_csv(const MetricsSeries& series, std::ostream& out);

// batch CSV `protocol,seed,fnd,hnd,lnd,packets`; absent events encoded as -1
// (said so in a leading # comment); rows sorted by (protocol, seed)
void emit_summary_csv(const std::vector<Summary>& summaries, std::ostream& out);
std::vector<Summary> parse_summary_csv(std::istream& in);

// per-protocol table (medians across seeds), sorted by FND descending, with
// each row's FND shortfall against the leader as a percentage
std::string compare(const std::vector<Summary>& summaries);

}  // namespace wsnsim
