#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wsnsim/election.h"
#include "wsnsim/model.h"
#include "wsnsim/rng.h"
#include "wsnsim/state.h"

namespace wsnsim {

enum class Protocol { leach, sep, esep, deec, hsep };

inline constexpr Protocol all_protocols[] = {Protocol::leach, Protocol::sep,
                                             Protocol::esep, Protocol::deec,
                                             Protocol::hsep};

const char* protocol_name(Protocol protocol);
std::optional<Protocol> protocol_from_name(std::string_view name);

struct RoundOutcome {
    long round = 0;
    std::vector<int> primary_chs;    // ascending node ids
    std::vector<int> secondary_chs;  // subset of primary_chs; hsep only
    long packets_to_bs = 0;          // one per uplinking CH
    double energy_spent = 0.0;       // sum of every charge this round
    std::vector<int> deaths;         // nodes that ran dry this round
    int alive_after = 0;
};

// seeded shuffle picks floor(m*n) advanced and floor(x*n) intermediate ids;
// everyone else is normal
std::vector<NodeClass> assign_classes(const SimConfig& config, RandomStream& rng);

// primary CH election; probability rule depends on the protocol, draws are
// delegated to draw_cluster_heads
std::vector<int> elect(Protocol protocol, NetworkState& state,
                       const SimConfig& config, RandomStream& rng);

// nearest-CH association (signal strength proxy); ties go to the lowest CH id.
// Returns per-node CH assignment, -1 for CHs and dead nodes.
std::vector<int> associate_members(const NetworkState& state,
                                   const std::vector<int>& chs);

// each primary flips a p_h coin in id order; an empty result promotes the
// primary closest to the BS
std::vector<int> elect_secondary(const std::vector<int>& primary_chs,
                                 const NetworkState& state, double p_h,
                                 RandomStream& rng);

// one full round: election, association, member uplinks, aggregation, CH
// uplinks (via secondaries under hsep), deaths, bookkeeping, round advance
RoundOutcome run_round(Protocol protocol, NetworkState& state,
                       const SimConfig& config, RandomStream& rng);

}  // namespace wsnsim
