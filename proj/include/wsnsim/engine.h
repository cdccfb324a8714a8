#pragma once

#include <cstdint>
#include <vector>

#include "wsnsim/model.h"
#include "wsnsim/protocols.h"
#include "wsnsim/rng.h"
#include "wsnsim/state.h"

namespace wsnsim {

struct RoundRecord {
    long round = 0;
    int alive = 0;
    int dead = 0;
    int primary_chs = 0;
    int secondary_chs = 0;
    long packets_cum = 0;
    double energy_total = 0.0;  // residual energy summed over all nodes
};

struct MetricsSeries {
    Protocol protocol = Protocol::leach;
    std::uint64_t seed = 0;
    SimConfig config;  // effective config the run actually used
    std::vector<RoundRecord> rows;
};

// copy of config with protocol invariants applied: intermediate_fraction is
// zeroed unless the protocol is esep (only esep defines that class), and esep
// itself demands a positive fraction
SimConfig effective_config(const SimConfig& config, Protocol protocol);

// uniform placement (x then y per node), then class assignment, off the given
// stream; the single-argument overload opens a fresh stream from config.seed
NetworkState init_network(const SimConfig& config, RandomStream& rng);
NetworkState init_network(const SimConfig& config);

// full run: rounds until max_rounds or the last death, one record per round.
// Bit-for-bit deterministic in (config, protocol). Each round is audited
// against its own energy ledger; a mismatch throws invariant_error.
MetricsSeries simulate(const SimConfig& config, Protocol protocol);

}  // namespace wsnsim
