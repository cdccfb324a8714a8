#include "wsnsim/engine.h"

#include <cmath>
#include <limits>
#include <string>

#include "wsnsim/config.h"
#include "wsnsim/errors.h"
#include "wsnsim/report.h"

namespace wsnsim {

SimConfig effective_config(const SimConfig& config, Protocol protocol) {
    SimConfig cfg = config;
    if (protocol == Protocol::esep) {
        if (!(cfg.intermediate_fraction > 0.0)) {
            throw config_error(
                "esep needs intermediate_fraction > 0 (three node classes)");
        }
    } else {
        cfg.intermediate_fraction = 0.0;  // the intermediate class exists only under esep
    }
    return cfg;
}

namespace {

double initial_energy_for(const SimConfig& config, NodeClass cls) {
    switch (cls) {
        case NodeClass::advanced: return config.energy.e0 * (1.0 + config.alpha);
        case NodeClass::intermediate: return config.energy.e0 * (1.0 + config.beta);
        case NodeClass::normal: return config.energy.e0;
    }
    return config.energy.e0;
}

// audits |actual - claimed| against 1e-9 relative. The decrease is measured by
// differencing residuals, and every charge quantizes a residual at its own
// ulp, so the audit also grants absolute slack proportional to the energy
// held before the round; at ordinary energy scales the relative term
// dominates and keeps the audit sharp
void check_round_ledger(double decrease, double claimed, double held_before,
                        long round) {
    const double scale = std::max(std::abs(decrease), std::abs(claimed));
    const double tolerance =
        1e-9 * scale + 32.0 * std::numeric_limits<double>::epsilon() * held_before;
    if (std::abs(decrease - claimed) > tolerance) {
        throw invariant_error("round " + std::to_string(round) +
                              ": energy ledger mismatch (residual decrease " +
                              format_double(decrease) + " vs charged " +
                              format_double(claimed) + ")");
    }
}

}  // namespace

NetworkState init_network(const SimConfig& config, RandomStream& rng) {
    NetworkState state;
    state.bs_position = config.bs_position;
    state.nodes.resize(static_cast<std::size_t>(config.n_nodes));
    for (int i = 0; i < config.n_nodes; ++i) {
        auto& node = state.nodes[static_cast<std::size_t>(i)];
        node.id = i;
        node.position.x = rng.next_double() * config.field_width;
        node.position.y = rng.next_double() * config.field_height;
    }
    const std::vector<NodeClass> classes = assign_classes(config, rng);
    for (int i = 0; i < config.n_nodes; ++i) {
        auto& node = state.nodes[static_cast<std::size_t>(i)];
        node.cls = classes[static_cast<std::size_t>(i)];
        node.initial_energy = initial_energy_for(config, node.cls);
        node.residual_energy = node.initial_energy;
        node.alive = node.residual_energy > 0.0;
        state.total_initial_energy += node.initial_energy;
    }
    return state;
}

NetworkState init_network(const SimConfig& config) {
    RandomStream rng(config.seed);
    return init_network(config, rng);
}

MetricsSeries simulate(const SimConfig& config, Protocol protocol) {
    const SimConfig cfg = effective_config(config, protocol);
    validate(cfg);

    MetricsSeries series;
    series.protocol = protocol;
    series.seed = cfg.seed;
    series.config = cfg;

    RandomStream rng(cfg.seed);
    NetworkState state = init_network(cfg, rng);

    std::vector<double> residual_before(state.nodes.size(), 0.0);
    long packets_cum = 0;
    while (state.round < cfg.max_rounds && alive_count(state) > 0) {
        double held_before = 0.0;
        for (const auto& node : state.nodes) {
            residual_before[static_cast<std::size_t>(node.id)] = node.residual_energy;
            held_before += node.residual_energy;
        }
        const RoundOutcome outcome = run_round(protocol, state, cfg, rng);

        double decrease = 0.0;
        double residual_total = 0.0;
        for (const auto& node : state.nodes) {
            decrease += residual_before[static_cast<std::size_t>(node.id)] -
                        node.residual_energy;
            residual_total += node.residual_energy;
        }
        check_round_ledger(decrease, outcome.energy_spent, held_before,
                           outcome.round);

        packets_cum += outcome.packets_to_bs;
        series.rows.push_back({outcome.round, outcome.alive_after,
                               cfg.n_nodes - outcome.alive_after,
                               static_cast<int>(outcome.primary_chs.size()),
                               static_cast<int>(outcome.secondary_chs.size()),
                               packets_cum, residual_total});
    }
    return series;
}

}  // namespace wsnsim
