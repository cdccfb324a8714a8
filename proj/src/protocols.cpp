#include "wsnsim/protocols.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "wsnsim/errors.h"

namespace wsnsim {

const char* protocol_name(Protocol protocol) {
    switch (protocol) {
        case Protocol::leach: return "leach";
        case Protocol::sep: return "sep";
        case Protocol::esep: return "esep";
        case Protocol::deec: return "deec";
        case Protocol::hsep: return "hsep";
    }
    return "leach";
}

std::optional<Protocol> protocol_from_name(std::string_view name) {
    for (Protocol p : all_protocols) {
        if (name == protocol_name(p)) return p;
    }
    return std::nullopt;
}

namespace {

// floor with a nudge: 0.29*100 = 28.999999999999996 must still count 29
int class_count(double fraction, int n) {
    return static_cast<int>(std::floor(fraction * n + 1e-9));
}

int nearest_by_id(const NetworkState& state, Point from,
                  const std::vector<int>& candidates) {
    int best = candidates.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (int id : candidates) {  // ascending ids: strict < keeps the lowest on ties
        const double d = distance(from, state.nodes[static_cast<std::size_t>(id)].position);
        if (d < best_d) {
            best_d = d;
            best = id;
        }
    }
    return best;
}

}  // namespace

std::vector<NodeClass> assign_classes(const SimConfig& config, RandomStream& rng) {
    const int n = config.n_nodes;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i >= 1; --i) {
        const auto j = rng.next_index(static_cast<std::size_t>(i) + 1);
        std::swap(order[static_cast<std::size_t>(i)], order[j]);
    }
    const int advanced = class_count(config.m, n);
    const int intermediate = class_count(config.intermediate_fraction, n);
    std::vector<NodeClass> classes(static_cast<std::size_t>(n), NodeClass::normal);
    for (int i = 0; i < advanced; ++i) {
        classes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            NodeClass::advanced;
    }
    for (int i = advanced; i < advanced + intermediate; ++i) {
        classes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            NodeClass::intermediate;
    }
    return classes;
}

std::vector<int> elect(Protocol protocol, NetworkState& state,
                       const SimConfig& config, RandomStream& rng) {
    const double x =
        protocol == Protocol::esep ? config.intermediate_fraction : 0.0;
    const ClassProbabilities classes = weighted_probabilities(
        config.p_opt, config.alpha, config.m, config.beta, x);

    std::vector<double> p(state.nodes.size(), 0.0);
    if (protocol == Protocol::leach) {
        // single-class election: every node competes at p_opt
        for (const auto& node : state.nodes) {
            if (node.alive) p[static_cast<std::size_t>(node.id)] = config.p_opt;
        }
    } else if (protocol == Protocol::deec) {
        const double avg = average_energy(state);
        for (const auto& node : state.nodes) {
            if (node.alive) {
                p[static_cast<std::size_t>(node.id)] =
                    deec_probability(node, avg, classes);
            }
        }
    } else {  // sep, esep, hsep: class-weighted probabilities
        for (const auto& node : state.nodes) {
            if (node.alive) {
                p[static_cast<std::size_t>(node.id)] =
                    class_probability(classes, node.cls);
            }
        }
    }

    // residual-weighted probabilities have no common rotation window, so the
    // window reset applies only to the class-probability protocols
    if (protocol != Protocol::deec) reset_rotation_at_epoch_start(state, p);
    return draw_cluster_heads(state, p, rng);
}

std::vector<int> associate_members(const NetworkState& state,
                                   const std::vector<int>& chs) {
    std::vector<int> assignment(state.nodes.size(), -1);
    std::vector<char> is_ch(state.nodes.size(), 0);
    for (int id : chs) is_ch[static_cast<std::size_t>(id)] = 1;
    for (const auto& node : state.nodes) {
        if (!node.alive || is_ch[static_cast<std::size_t>(node.id)]) continue;
        assignment[static_cast<std::size_t>(node.id)] =
            nearest_by_id(state, node.position, chs);
    }
    return assignment;
}

std::vector<int> elect_secondary(const std::vector<int>& primary_chs,
                                 const NetworkState& state, double p_h,
                                 RandomStream& rng) {
    std::vector<int> secondaries;
    for (int id : primary_chs) {
        if (rng.next_double() < p_h) secondaries.push_back(id);
    }
    if (secondaries.empty()) {
        // someone has to take the base-station hop
        int best = primary_chs.front();
        double best_d = std::numeric_limits<double>::infinity();
        for (int id : primary_chs) {
            const double d = distance(
                state.nodes[static_cast<std::size_t>(id)].position, state.bs_position);
            if (d < best_d) {
                best_d = d;
                best = id;
            }
        }
        secondaries.push_back(best);
    }
    return secondaries;
}

RoundOutcome run_round(Protocol protocol, NetworkState& state,
                       const SimConfig& config, RandomStream& rng) {
    RoundOutcome out;
    out.round = state.round;
    std::vector<char> alive_before(state.nodes.size(), 0);
    for (const auto& node : state.nodes) {
        alive_before[static_cast<std::size_t>(node.id)] = node.alive ? 1 : 0;
    }

    out.primary_chs = elect(protocol, state, config, rng);
    const long k = config.energy.packet_bits;
    double spent = 0.0;

    // with no CHs the round idles: nobody radios, nothing reaches the BS
    if (!out.primary_chs.empty()) {
        std::vector<int> relay_target(state.nodes.size(), -1);
        std::vector<char> is_secondary(state.nodes.size(), 0);
        if (protocol == Protocol::hsep) {
            out.secondary_chs =
                elect_secondary(out.primary_chs, state, config.p_h, rng);
            for (int id : out.secondary_chs) {
                is_secondary[static_cast<std::size_t>(id)] = 1;
            }
            // a primary that is itself secondary uplinks directly, no self-relay
            for (int id : out.primary_chs) {
                if (is_secondary[static_cast<std::size_t>(id)]) continue;
                relay_target[static_cast<std::size_t>(id)] = nearest_by_id(
                    state, state.nodes[static_cast<std::size_t>(id)].position,
                    out.secondary_chs);
            }
        }

        const std::vector<int> assignment =
            associate_members(state, out.primary_chs);

        // members send one frame to their CH; the CH pays to receive each
        std::vector<int> member_count(state.nodes.size(), 0);
        for (auto& node : state.nodes) {
            const int ch_id = assignment[static_cast<std::size_t>(node.id)];
            if (ch_id < 0) continue;
            auto& ch = state.nodes[static_cast<std::size_t>(ch_id)];
            spent += charge(node, tx_energy(config.energy, k,
                                            distance(node.position, ch.position)));
            spent += charge(ch, rx_energy(config.energy, k));
            ++member_count[static_cast<std::size_t>(ch_id)];
        }

        // CHs fold members + own signal into one frame, then uplink it
        std::vector<int> incoming(state.nodes.size(), 0);
        for (int id : out.primary_chs) {
            auto& ch = state.nodes[static_cast<std::size_t>(id)];
            spent += charge(ch, aggregation_energy(
                                    config.energy, k,
                                    member_count[static_cast<std::size_t>(id)] + 1));
            const int relay = relay_target[static_cast<std::size_t>(id)];
            if (relay >= 0) {
                auto& sec = state.nodes[static_cast<std::size_t>(relay)];
                spent += charge(ch, tx_energy(config.energy, k,
                                              distance(ch.position, sec.position)));
                ++incoming[static_cast<std::size_t>(relay)];
            } else if (protocol != Protocol::hsep) {
                spent += charge(ch, tx_energy(config.energy, k,
                                              distance(ch.position, state.bs_position)));
                ++out.packets_to_bs;
            }
        }

        // secondary tier: fold relayed frames in with its own, take the BS hop
        for (int id : out.secondary_chs) {
            auto& sec = state.nodes[static_cast<std::size_t>(id)];
            const int relayed = incoming[static_cast<std::size_t>(id)];
            if (relayed > 0) {
                spent += charge(sec, relayed * rx_energy(config.energy, k));
                spent += charge(sec, aggregation_energy(config.energy, k, relayed + 1));
            }
            spent += charge(sec, tx_energy(config.energy, k,
                                           distance(sec.position, state.bs_position)));
            ++out.packets_to_bs;
        }
    }

    out.energy_spent = spent;
    for (const auto& node : state.nodes) {
        if (alive_before[static_cast<std::size_t>(node.id)] && !node.alive) {
            out.deaths.push_back(node.id);
        }
    }
    out.alive_after = alive_count(state);
    tick_bookkeeping(state);
    ++state.round;
    return out;
}

}  // namespace wsnsim
