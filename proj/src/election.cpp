#include "wsnsim/election.h"

#include <cmath>

#include "wsnsim/errors.h"

namespace wsnsim {

ClassProbabilities weighted_probabilities(double p_opt, double alpha, double m,
                                          double beta, double x) {
    const double denom = 1.0 + alpha * m + beta * x;
    return {p_opt / denom, p_opt * (1.0 + beta) / denom,
            p_opt * (1.0 + alpha) / denom};
}

double class_probability(const ClassProbabilities& probs, NodeClass cls) {
    switch (cls) {
        case NodeClass::normal: return probs.normal;
        case NodeClass::intermediate: return probs.intermediate;
        case NodeClass::advanced: return probs.advanced;
    }
    return probs.normal;
}

long epoch_length(double p) {
    return static_cast<long>(std::ceil(1.0 / p - 1e-9));
}

long election_cooldown(double p) {
    const double inv = 1.0 / p;
    if (inv >= 1e9) return 1000000000L;
    return std::lround(inv);
}

double threshold(double p, long r, bool eligible) {
    if (!eligible) return 0.0;
    const double phase = static_cast<double>(r % epoch_length(p));
    const double denom = 1.0 - p * phase;
    if (denom <= 0.0) return 1.0;
    const double t = p / denom;
    return t < 1.0 ? t : 1.0;
}

double average_energy(const NetworkState& state) {
    double sum = 0.0;
    for (const auto& node : state.nodes) sum += node.residual_energy;
    return sum / static_cast<double>(state.nodes.size());
}

double deec_probability(const Node& node, double avg,
                        const ClassProbabilities& class_ref) {
    if (!(avg > 0.0)) {
        throw invariant_error(
            "residual-weighted election needs a positive network average");
    }
    const double p =
        class_probability(class_ref, node.cls) * node.residual_energy / avg;
    return p < 1.0 ? p : 1.0;
}

void reset_rotation_at_epoch_start(NetworkState& state,
                                   const std::vector<double>& per_node_p) {
    for (auto& node : state.nodes) {
        if (!node.alive) continue;
        const double p = per_node_p[static_cast<std::size_t>(node.id)];
        if (p <= 0.0) continue;
        if (state.round % epoch_length(p) == 0) {
            node.election.rounds_until_eligible = 0;
            node.election.eligible = true;
        }
    }
}

std::vector<int> draw_cluster_heads(NetworkState& state,
                                    const std::vector<double>& per_node_p,
                                    RandomStream& rng) {
    std::vector<int> chs;
    for (auto& node : state.nodes) {
        if (!node.alive) continue;
        const double draw = rng.next_double();  // one draw per alive node, always
        const double p = per_node_p[static_cast<std::size_t>(node.id)];
        if (p <= 0.0) continue;
        if (draw < threshold(p, state.round, node.election.eligible)) {
            chs.push_back(node.id);
            node.election.eligible = false;
            node.election.rounds_until_eligible = election_cooldown(p);
            node.election.last_probability = p;
        }
    }
    return chs;
}

void tick_bookkeeping(NetworkState& state) {
    for (auto& node : state.nodes) {
        if (!node.alive) continue;
        auto& b = node.election;
        if (b.rounds_until_eligible > 0) --b.rounds_until_eligible;
        b.eligible = b.rounds_until_eligible == 0;
    }
}

}  // namespace wsnsim
