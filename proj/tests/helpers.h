#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "wsnsim/model.h"
#include "wsnsim/state.h"

namespace testutil {

// relative closeness against the larger magnitude; exact zero matches zero
inline bool close_rel(double a, double b, double rel) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return true;
    return std::fabs(a - b) <= rel * scale;
}

// hand-built network: every node alive, eligible, at the given position with
// the given residual energy
inline wsnsim::NetworkState make_state(const std::vector<wsnsim::Point>& positions,
                                       double residual,
                                       wsnsim::Point bs = {50.0, 50.0}) {
    wsnsim::NetworkState state;
    state.bs_position = bs;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        wsnsim::Node node;
        node.id = static_cast<int>(i);
        node.position = positions[i];
        node.initial_energy = residual;
        node.residual_energy = residual;
        node.alive = residual > 0.0;
        state.nodes.push_back(node);
        state.total_initial_energy += residual;
    }
    return state;
}

inline double residual_total(const wsnsim::NetworkState& state) {
    double sum = 0.0;
    for (const auto& node : state.nodes) sum += node.residual_energy;
    return sum;
}

}  // namespace testutil
