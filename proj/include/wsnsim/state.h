#pragma once

#include <vector>

#include "wsnsim/model.h"

namespace wsnsim {

// full mutable state of one run; dead nodes stay in place so every metric can
// keep dividing by the deployed population
struct NetworkState {
    std::vector<Node> nodes;
    long round = 0;
    Point bs_position{};
    double total_initial_energy = 0.0;
};

inline int alive_count(const NetworkState& state) {
    int n = 0;
    for (const auto& node : state.nodes) n += node.alive ? 1 : 0;
    return n;
}

}  // namespace wsnsim
