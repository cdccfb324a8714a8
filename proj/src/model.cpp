#include "wsnsim/model.h"

#include <cmath>

#include "wsnsim/errors.h"

namespace wsnsim {

double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double crossover_distance(const EnergyParams& params) {
    return std::sqrt(params.eps_fs / params.eps_mp);
}

double tx_energy(const EnergyParams& params, long k, double d) {
    const double bits = static_cast<double>(k);
    const double electronics = bits * params.e_elec;
    if (d < crossover_distance(params)) {
        return electronics + bits * params.eps_fs * d * d;
    }
    return electronics + bits * params.eps_mp * d * d * d * d;
}

double rx_energy(const EnergyParams& params, long k) {
    return static_cast<double>(k) * params.e_elec;
}

double aggregation_energy(const EnergyParams& params, long k, long n_signals) {
    if (n_signals < 1) {
        throw invariant_error("aggregation requires at least one signal");
    }
    return params.e_da * static_cast<double>(k) * static_cast<double>(n_signals);
}

double charge(Node& node, double cost) {
    const double deducted = cost < node.residual_energy ? cost : node.residual_energy;
    node.residual_energy -= deducted;
    if (node.residual_energy <= 0.0) {
        node.residual_energy = 0.0;
        node.alive = false;
    }
    return deducted;
}

}  // namespace wsnsim
