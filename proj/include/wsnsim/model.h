#pragma once

#include <cstdint>

namespace wsnsim {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class NodeClass { normal, intermediate, advanced };

// rotation bookkeeping; a node is eligible for election iff its cooldown hit zero
struct ElectionBookkeeping {
    bool eligible = true;
    long rounds_until_eligible = 0;
    double last_probability = 0.0;
};

struct Node {
    int id = 0;
    Point position{};
    NodeClass cls = NodeClass::normal;
    double initial_energy = 0.0;
    double residual_energy = 0.0;
    bool alive = true;
    ElectionBookkeeping election{};
};

// first-order radio constants plus the frame size and base initial energy
struct EnergyParams {
    double e_elec = 50e-9;       // J/bit, tx/rx electronics
    double e_da = 5e-9;          // J/bit/signal, aggregation
    double eps_fs = 10e-12;      // J/bit/m^2, free-space amplifier (d < d0)
    double eps_mp = 0.0013e-12;  // J/bit/m^4, multipath amplifier (d >= d0)
    long packet_bits = 4000;     // k, bits per frame
    double e0 = 0.5;             // J, normal-class initial energy
};

struct SimConfig {
    int n_nodes = 100;
    double field_width = 100.0;
    double field_height = 100.0;
    Point bs_position{50.0, 50.0};
    EnergyParams energy{};
    double p_opt = 0.1;                  // target CH fraction per round
    double alpha = 1.0;                  // advanced-class energy premium
    double m = 0.1;                      // advanced fraction
    double beta = 0.3;                   // intermediate-class energy premium
    double intermediate_fraction = 0.2;  // used by esep only
    double p_h = 0.5;                    // secondary-CH probability, hsep only
    long max_rounds = 10000;
    std::uint64_t seed = 1;
};

double distance(Point a, Point b);

// d0 = sqrt(eps_fs / eps_mp): below it the d^2 amplifier wins, above it d^4
double crossover_distance(const EnergyParams& params);

double tx_energy(const EnergyParams& params, long k, double d);
double rx_energy(const EnergyParams& params, long k);

// n_signals counts every frame folded into one outgoing frame (members + self)
double aggregation_energy(const EnergyParams& params, long k, long n_signals);

// deducts cost from residual energy, clamped at zero; returns the amount
// actually deducted; kills the node when its residual reaches zero
double charge(Node& node, double cost);

}  // namespace wsnsim
