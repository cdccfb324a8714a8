#pragma once

#include <vector>

#include "wsnsim/model.h"
#include "wsnsim/rng.h"
#include "wsnsim/state.h"

namespace wsnsim {

// per-class election probabilities, normalized so the population-weighted mean
// stays at p_opt: denominator 1 + alpha*m + beta*x
struct ClassProbabilities {
    double normal = 0.0;
    double intermediate = 0.0;
    double advanced = 0.0;
};

ClassProbabilities weighted_probabilities(double p_opt, double alpha, double m,
                                          double beta, double x);
double class_probability(const ClassProbabilities& probs, NodeClass cls);

// rotation window length ceil(1/p); the 1e-9 slack snaps float noise like
// 1/(0.1/1.1) = 11.000000000000002 back onto the exact integer
long epoch_length(double p);

// post-election cooldown round(1/p), capped so tiny residual-weighted
// probabilities cannot overflow the conversion
long election_cooldown(double p);

// rotation threshold: p / (1 - p*(r mod epoch)), 0 when ineligible, clamped
// to [0, 1]; reaches exactly 1 in the window's last round
double threshold(double p, long r, bool eligible);

// mean residual energy across all deployed nodes; dead nodes contribute zero
double average_energy(const NetworkState& state);

// residual-energy-weighted probability: class probability scaled by the
// node's residual relative to the network average, clamped to at most 1
double deec_probability(const Node& node, double avg,
                        const ClassProbabilities& class_ref);

// classical rotation-window reset: whenever the round index is a multiple of
// a node's window length, the node re-enters the eligible pool. Keeps the
// eligibility windows aligned with the threshold's modulus; without it the
// certain-election rule in each window's last round herds every node onto the
// same phase and the network freezes into mostly-idle rounds.
void reset_rotation_at_epoch_start(NetworkState& state,
                                   const std::vector<double>& per_node_p);

// one uniform draw per alive node in id order; node joins the CH set iff the
// draw beats its threshold; elected nodes start their cooldown
std::vector<int> draw_cluster_heads(NetworkState& state,
                                    const std::vector<double>& per_node_p,
                                    RandomStream& rng);

// end-of-round cooldown decrement; eligibility returns at zero
void tick_bookkeeping(NetworkState& state);

}  // namespace wsnsim
