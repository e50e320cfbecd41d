#pragma once

#include <cstdint>
#include <vector>

#include "qroute/netgraph.hpp"

namespace qroute {

// Physical-layer knobs: fiber attenuation, per-window generation attempts and
// Bell-state-measurement success probability.
struct ChannelParams {
    double alpha = 1.0;   // attenuation per unit-square length
    int c0 = 5;           // buffer size / attempts per window
    double p_swap = 0.95; // BSM success probability

    void validate() const;
};

// Remaining entangled pairs per edge within one time window. Aligned with the
// owning Network's edge list; counts stay in [0, c0] and are decremented only
// when a request is accepted.
struct CapacityState {
    std::vector<int> counts;
    int c0 = 0;

    int total() const;
};

// exp(-alpha * length), in (0, 1].
double link_transmissivity(double length, double alpha);

// Per-edge success probabilities exp(-alpha * L_e) for a whole network.
std::vector<double> link_probabilities(const Network& net, double alpha);

// Fresh Binomial(c0, exp(-alpha*L_e)) draw per edge; no carry-over between
// windows. Deterministic for a fixed seed.
CapacityState sample_capacities(const Network& net, const ChannelParams& params,
                                std::uint64_t seed);

// Hot-loop variant with the transmissivities precomputed once per (net, alpha).
CapacityState sample_capacities(const std::vector<double>& link_probs, int c0,
                                std::uint64_t seed);

// Geometry-averaged hop success (1/|E|) * sum_e exp(-alpha * L_e).
double mean_hop_success(const Network& net, double alpha);

}  // namespace qroute
