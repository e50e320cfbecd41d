#include "qroute/channel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qroute/rng.hpp"

namespace qroute {

void ChannelParams::validate() const {
    if (!(alpha >= 0.0)) throw std::invalid_argument("ChannelParams: alpha < 0");
    if (c0 < 1) throw std::invalid_argument("ChannelParams: c0 < 1");
    if (!(p_swap >= 0.0 && p_swap <= 1.0))
        throw std::invalid_argument("ChannelParams: p_swap outside [0,1]");
}

int CapacityState::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

double link_transmissivity(double length, double alpha) {
    if (!(length >= 0.0))
        throw std::invalid_argument("link_transmissivity: negative length");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("link_transmissivity: negative alpha");
    return std::exp(-alpha * length);
}

std::vector<double> link_probabilities(const Network& net, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("link_probabilities: negative alpha");
    std::vector<double> probs(net.num_edges());
    for (EdgeId e = 0; e < net.num_edges(); ++e)
        probs[e] = std::exp(-alpha * net.length(e));
    return probs;
}

CapacityState sample_capacities(const Network& net, const ChannelParams& params,
                                std::uint64_t seed) {
    params.validate();
    return sample_capacities(link_probabilities(net, params.alpha), params.c0,
                             seed);
}

CapacityState sample_capacities(const std::vector<double>& link_probs, int c0,
                                std::uint64_t seed) {
    if (c0 < 1) throw std::invalid_argument("sample_capacities: c0 < 1");
    Rng rng(seed);
    CapacityState caps;
    caps.c0 = c0;
    caps.counts.resize(link_probs.size());
    for (size_t e = 0; e < link_probs.size(); ++e)
        caps.counts[e] = rng.binomial(c0, link_probs[e]);
    return caps;
}

double mean_hop_success(const Network& net, double alpha) {
    if (net.num_edges() == 0)
        throw std::invalid_argument("mean_hop_success: network has no edges");
    double sum = 0.0;
    for (EdgeId e = 0; e < net.num_edges(); ++e)
        sum += std::exp(-alpha * net.length(e));
    return sum / net.num_edges();
}

}  // namespace qroute
