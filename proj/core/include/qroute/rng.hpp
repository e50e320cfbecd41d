#pragma once

#include <cstdint>
#include <random>

namespace qroute {

// splitmix64 finalizer (Steele, Lea, Flood / Vigna). Used only for seed
// derivation, never as the simulation engine itself.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Named sub-streams hanging off one master seed. Every stochastic stage of a
// run draws from its own stream so that window w is reproducible in isolation
// and independent of execution order.
enum class Stream : std::uint64_t {
    Topology = 1,  // RGG node placement
    Pair = 2,      // per-window S-D pair selection
    Capacity = 3,  // per-window entanglement generation
    Route = 4,     // per-window tournament coin flips
    Probe = 5,     // analytic-input ensembles (hop profile, path counts)
    Ensemble = 6,  // multi-topology ensembles
};

// Counter scheme: seed(master, stream, index) chains two splitmix64 rounds,
// folding in the stream tag and then the per-window counter. Deterministic
// and collision-free for all practical (stream, index) grids.
inline std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                 std::uint64_t index = 0) {
    std::uint64_t z = splitmix64(master ^ (static_cast<std::uint64_t>(stream) *
                                           0x9E3779B97F4A7C15ULL));
    return splitmix64(z ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

// mt19937_64 wrapper with portable primitive draws. std::*_distribution is
// implementation-defined, so uniform01/bernoulli/etc. are written out here to
// keep fixed-seed runs bit-identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % n;
        }
    }

    // Exact Binomial(n, p) as a sum of Bernoulli draws. Intended for the small
    // per-window buffer sizes used here (c0 <= 1e3); no normal approximation.
    int binomial(int n, double p) {
        int successes = 0;
        for (int i = 0; i < n; ++i) successes += bernoulli(p) ? 1 : 0;
        return successes;
    }

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qroute
