#pragma once

#include <cstdint>
#include <vector>

namespace chainsim {

/// Counter-based generator: the n-th draw of stream `s` under `seed` is a
/// pure function of (seed, s, n). Ensemble realization r uses stream r, so
/// results do not depend on scheduling or thread count.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller, both variates used).
    double normal();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class DisorderDistribution { uniform, gaussian };

/// Zero-mean diagonal disorder: uniform on [-W/2, W/2] or Gaussian with std W.
std::vector<double> draw_detunings(CounterRng& rng, int sites, DisorderDistribution dist,
                                   double width);

}  // namespace chainsim
