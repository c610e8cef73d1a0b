#pragma once

#include <cmath>
#include <cstdint>

namespace outdeg1 {

/// Identifies one reproducible random stream. Distinct (master_seed, stream)
/// pairs yield independent sequences; the same pair always replays the same
/// sequence, so replicates parallelize with no shared state.
struct RngSpec {
    uint64_t master_seed{0};
    uint64_t stream{0};

    RngSpec substream(uint64_t s) const {
        // Fold a sub-index into the stream id without colliding nearby ids.
        return {master_seed, stream * 0x100000001b3ULL + s + 1};
    }
};

/// Counter-based generator: draw i is a pure function of
/// (master_seed, stream, i). SplitMix64 finalizer over a keyed counter.
class CounterRng {
  public:
    explicit CounterRng(const RngSpec& spec)
        : key_(mix(mix(spec.master_seed) ^ (0x9e3779b97f4a7c15ULL + mix(~spec.stream)))) {}

    uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix(counter_ ^ key_);
    }

    /// Uniform double in [0,1), 53 random bits.
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Poisson sample via exponential interarrivals; exact for any mean and
    /// safe for large means where the product form underflows.
    uint64_t poisson(double mean) {
        uint64_t k = 0;
        double acc = 0.0;
        while (true) {
            acc += -std::log1p(-uniform01());
            if (acc > mean) break;
            ++k;
        }
        return k;
    }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection to kill modulo bias.
        const uint64_t limit = n * ((~uint64_t(0)) / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t counter_{0};
};

}  // namespace outdeg1
