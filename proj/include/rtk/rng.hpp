#ifndef RTK_RNG_HPP
#define RTK_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rtk {

// Counter-based random stream. Each draw hashes an incrementing 64-bit
// counter with a per-stream key (SplitMix64 finalizer, two rounds at stream
// derivation). Substreams derived from (master_seed, stream_id) are
// statistically independent and reproducible regardless of thread layout,
// which is the reproducibility contract of the simulator.
class RngStream {
  public:
    RngStream() : state_(mix(0x9E3779B97F4A7C15ULL)) {}
    explicit RngStream(uint64_t seed) : state_(mix(seed + 0x9E3779B97F4A7C15ULL)) {}

    static RngStream substream(uint64_t master_seed, uint64_t stream_id) {
        RngStream r;
        r.state_ = mix(mix(master_seed + 0x9E3779B97F4A7C15ULL) ^
                       mix(stream_id * 0xA0761D6478BD642FULL + 0xE7037ED1A0B428DBULL));
        return r;
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double exponential(double rate) {
        // inversion; uniform() < 1 so the log argument is in (0, 1]
        return -std::log1p(-uniform()) / rate;
    }

    // Standard normal via Box-Muller, second value cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    uint64_t uniform_index(uint64_t n) { return next_u64() % n; }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace rtk

#endif
