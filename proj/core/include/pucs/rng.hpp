#ifndef PUCS_RNG_HPP
#define PUCS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace pucs {

/// Deterministic 64-bit generator (splitmix64). Used instead of the
/// standard-library distributions so that streams are bit-identical
/// across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Derives an independent substream, e.g. one per (set, piece) pair.
    static Rng substream(std::uint64_t root_seed, std::uint64_t a, std::uint64_t b) {
        Rng mixer(root_seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)) ^
                  (0xbf58476d1ce4e5b9ULL * (b + 1)));
        mixer.next();
        return mixer;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace pucs

#endif  // PUCS_RNG_HPP
